#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringlab/module.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

/// An element (a, m) of Z ∝ M.
struct ZExtElement {
  BigInt a = 0;
  Elem m = 0;
  friend bool operator==(const ZExtElement&, const ZExtElement&) = default;
};

/// Z ∝ M for a finite abelian group M, given as a module over Z/qZ.  The
/// Z-action on M factors through Z/qZ, which is what makes ideal membership
/// decidable: integer coefficients only matter modulo q on the module side.
class ZExtRing {
 public:
  explicit ZExtRing(ModulePtr module) : module_(std::move(module)) {
    if (module_->ring()->backend() != Backend::residue)
      throw invalid_argument("zext needs a module over a residue ring Z/qZ");
    q_ = static_cast<long long>(module_->ring()->order());
  }

  const ModulePtr& module() const { return module_; }
  long long modulus() const { return q_; }

  /// c·m for an integer c.
  Elem scale(const BigInt& c, Elem m) const {
    BigInt r = c % q_;
    if (r < 0) r += q_;
    return module_->act(static_cast<Elem>(r), m);
  }

  ZExtElement add(const ZExtElement& x, const ZExtElement& y) const { return {x.a + y.a, module_->add(x.m, y.m)}; }
  ZExtElement mul(const ZExtElement& x, const ZExtElement& y) const {
    return {x.a * y.a, module_->add(scale(x.a, y.m), scale(y.a, x.m))};
  }
  ZExtElement neg(const ZExtElement& x) const { return {-x.a, module_->neg(x.m)}; }

  std::string format(const ZExtElement& x) const {
    return to_string(Literal::tuple({Literal::integer(x.a), module_->codec().encode(x.m)}));
  }
  std::optional<ZExtElement> parse(const Literal& lit) const {
    if (lit.kind != Literal::Kind::tuple || lit.items.size() != 2) return std::nullopt;
    if (lit.items[0].kind != Literal::Kind::integer) return std::nullopt;
    auto m = module_->parse(lit.items[1]);
    if (!m) return std::nullopt;
    return ZExtElement{lit.items[0].value, *m};
  }

 private:
  ModulePtr module_;
  long long q_ = 1;
};

/// The ideal generated by a finite list of elements.
struct ZExtIdeal {
  std::vector<ZExtElement> generators;
};

namespace detail {

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Returns g = gcd(a, b) >= 0 with x*a + y*b = g.
inline BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt quo = old_r / r;
    BigInt tmp = old_r - quo * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quo * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quo * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

/// Unimodular U with (a_1..a_n) U = (d, 0, ..., 0), d = gcd >= 0.  Column
/// j of U is `cols[j]`.
struct RowReduction {
  BigInt d = 0;
  std::vector<std::vector<BigInt>> cols;
};

inline RowReduction reduce_row(const std::vector<BigInt>& a) {
  const auto n = a.size();
  RowReduction out;
  out.cols.assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out.cols[i][i] = 1;
  if (n == 0) return out;
  std::vector<BigInt> v = a;
  for (std::size_t j = 1; j < n; ++j) {
    if (v[j] == 0) continue;
    BigInt x, y;
    const BigInt g = xgcd(v[0], v[j], x, y);
    const BigInt p = v[0] / g, r = v[j] / g;
    auto c0 = out.cols[0];
    auto cj = out.cols[j];
    for (std::size_t i = 0; i < n; ++i) {
      out.cols[0][i] = x * c0[i] + y * cj[i];
      out.cols[j][i] = -r * c0[i] + p * cj[i];
    }
    v[0] = g;
    v[j] = 0;
  }
  if (v[0] < 0) {
    v[0] = -v[0];
    for (auto& c : out.cols[0]) c = -c;
  }
  out.d = v[0];
  return out;
}

inline long long mod_q(const BigInt& x, long long q) {
  BigInt r = x % q;
  if (r < 0) r += q;
  return static_cast<long long>(r);
}

inline constexpr std::size_t kResidueBound = 1u << 20;

/// The subgroup of (Z/q)^n generated by `basis` mod q, by closure.
inline std::vector<std::vector<long long>> residue_span(const std::vector<std::vector<BigInt>>& basis, std::size_t n,
                                                        long long q) {
  std::set<std::vector<long long>> seen{std::vector<long long>(n, 0)};
  std::vector<std::vector<long long>> frontier{std::vector<long long>(n, 0)};
  std::vector<std::vector<long long>> gens;
  for (const auto& b : basis) {
    std::vector<long long> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = mod_q(b[i], q);
    gens.push_back(std::move(g));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        std::vector<long long> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = (x[i] + g[i]) % q;
        if (seen.insert(y).second) {
          if (seen.size() > kResidueBound) throw size_bound_exceeded("zext residue enumeration too large");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Σ a_i M.
inline ElementSet scaled_submodule(const ZExtRing& Z, const ZExtIdeal& J) {
  const auto& M = *Z.module();
  ElementSet n(M.order());
  n.insert(M.zero());
  for (const auto& g : J.generators) {
    ElementSet img(M.order());
    for (Elem m = 0; m < M.order(); ++m) img.insert(Z.scale(g.a, m));
    n = M.sum(n, img);
  }
  return n;
}

/// Module parts Σ c_i e_i over the residue classes c of integer solutions of
/// Σ c_i a_i = target (empty if there is no integer solution).
inline std::vector<Elem> reachable_module_parts(const ZExtRing& Z, const ZExtIdeal& J, const BigInt& target) {
  const auto n = J.generators.size();
  const auto& M = *Z.module();
  const long long q = Z.modulus();
  std::vector<BigInt> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = J.generators[i].a;
  const auto red = reduce_row(a);

  std::vector<BigInt> particular(n, 0);
  std::vector<std::vector<BigInt>> lattice;
  if (red.d == 0) {
    if (target != 0) return {};
    lattice = red.cols;  // every coefficient vector solves 0 = 0
  } else {
    if (target % red.d != 0) return {};
    const BigInt k = target / red.d;
    for (std::size_t i = 0; i < n; ++i) particular[i] = k * red.cols[0][i];
    lattice.assign(red.cols.begin() + 1, red.cols.end());
  }

  std::vector<Elem> parts;
  for (const auto& h : residue_span(lattice, n, q)) {
    Elem m = M.zero();
    for (std::size_t i = 0; i < n; ++i) {
      const long long c = (mod_q(particular[i], q) + h[i]) % q;
      m = M.add(m, M.act(static_cast<Elem>(c), J.generators[i].m));
    }
    parts.push_back(m);
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return parts;
}

}  // namespace detail

/// d with first projection of J equal to dZ (d = 0 for ideals inside 0 ∝ M).
inline BigInt zx_first_projection(const ZExtIdeal& J) {
  BigInt d = 0;
  for (const auto& g : J.generators) d = boost::multiprecision::gcd(d, detail::abs_big(g.a));
  return d;
}

/// Exact membership x ∈ J.
///
/// x = Σ (c_i, f_i)(a_i, e_i) = (Σ c_i a_i, Σ c_i e_i + Σ a_i f_i).  So x ∈ J
/// iff some integer solution c of Σ c_i a_i = x.a has x.m - Σ c_i e_i in
/// N = Σ a_i M.  The term Σ c_i e_i depends on c only modulo q, and the
/// solutions form c0 + L for a lattice L; their residues mod q are c0 plus
/// the subgroup generated by a basis of L, a finite set.
inline bool zx_membership(const ZExtRing& Z, const ZExtIdeal& J, const ZExtElement& x) {
  const auto& M = *Z.module();
  if (J.generators.empty()) return x.a == 0 && x.m == M.zero();
  const auto N = detail::scaled_submodule(Z, J);
  for (Elem part : detail::reachable_module_parts(Z, J, x.a))
    if (N.contains(M.add(x.m, M.neg(part)))) return true;
  return false;
}

/// All elements of J whose ring part equals `a` (finite: a fixed ring part
/// leaves only the module coordinate free).
inline std::vector<ZExtElement> zx_fiber(const ZExtRing& Z, const ZExtIdeal& J, const BigInt& a) {
  const auto& M = *Z.module();
  std::vector<ZExtElement> out;
  if (J.generators.empty()) {
    if (a == 0) out.push_back({0, M.zero()});
    return out;
  }
  const auto N = detail::scaled_submodule(Z, J);
  ElementSet parts(M.order());
  for (Elem p : detail::reachable_module_parts(Z, J, a)) N.for_each([&](Elem t) { parts.insert(M.add(p, t)); });
  parts.for_each([&](Elem m) { out.push_back({a, m}); });
  return out;
}

/// S = {(b^k, 0) : 0 <= k <= max_power}.
struct ZExtPowerSet {
  BigInt base = 2;
  unsigned max_power = 8;

  ZExtElement element(unsigned k) const { return {boost::multiprecision::pow(base, k), 0}; }
};

struct ZExtSearchBounds {
  int box = 2;  // combination coefficients in [-box, box]
};

/// sJ ⊆ Ra ⊆ J.
struct ZExtWitness {
  unsigned power = 0;
  ZExtElement s;
  ZExtElement a;
};

/// Replays a witness through exact membership.
inline bool zx_check_witness(const ZExtRing& Z, const ZExtIdeal& J, const ZExtWitness& w) {
  if (!zx_membership(Z, J, w.a)) return false;
  const ZExtIdeal Ra{{w.a}};
  for (const auto& g : J.generators)
    if (!zx_membership(Z, Ra, Z.mul(w.s, g))) return false;
  return true;
}

/// Bounded search for (s, a) with sJ ⊆ Ra ⊆ J.
///
/// Candidates, in order: (0,0); the generators; every element of J with ring
/// part d = gcd; then Σ c_i g_i over the coefficient box.  When d = 0 the
/// candidates are all of J, and when the powers of b cover every residue
/// class mod q the search over S is complete too: a failure is then reported
/// as an exhaustive `no` rather than `not_found`.
inline Report<ZExtWitness> zx_is_S_principal(const ZExtRing& Z, const ZExtIdeal& J, const ZExtPowerSet& S,
                                              ZExtSearchBounds bounds = {}) {
  return timed([&] {
    const auto& M = *Z.module();
    Report<ZExtWitness> r;
    std::vector<ZExtElement> pool;
    auto push = [&](ZExtElement x) {
      if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(std::move(x));
    };
    push({0, M.zero()});
    for (const auto& g : J.generators) push(g);
    const BigInt d = zx_first_projection(J);
    for (auto& x : zx_fiber(Z, J, d)) push(std::move(x));
    if (d != 0) {
      const auto n = J.generators.size();
      std::vector<int> c(n, -bounds.box);
      while (n > 0) {
        ZExtElement x{0, M.zero()};
        for (std::size_t i = 0; i < n; ++i) x = Z.add(x, Z.mul({c[i], M.zero()}, J.generators[i]));
        push(std::move(x));
        std::size_t i = 0;
        while (i < n && c[i] == bounds.box) c[i++] = -bounds.box;
        if (i == n) break;
        ++c[i];
      }
    }

    const ZExtIdeal probe = J;
    for (unsigned k = 0; k <= S.max_power; ++k) {
      const auto s = S.element(k);
      for (const auto& a : pool) {
        const ZExtIdeal Ra{{a}};
        bool ok = true;
        for (const auto& g : probe.generators)
          if (!zx_membership(Z, Ra, Z.mul(s, g))) {
            ok = false;
            break;
          }
        if (ok) {
          r.verdict = Verdict::yes;
          r.witness = ZExtWitness{k, s, a};
          return r;
        }
      }
    }

    // Residues of b^k mod q reached within the bound; complete when the next
    // power adds nothing new.
    std::set<long long> residues;
    for (unsigned k = 0; k <= S.max_power; ++k) residues.insert(detail::mod_q(S.element(k).a, Z.modulus()));
    const bool powers_complete = residues.count(detail::mod_q(S.element(S.max_power + 1).a, Z.modulus())) != 0;
    if (d == 0 && powers_complete) {
      r.verdict = Verdict::no;
      r.exhaustion = static_cast<std::uint64_t>(S.max_power + 1) * pool.size();
      r.flag("exhaustive: module-part-only ideal");
    } else {
      r.verdict = Verdict::not_found;
      r.flag("bounded search: power <= " + std::to_string(S.max_power) + ", box <= " + std::to_string(bounds.box));
    }
    return r;
  });
}

}  // namespace ringlab
