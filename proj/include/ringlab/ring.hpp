#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/literal.hpp"

namespace ringlab {

inline constexpr std::size_t kDefaultMaxOrder = 4096;
inline constexpr std::size_t kHardMaxOrder = 65536;

/// Size bound for rings and modules.  RINGLAB_MAX_ORDER overrides the default.
inline std::size_t max_order() {
  if (const char* env = std::getenv("RINGLAB_MAX_ORDER")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && v >= 2) return std::min<std::size_t>(v, kHardMaxOrder);
  }
  return kDefaultMaxOrder;
}

inline void check_order_bound(std::size_t order, const char* what) {
  if (order > max_order())
    throw size_bound_exceeded(std::string(what) + " of order " + std::to_string(order) +
                              " exceeds the size bound " + std::to_string(max_order()));
}

namespace detail {
inline std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace detail

/// Raw operation tables; row-major, `add[x * order + y]`.
struct RingTables {
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 1;
};

struct AxiomReport {
  bool ok = true;
  std::string axiom;
  std::vector<Elem> witness;

  explicit operator bool() const { return ok; }
};

/// Exhaustive scan of the commutative-ring-with-identity axioms.  Stops at the
/// first failing law and names it.
inline AxiomReport verify_ring_axioms(const RingTables& t) {
  const auto n = t.order;
  auto fail = [](std::string axiom, std::vector<Elem> w) {
    return AxiomReport{false, std::move(axiom), std::move(w)};
  };
  if (n < 2) return fail("order", {});
  if (t.add.size() != n * n || t.mul.size() != n * n) return fail("index range", {});
  if (t.zero >= n || t.one >= n) return fail("index range", {});
  for (std::size_t i = 0; i < n * n; ++i)
    if (t.add[i] >= n || t.mul[i] >= n)
      return fail("index range", {static_cast<Elem>(i / n), static_cast<Elem>(i % n)});
  if (t.zero == t.one) return fail("nonzero identity", {t.zero});

  auto add = [&](Elem x, Elem y) { return t.add[x * n + y]; };
  auto mul = [&](Elem x, Elem y) { return t.mul[x * n + y]; };
  const auto N = static_cast<Elem>(n);

  for (Elem x = 0; x < N; ++x)
    if (add(x, t.zero) != x) return fail("additive identity", {x});
  for (Elem x = 0; x < N; ++x)
    for (Elem y = x + 1; y < N; ++y)
      if (add(x, y) != add(y, x)) return fail("additive commutativity", {x, y});
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y)
      for (Elem z = 0; z < N; ++z)
        if (add(add(x, y), z) != add(x, add(y, z))) return fail("additive associativity", {x, y, z});
  for (Elem x = 0; x < N; ++x) {
    bool found = false;
    for (Elem y = 0; y < N && !found; ++y) found = add(x, y) == t.zero;
    if (!found) return fail("additive inverse", {x});
  }
  for (Elem x = 0; x < N; ++x)
    for (Elem y = x + 1; y < N; ++y)
      if (mul(x, y) != mul(y, x)) return fail("commutativity", {x, y});
  for (Elem x = 0; x < N; ++x)
    if (mul(t.one, x) != x) return fail("unital", {x});
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y)
      for (Elem z = 0; z < N; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return fail("associativity", {x, y, z});
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y)
      for (Elem z = 0; z < N; ++z)
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) return fail("distributivity", {x, y, z});
  return {};
}

enum class Backend { residue, table, poly_quotient, derived };

/// Handle to an element that remembers its ring.
struct RingElement {
  std::uint64_t ring_id = 0;
  Elem index = 0;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// An exact finite commutative ring with nonzero identity.
///
/// Elements are indices 0..order-1.  Rings are immutable after construction;
/// the unit set and every principal ideal Ra are cached up front.
class FiniteRing {
 public:
  FiniteRing(RingTables tables, Backend backend, std::string description, CodecPtr codec, bool verify)
      : id_(detail::next_id()),
        order_(tables.order),
        zero_(tables.zero),
        one_(tables.one),
        backend_(backend),
        description_(std::move(description)),
        codec_(std::move(codec)) {
    if (order_ < 2) throw invalid_order("a ring needs at least two elements (nonzero identity)");
    check_order_bound(order_, "ring");
    if (verify) {
      auto report = verify_ring_axioms(tables);
      if (!report) throw axiom_violation(report.axiom, report.witness);
    }
    if (!codec_) codec_ = std::make_shared<IndexCodec>(order_, false);
    add_.assign(tables.add.begin(), tables.add.end());
    mul_.assign(tables.mul.begin(), tables.mul.end());
    build_caches();
  }

  std::uint64_t id() const { return id_; }
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Backend backend() const { return backend_; }
  const std::string& description() const { return description_; }

  Elem add(Elem x, Elem y) const { return add_[x * order_ + y]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * order_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

  Elem pow(Elem x, std::size_t k) const {
    Elem r = one_;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  RingElement element(Elem x) const {
    if (x >= order_) throw invalid_argument("element index out of range");
    return {id_, x};
  }
  RingElement add(RingElement x, RingElement y) const { return {id_, add(own(x), own(y))}; }
  RingElement mul(RingElement x, RingElement y) const { return {id_, mul(own(x), own(y))}; }

  bool is_unit(Elem x) const { return units_.contains(x); }
  const ElementSet& units() const { return units_; }

  /// The principal ideal Ra.
  const ElementSet& multiples(Elem a) const { return multiples_[a]; }

  ElementSet all() const { return ElementSet::full(order_); }
  ElementSet empty_set() const { return ElementSet(order_); }

  RingTables tables() const {
    RingTables t;
    t.order = order_;
    t.add.assign(add_.begin(), add_.end());
    t.mul.assign(mul_.begin(), mul_.end());
    t.zero = zero_;
    t.one = one_;
    return t;
  }

  const Codec& codec() const { return *codec_; }
  const CodecPtr& codec_ptr() const { return codec_; }
  std::string format(Elem x) const { return to_string(codec_->encode(x)); }
  std::optional<Elem> parse(const Literal& lit) const { return codec_->decode(lit); }

 private:
  Elem own(RingElement x) const {
    if (x.ring_id != id_) throw ring_mismatch();
    return x.index;
  }

  void build_caches() {
    const auto N = static_cast<Elem>(order_);
    neg_.assign(order_, 0);
    for (Elem x = 0; x < N; ++x)
      for (Elem y = 0; y < N; ++y)
        if (add(x, y) == zero_) {
          neg_[x] = y;
          break;
        }
    units_ = ElementSet(order_);
    multiples_.assign(order_, ElementSet(order_));
    for (Elem a = 0; a < N; ++a) {
      for (Elem r = 0; r < N; ++r) {
        const Elem p = mul(r, a);
        multiples_[a].insert(p);
        if (p == one_) units_.insert(a);
      }
    }
  }

  std::uint64_t id_;
  std::size_t order_;
  Elem zero_, one_;
  Backend backend_;
  std::string description_;
  CodecPtr codec_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<Elem> neg_;
  ElementSet units_;
  std::vector<ElementSet> multiples_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

#ifdef RINGLAB_VERIFY_ALL
inline constexpr bool kVerifyStructured = true;
#else
inline constexpr bool kVerifyStructured = false;
#endif

inline void require_same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (a.id() != b.id()) throw ring_mismatch();
}

/// Z/nZ; index i is the residue i.
inline RingPtr make_zmod(long long n) {
  if (n < 2) throw invalid_order("zmod needs n >= 2, got " + std::to_string(n));
  check_order_bound(static_cast<std::size_t>(n), "zmod");
  const auto order = static_cast<std::size_t>(n);
  RingTables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      t.add[x * order + y] = static_cast<Elem>((x + y) % order);
      t.mul[x * order + y] = static_cast<Elem>((x * y) % order);
    }
  t.zero = 0;
  t.one = 1;
  return std::make_shared<const FiniteRing>(std::move(t), Backend::residue, "zmod " + std::to_string(n),
                                            std::make_shared<IndexCodec>(order, true), kVerifyStructured);
}

/// A ring given by raw tables; the axioms are always verified.
inline RingPtr make_table_ring(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                               Elem one, std::string description = "table") {
  RingTables t{order, std::move(add), std::move(mul), zero, one};
  return std::make_shared<const FiniteRing>(std::move(t), Backend::table, std::move(description), nullptr, true);
}

inline RingPtr make_table_ring(RingTables t, std::string description = "table") {
  return std::make_shared<const FiniteRing>(std::move(t), Backend::table, std::move(description), nullptr, true);
}

namespace detail {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over Z/pZ, ascending coefficients, no trailing zeros.
using Poly = std::vector<long long>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long long inv_mod(long long a, long long p) {
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline Poly poly_mod(Poly a, const Poly& m, long long p) {
  trim(a);
  const auto dm = m.size() - 1;
  const long long lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const long long c = a.back() * lead_inv % p;
    const auto shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline bool irreducible(const Poly& f, long long p) {
  const auto deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    long long count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1);
      long long c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// (Z/pZ)[t]/(f) for monic f given by ascending coefficients c0..c_d.
/// Element index is sum c_i p^i over residue coefficients.
inline RingPtr make_poly_quotient(long long p, std::vector<long long> coeffs) {
  if (!detail::is_prime(p)) throw invalid_argument("polyquot needs a prime modulus, got " + std::to_string(p));
  for (auto& c : coeffs) c = ((c % p) + p) % p;
  if (coeffs.size() < 2) throw invalid_argument("polyquot needs a polynomial of degree >= 1");
  if (coeffs.back() != 1) throw invalid_argument("polyquot needs a monic polynomial");
  const auto deg = coeffs.size() - 1;
  std::size_t order = 1;
  for (std::size_t i = 0; i < deg; ++i) {
    order *= static_cast<std::size_t>(p);
    check_order_bound(order, "polyquot");
  }

  auto decode = [&](std::size_t x) {
    detail::Poly f(deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      f[i] = static_cast<long long>(x % static_cast<std::size_t>(p));
      x /= static_cast<std::size_t>(p);
    }
    return f;
  };
  auto encode = [&](const detail::Poly& f) {
    std::size_t x = 0;
    for (std::size_t i = f.size(); i-- > 0;) x = x * static_cast<std::size_t>(p) + static_cast<std::size_t>(f[i]);
    return static_cast<Elem>(x);
  };

  RingTables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  std::vector<detail::Poly> polys(order);
  for (std::size_t x = 0; x < order; ++x) polys[x] = decode(x);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      detail::Poly s(deg);
      for (std::size_t i = 0; i < deg; ++i) s[i] = (polys[x][i] + polys[y][i]) % p;
      t.add[x * order + y] = encode(s);
      detail::Poly prod(2 * deg, 0);
      for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + polys[x][i] * polys[y][j]) % p;
      auto r = detail::poly_mod(prod, coeffs, p);
      r.resize(deg, 0);
      t.mul[x * order + y] = encode(r);
    }
  t.zero = 0;
  t.one = 1;

  std::string desc = "polyquot " + std::to_string(p) + " [";
  for (std::size_t i = 0; i < coeffs.size(); ++i) desc += (i ? "," : "") + std::to_string(coeffs[i]);
  desc += "]";
  return std::make_shared<const FiniteRing>(std::move(t), Backend::poly_quotient, std::move(desc),
                                            std::make_shared<IndexCodec>(order, false), kVerifyStructured);
}

/// The first monic irreducible of degree k over Z/pZ in index order.
inline std::vector<long long> first_irreducible(long long p, int k) {
  if (!detail::is_prime(p)) throw invalid_argument("gf needs a prime characteristic");
  if (k < 1) throw invalid_argument("gf needs degree >= 1");
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    detail::Poly f(static_cast<std::size_t>(k) + 1);
    long long c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (detail::irreducible(f, p)) return f;
  }
  throw invalid_argument("no irreducible polynomial found");
}

/// GF(p^k) realised as a polynomial quotient.
inline RingPtr make_gf(long long p, int k) { return make_poly_quotient(p, first_irreducible(p, k)); }

}  // namespace ringlab
