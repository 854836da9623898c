#pragma once

#include <algorithm>
#include <span>
#include <unordered_map>
#include <vector>

#include "ringlab/hom.hpp"
#include "ringlab/multiplicative_set.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

/// Module tables: `add[m * order + n]`, `act[r * order + m]`.
struct ModuleTables {
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> act;
  Elem zero = 0;
};

inline AxiomReport verify_module_axioms(const FiniteRing& R, const ModuleTables& t) {
  auto fail = [](std::string axiom, std::vector<Elem> w) {
    return AxiomReport{false, std::move(axiom), std::move(w)};
  };
  const auto n = t.order;
  if (n < 1) return fail("order", {});
  if (t.add.size() != n * n || t.act.size() != R.order() * n || t.zero >= n) return fail("index range", {});
  for (auto x : t.add)
    if (x >= n) return fail("index range", {});
  for (auto x : t.act)
    if (x >= n) return fail("index range", {});
  const auto N = static_cast<Elem>(n);
  const auto RN = static_cast<Elem>(R.order());
  auto add = [&](Elem x, Elem y) { return t.add[x * n + y]; };
  auto act = [&](Elem r, Elem m) { return t.act[r * n + m]; };

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
  for (Elem m = 0; m < N; ++m)
    if (act(R.one(), m) != m) return fail("unital action", {m});
  for (Elem r = 0; r < RN; ++r)
    for (Elem x = 0; x < N; ++x)
      for (Elem y = 0; y < N; ++y)
        if (act(r, add(x, y)) != add(act(r, x), act(r, y))) return fail("action additive in module", {r, x, y});
  for (Elem r = 0; r < RN; ++r)
    for (Elem s = 0; s < RN; ++s)
      for (Elem m = 0; m < N; ++m) {
        if (act(R.add(r, s), m) != add(act(r, m), act(s, m))) return fail("action additive in ring", {r, s, m});
        if (act(R.mul(r, s), m) != act(r, act(s, m))) return fail("action associativity", {r, s, m});
      }
  return {};
}

/// A finite module over a FiniteRing with verified action.  Cyclic submodules
/// Ae are cached for every e.
class FiniteModule {
 public:
  FiniteModule(RingPtr ring, ModuleTables tables, std::string description, CodecPtr codec, bool verify)
      : id_(detail::next_id()),
        ring_(std::move(ring)),
        order_(tables.order),
        zero_(tables.zero),
        description_(std::move(description)),
        codec_(std::move(codec)) {
    check_order_bound(order_, "module");
    if (verify) {
      auto report = verify_module_axioms(*ring_, tables);
      if (!report) throw axiom_violation(report.axiom, report.witness);
    }
    if (!codec_) codec_ = std::make_shared<IndexCodec>(order_, false);
    add_ = std::move(tables.add);
    act_ = std::move(tables.act);
    neg_.assign(order_, zero_);
    for (Elem x = 0; x < order_; ++x)
      for (Elem y = 0; y < order_; ++y)
        if (add(x, y) == zero_) {
          neg_[x] = y;
          break;
        }
    cyclic_.assign(order_, ElementSet(order_));
    for (Elem m = 0; m < order_; ++m)
      for (Elem r = 0; r < ring_->order(); ++r) cyclic_[m].insert(act(r, m));
  }

  std::uint64_t id() const { return id_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  const std::string& description() const { return description_; }

  Elem add(Elem x, Elem y) const { return add_[x * order_ + y]; }
  Elem act(Elem r, Elem m) const { return act_[r * order_ + m]; }
  Elem neg(Elem x) const { return neg_[x]; }

  /// The cyclic submodule Ae.
  const ElementSet& cyclic(Elem e) const { return cyclic_[e]; }

  ModuleTables tables() const { return {order_, add_, act_, zero_}; }

  const Codec& codec() const { return *codec_; }
  const CodecPtr& codec_ptr() const { return codec_; }
  std::string format(Elem x) const { return to_string(codec_->encode(x)); }
  std::optional<Elem> parse(const Literal& lit) const { return codec_->decode(lit); }

  /// Sumset {x + y}.
  ElementSet sum(const ElementSet& a, const ElementSet& b) const {
    ElementSet out(order_);
    a.for_each([&](Elem x) { b.for_each([&](Elem y) { out.insert(add(x, y)); }); });
    return out;
  }

 private:
  std::uint64_t id_;
  RingPtr ring_;
  std::size_t order_;
  Elem zero_;
  std::string description_;
  CodecPtr codec_;
  std::vector<Elem> add_, act_, neg_;
  std::vector<ElementSet> cyclic_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

inline ModulePtr make_module(const RingPtr& R, ModuleTables tables, std::string description = "module tables") {
  return std::make_shared<const FiniteModule>(R, std::move(tables), std::move(description), nullptr, true);
}

/// R^k with componentwise structure, written `[x0,...,x{k-1}]`.
inline ModulePtr make_free_module(const RingPtr& R, std::size_t k) {
  if (k < 1) throw invalid_argument("free module needs rank >= 1");
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= R->order();
    check_order_bound(order, "free module");
  }
  const auto base = R->order();
  auto digits = [&](std::size_t x) {
    std::vector<Elem> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<Elem>(x % base);
      x /= base;
    }
    return d;
  };
  auto pack = [&](const std::vector<Elem>& d) {
    std::size_t x = 0;
    for (auto c : d) x = x * base + c;
    return static_cast<Elem>(x);
  };
  std::vector<std::vector<Elem>> coords(order);
  for (std::size_t x = 0; x < order; ++x) coords[x] = digits(x);

  ModuleTables t;
  t.order = order;
  t.zero = 0;
  t.add.resize(order * order);
  t.act.resize(base * order);
  std::vector<Elem> tmp(k);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = R->add(coords[x][i], coords[y][i]);
      t.add[x * order + y] = pack(tmp);
    }
  for (std::size_t r = 0; r < base; ++r)
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = R->mul(static_cast<Elem>(r), coords[x][i]);
      t.act[r * order + x] = pack(tmp);
    }
  return std::make_shared<const FiniteModule>(R, std::move(t), "free " + std::to_string(k),
                                              std::make_shared<VectorCodec>(R->codec_ptr(), base, k),
                                              kVerifyStructured);
}

/// Restriction of scalars: a B-module viewed as an A-module through f: A -> B.
inline ModulePtr restrict_scalars(const ModulePtr& E, const RingHom& f) {
  if (f.target()->id() != E->ring()->id()) throw ring_mismatch("restriction along a hom into another ring");
  const auto& A = f.source();
  ModuleTables t;
  t.order = E->order();
  t.zero = E->zero();
  t.add = E->tables().add;
  t.act.resize(A->order() * E->order());
  for (Elem a = 0; a < A->order(); ++a)
    for (Elem m = 0; m < E->order(); ++m) t.act[a * E->order() + m] = E->act(f(a), m);
  return std::make_shared<const FiniteModule>(A, std::move(t), E->description() + " restricted", E->codec_ptr(),
                                              kVerifyStructured);
}

/// A submodule stored as an index set into its parent module.
struct Submodule {
  ModulePtr module;
  ElementSet elements;
  std::vector<Elem> generators;

  bool contains(Elem m) const { return elements.contains(m); }
  std::size_t size() const { return elements.size(); }
};

inline Submodule submodule_generated(const ModulePtr& M, std::span<const Elem> gens) {
  ElementSet span(M->order());
  span.insert(M->zero());
  for (Elem g : gens) {
    if (g >= M->order()) throw invalid_argument("module element out of range");
    if (!span.contains(g)) span = M->sum(span, M->cyclic(g));
  }
  return {M, std::move(span), std::vector<Elem>(gens.begin(), gens.end())};
}

inline Submodule submodule_generated(const ModulePtr& M, std::initializer_list<Elem> gens) {
  return submodule_generated(M, std::span<const Elem>(gens.begin(), gens.size()));
}

namespace detail {

/// Closes a family of "cyclic" subsets under binary sum.  Returns the distinct
/// members in canonical order together with a short generator list for each.
template <class SumFn>
std::vector<std::pair<ElementSet, std::vector<Elem>>> lattice_closure(const std::vector<ElementSet>& cyclic,
                                                                      SumFn&& sum) {
  std::unordered_map<ElementSet, std::vector<Elem>, ElementSetHash> found;
  std::vector<ElementSet> principal;
  for (Elem a = 0; a < cyclic.size(); ++a) {
    auto [it, inserted] = found.try_emplace(cyclic[a], std::vector<Elem>{a});
    if (inserted) principal.push_back(cyclic[a]);
  }
  // The zero object is generated by the empty list.
  for (auto& [set, gens] : found)
    if (set.size() == 1) gens.clear();

  // Every 2-generated object is a sum of two cyclic ones; record those first
  // so their generator lists are exact.
  std::vector<ElementSet> frontier;
  for (std::size_t i = 0; i < principal.size(); ++i)
    for (std::size_t j = i + 1; j < principal.size(); ++j) {
      if (principal[i].subset_of(principal[j]) || principal[j].subset_of(principal[i])) continue;
      auto s = sum(principal[i], principal[j]);
      if (!found.count(s)) {
        auto gi = found.at(principal[i]);
        auto gj = found.at(principal[j]);
        gi.insert(gi.end(), gj.begin(), gj.end());
        found.emplace(s, std::move(gi));
        frontier.push_back(std::move(s));
      }
    }
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& x : frontier)
      for (const auto& p : principal) {
        if (p.subset_of(x)) continue;
        auto s = sum(x, p);
        if (!found.count(s)) {
          auto g = found.at(x);
          const auto& gp = found.at(p);
          g.insert(g.end(), gp.begin(), gp.end());
          found.emplace(s, std::move(g));
          next.push_back(std::move(s));
        }
      }
    frontier = std::move(next);
  }

  std::vector<std::pair<ElementSet, std::vector<Elem>>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

}  // namespace detail

/// Every submodule of M, in canonical order.
inline std::vector<Submodule> all_submodules(const ModulePtr& M) {
  std::vector<ElementSet> cyclic;
  cyclic.reserve(M->order());
  for (Elem m = 0; m < M->order(); ++m) cyclic.push_back(M->cyclic(m));
  auto lattice = detail::lattice_closure(cyclic, [&](const ElementSet& a, const ElementSet& b) { return M->sum(a, b); });
  std::vector<Submodule> out;
  out.reserve(lattice.size());
  for (auto& [set, gens] : lattice) out.push_back({M, std::move(set), std::move(gens)});
  return out;
}

/// Searches s ∈ S, e ∈ F (both ascending) with sF ⊆ Ae ⊆ F.  Scalars come
/// from the base ring of the module.
inline Report<SCyclicWitness> is_S_cyclic(const Submodule& F, const MultiplicativeSet& S) {
  return timed([&] {
    const auto& M = *F.module;
    if (S.ring()->id() != M.ring()->id()) throw ring_mismatch("multiplicative set over another ring");
    Report<SCyclicWitness> r;
    if (S.contains_zero()) r.flag("degenerate multiplicative set (contains 0)");
    const bool found = S.elements().any_of([&](Elem s) {
      return F.elements.any_of([&](Elem e) {
        const auto& Ae = M.cyclic(e);
        if (F.elements.all_of([&](Elem x) { return Ae.contains(M.act(s, x)); })) {
          r.witness = SCyclicWitness{s, e};
          return true;
        }
        return false;
      });
    });
    if (found) {
      r.verdict = Verdict::yes;
    } else {
      r.verdict = Verdict::no;
      r.exhaustion = static_cast<std::uint64_t>(S.size()) * F.size();
    }
    return r;
  });
}

}  // namespace ringlab
