#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/element_set.hpp"

namespace ringlab {

using BigInt = boost::multiprecision::cpp_int;

/// Surface syntax of an element: `5`, `(1,0)`, `[1,0,1]`, or nestings thereof.
struct Literal {
  enum class Kind { integer, tuple, vector };

  Kind kind = Kind::integer;
  BigInt value = 0;
  std::vector<Literal> items;

  static Literal integer(BigInt v) { return Literal{Kind::integer, std::move(v), {}}; }
  static Literal tuple(std::vector<Literal> xs) { return Literal{Kind::tuple, 0, std::move(xs)}; }
  static Literal vector(std::vector<Literal> xs) { return Literal{Kind::vector, 0, std::move(xs)}; }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.kind == b.kind && a.value == b.value && a.items == b.items;
  }
};

inline std::string to_string(const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::integer:
      return lit.value.str();
    case Literal::Kind::tuple:
    case Literal::Kind::vector: {
      std::string s = lit.kind == Literal::Kind::tuple ? "(" : "[";
      for (std::size_t i = 0; i < lit.items.size(); ++i) {
        if (i != 0) s += ",";
        s += to_string(lit.items[i]);
      }
      s += lit.kind == Literal::Kind::tuple ? ")" : "]";
      return s;
    }
  }
  return {};
}

/// Maps element indices of one structure to literals and back.
class Codec {
 public:
  virtual ~Codec() = default;
  virtual Literal encode(Elem x) const = 0;
  virtual std::optional<Elem> decode(const Literal& lit) const = 0;
};

using CodecPtr = std::shared_ptr<const Codec>;

/// Plain integer indices.  With `wrap`, any integer is reduced modulo the
/// order (residue rings accept `-1`).
class IndexCodec final : public Codec {
 public:
  IndexCodec(std::size_t order, bool wrap) : order_(order), wrap_(wrap) {}

  Literal encode(Elem x) const override { return Literal::integer(x); }

  std::optional<Elem> decode(const Literal& lit) const override {
    if (lit.kind != Literal::Kind::integer) return std::nullopt;
    BigInt v = lit.value;
    const BigInt n = static_cast<unsigned long long>(order_);
    if (wrap_) {
      v %= n;
      if (v < 0) v += n;
    }
    if (v < 0 || v >= n) return std::nullopt;
    return static_cast<Elem>(v);
  }

 private:
  std::size_t order_;
  bool wrap_;
};

/// Pairs laid out as `first * second_order + second`.
class PairCodec final : public Codec {
 public:
  PairCodec(CodecPtr first, CodecPtr second, std::size_t second_order)
      : first_(std::move(first)), second_(std::move(second)), second_order_(second_order) {}

  Literal encode(Elem x) const override {
    const auto a = static_cast<Elem>(x / second_order_);
    const auto b = static_cast<Elem>(x % second_order_);
    return Literal::tuple({first_->encode(a), second_->encode(b)});
  }

  std::optional<Elem> decode(const Literal& lit) const override {
    if (lit.kind != Literal::Kind::tuple || lit.items.size() != 2) return std::nullopt;
    auto a = first_->decode(lit.items[0]);
    auto b = second_->decode(lit.items[1]);
    if (!a || !b) return std::nullopt;
    return static_cast<Elem>(*a * second_order_ + *b);
  }

 private:
  CodecPtr first_, second_;
  std::size_t second_order_;
};

/// An explicit list of pairs (subrings of a product, e.g. amalgamations).
class PairListCodec final : public Codec {
 public:
  PairListCodec(CodecPtr first, CodecPtr second, std::vector<std::pair<Elem, Elem>> pairs)
      : first_(std::move(first)), second_(std::move(second)), pairs_(std::move(pairs)) {}

  Literal encode(Elem x) const override {
    return Literal::tuple({first_->encode(pairs_[x].first), second_->encode(pairs_[x].second)});
  }

  std::optional<Elem> decode(const Literal& lit) const override {
    if (lit.kind != Literal::Kind::tuple || lit.items.size() != 2) return std::nullopt;
    auto a = first_->decode(lit.items[0]);
    auto b = second_->decode(lit.items[1]);
    if (!a || !b) return std::nullopt;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (pairs_[i].first == *a && pairs_[i].second == *b) return static_cast<Elem>(i);
    return std::nullopt;
  }

 private:
  CodecPtr first_, second_;
  std::vector<std::pair<Elem, Elem>> pairs_;
};

/// Fixed-length coordinate vectors `[x0,...,x{k-1}]`, x0 most significant.
class VectorCodec final : public Codec {
 public:
  VectorCodec(CodecPtr base, std::size_t base_order, std::size_t rank)
      : base_(std::move(base)), base_order_(base_order), rank_(rank) {}

  Literal encode(Elem x) const override {
    std::vector<Literal> items(rank_);
    for (std::size_t i = rank_; i-- > 0;) {
      items[i] = base_->encode(static_cast<Elem>(x % base_order_));
      x = static_cast<Elem>(x / base_order_);
    }
    return Literal::vector(std::move(items));
  }

  std::optional<Elem> decode(const Literal& lit) const override {
    if (lit.kind != Literal::Kind::vector || lit.items.size() != rank_) return std::nullopt;
    std::size_t x = 0;
    for (const auto& item : lit.items) {
      auto c = base_->decode(item);
      if (!c) return std::nullopt;
      x = x * base_order_ + *c;
    }
    return static_cast<Elem>(x);
  }

 private:
  CodecPtr base_;
  std::size_t base_order_;
  std::size_t rank_;
};

/// Elements written in a parent structure: quotients (cosets written by any
/// representative) and corner rings eR (written by any parent element r,
/// meaning e*r).
class ParentCodec final : public Codec {
 public:
  ParentCodec(CodecPtr parent, std::vector<Elem> representative, std::vector<Elem> from_parent)
      : parent_(std::move(parent)),
        representative_(std::move(representative)),
        from_parent_(std::move(from_parent)) {}

  Literal encode(Elem x) const override { return parent_->encode(representative_[x]); }

  std::optional<Elem> decode(const Literal& lit) const override {
    auto p = parent_->decode(lit);
    if (!p) return std::nullopt;
    return from_parent_[*p];
  }

 private:
  CodecPtr parent_;
  std::vector<Elem> representative_;
  std::vector<Elem> from_parent_;
};

}  // namespace ringlab
