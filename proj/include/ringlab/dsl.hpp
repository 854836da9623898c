#pragma once

#include <cctype>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ringlab/constructions.hpp"
#include "ringlab/nonnil.hpp"
#include "ringlab/s_bezout.hpp"
#include "ringlab/zext.hpp"

namespace ringlab::dsl {

class parse_error : public error {
 public:
  parse_error(int line, int column, const std::string& msg)
      : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

enum class StatementKind { ring, module, hom, mset, ideal, check };

/// One line of a script.  `refs` are name arguments and `values` literal
/// arguments; `params` holds the header names (`over R`, `in R`, `R1 -> R2`).
struct Statement {
  StatementKind kind = StatementKind::ring;
  std::string name;
  std::vector<std::string> params;
  std::string head;
  std::vector<std::string> refs;
  std::vector<Literal> values;
  int line = 0;

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.kind == b.kind && a.name == b.name && a.params == b.params && a.head == b.head && a.refs == b.refs &&
           a.values == b.values;
  }
};

struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program& a, const Program& b) { return a.statements == b.statements; }
};

inline const std::set<std::string>& check_names() {
  static const std::set<std::string> names{"bezout", "sbezout", "sprincipal",     "sfinite", "spir",
                                           "pbezout", "phi",    "nonnil-sbezout", "chained", "homogeneous"};
  return names;
}

// ---------------------------------------------------------------------------
// Lexer

struct Token {
  enum class Kind { ident, integer, punct, end } kind = Kind::end;
  std::string text;
  int line = 0, column = 0;
};

inline std::vector<Token> tokenize_line(const std::string& src, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t k) { return static_cast<int>(k) + 1; };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size()) {
        const char d = src[i];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') {
          ++i;
        } else if (d == '-' && i + 1 < src.size() && std::isalnum(static_cast<unsigned char>(src[i + 1]))) {
          ++i;
        } else {
          break;
        }
      }
      out.push_back({Token::Kind::ident, src.substr(start, i - start), line, col(start)});
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      ++i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::integer, src.substr(start, i - start), line, col(start)});
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      i += 2;
      out.push_back({Token::Kind::punct, "->", line, col(start)});
    } else if (std::string("=()[]{}<>,:").find(c) != std::string::npos) {
      ++i;
      out.push_back({Token::Kind::punct, std::string(1, c), line, col(start)});
    } else {
      throw parse_error(line, col(start), std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", line, col(src.size())});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class LineParser {
 public:
  LineParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  [[noreturn]] void fail(const std::string& expected) const {
    const auto& t = peek();
    const std::string found = t.kind == Token::Kind::end ? "end of line" : "'" + t.text + "'";
    throw parse_error(t.line, t.column, "expected " + expected + ", found " + found);
  }

  bool accept(const std::string& punct) {
    if (peek().kind == Token::Kind::punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) fail("'" + punct + "'");
  }
  bool accept_word(const std::string& word) {
    if (peek().kind == Token::Kind::ident && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_word(const std::string& word) {
    if (!accept_word(word)) fail("'" + word + "'");
  }
  Token ident(const std::string& what) {
    if (peek().kind != Token::Kind::ident) fail(what);
    return toks_[pos_++];
  }
  Literal integer() {
    if (peek().kind != Token::Kind::integer) fail("an integer");
    return Literal::integer(BigInt(toks_[pos_++].text));
  }
  Literal literal() {
    if (peek().kind == Token::Kind::integer) return integer();
    if (accept("(")) return Literal::tuple(items(")"));
    if (accept("[")) return Literal::vector(items("]"));
    fail("an element literal");
  }
  std::vector<Literal> items(const std::string& close) {
    std::vector<Literal> xs;
    if (accept(close)) return xs;
    do xs.push_back(literal());
    while (accept(","));
    expect(close);
    return xs;
  }
  void finish() {
    if (!at_end()) fail("end of line");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline Statement parse_statement(LineParser& p) {
  Statement st;
  st.line = p.peek().line;
  const auto kw = p.ident("a statement keyword (ring, module, hom, mset, ideal, check)");
  auto name = [&] { return p.ident("a name").text; };
  auto refs_in_parens = [&](std::size_t n) {
    p.expect("(");
    for (std::size_t i = 0; i < n; ++i) {
      if (i) p.expect(",");
      st.refs.push_back(name());
    }
    p.expect(")");
  };

  if (kw.text == "ring") {
    st.kind = StatementKind::ring;
    st.name = name();
    p.expect("=");
    st.head = p.ident("a ring constructor").text;
    if (st.head == "zmod") {
      st.values.push_back(p.integer());
    } else if (st.head == "gf") {
      st.values.push_back(p.integer());
      st.values.push_back(p.integer());
    } else if (st.head == "polyquot") {
      st.values.push_back(p.integer());
      p.expect("[");
      st.values.push_back(Literal::vector(p.items("]")));
    } else if (st.head == "product" || st.head == "quotient" || st.head == "trivext" || st.head == "dup" ||
               st.head == "localize") {
      refs_in_parens(2);
    } else if (st.head == "amalg") {
      refs_in_parens(4);
    } else if (st.head == "zext") {
      st.refs.push_back(name());
    } else {
      throw parse_error(kw.line, kw.column, "unknown ring constructor '" + st.head + "'");
    }
  } else if (kw.text == "module") {
    st.kind = StatementKind::module;
    st.name = name();
    p.expect_word("over");
    st.params.push_back(name());
    p.expect("=");
    st.head = p.ident("a module constructor (free, tables, restrict)").text;
    if (st.head == "free") {
      st.values.push_back(p.integer());
    } else if (st.head == "tables") {
      st.values.push_back(p.literal());
      st.values.push_back(p.literal());
      if (p.accept_word("zero")) st.values.push_back(p.integer());
    } else if (st.head == "restrict") {
      st.refs.push_back(name());
      p.expect_word("along");
      st.refs.push_back(name());
    } else {
      throw parse_error(kw.line, kw.column, "unknown module constructor '" + st.head + "'");
    }
  } else if (kw.text == "hom") {
    st.kind = StatementKind::hom;
    st.name = name();
    p.expect(":");
    st.params.push_back(name());
    p.expect("->");
    st.params.push_back(name());
    p.expect("=");
    st.head = p.ident("a hom constructor").text;
    static const std::set<std::string> plain{"proj1", "proj2", "reduce", "id", "canonical", "projection",
                                             "inclusion"};
    if (st.head == "map") {
      p.expect("[");
      st.values = p.items("]");
    } else if (!plain.count(st.head)) {
      throw parse_error(kw.line, kw.column, "unknown hom constructor '" + st.head + "'");
    }
  } else if (kw.text == "mset") {
    st.kind = StatementKind::mset;
    st.name = name();
    p.expect_word("in");
    st.params.push_back(name());
    p.expect("=");
    p.expect_word("closure");
    st.head = "closure";
    p.expect("{");
    st.values = p.items("}");
  } else if (kw.text == "ideal") {
    st.kind = StatementKind::ideal;
    st.name = name();
    p.expect_word("in");
    st.params.push_back(name());
    p.expect("=");
    st.head = "generated";
    p.expect("<");
    st.values = p.items(">");
  } else if (kw.text == "check") {
    st.kind = StatementKind::check;
    const auto prop = p.ident("a property name");
    if (!check_names().count(prop.text)) throw parse_error(prop.line, prop.column, "unknown property '" + prop.text + "'");
    st.head = prop.text;
    while (!p.at_end()) {
      if (p.peek().kind == Token::Kind::integer)
        st.values.push_back(p.integer());
      else
        st.refs.push_back(name());
    }
  } else {
    throw parse_error(kw.line, kw.column, "unknown statement '" + kw.text + "'");
  }
  p.finish();
  return st;
}

/// Names referenced by a statement, in order of appearance.
inline std::vector<std::string> referenced_names(const Statement& st) {
  std::vector<std::string> out = st.params;
  for (const auto& r : st.refs)
    if (!(st.kind == StatementKind::check && r == "two-generated")) out.push_back(r);
  return out;
}

inline std::size_t check_arity(const std::string& prop) {
  if (prop == "bezout" || prop == "phi" || prop == "chained") return 1;
  return 2;
}

/// Parses a whole script.  Names must be defined before use and bound once.
inline Program parse(const std::string& text) {
  Program prog;
  std::set<std::string> defined;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    LineParser p(tokenize_line(raw, line));
    if (p.at_end()) continue;
    auto st = parse_statement(p);
    for (const auto& n : referenced_names(st))
      if (!defined.count(n)) throw parse_error(line, 1, "unknown name '" + n + "'");
    if (st.kind == StatementKind::check) {
      const auto want = check_arity(st.head);
      auto names = st.refs;
      std::erase(names, std::string("two-generated"));
      if (names.size() != want)
        throw parse_error(line, 1,
                          "check " + st.head + " takes " + std::to_string(want) + " name argument" +
                              (want == 1 ? "" : "s") + ", got " + std::to_string(names.size()));
      const std::size_t want_values = st.head == "sfinite" ? 1 : 0;
      if (st.values.size() != want_values)
        throw parse_error(line, 1, "check " + st.head + " takes " + std::to_string(want_values) + " integer argument(s)");
    } else {
      if (defined.count(st.name)) throw parse_error(line, 1, "duplicate name '" + st.name + "'");
      defined.insert(st.name);
    }
    prog.statements.push_back(std::move(st));
  }
  return prog;
}

// ---------------------------------------------------------------------------
// Printer

inline std::string join_literals(const std::vector<Literal>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s;
}

inline std::string print(const Statement& st) {
  auto refs = [&](std::size_t from = 0) {
    std::string s;
    for (std::size_t i = from; i < st.refs.size(); ++i) s += (i > from ? ", " : "") + st.refs[i];
    return s;
  };
  switch (st.kind) {
    case StatementKind::ring: {
      std::string s = "ring " + st.name + " = " + st.head;
      if (st.head == "zmod" || st.head == "gf" || st.head == "polyquot")
        for (const auto& v : st.values) s += " " + to_string(v);
      else if (st.head == "zext")
        s += " " + st.refs[0];
      else
        s += "(" + refs() + ")";
      return s;
    }
    case StatementKind::module: {
      std::string s = "module " + st.name + " over " + st.params[0] + " = " + st.head;
      if (st.head == "free") return s + " " + to_string(st.values[0]);
      if (st.head == "restrict") return s + " " + st.refs[0] + " along " + st.refs[1];
      s += " " + to_string(st.values[0]) + " " + to_string(st.values[1]);
      if (st.values.size() > 2) s += " zero " + to_string(st.values[2]);
      return s;
    }
    case StatementKind::hom: {
      std::string s = "hom " + st.name + ": " + st.params[0] + " -> " + st.params[1] + " = " + st.head;
      if (st.head == "map") s += " [" + join_literals(st.values) + "]";
      return s;
    }
    case StatementKind::mset:
      return "mset " + st.name + " in " + st.params[0] + " = closure {" + join_literals(st.values) + "}";
    case StatementKind::ideal:
      return "ideal " + st.name + " in " + st.params[0] + " = <" + join_literals(st.values) + ">";
    case StatementKind::check: {
      std::string s = "check " + st.head;
      for (const auto& r : st.refs) s += " " + r;
      for (const auto& v : st.values) s += " " + to_string(v);
      return s;
    }
  }
  return {};
}

inline std::string print(const Program& p) {
  std::string out;
  for (const auto& st : p.statements) out += print(st) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Executor

struct RingEntry {
  RingPtr ring;
  std::optional<ProductRing> product;
  std::optional<QuotientRing> quotient;
  std::optional<TrivialExtension> trivext;
  std::optional<Amalgamation> amalg;
  std::optional<Localization> localization;
  std::optional<ZExtRing> zext;
};

struct MsetEntry {
  std::string ring;
  std::optional<MultiplicativeSet> finite;
  std::optional<ZExtPowerSet> zext;
};

struct IdealEntry {
  std::string ring;
  std::optional<Ideal> finite;
  std::optional<ZExtIdeal> zext;
};

using Entry = std::variant<RingEntry, ModulePtr, RingHom, MsetEntry, IdealEntry>;

struct Options {
  bool timing = true;
  bool verbose = false;
};

class Executor {
 public:
  explicit Executor(Options opt = {}) : opt_(opt) {}

  /// Runs every statement; returns one record per query (and per definition
  /// when verbose).  Errors become records and do not stop later statements.
  std::vector<nlohmann::json> run(const Program& prog) {
    std::vector<nlohmann::json> out;
    for (const auto& st : prog.statements) {
      const auto start = std::chrono::steady_clock::now();
      try {
        if (st.kind == StatementKind::check) {
          auto rec = check(st);
          finish(rec, st, start);
          out.push_back(std::move(rec));
        } else {
          define(st);
          if (opt_.verbose) out.push_back(definition_record(st));
        }
      } catch (const error& e) {
        ++errors_;
        nlohmann::json rec;
        rec["line"] = st.line;
        rec["statement"] = print(st);
        rec["error"] = e.what();
        if (st.kind == StatementKind::check) rec["query"] = st.head;
        out.push_back(std::move(rec));
      }
    }
    return out;
  }

  std::size_t errors() const { return errors_; }

  const RingEntry& ring(const std::string& name) const { return get<RingEntry>(name, "a ring"); }

 private:
  template <class T>
  const T& get(const std::string& name, const char* what) const {
    auto it = env_.find(name);
    if (it == env_.end()) throw invalid_argument("'" + name + "' is undefined (its definition failed)");
    if (auto* p = std::get_if<T>(&it->second)) return *p;
    throw invalid_argument("'" + name + "' is not " + what);
  }

  const FiniteRing& finite_ring(const std::string& name) const {
    const auto& e = ring(name);
    if (e.zext) throw invalid_argument("'" + name + "' is a zext ring; this query needs a finite ring");
    return *e.ring;
  }

  static Elem read(const FiniteRing& R, const Literal& lit, const std::string& ring_name) {
    auto x = R.parse(lit);
    if (!x) throw invalid_argument("cannot read " + to_string(lit) + " as an element of " + ring_name);
    return *x;
  }

  void define(const Statement& st) {
    switch (st.kind) {
      case StatementKind::ring:
        env_.emplace(st.name, make_ring(st));
        break;
      case StatementKind::module:
        env_.emplace(st.name, make_module_entry(st));
        break;
      case StatementKind::hom:
        env_.emplace(st.name, make_hom_entry(st));
        break;
      case StatementKind::mset:
        env_.emplace(st.name, make_mset(st));
        break;
      case StatementKind::ideal:
        env_.emplace(st.name, make_ideal(st));
        break;
      case StatementKind::check:
        break;
    }
  }

  static long long small(const Literal& v, const char* what) {
    if (v.value < -(1LL << 40) || v.value > (1LL << 40)) throw invalid_argument(std::string(what) + " out of range");
    return static_cast<long long>(v.value);
  }

  RingEntry make_ring(const Statement& st) {
    RingEntry e;
    if (st.head == "zmod") {
      e.ring = make_zmod(small(st.values[0], "modulus"));
    } else if (st.head == "gf") {
      e.ring = make_gf(small(st.values[0], "characteristic"), static_cast<int>(small(st.values[1], "degree")));
    } else if (st.head == "polyquot") {
      std::vector<long long> coeffs;
      for (const auto& c : st.values[1].items) {
        if (c.kind != Literal::Kind::integer) throw invalid_argument("polyquot coefficients must be integers");
        coeffs.push_back(small(c, "coefficient"));
      }
      e.ring = make_poly_quotient(small(st.values[0], "modulus"), coeffs);
    } else if (st.head == "product") {
      e.product = ringlab::product(ring_ptr(st.refs[0]), ring_ptr(st.refs[1]));
      e.ring = e.product->ring;
    } else if (st.head == "quotient") {
      e.quotient = quotient_ring(ring_ptr(st.refs[0]), finite_ideal(st.refs[1]));
      e.ring = e.quotient->ring;
    } else if (st.head == "trivext") {
      e.trivext = trivial_extension(ring_ptr(st.refs[0]), get<ModulePtr>(st.refs[1], "a module"));
      e.ring = e.trivext->ring;
    } else if (st.head == "amalg") {
      const auto& f = get<RingHom>(st.refs[2], "a hom");
      e.amalg = amalgamation(ring_ptr(st.refs[0]), ring_ptr(st.refs[1]), f, finite_ideal(st.refs[3]));
      e.ring = e.amalg->ring;
    } else if (st.head == "dup") {
      e.amalg = duplication(ring_ptr(st.refs[0]), finite_ideal(st.refs[1]));
      e.ring = e.amalg->ring;
    } else if (st.head == "localize") {
      auto L = localize(ring_ptr(st.refs[0]), finite_mset(st.refs[1]));
      if (L.degenerate) throw invalid_argument("localization at a set containing 0 is the zero ring");
      e.ring = L.ring;
      e.localization = std::move(L);
    } else if (st.head == "zext") {
      e.zext.emplace(get<ModulePtr>(st.refs[0], "a module"));
    }
    return e;
  }

  RingPtr ring_ptr(const std::string& name) const {
    finite_ring(name);
    return ring(name).ring;
  }

  const Ideal& finite_ideal(const std::string& name) const {
    const auto& e = get<IdealEntry>(name, "an ideal");
    if (!e.finite) throw invalid_argument("'" + name + "' is an ideal of a zext ring");
    return *e.finite;
  }

  const MultiplicativeSet& finite_mset(const std::string& name) const {
    const auto& e = get<MsetEntry>(name, "a multiplicative set");
    if (!e.finite) throw invalid_argument("'" + name + "' is a set in a zext ring");
    return *e.finite;
  }

  static std::vector<Elem> read_table(const Literal& lit, std::size_t rows, std::size_t cols, const char* what) {
    if (lit.kind != Literal::Kind::vector || lit.items.size() != rows)
      throw invalid_argument(std::string(what) + " table needs " + std::to_string(rows) + " rows");
    std::vector<Elem> out;
    for (const auto& row : lit.items) {
      if (row.kind != Literal::Kind::vector || row.items.size() != cols)
        throw invalid_argument(std::string(what) + " table rows need " + std::to_string(cols) + " entries");
      for (const auto& x : row.items) {
        if (x.kind != Literal::Kind::integer || x.value < 0) throw invalid_argument("table entries are indices");
        out.push_back(static_cast<Elem>(x.value));
      }
    }
    return out;
  }

  ModulePtr make_module_entry(const Statement& st) {
    const auto R = ring_ptr(st.params[0]);
    if (st.head == "free") return make_free_module(R, static_cast<std::size_t>(small(st.values[0], "rank")));
    if (st.head == "restrict") {
      const auto& E = get<ModulePtr>(st.refs[0], "a module");
      const auto& f = get<RingHom>(st.refs[1], "a hom");
      if (f.source()->id() != R->id()) throw ring_mismatch("hom does not start at " + st.params[0]);
      return restrict_scalars(E, f);
    }
    const auto n = st.values[0].items.size();
    ModuleTables t;
    t.order = n;
    t.add = read_table(st.values[0], n, n, "addition");
    t.act = read_table(st.values[1], R->order(), n, "action");
    t.zero = st.values.size() > 2 ? static_cast<Elem>(small(st.values[2], "zero")) : 0;
    return make_module(R, std::move(t), "module " + st.name);
  }

  RingHom make_hom_entry(const Statement& st) {
    const auto& src = ring(st.params[0]);
    const auto& dst = ring(st.params[1]);
    const auto A = ring_ptr(st.params[0]), B = ring_ptr(st.params[1]);
    auto same = [](const RingPtr& x, const RingPtr& y) { return x->id() == y->id(); };
    const auto& h = st.head;
    if (h == "map") {
      if (st.values.size() != A->order())
        throw invalid_argument("map needs " + std::to_string(A->order()) + " images, got " +
                               std::to_string(st.values.size()));
      std::vector<Elem> m;
      for (const auto& v : st.values) m.push_back(read(*B, v, st.params[1]));
      return make_hom(A, B, std::move(m));
    }
    if (h == "id") {
      if (!same(A, B)) throw invalid_argument("id needs equal source and target");
      return identity_hom(A);
    }
    if (h == "reduce") return reduction_hom(A, B);
    if (h == "canonical") return canonical_hom(A, B);
    if (h == "proj1" || h == "proj2") {
      if (!src.product) throw invalid_argument(st.params[0] + " is not a product ring");
      auto f = h == "proj1" ? src.product->proj1() : src.product->proj2();
      if (!same(f.target(), B)) throw invalid_argument(st.params[1] + " is not that factor of " + st.params[0]);
      return f;
    }
    if (h == "projection") {
      if (dst.quotient && same(dst.quotient->parent, A)) return dst.quotient->projection;
      if (dst.localization && same(dst.localization->parent, A)) return *dst.localization->hom;
      if (src.trivext && same(src.trivext->base, B)) return src.trivext->projection();
      if (src.amalg && same(src.amalg->A, B)) return src.amalg->projection();
      throw invalid_argument("no canonical projection " + st.params[0] + " -> " + st.params[1]);
    }
    // inclusion
    if (dst.trivext && same(dst.trivext->base, A)) return dst.trivext->inclusion();
    if (dst.amalg && same(dst.amalg->A, A)) return dst.amalg->inclusion();
    if (dst.product && same(dst.product->left, A) && same(dst.product->right, A)) return diagonal_hom(*dst.product);
    throw invalid_argument("no canonical inclusion " + st.params[0] + " -> " + st.params[1]);
  }

  MsetEntry make_mset(const Statement& st) {
    MsetEntry e{st.params[0], std::nullopt, std::nullopt};
    const auto& r = ring(st.params[0]);
    if (r.zext) {
      if (st.values.size() > 1) throw invalid_argument("a zext set is the powers of a single (b,0)");
      ZExtPowerSet S{1, 0};
      if (!st.values.empty()) {
        auto x = r.zext->parse(st.values[0]);
        if (!x || x->m != r.zext->module()->zero())
          throw invalid_argument("zext set generators have the form (b,0)");
        S = {x->a, 8};
      }
      e.zext = S;
      return e;
    }
    std::vector<Elem> gens;
    for (const auto& v : st.values) gens.push_back(read(*r.ring, v, st.params[0]));
    e.finite = make_mult_set(r.ring, gens);
    return e;
  }

  IdealEntry make_ideal(const Statement& st) {
    IdealEntry e{st.params[0], std::nullopt, std::nullopt};
    const auto& r = ring(st.params[0]);
    if (r.zext) {
      ZExtIdeal J;
      for (const auto& v : st.values) {
        auto x = r.zext->parse(v);
        if (!x) throw invalid_argument("cannot read " + to_string(v) + " as an element of " + st.params[0]);
        J.generators.push_back(*x);
      }
      e.zext = std::move(J);
      return e;
    }
    std::vector<Elem> gens;
    for (const auto& v : st.values) gens.push_back(read(*r.ring, v, st.params[0]));
    e.finite = ideal_generated_by(r.ring, gens);
    return e;
  }

  nlohmann::json definition_record(const Statement& st) const {
    nlohmann::json rec;
    rec["define"] = st.name;
    rec["statement"] = print(st);
    if (st.kind == StatementKind::ring && !ring(st.name).zext) rec["order"] = ring(st.name).ring->order();
    if (st.kind == StatementKind::module) rec["order"] = get<ModulePtr>(st.name, "a module")->order();
    if (st.kind == StatementKind::ideal) {
      const auto& e = get<IdealEntry>(st.name, "an ideal");
      if (e.finite) rec["size"] = e.finite->size();
    }
    if (st.kind == StatementKind::mset) {
      const auto& e = get<MsetEntry>(st.name, "a multiplicative set");
      if (e.finite) rec["size"] = e.finite->size();
    }
    return rec;
  }

  // -- output helpers -------------------------------------------------------

  static std::string lit(const FiniteRing& R, Elem x) { return R.format(x); }

  static nlohmann::json elems(const FiniteRing& R, const ElementSet& xs) {
    auto a = nlohmann::json::array();
    xs.for_each([&](Elem x) { a.push_back(lit(R, x)); });
    return a;
  }

  static nlohmann::json ideal_json(const Ideal& I) {
    auto gens = nlohmann::json::array();
    for (Elem g : I.generators) gens.push_back(lit(*I.ring, g));
    return {{"generators", gens}, {"size", I.size()}, {"elements", elems(*I.ring, I.elements)}};
  }

  static nlohmann::json lattice_json(const LatticeWitness& w) {
    auto a = nlohmann::json::array();
    for (const auto& iw : w) {
      const auto& R = *iw.ideal.ring;
      auto gens = nlohmann::json::array();
      for (Elem g : iw.ideal.generators) gens.push_back(lit(R, g));
      a.push_back({{"ideal", gens}, {"s", lit(R, iw.witness.s)}, {"a", lit(R, iw.witness.a)}});
    }
    return a;
  }

  template <class W, class C>
  static void common(nlohmann::json& rec, const Report<W, C>& r) {
    if (r.verdict == Verdict::not_found)
      rec["result"] = to_string(r.verdict);
    else
      rec["result"] = r.holds();
    if (r.exhaustion) rec["exhaustion"] = *r.exhaustion;
    rec["flags"] = r.flags;
    rec["elapsed_ns"] = r.elapsed.count();
  }

  static void lattice_report(nlohmann::json& rec, const Report<LatticeWitness, Ideal>& r) {
    common(rec, r);
    if (r.witness) rec["witness"] = lattice_json(*r.witness);
    if (r.counterexample) rec["counterexample"] = {{"ideal", ideal_json(*r.counterexample)}};
  }

  nlohmann::json check(const Statement& st) {
    nlohmann::json rec;
    rec["query"] = st.head;
    auto args = nlohmann::json::array();
    for (const auto& r : st.refs) args.push_back(r);
    for (const auto& v : st.values) args.push_back(to_string(v));
    rec["args"] = args;
    rec["flags"] = nlohmann::json::array();
    const auto& q = st.head;
    const auto& a = st.refs;

    if (q == "bezout") {
      lattice_report(rec, is_bezout(ring_ptr(a[0])));
    } else if (q == "sbezout") {
      const bool two = a.size() > 2 && a[2] == "two-generated";
      lattice_report(rec, is_S_bezout(ring_ptr(a[0]), finite_mset(a[1]),
                                      two ? BezoutMode::two_generated : BezoutMode::all_ideals));
    } else if (q == "spir") {
      lattice_report(rec, is_S_pir(ring_ptr(a[0]), finite_mset(a[1])));
    } else if (q == "pbezout") {
      lattice_report(rec, is_P_bezout(ring_ptr(a[0]), finite_ideal(a[1])));
    } else if (q == "sprincipal") {
      const auto& ie = get<IdealEntry>(a[0], "an ideal");
      const auto& se = get<MsetEntry>(a[1], "a multiplicative set");
      if (ie.ring != se.ring) throw ring_mismatch("'" + a[0] + "' and '" + a[1] + "' live in different rings");
      if (ie.zext) {
        const auto& Z = *ring(ie.ring).zext;
        const auto r = zx_is_S_principal(Z, *ie.zext, *se.zext);
        common(rec, r);
        if (r.witness) rec["witness"] = {{"s", Z.format(r.witness->s)}, {"a", Z.format(r.witness->a)}};
      } else {
        const auto r = is_S_principal(*ie.finite, *se.finite);
        common(rec, r);
        const auto& R = *ie.finite->ring;
        if (r.witness) rec["witness"] = {{"s", lit(R, r.witness->s)}, {"a", lit(R, r.witness->a)}};
      }
    } else if (q == "sfinite") {
      const auto& I = finite_ideal(a[0]);
      const auto r = is_S_finite(I, finite_mset(a[1]), static_cast<std::size_t>(small(st.values[0], "bound")));
      common(rec, r);
      if (r.witness) {
        auto gens = nlohmann::json::array();
        for (Elem g : r.witness->generators) gens.push_back(lit(*I.ring, g));
        rec["witness"] = {{"s", lit(*I.ring, r.witness->s)}, {"generators", gens}};
      }
    } else if (q == "phi") {
      const auto R = ring_ptr(a[0]);
      const auto an = analyze_phi(R);
      rec["result"] = an.is_phi;
      nlohmann::json w{{"nilradical", elems(*R, an.nilradical.elements)},
                       {"zero_divisors", elems(*R, an.zero_divisors)}};
      if (an.phi_image) w["phi_image_order"] = an.phi_image->ring->order();
      rec["witness"] = w;
    } else if (q == "nonnil-sbezout") {
      const auto R = ring_ptr(a[0]);
      const auto r = is_nonnil_S_bezout(R, finite_mset(a[1]));
      common(rec, r);
      if (r.witness) rec["witness"] = lattice_json(*r.witness);
      if (r.counterexample)
        rec["counterexample"] = {{"smaller", ideal_json(r.counterexample->smaller)},
                                 {"larger", ideal_json(r.counterexample->larger)}};
    } else if (q == "chained") {
      const auto R = ring_ptr(a[0]);
      const auto L = all_ideals(R);
      rec["result"] = is_chained(L);
      rec["witness"] = {{"ideals", L.size()}, {"nonnil_chained", is_nonnil_chained(L)}};
      rec["flags"] = {"nonnil chained read as: nonnil ideals totally ordered by inclusion"};
    } else if (q == "homogeneous") {
      const auto& e = ring(a[0]);
      const auto& L = finite_ideal(a[1]);
      if (e.trivext) {
        const auto d = is_homogeneous(*e.trivext, L);
        rec["result"] = d.homogeneous;
        auto F = nlohmann::json::array();
        d.module.for_each([&](Elem m) { F.push_back(e.trivext->module->format(m)); });
        rec["witness"] = {{"I", elems(*e.trivext->base, d.first)}, {"F", F}};
      } else if (e.amalg) {
        rec["result"] = e.amalg->is_homogeneous(L);
        rec["witness"] = {{"I", elems(*e.amalg->A, e.amalg->first_projection(L.elements))}};
        rec["flags"] = {"homogeneous read as: L = I x_f J for I the first projection"};
      } else {
        throw invalid_argument("'" + a[0] + "' is neither a trivial extension nor an amalgamation");
      }
    }
    return rec;
  }

  void finish(nlohmann::json& rec, const Statement&, std::chrono::steady_clock::time_point start) const {
    rec.erase("elapsed_ns");
    if (opt_.timing) {
      const auto d = std::chrono::steady_clock::now() - start;
      rec["elapsed_ms"] = std::chrono::duration<double, std::milli>(d).count();
    }
  }

  Options opt_;
  std::map<std::string, Entry> env_;
  std::size_t errors_ = 0;
};

/// A compact human-readable line for a record.
inline std::string pretty(const nlohmann::json& rec) {
  std::ostringstream out;
  if (rec.contains("error")) {
    out << "line " << rec["line"].get<int>() << "  error  " << rec["error"].get<std::string>();
    return out.str();
  }
  if (rec.contains("define")) {
    out << "define " << rec["statement"].get<std::string>();
    return out.str();
  }
  std::string args;
  for (const auto& a : rec["args"]) args += " " + a.get<std::string>();
  out << rec["query"].get<std::string>() << args << "  ->  " << rec["result"].dump();
  if (rec.contains("exhaustion")) out << "  exhaustion=" << rec["exhaustion"].dump();
  if (rec.contains("counterexample") && rec["counterexample"].contains("ideal"))
    out << "  counterexample=<" << rec["counterexample"]["ideal"]["generators"].size() << "-generated, size "
        << rec["counterexample"]["ideal"]["size"].dump() << ">";
  if (rec.contains("witness") && rec["witness"].is_object() && rec["witness"].contains("s")) {
    out << "  witness s=" << rec["witness"]["s"].get<std::string>();
    if (rec["witness"].contains("a")) out << " a=" << rec["witness"]["a"].get<std::string>();
    if (rec["witness"].contains("generators")) out << " generators=" << rec["witness"]["generators"].dump();
  }
  for (const auto& f : rec["flags"]) out << "  [" << f.get<std::string>() << "]";
  if (rec.contains("elapsed_ms")) out << "  " << rec["elapsed_ms"].get<double>() << " ms";
  return out.str();
}

}  // namespace ringlab::dsl
