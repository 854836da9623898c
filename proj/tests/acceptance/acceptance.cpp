#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ringlab.hpp"

using namespace ringlab;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::vector<nlohmann::json> run_script(const std::string& name) {
  const auto path = fs::path(RINGLAB_SOURCE_DIR) / "scripts" / name;
  dsl::Executor ex({false, false});
  return ex.run(dsl::parse(read_file(path)));
}

const nlohmann::json* find_query(const std::vector<nlohmann::json>& recs, const std::string& query,
                                 const std::vector<std::string>& args) {
  for (const auto& r : recs)
    if (r.value("query", "") == query && r.contains("args") && r["args"] == nlohmann::json(args)) return &r;
  return nullptr;
}

std::vector<Elem> hom_map(const RingHom& f) {
  std::vector<Elem> m(f.source()->order());
  for (Elem x = 0; x < m.size(); ++x) m[x] = f(x);
  return m;
}

Outcome axiom_suite() {
  const auto start = Clock::now();
  harness::Profile profile;
  std::size_t rings = 0, modules = 0, homs = 0;
  std::set<std::string> constructors;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto inst = harness::random_instance(harness::case_seed(1, "axioms", i), profile);
    if (inst.ring->order() > 32) return {false, "instance of order " + std::to_string(inst.ring->order())};
    for (const char* c : {"product", "quotient", "trivext", "dup", "amalg", "localize", "zmod", "gf", "polyquot"})
      if (inst.shape.find(c) != std::string::npos) constructors.insert(c);
    auto rs = inst.trace.rings;
    rs.push_back(inst.ring);
    for (const auto& R : rs) {
      const auto rep = verify_ring_axioms(R->tables());
      if (!rep) return {false, "ring " + R->description() + ": " + rep.axiom};
      ++rings;
    }
    for (const auto& M : inst.trace.modules) {
      const auto rep = verify_module_axioms(*M->ring(), M->tables());
      if (!rep) return {false, "module " + M->description() + ": " + rep.axiom};
      ++modules;
    }
    for (const auto& f : inst.trace.homs) {
      const auto rep = verify_hom(*f.source(), *f.target(), hom_map(f));
      if (!rep) return {false, "hom: " + rep.axiom};
      ++homs;
    }
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << rings << " rings, " << modules << " modules, " << homs << " homs; constructors seen " << constructors.size()
    << "/9; " << t << " s";
  return {constructors.size() == 9 && t < 60, d.str()};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  const auto profile = harness::profile_named("wide");
  const auto v = harness::run_property_suite(harness::find_property("P1"), profile, 7, 200);
  const double t = seconds_since(start);
  std::ostringstream d;
  d << v.hits << " instances (order <= " << profile.max_order << "), " << v.violation_count << " disagreements; " << t
    << " s";
  return {v.hits >= 200 && v.violation_count == 0 && t < 120, d.str()};
}

Outcome example_product() {
  const auto start = Clock::now();
  const auto recs = run_script("product.ring");
  const auto* sb = find_query(recs, "sbezout", {"R", "S"});
  const auto* sb2 = find_query(recs, "sbezout", {"R", "S", "two-generated"});
  const auto* bz = find_query(recs, "bezout", {"R"});
  if (!sb || !sb2 || !bz) return {false, "missing query records"};
  bool ok = (*sb)["result"] == true && (*sb2)["result"] == true && (*sb)["witness"].size() == 18;
  std::set<std::string> expect{"(0,(0,[0,0]))", "(0,(0,[0,1]))", "(0,(0,[1,0]))", "(0,(0,[1,1]))"};
  std::set<std::string> got;
  if ((*bz)["result"] == false && bz->contains("counterexample"))
    for (const auto& e : (*bz)["counterexample"]["ideal"]["elements"]) got.insert(e.get<std::string>());
  ok = ok && got == expect;
  // Witnesses replay against an independent build of the ring.
  const auto ex = harness::detail::product_example();
  for (const auto& w : (*sb)["witness"]) {
    const auto& R = *ex.P->ring;
    std::vector<Elem> gens;
    for (const auto& g : w["ideal"]) gens.push_back(*R.parse(dsl::LineParser(dsl::tokenize_line(g, 1)).literal()));
    const auto I = ideal_generated_by(ex.P->ring, gens);
    const Elem s = *R.parse(dsl::LineParser(dsl::tokenize_line(w["s"], 1)).literal());
    const Elem a = *R.parse(dsl::LineParser(dsl::tokenize_line(w["a"], 1)).literal());
    const auto Ra = R.multiples(a);
    ok = ok && ex.S->contains(s) && Ra.subset_of(I.elements) &&
         I.elements.all_of([&](Elem x) { return Ra.contains(R.mul(s, x)); });
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "sbezout " << (*sb)["result"] << " with " << (*sb)["witness"].size() << " witnesses, bezout "
    << (*bz)["result"] << " with counterexample of size " << got.size() << "; " << t << " s";
  return {ok && t < 5, d.str()};
}

Outcome example_zext() {
  const auto start = Clock::now();
  const auto recs = run_script("zext.ring");
  const auto* j = find_query(recs, "sprincipal", {"J", "S"});
  const auto* k = find_query(recs, "sprincipal", {"K", "U"});
  const auto* k0 = find_query(recs, "sprincipal", {"K", "S"});
  if (!j || !k || !k0) return {false, "missing query records"};
  const bool i = (*j)["result"] == true && (*j)["witness"]["s"] == "(2,[0,0])" && (*j)["witness"]["a"] == "(2,[0,0])";
  bool exhaustive = false;
  for (const auto& f : (*k)["flags"]) exhaustive = exhaustive || f.get<std::string>().rfind("exhaustive", 0) == 0;
  const bool ii = (*k)["result"] != true && k->contains("exhaustion") && exhaustive;
  const bool iii =
      (*k0)["result"] == true && (*k0)["witness"]["s"] == "(2,[0,0])" && (*k0)["witness"]["a"] == "(0,[0,0])";
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "(i) " << (i ? "ok" : "bad") << ", (ii) " << (*k)["result"] << " after " << k->value("exhaustion", 0)
    << " candidates, (iii) " << (iii ? "ok" : "bad") << "; " << t << " s";
  return {i && ii && iii && t < 5, d.str()};
}

Outcome localization() {
  const auto start = Clock::now();
  auto Z12 = make_zmod(12);
  auto S = make_mult_set(Z12, {2});
  const auto L = localize(Z12, S);
  bool ok = !L.degenerate && L.ring->order() == 3 && L.idempotent == 4;
  S.elements().for_each([&](Elem s) { ok = ok && L.ring->is_unit((*L.hom)(s)); });
  const auto v = harness::run_property_suite(harness::find_property("P3"), harness::profile_named("default"), 7, 200);
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "order " << L.ring->order() << ", e = " << L.idempotent << "; P3 " << v.hits << " instances, "
    << v.violation_count << " violations; " << t << " s";
  return {ok && v.hits >= 200 && v.violation_count == 0 && t < 60, d.str()};
}

Outcome property_suite() {
  const auto start = Clock::now();
  const auto report = harness::run_suite(harness::profile_named("default"), 7, false);
  const double t = seconds_since(start);
  bool ok = t < 600;
  std::size_t min_hits = SIZE_MAX;
  double min_rate = 2;
  std::string weakest;
  for (const auto& p : report.properties) {
    const int n = std::stoi(p.id.substr(1));
    if (n > 17) continue;
    min_hits = std::min(min_hits, p.hits);
    ok = ok && p.hits >= 100 && p.violation_count == 0;
    if (!p.conditional && p.hit_rate() < min_rate) {
      min_rate = p.hit_rate();
      weakest = p.id;
    }
  }
  ok = ok && min_rate >= 0.30;
  std::ostringstream d;
  d << "P1-P17: min hits " << min_hits << ", violations " << report.violations() << ", lowest unconditional hit rate "
    << min_rate << " (" << weakest << "); " << t << " s";
  return {ok, d.str()};
}

Outcome nonnil_cross_check() {
  const auto start = Clock::now();
  harness::Profile profile;
  std::size_t phi = 0, disagreements = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto inst = harness::random_instance(harness::case_seed(1, "nonnil", i), profile);
    if (!is_phi_ring(inst.ring)) continue;
    ++phi;
    const bool a = is_nonnil_S_bezout(inst.ring, *inst.S).holds();
    const bool b = quotient_by_nil_check(inst.ring, *inst.S).holds();
    disagreements += a != b;
  }
  std::ostringstream d;
  d << phi << " phi-rings among 300 instances, " << disagreements << " disagreements; " << seconds_since(start)
    << " s";
  return {phi > 0 && disagreements == 0, d.str()};
}

Outcome determinism() {
  const std::string cmd = std::string(RINGLAB_CLI) + " suite --seed 7 --no-timing";
  const auto a = capture(cmd), b = capture(cmd);
  std::ostringstream d;
  d << a.size() << " bytes per run, " << (a == b ? "identical" : "different");
  return {!a.empty() && a == b, d.str()};
}

Outcome dsl_round_trip() {
  std::size_t scripts = 0, goldens = 0;
  std::string bad;
  for (const auto& e : fs::directory_iterator(fs::path(RINGLAB_SOURCE_DIR) / "scripts")) {
    if (e.path().extension() != ".ring") continue;
    ++scripts;
    const auto prog = dsl::parse(read_file(e.path()));
    if (!(dsl::parse(dsl::print(prog)) == prog)) bad += " round-trip:" + e.path().filename().string();
    const auto golden = fs::path(RINGLAB_SOURCE_DIR) / "tests" / "golden" / (e.path().stem().string() + ".jsonl");
    const auto out = capture(std::string(RINGLAB_CLI) + " run " + e.path().string() + " --no-timing");
    if (fs::exists(golden) && out == read_file(golden))
      ++goldens;
    else
      bad += " golden:" + e.path().filename().string();
  }
  std::ostringstream d;
  d << scripts << " scripts round-trip, " << goldens << " goldens match" << bad;
  return {scripts > 0 && bad.empty(), d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suite", axiom_suite},
      {"two-generated oracle equivalence", oracle_equivalence},
      {"product ring example", example_product},
      {"zext example", example_zext},
      {"localization", localization},
      {"property suite", property_suite},
      {"nonnil cross-check", nonnil_cross_check},
      {"determinism", determinism},
      {"dsl round-trip and goldens", dsl_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed ? 1 : 0;
}
