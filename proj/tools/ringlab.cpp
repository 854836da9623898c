#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringlab.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kQueryError = 1;
constexpr int kViolation = 2;
constexpr int kUsage = 64;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ringlab::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_failure(const ringlab::dsl::parse_error& e) {
  nlohmann::json rec{{"error", e.what()}, {"line", e.line()}, {"column", e.column()}};
  std::cout << rec.dump() << "\n";
  return kQueryError;
}

int cmd_run(const std::string& file, bool timing, bool pretty, bool verbose) {
  ringlab::dsl::Program prog;
  try {
    prog = ringlab::dsl::parse(slurp(file));
  } catch (const ringlab::dsl::parse_error& e) {
    return parse_failure(e);
  }
  ringlab::dsl::Executor ex({timing, verbose});
  for (const auto& rec : ex.run(prog)) std::cout << (pretty ? ringlab::dsl::pretty(rec) : rec.dump()) << "\n";
  return ex.errors() ? kQueryError : kOk;
}

int cmd_ideals(const std::string& file, const std::string& name) {
  ringlab::dsl::Program prog;
  try {
    prog = ringlab::dsl::parse(slurp(file));
  } catch (const ringlab::dsl::parse_error& e) {
    return parse_failure(e);
  }
  std::erase_if(prog.statements, [](const auto& st) { return st.kind == ringlab::dsl::StatementKind::check; });
  ringlab::dsl::Executor ex({false, false});
  for (const auto& rec : ex.run(prog)) std::cout << rec.dump() << "\n";
  const auto& entry = ex.ring(name);
  if (entry.zext) throw ringlab::invalid_argument("'" + name + "' is a zext ring with infinitely many ideals");
  const auto& R = *entry.ring;
  for (const auto& I : ringlab::all_ideals(entry.ring)) {
    auto gens = nlohmann::json::array(), elems = nlohmann::json::array();
    for (auto g : I.generators) gens.push_back(R.format(g));
    I.elements.for_each([&](ringlab::Elem x) { elems.push_back(R.format(x)); });
    std::cout << nlohmann::json{{"generators", gens}, {"size", I.size()}, {"elements", elems}}.dump() << "\n";
  }
  return kOk;
}

int cmd_suite(const std::string& profile, std::uint64_t seed, bool timing) {
  const auto report = ringlab::harness::run_suite(ringlab::harness::profile_named(profile), seed);
  std::cout << ringlab::harness::to_json(report, timing).dump(2) << "\n";
  return report.violations() ? kViolation : kOk;
}

int cmd_search(const std::string& id, std::size_t budget, std::uint64_t seed, const std::string& profile,
               bool timing) {
  const auto v = ringlab::harness::counterexample_search(id, budget, seed, ringlab::harness::profile_named(profile));
  std::cout << ringlab::harness::to_json(v, timing).dump(2) << "\n";
  return v.claimed && v.violation_count ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: S-Bezout rings over finite commutative rings"};
  app.require_subcommand(1);

  std::string file, ring_name, profile = "default", prop;
  std::uint64_t seed = 7;
  const std::vector<std::string> profiles{"default", "quick", "wide"};
  std::vector<std::string> ids;
  for (const auto& spec : ringlab::harness::registry()) ids.push_back(spec.id);
  std::size_t budget = 1000;
  bool no_timing = false, pretty = false, verbose = false;

  auto* run = app.add_subcommand("run", "execute a query script");
  run->add_option("file", file, "script path")->required();
  run->add_flag("--no-timing", no_timing, "omit elapsed times");
  run->add_flag("--pretty", pretty, "human-readable lines instead of JSON");
  run->add_flag("--verbose", verbose, "also report each definition");

  auto* ideals = app.add_subcommand("ideals", "list every ideal of a ring defined in a script");
  ideals->add_option("file", file, "script path")->required();
  ideals->add_option("--ring", ring_name, "ring name")->required();

  auto* suite = app.add_subcommand("suite", "run the property suite");
  suite->add_option("--profile", profile, "default, quick or wide")->check(CLI::IsMember(profiles));
  suite->add_option("--seed", seed, "base seed");
  suite->add_flag("--no-timing", no_timing, "omit elapsed times");

  auto* search = app.add_subcommand("search", "mine random cases for counterexamples to one property");
  search->add_option("property", prop, "property id, e.g. P12 or C12")->required()->check(CLI::IsMember(ids));
  search->add_option("--budget", budget, "number of cases");
  search->add_option("--seed", seed, "base seed");
  search->add_option("--profile", profile, "default, quick or wide")->check(CLI::IsMember(profiles));
  search->add_flag("--no-timing", no_timing, "omit elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(file, !no_timing, pretty, verbose);
    if (*ideals) return cmd_ideals(file, ring_name);
    if (*suite) return cmd_suite(profile, seed, !no_timing);
    if (*search) return cmd_search(prop, budget, seed, profile, !no_timing);
  } catch (const ringlab::error& e) {
    std::cerr << "ringlab: " << e.what() << "\n";
    return kQueryError;
  }
  return kUsage;
}
