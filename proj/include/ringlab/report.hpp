#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/element_set.hpp"

namespace ringlab {

/// `not_found` is the outcome of a bounded (non-exhaustive) search.
enum class Verdict { yes, no, not_found };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    case Verdict::not_found:
      return "not-found";
  }
  return "?";
}

/// Outcome of a decider.  A `yes` verdict carries a replayable witness; a `no`
/// verdict carries the size of the space that was exhausted.
template <class Witness, class Counterexample = std::monostate>
struct Report {
  Verdict verdict = Verdict::no;
  std::optional<Witness> witness;
  std::optional<Counterexample> counterexample;
  std::optional<std::uint64_t> exhaustion;
  std::vector<std::string> flags;
  std::chrono::nanoseconds elapsed{0};

  explicit operator bool() const { return verdict == Verdict::yes; }
  bool holds() const { return verdict == Verdict::yes; }

  void flag(std::string f) {
    for (const auto& g : flags)
      if (g == f) return;
    flags.push_back(std::move(f));
  }
};

/// Runs `body`, then stamps the wall time into the report it returns.
template <class F>
auto timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  auto report = body();
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

struct PrincipalWitness {
  Elem generator = 0;
  friend bool operator==(const PrincipalWitness&, const PrincipalWitness&) = default;
};

/// sI ⊆ Ra ⊆ I.
struct SPrincipalWitness {
  Elem s = 0;
  Elem a = 0;
  friend bool operator==(const SPrincipalWitness&, const SPrincipalWitness&) = default;
};

/// sI ⊆ (generators) ⊆ I.
struct SFiniteWitness {
  Elem s = 0;
  std::vector<Elem> generators;
  friend bool operator==(const SFiniteWitness&, const SFiniteWitness&) = default;
};

/// sF ⊆ Ae ⊆ F.
struct SCyclicWitness {
  Elem s = 0;
  Elem e = 0;
  friend bool operator==(const SCyclicWitness&, const SCyclicWitness&) = default;
};

}  // namespace ringlab
