#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/element_set.hpp"

namespace ringlab {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_order : public error {
 public:
  using error::error;
};

class size_bound_exceeded : public error {
 public:
  using error::error;
};

class ring_mismatch : public error {
 public:
  ring_mismatch() : error("objects live over different rings") {}
  explicit ring_mismatch(const std::string& what) : error(what) {}
};

class invalid_argument : public error {
 public:
  using error::error;
};

/// A structure failed exhaustive verification.  `axiom` names the law and
/// `witness` holds the element indices that break it.
class axiom_violation : public error {
 public:
  axiom_violation(std::string axiom, std::vector<Elem> witness)
      : error(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  static std::string describe(const std::string& axiom, const std::vector<Elem>& w) {
    std::string s = "axiom violated: " + axiom;
    if (!w.empty()) {
      s += " (witness";
      for (auto x : w) s += " " + std::to_string(x);
      s += ")";
    }
    return s;
  }

  std::string axiom_;
  std::vector<Elem> witness_;
};

}  // namespace ringlab
