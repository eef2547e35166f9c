#pragma once

#include <map>
#include <string>
#include <vector>

#include "shadow/formula.hpp"
#include "shadow/parser.hpp"

namespace oracle {

/// Brute-force closure of a propositional modal problem under belief
/// resolution, obligation detachment and promotion to every later declared
/// time, applied in every belief context up to depth 2. Assumed modal bodies
/// are compared syntactically; belief-resolution conclusions are rebuilt from
/// their literal sets. The goal is then decided by a truth table
/// over the closure, with modal formulae as opaque propositions.
class Closure {
 public:
  explicit Closure(const shadow::Problem& problem);

  bool derives_goal() const { return derives_goal_; }
  /// Key of every formula in the closed knowledge base.
  std::vector<std::string> keys() const;
  bool contains(const shadow::Formula& f) const;

 private:
  std::map<std::string, shadow::Formula> kb_;
  bool derives_goal_ = false;
};

/// Form used by the closure keys: connectives and modal bodies kept as written.
shadow::Formula closure_normal_form(const shadow::Formula& f);

}  // namespace oracle
