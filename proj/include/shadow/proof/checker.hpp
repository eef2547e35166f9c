#pragma once

#include <cstddef>
#include <string>

#include "shadow/parser.hpp"
#include "shadow/proof/proof.hpp"

namespace shadow::proof {

struct CheckResult {
  bool valid = true;
  /// First failing step, 0 for proof-level problems.
  std::size_t step = 0;
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Re-verifies every step of `proof` against `problem` without using the
/// search engine: unifiers are recomputed, clausal forms are rebuilt,
/// time ordering and agents are compared, and shadow atoms must denote one
/// formula each across the whole proof.
///
/// Variable conventions checked here: the right premise of I_R and I_B is
/// read with `Xn` renamed to `Yn` (other names `v` to `Y_v`); for I_O the
/// universal prefix of the Ought belief is renamed `Y0, Y1, ...` and that
/// of the other belief `X0, X1, ...`, unless the Ought condition is itself
/// universally quantified.
CheckResult check(const Proof& proof, const Problem& problem);

}  // namespace shadow::proof
