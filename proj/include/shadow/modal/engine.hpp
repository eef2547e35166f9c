#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shadow/fo/prover.hpp"
#include "shadow/parser.hpp"
#include "shadow/proof/proof.hpp"

namespace shadow::modal {

struct Limits {
  std::size_t max_iterations = 64;
  int max_depth = 3;
  std::size_t max_answers = 16;
  /// Per first-order call; `fo.max_generated` also caps I_B resolvents per round.
  fo::Limits fo;
};

using fo::Verdict;

/// One phase of the outer loop, recorded for inspection.
struct TraceEvent {
  enum class Kind { kShadow, kFoCall, kExpand, kFixpoint };
  Kind kind = Kind::kShadow;
  std::size_t iteration = 0;
  std::size_t kb_size = 0;
  /// kExpand: formulae added by the round.
  std::size_t added = 0;
  /// kFoCall: outcome of the call.
  Verdict fo_verdict = Verdict::kFailed;
};

std::string to_string(TraceEvent::Kind kind);

struct Stats {
  std::size_t iterations = 0;
  std::size_t clauses_generated = 0;
  std::size_t kb_size = 0;
};

struct Outcome {
  Verdict verdict = Verdict::kFailed;
  /// Why the run stopped short, for exhausted verdicts.
  std::string reason;
  /// Present iff a goal was proved (prove mode).
  std::optional<proof::Proof> proof;
  /// Answer mode: one proof per distinct binding, in discovery order.
  std::vector<proof::Proof> answers;
  Stats stats;
  std::vector<TraceEvent> trace;
};

/// Assumptions as they enter the knowledge base: universally closed, then
/// normalized.
std::vector<Formula> initial_formulas(const Problem& problem);

/// Alternates shadowed first-order proving with one round of modal
/// expansion until the goal is proved, nothing new is derived, or a limit
/// is reached.
Outcome prove(const Problem& problem, const Limits& limits = {});

/// Same loop, collecting bindings for the problem's query variables.
Outcome answer(const Problem& problem, const Limits& limits = {});

}  // namespace shadow::modal
