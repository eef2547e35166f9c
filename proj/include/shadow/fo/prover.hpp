#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "shadow/fo/cnf.hpp"
#include "shadow/formula.hpp"

namespace shadow::fo {

/// Per-call budget of the saturation loop.
struct Limits {
  std::size_t max_generated = 100000;
  std::int64_t timeout_ms = 10000;
  std::size_t max_literals = 64;
};

enum class LimitKind { kNone, kGenerated, kTime, kClauseSize };
std::string to_string(LimitKind kind);

enum class Verdict { kProved, kFailed, kExhausted };
std::string to_string(Verdict verdict);

/// How a stored clause came about.
struct Origin {
  enum class Rule { kInput, kResolve, kFactor };
  Rule rule = Rule::kInput;
  /// Resolve: {left, right}; the right premise is read with rename_right.
  std::vector<std::size_t> parents;
  Substitution theta;
  /// Input clauses: caller-supplied tag of the formula they came from.
  std::size_t source = 0;
};

struct ClauseRecord {
  std::size_t id = 0;
  LiteralList literals;
  Origin origin;
  std::size_t weight = 0;
  bool from_goal = false;
};

struct Resolvent {
  LiteralList clause;  // normalized
  Substitution theta;
};

/// Binary resolvents on a positive literal of `left` and a negative literal
/// of `right`. `right` is standardized apart with rename_right first; the
/// unifiers range over both premises' variables. Answer literals are never
/// resolved upon.
std::vector<Resolvent> resolve(const LiteralList& left, const LiteralList& right);

/// Binary factors: unify two same-sign literals of `clause`.
std::vector<Resolvent> factors(const LiteralList& clause);

struct Answer {
  std::size_t clause = 0;
  /// Arguments of the answer literal, in query-variable order.
  std::vector<Term> values;
};

struct Stats {
  std::size_t generated = 0;
  std::size_t selected = 0;
};

struct Result {
  Verdict verdict = Verdict::kFailed;
  LimitKind limit = LimitKind::kNone;
  std::vector<ClauseRecord> clauses;
  /// Empty clause id on refutation.
  std::optional<std::size_t> refutation;
  std::vector<Answer> answers;
  Stats stats;
};

/// Given-clause saturation: clauses are selected by (weight, age), checked
/// for forward subsumption against the active set, used for backward
/// subsumption, and then resolved against every active clause.
class Saturation {
 public:
  explicit Saturation(Limits limits);

  /// Adds an input clause (normalized here). Returns its id.
  std::size_t add_input(LiteralList clause, std::size_t source, bool from_goal);

  /// Runs to refutation, saturation or exhaustion. With `max_answers > 0`
  /// clauses made only of answer literals are collected as answers and the
  /// run stops once that many distinct answers are found.
  Result run(std::size_t max_answers = 0);

 private:
  struct Queued {
    std::size_t weight;
    std::size_t id;
    friend bool operator<(const Queued& a, const Queued& b) {
      return a.weight != b.weight ? a.weight < b.weight : a.id < b.id;
    }
  };

  enum class Outcome { kContinue, kRefuted, kEnoughAnswers };

  Outcome add(LiteralList clause, Origin origin, bool from_goal, std::size_t max_answers);
  bool out_of_time() const;

  Limits limits_;
  std::chrono::steady_clock::time_point start_;
  Result result_;
  std::set<Queued> passive_;
  std::vector<std::size_t> active_;
  std::unordered_set<std::string> seen_;
  std::set<std::string> answer_keys_;
  bool dropped_ = false;
};

/// Refutation proof of `goal` from `axioms` (all level <= 1). Input clause
/// sources are axiom indices; goal clauses get source `axioms.size()`.
Result prove_fo(std::span<const Formula> axioms, const Formula& goal, const Limits& limits, SkolemTable& skolems);

/// Answer-literal search for bindings of `query_vars` (free in `goal`).
Result prove_answer(std::span<const Formula> axioms, const Formula& goal, std::span<const std::string> query_vars,
                    const Limits& limits, std::size_t max_answers, SkolemTable& skolems);

/// The negated goal handed to clausification, with an answer literal over
/// `query_vars` when non-empty: `(forall vars (or (not goal) ($ans vars)))`.
Formula negated_goal(const Formula& goal, std::span<const std::string> query_vars);

}  // namespace shadow::fo
