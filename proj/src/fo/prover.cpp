#include "shadow/fo/prover.hpp"

#include <algorithm>

#include "shadow/fo/clause.hpp"
#include "shadow/fo/unify.hpp"
#include "shadow/transform.hpp"

namespace shadow::fo {

std::string to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::kNone: return "none";
    case LimitKind::kGenerated: return "generated";
    case LimitKind::kTime: return "time";
    case LimitKind::kClauseSize: return "clause-size";
  }
  return "none";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kProved: return "proved";
    case Verdict::kFailed: return "failed";
    case Verdict::kExhausted: return "exhausted";
  }
  return "failed";
}

namespace {

LiteralList apply_except(const LiteralList& clause, std::size_t skip, const Substitution& theta) {
  LiteralList out;
  for (std::size_t i = 0; i < clause.size(); ++i) {
    if (i != skip) out.push_back(substitute(clause[i], theta));
  }
  return out;
}

}  // namespace

std::vector<Resolvent> resolve(const LiteralList& left, const LiteralList& right) {
  std::vector<Resolvent> out;
  LiteralList renamed = rename_right(right);
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (!left[i].positive || is_answer_literal(left[i])) continue;
    for (std::size_t j = 0; j < renamed.size(); ++j) {
      if (renamed[j].positive || is_answer_literal(renamed[j])) continue;
      auto theta = unify_atoms(left[i].atom, renamed[j].atom);
      if (!theta) continue;
      LiteralList clause = apply_except(left, i, *theta);
      LiteralList rest = apply_except(renamed, j, *theta);
      clause.insert(clause.end(), rest.begin(), rest.end());
      out.push_back({normalize_clause(std::move(clause)), std::move(*theta)});
    }
  }
  return out;
}

std::vector<Resolvent> factors(const LiteralList& clause) {
  std::vector<Resolvent> out;
  for (std::size_t i = 0; i < clause.size(); ++i) {
    for (std::size_t j = i + 1; j < clause.size(); ++j) {
      if (clause[i].positive != clause[j].positive) continue;
      auto theta = unify_atoms(clause[i].atom, clause[j].atom);
      if (!theta) continue;
      out.push_back({normalize_clause(apply_except(clause, j, *theta)), std::move(*theta)});
    }
  }
  return out;
}

Saturation::Saturation(Limits limits) : limits_(limits), start_(std::chrono::steady_clock::now()) {}

bool Saturation::out_of_time() const {
  auto elapsed = std::chrono::steady_clock::now() - start_;
  return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() > limits_.timeout_ms;
}

std::size_t Saturation::add_input(LiteralList clause, std::size_t source, bool from_goal) {
  Origin origin;
  origin.source = source;
  std::size_t before = result_.clauses.size();
  add(std::move(clause), std::move(origin), from_goal, 0);
  return result_.clauses.size() > before ? result_.clauses.size() - 1 : before;
}

Saturation::Outcome Saturation::add(LiteralList clause, Origin origin, bool from_goal, std::size_t max_answers) {
  clause = normalize_clause(std::move(clause));
  if (is_tautology(clause)) return Outcome::kContinue;
  if (clause.size() > limits_.max_literals) {
    dropped_ = true;
    return Outcome::kContinue;
  }
  std::string key = render(clause);
  if (origin.rule != Origin::Rule::kInput && !seen_.insert(key).second) return Outcome::kContinue;
  if (origin.rule == Origin::Rule::kInput) seen_.insert(key);

  ClauseRecord record;
  record.id = result_.clauses.size();
  record.weight = weight(clause);
  record.from_goal = from_goal;
  record.origin = std::move(origin);
  record.literals = std::move(clause);
  result_.clauses.push_back(record);
  const ClauseRecord& stored = result_.clauses.back();

  if (stored.literals.empty()) {
    result_.refutation = stored.id;
    return Outcome::kRefuted;
  }
  if (is_answer_clause(stored.literals)) {
    // Disjunctive answers stay in the search; factoring may collapse them.
    if (stored.literals.size() == 1) {
      std::vector<Term> values = stored.literals.front().atom.args();
      std::string answer_key;
      for (const Term& t : values) answer_key += render(t) + " ";
      if (answer_keys_.insert(answer_key).second) {
        result_.answers.push_back({stored.id, std::move(values)});
        if (max_answers > 0 && result_.answers.size() >= max_answers) return Outcome::kEnoughAnswers;
      }
      return Outcome::kContinue;
    }
  }
  passive_.insert({stored.weight, stored.id});
  return Outcome::kContinue;
}

Result Saturation::run(std::size_t max_answers) {
  start_ = std::chrono::steady_clock::now();
  auto finish = [&](Verdict verdict, LimitKind limit) {
    result_.verdict = verdict;
    result_.limit = limit;
    return result_;
  };
  if (result_.refutation) return finish(Verdict::kProved, LimitKind::kNone);

  while (!passive_.empty()) {
    if (out_of_time()) return finish(Verdict::kExhausted, LimitKind::kTime);
    Queued next = *passive_.begin();
    passive_.erase(passive_.begin());
    const LiteralList given = result_.clauses[next.id].literals;

    bool redundant = std::any_of(active_.begin(), active_.end(), [&](std::size_t a) {
      return subsumes(result_.clauses[a].literals, given);
    });
    if (redundant) continue;
    ++result_.stats.selected;
    std::erase_if(active_, [&](std::size_t a) { return subsumes(given, result_.clauses[a].literals); });
    active_.push_back(next.id);
    bool given_from_goal = result_.clauses[next.id].from_goal;

    std::vector<std::pair<Resolvent, Origin>> fresh;
    for (Resolvent& r : factors(given)) {
      Origin o{Origin::Rule::kFactor, {next.id}, r.theta, 0};
      fresh.emplace_back(std::move(r), std::move(o));
    }
    for (std::size_t a : active_) {
      // Copy: adding clauses may reallocate the record vector.
      const LiteralList other = result_.clauses[a].literals;
      for (Resolvent& r : resolve(given, other)) {
        Origin o{Origin::Rule::kResolve, {next.id, a}, r.theta, 0};
        fresh.emplace_back(std::move(r), std::move(o));
      }
      if (a == next.id) continue;
      for (Resolvent& r : resolve(other, given)) {
        Origin o{Origin::Rule::kResolve, {a, next.id}, r.theta, 0};
        fresh.emplace_back(std::move(r), std::move(o));
      }
    }

    for (auto& [resolvent, origin] : fresh) {
      if (++result_.stats.generated > limits_.max_generated) {
        return finish(Verdict::kExhausted, LimitKind::kGenerated);
      }
      bool from_goal = given_from_goal;
      for (std::size_t p : origin.parents) from_goal = from_goal || result_.clauses[p].from_goal;
      Outcome outcome = add(std::move(resolvent.clause), std::move(origin), from_goal, max_answers);
      if (outcome == Outcome::kRefuted) return finish(Verdict::kProved, LimitKind::kNone);
      if (outcome == Outcome::kEnoughAnswers) return finish(Verdict::kProved, LimitKind::kNone);
    }
  }
  if (!result_.answers.empty()) return finish(Verdict::kProved, LimitKind::kNone);
  if (dropped_) return finish(Verdict::kExhausted, LimitKind::kClauseSize);
  return finish(Verdict::kFailed, LimitKind::kNone);
}

Formula negated_goal(const Formula& goal, std::span<const std::string> query_vars) {
  if (query_vars.empty()) return Formula::negation(goal);
  std::vector<Term> args;
  for (const auto& v : query_vars) args.push_back(Term::variable(v));
  Formula body = Formula::disjunction(Formula::negation(goal), Formula::atom(kAnswerPredicate, std::move(args)));
  for (auto it = query_vars.rbegin(); it != query_vars.rend(); ++it) body = Formula::forall(*it, body);
  return body;
}

namespace {

Result run_with(std::span<const Formula> axioms, const Formula& goal, std::span<const std::string> query_vars,
                const Limits& limits, std::size_t max_answers, SkolemTable& skolems) {
  Saturation saturation(limits);
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    for (LiteralList& clause : cnf(axioms[i], skolems)) saturation.add_input(std::move(clause), i, false);
  }
  for (LiteralList& clause : cnf(negated_goal(goal, query_vars), skolems)) {
    saturation.add_input(std::move(clause), axioms.size(), true);
  }
  Result result = saturation.run(max_answers);
  if (!query_vars.empty() && result.refutation && result.answers.empty()) {
    // Inconsistent premises: every binding is an answer.
    std::vector<Term> schematic;
    for (const auto& v : query_vars) schematic.push_back(Term::variable(v));
    result.answers.push_back({*result.refutation, std::move(schematic)});
  }
  return result;
}

}  // namespace

Result prove_fo(std::span<const Formula> axioms, const Formula& goal, const Limits& limits, SkolemTable& skolems) {
  return run_with(axioms, goal, {}, limits, 0, skolems);
}

Result prove_answer(std::span<const Formula> axioms, const Formula& goal, std::span<const std::string> query_vars,
                    const Limits& limits, std::size_t max_answers, SkolemTable& skolems) {
  return run_with(axioms, goal, query_vars, limits, std::max<std::size_t>(max_answers, 1), skolems);
}

}  // namespace shadow::fo
