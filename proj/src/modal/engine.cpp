#include "shadow/modal/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "assemble.hpp"
#include "shadow/fo/unify.hpp"
#include "shadow/modal/kb.hpp"
#include "shadow/modal/rules.hpp"
#include "shadow/shadowing.hpp"
#include "shadow/transform.hpp"

namespace shadow::modal {

std::string to_string(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::kShadow: return "shadow";
    case TraceEvent::Kind::kFoCall: return "fo-call";
    case TraceEvent::Kind::kExpand: return "expand";
    case TraceEvent::Kind::kFixpoint: return "fixpoint";
  }
  return "shadow";
}

std::vector<Formula> initial_formulas(const Problem& problem) {
  std::vector<Formula> out;
  for (const NamedFormula& a : problem.assumptions) out.push_back(normalize(universal_closure(a.formula)));
  return out;
}

namespace {

/// Maximal subformulae that shadowing at level 1 would replace, reached
/// through connectives only.
void shadowable(const Formula& f, std::vector<Formula>& out) {
  if (f.is_connective()) {
    for (const Formula& c : f.children()) shadowable(c, out);
    return;
  }
  if (level(f) > 1) out.push_back(f);
}

class Run {
 public:
  Run(const Problem& problem, const Limits& limits)
      : problem_(problem), limits_(limits), goal_(normalize(problem.goal)), env_(atoms_, skolems_) {
    env_.targets = times_in(goal_);
    env_.budget = limits.fo.max_generated;
    auto formulas = initial_formulas(problem);
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      Derivation d;
      d.note = problem.assumptions[i].name;
      kb_.add(formulas[i], std::move(d));
    }
  }

  Outcome prove() {
    for (std::size_t iteration = 1; iteration <= limits_.max_iterations; ++iteration) {
      outcome_.stats.iterations = iteration;
      shadow_kb(iteration);
      Formula goal = shadow(goal_, 1, atoms_);
      record(TraceEvent::Kind::kFoCall, iteration);
      fo::Result result = fo::prove_fo(shadowed_, goal, limits_.fo, skolems_);
      outcome_.trace.back().fo_verdict = result.verdict;
      note_fo(result);
      if (result.verdict == Verdict::kProved) {
        ProofBuilder builder(kb_);
        outcome_.proof = builder.finish(result, *result.refutation, axiom_entries_, shadowed_,
                                        fo::negated_goal(goal, {}), goal_);
        stamp(*outcome_.proof);
        return finish(Verdict::kProved, "");
      }
      if (!expand(iteration)) return fixpoint(iteration);
    }
    return finish(Verdict::kExhausted, "iteration limit reached");
  }

  Outcome answer() {
    for (std::size_t iteration = 1; iteration <= limits_.max_iterations; ++iteration) {
      outcome_.stats.iterations = iteration;
      shadow_kb(iteration);
      record(TraceEvent::Kind::kFoCall, iteration);
      Verdict best = Verdict::kFailed;
      for (const Substitution& partial : modal_bindings()) {
        Verdict v = answer_with(partial);
        if (v == Verdict::kProved || (v == Verdict::kExhausted && best == Verdict::kFailed)) best = v;
        if (outcome_.answers.size() >= limits_.max_answers) break;
      }
      outcome_.trace.back().fo_verdict = best;
      if (outcome_.answers.size() >= limits_.max_answers) return finish(Verdict::kProved, "");
      if (!expand(iteration)) {
        if (!outcome_.answers.empty()) return finish(Verdict::kProved, "");
        return fixpoint(iteration);
      }
    }
    if (!outcome_.answers.empty()) return finish(Verdict::kProved, "");
    return finish(Verdict::kExhausted, "iteration limit reached");
  }

 private:
  void record(TraceEvent::Kind kind, std::size_t iteration, std::size_t added = 0) {
    outcome_.trace.push_back(TraceEvent{kind, iteration, kb_.size(), added, Verdict::kFailed});
  }

  void shadow_kb(std::size_t iteration) {
    record(TraceEvent::Kind::kShadow, iteration);
    // Entries only ever get appended, so earlier views stay valid.
    for (std::size_t i = shadowed_.size(); i < kb_.size(); ++i) {
      Formula s = shadow(kb_.entry(i).formula, 1, atoms_);
      if (level(s) > 1) throw std::logic_error("shadowed formula above level 1: " + render(s));
      shadowed_.push_back(std::move(s));
      axiom_entries_.push_back(i);
    }
  }

  void note_fo(const fo::Result& result) {
    outcome_.stats.clauses_generated += result.stats.generated;
    if (result.verdict == Verdict::kExhausted) {
      fo_exhausted_ = true;
      fo_limit_ = fo::to_string(result.limit);
    }
  }

  bool expand(std::size_t iteration) {
    env_.spent = 0;
    std::size_t added = 0;
    for (Proposal& p : expand_round(kb_, 0, limits_.max_depth, env_)) {
      if (kb_.add(std::move(p.formula), std::move(p.derivation))) ++added;
    }
    kb_.next_generation();
    record(TraceEvent::Kind::kExpand, iteration, added);
    return added > 0;
  }

  Outcome fixpoint(std::size_t iteration) {
    record(TraceEvent::Kind::kFixpoint, iteration);
    if (fo_exhausted_) return finish(Verdict::kExhausted, "first-order limit reached: " + fo_limit_);
    if (env_.truncated) return finish(Verdict::kExhausted, "expansion budget reached");
    return finish(Verdict::kFailed, "");
  }

  Outcome finish(Verdict verdict, std::string reason) {
    outcome_.verdict = verdict;
    outcome_.reason = std::move(reason);
    outcome_.stats.kb_size = kb_.size();
    return outcome_;
  }

  void stamp(proof::Proof& p) const {
    p.stats.iterations = outcome_.stats.iterations;
    p.stats.clauses_generated = outcome_.stats.clauses_generated;
  }

  /// Bindings for query variables that occur inside modal subformulae of the
  /// goal, found by unifying those subformulae with what the KB states.
  std::vector<Substitution> modal_bindings() const {
    std::vector<Formula> open;
    std::vector<Formula> goal_parts;
    shadowable(goal_, goal_parts);
    for (const Formula& g : goal_parts) {
      if (!is_closed(g)) open.push_back(g);
    }
    std::vector<Formula> known;
    for (const Entry& e : kb_.entries()) shadowable(e.formula, known);

    std::vector<Substitution> combos{{}};
    constexpr std::size_t kMaxCombos = 1024;
    for (const Formula& g : open) {
      std::vector<Substitution> next;
      std::set<std::string> seen;
      for (const Substitution& base : combos) {
        for (const Formula& k : known) {
          auto theta = fo::unify_formulas(substitute(g, base), k, {});
          if (!theta) continue;
          Substitution merged = base;
          for (const auto& [v, t] : *theta) merged.emplace(v, t);
          if (seen.insert(render(merged)).second && next.size() < kMaxCombos) next.push_back(std::move(merged));
        }
      }
      combos = std::move(next);
    }
    return combos;
  }

  Verdict answer_with(const Substitution& partial) {
    Formula instance = substitute(goal_, partial);
    std::vector<Formula> parts;
    shadowable(instance, parts);
    if (std::any_of(parts.begin(), parts.end(), [](const Formula& f) { return !is_closed(f); })) {
      return Verdict::kFailed;
    }
    std::vector<std::string> rest;
    for (const std::string& v : problem_.query_vars) {
      if (!partial.count(v)) rest.push_back(v);
    }
    Formula goal = shadow(instance, 1, atoms_);
    std::size_t remaining = limits_.max_answers - outcome_.answers.size();
    fo::Result result = rest.empty() ? fo::prove_fo(shadowed_, goal, limits_.fo, skolems_)
                                     : fo::prove_answer(shadowed_, goal, rest, limits_.fo, remaining, skolems_);
    note_fo(result);
    if (rest.empty()) {
      if (result.verdict == Verdict::kProved) add_answer(result, *result.refutation, partial, goal, rest);
      return result.verdict;
    }
    for (const fo::Answer& a : result.answers) {
      Substitution full = partial;
      for (std::size_t k = 0; k < rest.size(); ++k) full.emplace(rest[k], a.values.at(k));
      add_answer(result, a.clause, full, goal, rest);
      if (outcome_.answers.size() >= limits_.max_answers) break;
    }
    return result.answers.empty() ? result.verdict : Verdict::kProved;
  }

  void add_answer(const fo::Result& result, std::size_t clause, const Substitution& full, const Formula& goal,
                  const std::vector<std::string>& rest) {
    std::string key;
    for (const std::string& v : problem_.query_vars) key += render(full.at(v)) + "\n";
    if (!answer_keys_.insert(key).second) return;
    ProofBuilder builder(kb_);
    proof::Proof p = builder.finish(result, clause, axiom_entries_, shadowed_, fo::negated_goal(goal, rest),
                                    substitute(goal_, full));
    p.answer = full;
    stamp(p);
    outcome_.answers.push_back(std::move(p));
  }

  const Problem& problem_;
  Limits limits_;
  Formula goal_;
  AtomTable atoms_;
  fo::SkolemTable skolems_;
  KnowledgeBase kb_;
  RuleEnv env_;
  std::vector<Formula> shadowed_;
  std::vector<std::size_t> axiom_entries_;
  bool fo_exhausted_ = false;
  std::string fo_limit_;
  std::unordered_set<std::string> answer_keys_;
  Outcome outcome_;
};

}  // namespace

Outcome prove(const Problem& problem, const Limits& limits) { return Run(problem, limits).prove(); }

Outcome answer(const Problem& problem, const Limits& limits) {
  if (!problem.is_query()) throw std::invalid_argument("answer mode needs query variables");
  return Run(problem, limits).answer();
}

}  // namespace shadow::modal
