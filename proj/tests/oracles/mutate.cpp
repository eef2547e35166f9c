#include "mutate.hpp"

#include "shadow/transform.hpp"

namespace oracle {

using shadow::Formula;
using shadow::proof::Proof;
using shadow::proof::Rule;
using shadow::proof::Step;

namespace {

template <class Pred>
std::vector<std::size_t> steps_where(const Proof& p, Pred pred) {
  std::vector<std::size_t> out;
  for (const Step& s : p.steps) {
    if (pred(s)) out.push_back(s.id);
  }
  return out;
}

std::size_t choose(const std::vector<std::size_t>& ids, std::mt19937_64& rng) {
  return ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
}

Rule relabel(Rule r) {
  switch (r) {
    case Rule::kInput: return Rule::kResolve;
    case Rule::kResolve: return Rule::kFactor;
    case Rule::kBelief: return Rule::kObligation;
    case Rule::kObligation: return Rule::kBelief;
    case Rule::kPromote: return Rule::kBelief;
    case Rule::kShadow: return Rule::kUnshadow;
    case Rule::kUnshadow: return Rule::kShadow;
    case Rule::kFactor: return Rule::kResolve;
    case Rule::kCnf: return Rule::kPromote;
  }
  return Rule::kInput;
}

Formula with_time(const Formula& inner, const shadow::TimeSym& t) {
  switch (inner.kind()) {
    case Formula::Kind::kBelieves: return Formula::believes(inner.agent(), t, inner.body());
    case Formula::Kind::kGoal: return Formula::goal(inner.agent(), t, inner.body());
    default: return inner;
  }
}

}  // namespace

std::vector<Mutation> mutations(const Proof& proof, const shadow::Problem& problem, std::mt19937_64& rng) {
  std::vector<Mutation> out;
  auto emit = [&](std::string kind, std::size_t id, auto&& change) {
    Proof p = proof;
    change(p.steps.at(id - 1), p);
    out.push_back(Mutation{std::move(kind), id, std::move(p)});
  };

  const Formula tampered = Formula::atom("Tampered");
  if (auto ids = steps_where(proof, [&](const Step& s) { return s.id != proof.goal_step; }); !ids.empty()) {
    emit("conclusion", choose(ids, rng), [&](Step& s, Proof&) {
      if (s.is_clause()) {
        s.conclusion = [&] {
          auto c = s.clause();
          c.push_back(shadow::Literal{true, tampered});
          return c;
        }();
      } else {
        s.conclusion = Formula::conjunction(s.formula(), tampered);
      }
    });
  }
  if (auto ids = steps_where(proof, [](const Step& s) { return !s.subst.empty(); }); !ids.empty()) {
    emit("subst", choose(ids, rng), [](Step& s, Proof&) { s.subst.begin()->second = shadow::Term::constant("tampered"); });
  }
  if (auto ids = steps_where(proof, [](const Step& s) { return !s.parents.empty(); }); !ids.empty()) {
    std::size_t id = choose(ids, rng);
    const Step& s = proof.step(id);
    bool parent_is_clause = proof.step(s.parents[0]).is_clause();
    auto other = steps_where(proof, [&](const Step& o) { return o.id < id && o.is_clause() != parent_is_clause; });
    if (!other.empty()) {
      std::size_t replacement = choose(other, rng);
      emit("parent", id, [&](Step& st, Proof&) { st.parents[0] = replacement; });
    }
    emit("forward", choose(ids, rng), [](Step& st, Proof&) { st.parents.back() = st.id; });
    emit("arity", choose(ids, rng), [](Step& st, Proof&) { st.parents.pop_back(); });
  }
  emit("rule", choose(steps_where(proof, [](const Step&) { return true; }), rng),
       [](Step& s, Proof&) { s.rule = relabel(s.rule); });
  auto timed = steps_where(proof, [&](const Step& s) {
    if (s.rule != Rule::kBelief && s.rule != Rule::kObligation) return false;
    auto inner = shadow::unwrap_context(s.context, s.formula());
    return inner && inner->time() > problem.decls.times.front();
  });
  if (!timed.empty()) {
    emit("time", choose(timed, rng), [&](Step& s, Proof&) {
      Formula inner = *shadow::unwrap_context(s.context, s.formula());
      s.conclusion = shadow::wrap_context(s.context, with_time(inner, problem.decls.times.front()));
    });
  }
  emit("goal", proof.goal_step, [](Step& s, Proof&) { s.conclusion = Formula::negation(s.formula()); });
  if (proof.answer && !proof.answer->empty()) {
    emit("answer", proof.goal_step,
         [](Step&, Proof& p) { p.answer->begin()->second = shadow::Term::constant("tampered"); });
  }
  return out;
}

}  // namespace oracle
