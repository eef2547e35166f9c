#include "assemble.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "shadow/transform.hpp"

namespace shadow::modal {

namespace {

std::string context_key(const ContextPath& path) {
  std::string out;
  for (const Context& c : path) out += c.agent.name + "@" + std::to_string(c.time.index) + "/";
  return out;
}

void collect_shadow_ids(const Formula& f, std::vector<std::string>& out) {
  if (f.is_shadow_atom()) {
    if (std::find(out.begin(), out.end(), f.predicate()) == out.end()) out.push_back(f.predicate());
    return;
  }
  for (const Formula& c : f.children()) collect_shadow_ids(c, out);
}

std::string shadow_note(const Formula& f) {
  std::vector<std::string> ids;
  collect_shadow_ids(f, ids);
  std::string out = "atomized";
  for (const std::string& id : ids) out += " " + id;
  return out;
}

}  // namespace

std::size_t ProofBuilder::add(proof::Step step) {
  step.id = steps_.size() + 1;
  steps_.push_back(std::move(step));
  return steps_.back().id;
}

std::size_t ProofBuilder::clause_step(const LiteralList& clause, std::size_t parent, const ContextPath& context) {
  std::string key = std::to_string(parent) + "|" + context_key(context) + "|" + render(clause);
  if (auto it = clause_steps_.find(key); it != clause_steps_.end()) return it->second;
  proof::Step step;
  step.rule = proof::Rule::kCnf;
  step.conclusion = clause;
  step.parents = {parent};
  step.context = context;
  std::size_t id = add(std::move(step));
  clause_steps_.emplace(std::move(key), id);
  return id;
}

std::size_t ProofBuilder::entry_step(std::size_t entry) {
  if (auto it = entry_steps_.find(entry); it != entry_steps_.end()) return it->second;
  const Entry& e = kb_.entry(entry);
  const Derivation& d = e.derivation;
  proof::Step step;
  step.rule = d.rule;
  step.conclusion = e.formula;
  step.subst = d.theta;
  step.note = d.note;
  step.context = d.path;
  switch (d.rule) {
    case proof::Rule::kInput:
      break;
    case proof::Rule::kBelief: {
      for (std::size_t k = 0; k < 2; ++k) {
        std::size_t parent = source_step(d.parents.at(k));
        Formula premise = *unwrap_context(d.path, resolve_source(kb_, d.parents[k]));
        ContextPath inner = d.path;
        inner.push_back(Context{premise.agent(), premise.time()});
        step.parents.push_back(clause_step(d.clauses.at(k), parent, inner));
      }
      break;
    }
    case proof::Rule::kObligation:
    case proof::Rule::kPromote:
      for (const Source& s : d.parents) step.parents.push_back(source_step(s));
      break;
    default:
      throw std::logic_error("unexpected derivation rule " + proof::to_string(d.rule));
  }
  std::size_t id = add(std::move(step));
  entry_steps_.emplace(entry, id);
  formula_steps_.emplace(canonical(e.formula), id);
  return id;
}

std::size_t ProofBuilder::source_step(const Source& source) {
  std::size_t current = entry_step(source.entry);
  Formula formula = kb_.entry(source.entry).formula;
  for (const PromoteHop& hop : source.hops) {
    Formula inner = *unwrap_context(hop.path, formula);
    formula = wrap_context(hop.path, Formula::believes(inner.agent(), hop.to, inner.body()));
    std::string key = canonical(formula);
    if (auto it = formula_steps_.find(key); it != formula_steps_.end()) {
      current = it->second;
      continue;
    }
    proof::Step step;
    step.rule = proof::Rule::kPromote;
    step.conclusion = formula;
    step.parents = {current};
    step.context = hop.path;
    current = add(std::move(step));
    formula_steps_.emplace(std::move(key), current);
  }
  return current;
}

proof::Proof ProofBuilder::finish(const fo::Result& result, std::size_t target,
                                  const std::vector<std::size_t>& axiom_entries, const std::vector<Formula>& shadowed,
                                  const Formula& negated_goal, const Formula& conclusion) {
  std::set<std::size_t> used;
  std::vector<std::size_t> stack{target};
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    if (!used.insert(id).second) continue;
    for (std::size_t p : result.clauses.at(id).origin.parents) stack.push_back(p);
  }

  const std::size_t goal_source = axiom_entries.size();
  std::map<std::size_t, std::size_t> axiom_steps;
  for (std::size_t id : used) {
    const fo::ClauseRecord& r = result.clauses[id];
    if (r.origin.rule != fo::Origin::Rule::kInput || r.origin.source == goal_source) continue;
    std::size_t axiom = r.origin.source;
    if (axiom_steps.count(axiom)) continue;
    std::size_t step = entry_step(axiom_entries.at(axiom));
    if (shadowed.at(axiom) != kb_.entry(axiom_entries[axiom]).formula) {
      proof::Step s;
      s.rule = proof::Rule::kShadow;
      s.conclusion = shadowed[axiom];
      s.note = shadow_note(shadowed[axiom]);
      s.parents = {step};
      step = add(std::move(s));
    }
    axiom_steps.emplace(axiom, step);
  }

  proof::Step negated;
  negated.rule = proof::Rule::kInput;
  negated.conclusion = negated_goal;
  negated.note = "negated goal";
  const std::size_t negated_step = add(std::move(negated));

  std::map<std::size_t, std::size_t> clause_ids;
  for (std::size_t id : used) {
    const fo::ClauseRecord& r = result.clauses[id];
    proof::Step step;
    step.conclusion = r.literals;
    step.subst = r.origin.theta;
    switch (r.origin.rule) {
      case fo::Origin::Rule::kInput: {
        std::size_t parent = r.origin.source == goal_source ? negated_step : axiom_steps.at(r.origin.source);
        clause_ids[id] = clause_step(r.literals, parent, {});
        continue;
      }
      case fo::Origin::Rule::kResolve:
        step.rule = proof::Rule::kResolve;
        break;
      case fo::Origin::Rule::kFactor:
        step.rule = proof::Rule::kFactor;
        break;
    }
    for (std::size_t p : r.origin.parents) step.parents.push_back(clause_ids.at(p));
    clause_ids[id] = add(std::move(step));
  }

  proof::Step last;
  last.rule = proof::Rule::kUnshadow;
  last.conclusion = conclusion;
  last.parents = {clause_ids.at(target), negated_step};

  proof::Proof out;
  out.goal_step = add(std::move(last));
  out.steps = std::move(steps_);
  return out;
}

}  // namespace shadow::modal
