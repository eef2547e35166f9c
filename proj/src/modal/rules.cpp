#include "shadow/modal/rules.hpp"

#include <algorithm>
#include <unordered_set>

#include "shadow/errors.hpp"
#include "shadow/fo/clause.hpp"
#include "shadow/fo/prover.hpp"
#include "shadow/fo/unify.hpp"
#include "shadow/transform.hpp"

namespace shadow::modal {

const std::vector<LiteralList>& RuleEnv::clauses_of(const Formula& body) {
  std::string key = canonical(body);
  auto it = cnf_cache_.find(key);
  if (it != cnf_cache_.end()) return it->second;
  return cnf_cache_.emplace(std::move(key), fo::cnf(shadow(body, 1, atoms), skolems)).first->second;
}

namespace {

class FactCache {
 public:
  explicit FactCache(const KnowledgeBase& kb) : kb_(kb) {}

  const std::vector<Fact>& at(const ContextPath& path) {
    auto it = cache_.find(path);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(path, compute(path)).first->second;
  }

 private:
  std::vector<Fact> compute(const ContextPath& path) {
    std::vector<Fact> out;
    if (path.empty()) {
      for (const Entry& e : kb_.entries()) out.push_back(Fact{e.formula, Source{e.id, {}}});
      return out;
    }
    ContextPath prefix(path.begin(), path.end() - 1);
    const Context& last = path.back();
    const std::vector<Fact>& outer = at(prefix);
    std::unordered_set<std::string> seen;
    // Beliefs held at exactly this time come first so they win over promotions.
    for (bool exact : {true, false}) {
      for (const Fact& f : outer) {
        if (f.formula.kind() != Formula::Kind::kBelieves || f.formula.agent() != last.agent) continue;
        const TimeSym& t = f.formula.time();
        if (exact ? t != last.time : !(t < last.time)) continue;
        if (!seen.insert(canonical(f.formula.body())).second) continue;
        Source source = f.source;
        if (!exact) source.hops.push_back(PromoteHop{prefix, last.time});
        out.push_back(Fact{f.formula.body(), std::move(source)});
      }
    }
    return out;
  }

  const KnowledgeBase& kb_;
  std::map<ContextPath, std::vector<Fact>> cache_;
};

std::map<AgentSym, std::vector<std::size_t>> beliefs_by_agent(const std::vector<Fact>& facts) {
  std::map<AgentSym, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < facts.size(); ++i) {
    if (facts[i].formula.kind() == Formula::Kind::kBelieves) out[facts[i].formula.agent()].push_back(i);
  }
  return out;
}

std::vector<ContextPath> paths_with(FactCache& cache, int max_depth) {
  std::vector<ContextPath> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    ContextPath current = out[i];
    if (static_cast<int>(current.size()) >= max_depth) continue;
    std::set<Context> children;
    for (const Fact& f : cache.at(current)) {
      if (f.formula.kind() == Formula::Kind::kBelieves) children.insert(Context{f.formula.agent(), f.formula.time()});
    }
    for (const Context& c : children) {
      ContextPath next = current;
      next.push_back(c);
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<Proposal> belief_resolution(const KnowledgeBase& kb, const ContextPath& path,
                                        const std::vector<Fact>& facts, RuleEnv& env) {
  std::vector<Proposal> out;
  for (const auto& [agent, group] : beliefs_by_agent(facts)) {
    for (std::size_t i : group) {
      for (std::size_t j : group) {
        const Formula& left = facts[i].formula;
        const Formula& right = facts[j].formula;
        const TimeSym time = std::max(left.time(), right.time());
        // Copies: clauses_of may grow the cache.
        const std::vector<LiteralList> left_clauses = env.clauses_of(left.body());
        const std::vector<LiteralList> right_clauses = env.clauses_of(right.body());
        for (const LiteralList& c1 : left_clauses) {
          for (const LiteralList& c2 : right_clauses) {
            for (fo::Resolvent& r : fo::resolve(c1, c2)) {
              if (++env.spent > env.budget) {
                env.truncated = true;
                return out;
              }
              if (r.clause.empty() || fo::is_tautology(r.clause)) continue;
              Formula body = normalize(unshadow(fo::clause_to_formula(r.clause)));
              Formula result = wrap_context(path, Formula::believes(agent, time, body));
              if (kb.contains(result)) continue;
              Derivation d;
              d.rule = proof::Rule::kBelief;
              d.path = path;
              d.parents = {facts[i].source, facts[j].source};
              d.clauses = {c1, c2};
              d.theta = std::move(r.theta);
              out.push_back(Proposal{std::move(result), std::move(d)});
            }
          }
        }
      }
    }
  }
  return out;
}

Formula rename_prefix(const Formula& formula, const std::string& stem) {
  std::vector<std::string> vars;
  Formula body = strip_forall_prefix(formula, vars);
  Substitution rename;
  for (std::size_t k = 0; k < vars.size(); ++k) rename.emplace(vars[k], Term::variable(stem + std::to_string(k)));
  return substitute(body, rename);
}

std::vector<Proposal> obligation_detachment(const KnowledgeBase& kb, const ContextPath& path,
                                            const std::vector<Fact>& facts) {
  std::vector<Proposal> out;
  for (const auto& [agent, group] : beliefs_by_agent(facts)) {
    for (std::size_t j : group) {
      const Formula& believed_ought = facts[j].formula;
      Formula ought = rename_prefix(believed_ought.body(), "Y");
      if (ought.kind() != Formula::Kind::kOught || ought.agent() != agent) continue;
      const Formula& condition = ought.condition();
      for (std::size_t i : group) {
        const Formula& belief = facts[i].formula;
        Formula phi = condition.kind() == Formula::Kind::kForall ? belief.body() : rename_prefix(belief.body(), "X");
        auto theta = fo::unify_formulas(phi, condition);
        if (!theta) continue;
        Formula duty = normalize(universal_closure(substitute(ought.duty(), *theta)));
        TimeSym time = std::max(belief.time(), believed_ought.time());
        Formula result = wrap_context(path, Formula::goal(agent, time, duty));
        if (kb.contains(result)) continue;
        Derivation d;
        d.rule = proof::Rule::kObligation;
        d.path = path;
        d.parents = {facts[i].source, facts[j].source};
        d.theta = std::move(*theta);
        d.note = "goal time is the later premise time";
        out.push_back(Proposal{std::move(result), std::move(d)});
      }
    }
  }
  return out;
}

std::vector<Proposal> promotion(const KnowledgeBase& kb, const ContextPath& path, const std::vector<Fact>& facts,
                                const RuleEnv& env) {
  std::vector<Proposal> out;
  for (const Fact& f : facts) {
    if (f.formula.kind() != Formula::Kind::kBelieves) continue;
    for (const TimeSym& to : env.targets) {
      if (!(f.formula.time() < to)) continue;
      Formula result = wrap_context(path, promote_belief(f.formula, to));
      if (kb.contains(result)) continue;
      Derivation d;
      d.rule = proof::Rule::kPromote;
      d.path = path;
      d.parents = {f.source};
      out.push_back(Proposal{std::move(result), std::move(d)});
    }
  }
  return out;
}

}  // namespace

std::vector<Fact> facts_at(const KnowledgeBase& kb, const ContextPath& path) {
  FactCache cache(kb);
  return cache.at(path);
}

std::vector<ContextPath> context_paths(const KnowledgeBase& kb, int max_depth) {
  FactCache cache(kb);
  return paths_with(cache, max_depth);
}

std::vector<Proposal> apply_IB(const KnowledgeBase& kb, const ContextPath& path, RuleEnv& env) {
  return belief_resolution(kb, path, facts_at(kb, path), env);
}

std::vector<Proposal> apply_IO(const KnowledgeBase& kb, const ContextPath& path, RuleEnv&) {
  return obligation_detachment(kb, path, facts_at(kb, path));
}

std::vector<Proposal> apply_promote(const KnowledgeBase& kb, const ContextPath& path, RuleEnv& env) {
  return promotion(kb, path, facts_at(kb, path), env);
}

Formula promote_belief(const Formula& belief, const TimeSym& to) {
  if (belief.kind() != Formula::Kind::kBelieves) throw TimeError("only beliefs can be promoted: " + render(belief));
  if (to < belief.time()) {
    throw TimeError("cannot promote a belief at " + belief.time().name + " back to " + to.name);
  }
  return Formula::believes(belief.agent(), to, belief.body());
}

std::vector<Proposal> expand_round(const KnowledgeBase& kb, int min_depth, int max_depth, RuleEnv& env) {
  FactCache cache(kb);
  std::vector<Proposal> out;
  std::unordered_set<std::string> seen;
  auto keep = [&](std::vector<Proposal>&& batch) {
    for (Proposal& p : batch) {
      if (seen.insert(canonical(p.formula)).second) out.push_back(std::move(p));
    }
  };
  for (const ContextPath& path : paths_with(cache, max_depth)) {
    if (static_cast<int>(path.size()) < min_depth) continue;
    const std::vector<Fact>& facts = cache.at(path);
    keep(obligation_detachment(kb, path, facts));
    keep(belief_resolution(kb, path, facts, env));
    keep(promotion(kb, path, facts, env));
  }
  return out;
}

std::vector<Proposal> expand_contexts(const KnowledgeBase& kb, int max_depth, RuleEnv& env) {
  return expand_round(kb, 1, max_depth, env);
}

}  // namespace shadow::modal
