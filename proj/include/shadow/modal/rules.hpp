#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shadow/fo/cnf.hpp"
#include "shadow/modal/kb.hpp"
#include "shadow/shadowing.hpp"

namespace shadow::modal {

/// A formula visible inside a context, with where it came from.
struct Fact {
  Formula formula;
  Source source;
};

/// A candidate new KB formula.
struct Proposal {
  Formula formula;
  Derivation derivation;
};

/// Shared state of one expansion round.
struct RuleEnv {
  RuleEnv(AtomTable& atoms, fo::SkolemTable& skolems) : atoms(atoms), skolems(skolems) {}

  AtomTable& atoms;
  fo::SkolemTable& skolems;
  /// Times beliefs are promoted to.
  std::set<TimeSym> targets;
  /// Cap on I_B resolvents per round; `truncated` records when it bites.
  std::size_t budget = 100000;
  std::size_t spent = 0;
  bool truncated = false;

  /// Clauses of shadow(body, 1), cached per body.
  const std::vector<LiteralList>& clauses_of(const Formula& body);

 private:
  std::map<std::string, std::vector<LiteralList>> cnf_cache_;
};

/// Formulae holding inside `path`. Inside a context (a, t) the bodies of
/// every belief of a at a time t' <= t are visible; earlier beliefs arrive
/// through a promotion hop.
std::vector<Fact> facts_at(const KnowledgeBase& kb, const ContextPath& path);

/// All context paths of length <= max_depth that contain some belief,
/// shortest first; the empty path is always first.
std::vector<ContextPath> context_paths(const KnowledgeBase& kb, int max_depth);

/// Belief resolution at `path`: resolvents of two clauses from beliefs of
/// one agent, believed at the later of the two times.
std::vector<Proposal> apply_IB(const KnowledgeBase& kb, const ContextPath& path, RuleEnv& env);

/// Obligation detachment at `path`: B(a,t1,phi) and B(a,t2,O(a,t3,phi',psi))
/// with phi, phi' unifiable give G(a, max(t1,t2), psi theta).
std::vector<Proposal> apply_IO(const KnowledgeBase& kb, const ContextPath& path, RuleEnv& env);

/// Moves beliefs at `path` forward to every later target time.
std::vector<Proposal> apply_promote(const KnowledgeBase& kb, const ContextPath& path, RuleEnv& env);

/// B(a,t,phi) -> B(a,to,phi). Throws TimeError when to < t.
Formula promote_belief(const Formula& belief, const TimeSym& to);

/// One breadth-first round of every rule over every context path of length
/// in [min_depth, max_depth]. Proposals already in the KB are dropped, as
/// are duplicates within the round.
std::vector<Proposal> expand_round(const KnowledgeBase& kb, int min_depth, int max_depth, RuleEnv& env);

/// The nested part of a round: rules inside belief contexts only.
std::vector<Proposal> expand_contexts(const KnowledgeBase& kb, int max_depth, RuleEnv& env);

}  // namespace shadow::modal
