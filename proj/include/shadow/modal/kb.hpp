#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "shadow/formula.hpp"
#include "shadow/proof/proof.hpp"

namespace shadow::modal {

/// Moves the belief found at `path` forward to time `to`.
struct PromoteHop {
  ContextPath path;
  TimeSym to;
};

/// A premise: a stored entry, possibly promoted along the way into the
/// context it is used in. Promotions stay virtual until a proof needs them.
struct Source {
  std::size_t entry = 0;
  std::vector<PromoteHop> hops;
};

/// How an entry was obtained. `path` is the context the rule fired in.
struct Derivation {
  proof::Rule rule = proof::Rule::kInput;
  ContextPath path;
  std::vector<Source> parents;
  /// I_B: the two resolved clauses, read in the premises' contexts.
  std::vector<LiteralList> clauses;
  Substitution theta;
  std::string note;
};

struct Entry {
  std::size_t id = 0;
  Formula formula;
  Derivation derivation;
  std::size_t generation = 0;
};

/// Formula set with derivations. Membership is up to alpha-equivalence, so
/// re-adding a known formula is a no-op.
class KnowledgeBase {
 public:
  /// Returns the new entry id, or nullopt when an alpha-variant is present.
  std::optional<std::size_t> add(Formula formula, Derivation derivation);
  bool contains(const Formula& formula) const;
  std::optional<std::size_t> find(const Formula& formula) const;

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(std::size_t id) const { return entries_.at(id); }
  std::size_t size() const { return entries_.size(); }

  /// Top-level Believes entries of `agent`, in insertion order.
  const std::vector<std::size_t>& beliefs_of(const AgentSym& agent) const;
  std::vector<AgentSym> believers() const;

  std::size_t generation() const { return generation_; }
  void next_generation() { ++generation_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;  // canonical text -> id
  std::map<AgentSym, std::vector<std::size_t>> beliefs_;
  std::size_t generation_ = 0;
};

/// The formula a source denotes: the entry with its promotions applied.
Formula resolve_source(const KnowledgeBase& kb, const Source& source);

}  // namespace shadow::modal
