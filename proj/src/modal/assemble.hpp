#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "shadow/fo/prover.hpp"
#include "shadow/modal/kb.hpp"
#include "shadow/proof/proof.hpp"

namespace shadow::modal {

/// Turns KB derivations and one first-order refutation into a proof.
class ProofBuilder {
 public:
  explicit ProofBuilder(const KnowledgeBase& kb) : kb_(kb) {}

  /// The first-order part: `axiom_entries[i]` is the KB entry behind
  /// first-order axiom i, `shadowed[i]` its level-1 view. `target` is the
  /// empty or answer clause of `result`.
  proof::Proof finish(const fo::Result& result, std::size_t target, const std::vector<std::size_t>& axiom_entries,
                      const std::vector<Formula>& shadowed, const Formula& negated_goal, const Formula& conclusion);

 private:
  std::size_t add(proof::Step step);
  std::size_t entry_step(std::size_t entry);
  std::size_t source_step(const Source& source);
  std::size_t clause_step(const LiteralList& clause, std::size_t parent, const ContextPath& context);

  const KnowledgeBase& kb_;
  std::vector<proof::Step> steps_;
  std::map<std::size_t, std::size_t> entry_steps_;
  std::map<std::string, std::size_t> formula_steps_;
  std::map<std::string, std::size_t> clause_steps_;
};

}  // namespace shadow::modal
