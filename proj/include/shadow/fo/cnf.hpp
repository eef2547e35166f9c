#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "shadow/formula.hpp"

namespace shadow::fo {

/// Hands out Skolem symbols `$sk<n>`. The key is the alpha-canonical text of
/// the existential together with its governing universals, so clausifying
/// the same formula twice reuses the same symbols.
class SkolemTable {
 public:
  std::string symbol_for(const std::string& key);

 private:
  std::mutex mutex_;
  std::map<std::string, std::string> symbols_;
};

/// Clausal form of a level <= 1 formula: negation normal form, bound
/// variables renamed apart, Skolemization, distribution of `or` over `and`.
/// Free variables are read as universally quantified. Tautologies are
/// dropped and every clause is normalized. Throws ModalNodeError on modal
/// input.
std::vector<LiteralList> cnf(const Formula& formula, SkolemTable& skolems);

}  // namespace shadow::fo
