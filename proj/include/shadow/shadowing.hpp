#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "shadow/formula.hpp"

namespace shadow {

/// A propositional stand-in for a closed subformula.
struct ShadowAtom {
  Formula shadowed;
  std::string id;

  /// The 0-ary atom `#shadow<n>` carrying `shadowed`.
  Formula as_formula() const { return Formula::shadow_atom(id, shadowed); }
};

/// Interning table behind atomization. Alpha-variants share an id; ids are
/// handed out in first-seen order, so a table replayed over the same inputs
/// produces the same ids. Safe to share between threads.
class AtomTable {
 public:
  /// Throws FreeVariableError when `formula` is not closed.
  ShadowAtom atomize(const Formula& formula);

  /// The original of a previously issued id.
  std::optional<Formula> lookup(const std::string& id) const;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::string> ids_;  // canonical text -> id
  std::map<std::string, Formula> originals_;
};

/// Replaces every maximal subformula whose level exceeds `level` by its
/// shadow atom. Connectives are transparent; atoms, quantified formulae and
/// modal nodes are replaced whole. `shadow(f, 2) == f`.
Formula shadow(const Formula& formula, int level, AtomTable& table);

/// Element-wise shadow over one shared table.
std::vector<Formula> shadow_set(std::span<const Formula> formulae, int level, AtomTable& table);

/// Expands every shadow atom back into the formula it stands for.
Formula unshadow(const Formula& formula);
Literal unshadow(const Literal& literal);

}  // namespace shadow
