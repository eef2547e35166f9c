#pragma once

#include <optional>

#include "shadow/formula.hpp"
#include "shadow/term.hpp"

namespace shadow::fo {

/// Robinson unification with occurs check. Extends `subst`; the result is
/// idempotent and is the most general unifier of the inputs under `subst`.
std::optional<Substitution> unify(const Term& a, const Term& b, Substitution subst = {});

/// Unifies two atoms: equal predicate and arity, pairwise unifiable args.
/// Shadow atoms unify only with the identical shadow atom.
std::optional<Substitution> unify_atoms(const Formula& a, const Formula& b, Substitution subst = {});

/// Unifies two formulae structurally. Bound variables are matched up to
/// renaming and never escape into the substitution; modal nodes must agree
/// on agent and time.
std::optional<Substitution> unify_formulas(const Formula& a, const Formula& b, Substitution subst = {});

/// One-way matching: finds s extending `subst` with apply(s, pattern) ==
/// target, binding only variables of `pattern`.
bool match(const Term& pattern, const Term& target, Substitution& subst);
bool match_atoms(const Formula& pattern, const Formula& target, Substitution& subst);

}  // namespace shadow::fo
