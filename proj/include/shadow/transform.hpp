#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shadow/formula.hpp"

namespace shadow {

/// Syntactic stratum: 0 propositional, 1 first-order, 2 modal.
int level(const Formula& formula);

std::set<std::string> free_variables(const Formula& formula);
/// Free variables in order of first occurrence.
std::vector<std::string> free_variables_ordered(const Formula& formula);
bool is_closed(const Formula& formula);

/// Capture-avoiding substitution of free variables.
Formula substitute(const Formula& formula, const Substitution& subst);
Literal substitute(const Literal& literal, const Substitution& subst);
LiteralList substitute(const LiteralList& clause, const Substitution& subst);

/// Alpha-invariant text: bound variables are renumbered in binding order and
/// shadow atoms print as their id. Two formulae have the same canonical text
/// iff they are equal up to bound-variable renaming.
std::string canonical(const Formula& formula);
bool alpha_equal(const Formula& a, const Formula& b);

/// Rewrites and/implies/exists into the core {not, or, forall} grammar and
/// removes double negations. Modal bodies are normalized independently.
Formula normalize(const Formula& formula);

/// Universally closes the free variables of `formula`. The quantifiers are
/// placed inside Believes/Goal bodies (recursively) so that belief contents
/// stay closed formulae.
Formula universal_closure(const Formula& formula);

/// Peels leading universal quantifiers; `vars` receives them outermost first.
Formula strip_forall_prefix(const Formula& formula, std::vector<std::string>& vars);

/// Wraps `inner` in Believes nodes for each context, outermost first.
Formula wrap_context(const ContextPath& path, Formula inner);
/// Inverse of wrap_context; nullopt when `formula` does not match `path`.
std::optional<Formula> unwrap_context(const ContextPath& path, const Formula& formula);

/// Every time symbol occurring anywhere in `formula`.
std::set<TimeSym> times_in(const Formula& formula);

/// Maximum nesting of modal operators.
int modal_depth(const Formula& formula);

/// Symbol and connective count.
std::size_t formula_size(const Formula& formula);

}  // namespace shadow
