#pragma once

#include <cstddef>
#include <string>

#include "shadow/formula.hpp"

namespace shadow::fo {

/// Predicate of the answer literal appended to goal clauses.
inline constexpr const char* kAnswerPredicate = "$ans";

/// Sorts literals by a variable-blind key, drops duplicates and renames
/// variables to X0, X1, ... in order of first occurrence.
LiteralList normalize_clause(LiteralList clause);

/// Renames variable `Xn` to `Yn` (any other name `v` to `Y_v`): the
/// convention for standardizing the right premise of a resolution apart.
LiteralList rename_right(const LiteralList& clause);
std::string right_name(const std::string& var);

/// Contains a literal and its complement.
bool is_tautology(const LiteralList& clause);

/// True when some instance of `general` is a sub-multiset of `specific`
/// (and `general` is no longer than `specific`).
bool subsumes(const LiteralList& general, const LiteralList& specific);

/// Symbol count plus one per literal.
std::size_t weight(const LiteralList& clause);

bool is_answer_literal(const Literal& literal);
/// Non-empty and made only of answer literals.
bool is_answer_clause(const LiteralList& clause);

/// Formula reading of a clause: the universally closed disjunction of the
/// literals with variables, followed by the closed literals, each group in
/// stored order and right-nested. The empty clause has no formula reading
/// and is rejected by callers.
Formula clause_to_formula(const LiteralList& clause);

}  // namespace shadow::fo
