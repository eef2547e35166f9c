#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadow/formula.hpp"
#include "shadow/term.hpp"

namespace shadow {

struct Signature {
  std::map<std::string, int> predicates;
  std::map<std::string, int> functions;
};

/// Agents, times (ascending), and symbol arities declared by a problem.
struct Declarations {
  std::vector<AgentSym> agents;
  std::vector<TimeSym> times;
  Signature signature;

  std::optional<AgentSym> find_agent(std::string_view name) const;
  std::optional<TimeSym> find_time(std::string_view name) const;
  std::optional<TimeSym> time_at(int index) const;
};

struct NamedFormula {
  std::string name;
  Formula formula;
};

struct Problem {
  Declarations decls;
  std::vector<NamedFormula> assumptions;
  Formula goal;
  /// Free variables of `goal` to solve for (names without `?`).
  std::vector<std::string> query_vars;

  bool is_query() const { return !query_vars.empty(); }
};

/// Strict mode rejects undeclared predicate and function symbols; lenient
/// mode (used for proof files) accepts any symbol except for agents and
/// times, which must always be declared.
enum class SymbolCheck { kStrict, kLenient };

/// Parses a `(problem ...)` form. Throws SyntaxError, ArityError,
/// UndeclaredSymbolError or TimeOrderError, each with a line and column.
Problem parse_problem(std::string_view text);

Formula parse_formula(std::string_view text, const Declarations& decls,
                      SymbolCheck check = SymbolCheck::kLenient);
Term parse_term(std::string_view text, const Declarations& decls, SymbolCheck check = SymbolCheck::kLenient);
/// Parses `(clause L ...)` where each literal is an atom or `(not atom)`.
LiteralList parse_clause(std::string_view text, const Declarations& decls);

}  // namespace shadow
