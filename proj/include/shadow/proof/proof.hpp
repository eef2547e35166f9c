#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shadow/formula.hpp"
#include "shadow/parser.hpp"
#include "shadow/term.hpp"

namespace shadow::proof {

enum class Rule { kInput, kResolve, kBelief, kObligation, kPromote, kShadow, kUnshadow, kFactor, kCnf };

/// Wire names: input, I_R, I_B, I_O, promote, shadow, unshadow, factor, cnf.
std::string to_string(Rule rule);
std::optional<Rule> rule_from_string(std::string_view name);

/// One line of a proof. Formula conclusions are full (outermost) formulae;
/// clause conclusions live inside `context`, the belief contexts whose
/// content they clausify.
struct Step {
  std::size_t id = 0;
  Rule rule = Rule::kInput;
  std::variant<Formula, LiteralList> conclusion;
  std::vector<std::size_t> parents;
  Substitution subst;
  std::string note;
  ContextPath context;

  bool is_clause() const { return std::holds_alternative<LiteralList>(conclusion); }
  const Formula& formula() const { return std::get<Formula>(conclusion); }
  const LiteralList& clause() const { return std::get<LiteralList>(conclusion); }

  friend bool operator==(const Step&, const Step&) = default;
};

struct Stats {
  std::size_t iterations = 0;
  std::size_t clauses_generated = 0;
  std::optional<std::int64_t> wall_time_ms;

  friend bool operator==(const Stats&, const Stats&) = default;
};

/// Steps are numbered from 1 and every parent precedes its child.
struct Proof {
  std::vector<Step> steps;
  std::size_t goal_step = 0;
  Stats stats;
  /// Bindings of the query variables, for answer proofs.
  std::optional<Substitution> answer;

  const Step& step(std::size_t id) const { return steps.at(id - 1); }

  friend bool operator==(const Proof&, const Proof&) = default;
};

/// Numbered listing, one step per line, shadow atoms expanded.
std::string render_text(const Proof& proof);

/// `{"steps":[...],"goal":id,"stats":{...},"answer":{...}}` with formulae
/// in s-expression syntax. Keys are emitted in a fixed order.
std::string render_json(const Proof& proof, int indent = 2);

/// Inverse of render_json. Throws ProofFormatError on schema violations and
/// InputError on unparsable formulae.
Proof parse_json(std::string_view text, const Declarations& decls);

}  // namespace shadow::proof
