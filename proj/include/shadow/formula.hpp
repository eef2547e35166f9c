#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shadow/term.hpp"

namespace shadow {

/// An agent symbol drawn from the problem's declared agent set.
struct AgentSym {
  std::string name;

  friend bool operator==(const AgentSym&, const AgentSym&) = default;
  friend auto operator<=>(const AgentSym&, const AgentSym&) = default;
};

/// A time symbol. Times are totally ordered by `index`; the display name is
/// carried along for rendering only.
struct TimeSym {
  int index = 0;
  std::string name;

  friend bool operator==(const TimeSym& a, const TimeSym& b) { return a.index == b.index; }
  friend std::strong_ordering operator<=>(const TimeSym& a, const TimeSym& b) { return a.index <=> b.index; }
};

/// One modal context: the beliefs of `agent` at `time`.
struct Context {
  AgentSym agent;
  TimeSym time;

  friend bool operator==(const Context&, const Context&) = default;
  friend std::strong_ordering operator<=>(const Context& a, const Context& b) {
    if (auto c = a.agent <=> b.agent; c != 0) return c;
    return a.time <=> b.time;
  }
};

/// Nested belief contexts, outermost first.
using ContextPath = std::vector<Context>;

/// Immutable formula tree over the modal calculus: first-order connectives
/// and quantifiers plus the Believes / Ought / Goal operators.
///
/// Shadow atoms are 0-ary atoms whose predicate is `#shadow<n>`; they keep a
/// reference to the subformula they stand for.
class Formula {
 public:
  enum class Kind { kAtom, kNot, kOr, kAnd, kImplies, kForall, kExists, kBelieves, kOught, kGoal };

  Formula();

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula shadow_atom(std::string id, Formula original);
  static Formula negation(Formula operand);
  static Formula disjunction(Formula left, Formula right);
  static Formula conjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula forall(std::string variable, Formula body);
  static Formula exists(std::string variable, Formula body);
  static Formula believes(AgentSym agent, TimeSym time, Formula body);
  static Formula ought(AgentSym agent, TimeSym time, Formula condition, Formula duty);
  static Formula goal(AgentSym agent, TimeSym time, Formula body);

  Kind kind() const;
  std::size_t hash() const;

  // Atoms.
  const std::string& predicate() const;
  const std::vector<Term>& args() const;
  bool is_shadow_atom() const;
  /// The subformula a shadow atom stands for.
  const Formula& shadowed() const;

  // Connectives and quantifiers.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;
  const std::string& variable() const;
  const Formula& body() const;

  // Modal nodes. Ought keeps its condition as left() and duty as right().
  const AgentSym& agent() const;
  const TimeSym& time() const;
  const Formula& condition() const { return left(); }
  const Formula& duty() const { return right(); }

  const std::vector<Formula>& children() const;

  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_modal() const {
    return kind() == Kind::kBelieves || kind() == Kind::kOught || kind() == Kind::kGoal;
  }
  bool is_quantifier() const { return kind() == Kind::kForall || kind() == Kind::kExists; }
  bool is_connective() const {
    return kind() == Kind::kNot || kind() == Kind::kOr || kind() == Kind::kAnd || kind() == Kind::kImplies;
  }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);
  static Formula binary(Kind kind, Formula left, Formula right);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind = Kind::kAtom;
  std::string name;  // predicate, bound variable, or shadow id
  std::vector<Term> args;
  std::vector<Formula> children;
  AgentSym agent;
  TimeSym time;
  bool shadow = false;
  std::size_t hash = 0;
};

/// A signed atom. Clauses are lists of literals.
struct Literal {
  bool positive = true;
  Formula atom;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive && a.atom == b.atom;
  }
};

using LiteralList = std::vector<Literal>;

/// S-expression rendering; shadow atoms print as `#shadow<n>{original}`.
std::string render(const Formula& formula);
std::string render(const Literal& literal);
/// `(clause L1 L2 ...)`; the empty clause is `(clause)`.
std::string render(const LiteralList& clause);

}  // namespace shadow
