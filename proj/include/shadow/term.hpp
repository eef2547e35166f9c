#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace shadow {

/// Immutable first-order term: a variable, a constant, or a function
/// application. Copies share structure.
class Term {
 public:
  enum class Kind { kVariable, kConstant, kApp };

  /// Defaults to the constant named "?" so containers can hold terms.
  Term();

  static Term variable(std::string name);
  static Term constant(std::string name);
  /// An application with no arguments collapses to a constant.
  static Term app(std::string function, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  bool is_variable() const { return kind() == Kind::kVariable; }
  bool is_constant() const { return kind() == Kind::kConstant; }
  bool is_ground() const { return node_->ground; }
  std::size_t hash() const { return node_->hash; }
  /// Number of symbol occurrences.
  std::size_t size() const { return node_->size; }
  std::size_t depth() const;

  bool occurs(const std::string& var) const;
  void collect_variables(std::set<std::string>& out) const;
  /// Variables in order of first occurrence.
  void collect_variables_ordered(std::vector<std::string>& out) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  /// Structural total order.
  friend int compare(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
    std::size_t hash;
    std::size_t size;
    bool ground;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Kind kind, std::string name, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

/// Variable name -> term. Variable names are stored without the `?` sigil.
using Substitution = std::map<std::string, Term>;

/// Simultaneous (single-pass) application. Unifiers produced by the engine
/// are idempotent, so one pass is complete for them.
Term apply(const Substitution& subst, const Term& term);

/// Turns a triangular substitution into an idempotent one.
Substitution resolve(const Substitution& subst);

std::string render(const Term& term);
std::string render(const Substitution& subst);

}  // namespace shadow
