#include "shadow/fo/unify.hpp"

#include <string>
#include <utility>
#include <vector>

#include "shadow/transform.hpp"

namespace shadow::fo {

namespace {

constexpr const char* kRigidPrefix = "%r";

void bind(Substitution& subst, const std::string& var, const Term& value) {
  Substitution single{{var, value}};
  for (auto& [v, t] : subst) t = shadow::apply(single, t);
  subst.emplace(var, value);
}

bool unify_into(const Term& lhs, const Term& rhs, Substitution& subst) {
  std::vector<std::pair<Term, Term>> work{{lhs, rhs}};
  while (!work.empty()) {
    auto [a, b] = std::move(work.back());
    work.pop_back();
    a = shadow::apply(subst, a);
    b = shadow::apply(subst, b);
    if (a == b) continue;
    if (!a.is_variable() && b.is_variable()) std::swap(a, b);
    if (a.is_variable()) {
      if (b.occurs(a.name())) return false;
      bind(subst, a.name(), b);
      continue;
    }
    if (a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = a.args().size(); i-- > 0;) work.emplace_back(a.args()[i], b.args()[i]);
  }
  return true;
}

bool contains_rigid(const Term& t) {
  if (t.is_variable()) return false;
  if (t.is_constant()) return t.name().rfind(kRigidPrefix, 0) == 0;
  for (const Term& a : t.args()) {
    if (contains_rigid(a)) return true;
  }
  return false;
}

struct FormulaUnifier {
  int next_rigid = 0;

  bool run(const Formula& a, const Formula& b, Substitution& subst) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Formula::Kind::kAtom:
        if (a.is_shadow_atom() || b.is_shadow_atom()) {
          return a.is_shadow_atom() && b.is_shadow_atom() && a.predicate() == b.predicate();
        }
        if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < a.args().size(); ++i) {
          if (!unify_into(a.args()[i], b.args()[i], subst)) return false;
        }
        return true;
      case Formula::Kind::kForall:
      case Formula::Kind::kExists: {
        Term rigid = Term::constant(kRigidPrefix + std::to_string(next_rigid++));
        Formula body_a = substitute(a.body(), {{a.variable(), rigid}});
        Formula body_b = substitute(b.body(), {{b.variable(), rigid}});
        return run(body_a, body_b, subst);
      }
      case Formula::Kind::kBelieves:
      case Formula::Kind::kOught:
      case Formula::Kind::kGoal:
        if (a.agent() != b.agent() || a.time() != b.time()) return false;
        [[fallthrough]];
      default:
        for (std::size_t i = 0; i < a.children().size(); ++i) {
          if (!run(a.children()[i], b.children()[i], subst)) return false;
        }
        return true;
    }
  }
};

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, Substitution subst) {
  if (!unify_into(a, b, subst)) return std::nullopt;
  return subst;
}

std::optional<Substitution> unify_atoms(const Formula& a, const Formula& b, Substitution subst) {
  if (!a.is_atom() || !b.is_atom()) return std::nullopt;
  if (a.is_shadow_atom() || b.is_shadow_atom()) {
    if (a.is_shadow_atom() && b.is_shadow_atom() && a.predicate() == b.predicate()) return subst;
    return std::nullopt;
  }
  if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return std::nullopt;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (!unify_into(a.args()[i], b.args()[i], subst)) return std::nullopt;
  }
  return subst;
}

std::optional<Substitution> unify_formulas(const Formula& a, const Formula& b, Substitution subst) {
  FormulaUnifier u;
  if (!u.run(a, b, subst)) return std::nullopt;
  for (const auto& [v, t] : subst) {
    if (contains_rigid(t)) return std::nullopt;
  }
  return subst;
}

bool match(const Term& pattern, const Term& target, Substitution& subst) {
  if (pattern.is_variable()) {
    auto it = subst.find(pattern.name());
    if (it != subst.end()) return it->second == target;
    subst.emplace(pattern.name(), target);
    return true;
  }
  if (pattern.kind() != target.kind() || pattern.name() != target.name() ||
      pattern.args().size() != target.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!match(pattern.args()[i], target.args()[i], subst)) return false;
  }
  return true;
}

bool match_atoms(const Formula& pattern, const Formula& target, Substitution& subst) {
  if (pattern.predicate() != target.predicate() || pattern.args().size() != target.args().size() ||
      pattern.is_shadow_atom() != target.is_shadow_atom()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!match(pattern.args()[i], target.args()[i], subst)) return false;
  }
  return true;
}

}  // namespace shadow::fo
