#include "shadow/shadowing.hpp"

#include "shadow/errors.hpp"
#include "shadow/transform.hpp"

namespace shadow {

ShadowAtom AtomTable::atomize(const Formula& formula) {
  auto free = free_variables_ordered(formula);
  if (!free.empty()) {
    throw FreeVariableError("cannot atomize " + render(formula) + ": free variable ?" + free.front());
  }
  std::string key = canonical(formula);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = ids_.try_emplace(key);
  if (inserted) {
    it->second = "#shadow" + std::to_string(ids_.size());
    originals_.emplace(it->second, formula);
  }
  return ShadowAtom{originals_.at(it->second), it->second};
}

std::optional<Formula> AtomTable::lookup(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = originals_.find(id);
  if (it == originals_.end()) return std::nullopt;
  return it->second;
}

std::size_t AtomTable::size() const {
  std::lock_guard lock(mutex_);
  return ids_.size();
}

Formula shadow(const Formula& f, int lvl, AtomTable& table) {
  if (level(f) <= lvl) return f;
  switch (f.kind()) {
    case Formula::Kind::kNot:
      return Formula::negation(shadow(f.operand(), lvl, table));
    case Formula::Kind::kOr:
      return Formula::disjunction(shadow(f.left(), lvl, table), shadow(f.right(), lvl, table));
    case Formula::Kind::kAnd:
      return Formula::conjunction(shadow(f.left(), lvl, table), shadow(f.right(), lvl, table));
    case Formula::Kind::kImplies:
      return Formula::implication(shadow(f.left(), lvl, table), shadow(f.right(), lvl, table));
    default:
      return table.atomize(f).as_formula();
  }
}

std::vector<Formula> shadow_set(std::span<const Formula> formulae, int lvl, AtomTable& table) {
  std::vector<Formula> out;
  out.reserve(formulae.size());
  for (const Formula& f : formulae) out.push_back(shadow(f, lvl, table));
  return out;
}

Formula unshadow(const Formula& f) {
  if (f.is_shadow_atom()) return unshadow(f.shadowed());
  if (f.is_atom()) return f;
  switch (f.kind()) {
    case Formula::Kind::kNot: return Formula::negation(unshadow(f.operand()));
    case Formula::Kind::kOr: return Formula::disjunction(unshadow(f.left()), unshadow(f.right()));
    case Formula::Kind::kAnd: return Formula::conjunction(unshadow(f.left()), unshadow(f.right()));
    case Formula::Kind::kImplies: return Formula::implication(unshadow(f.left()), unshadow(f.right()));
    case Formula::Kind::kForall: return Formula::forall(f.variable(), unshadow(f.body()));
    case Formula::Kind::kExists: return Formula::exists(f.variable(), unshadow(f.body()));
    case Formula::Kind::kBelieves: return Formula::believes(f.agent(), f.time(), unshadow(f.body()));
    case Formula::Kind::kOught:
      return Formula::ought(f.agent(), f.time(), unshadow(f.condition()), unshadow(f.duty()));
    case Formula::Kind::kGoal: return Formula::goal(f.agent(), f.time(), unshadow(f.body()));
    case Formula::Kind::kAtom: break;
  }
  return f;
}

Literal unshadow(const Literal& literal) { return Literal{literal.positive, unshadow(literal.atom)}; }

}  // namespace shadow
