#include "shadow/fo/cnf.hpp"

#include <algorithm>
#include <set>

#include "shadow/errors.hpp"
#include "shadow/fo/clause.hpp"
#include "shadow/transform.hpp"

namespace shadow::fo {

std::string SkolemTable::symbol_for(const std::string& key) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = symbols_.try_emplace(key);
  if (inserted) it->second = "$sk" + std::to_string(symbols_.size());
  return it->second;
}

namespace {

Formula nnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return positive ? f : Formula::negation(f);
    case Formula::Kind::kNot:
      return nnf(f.operand(), !positive);
    case Formula::Kind::kOr:
      return positive ? Formula::disjunction(nnf(f.left(), true), nnf(f.right(), true))
                      : Formula::conjunction(nnf(f.left(), false), nnf(f.right(), false));
    case Formula::Kind::kAnd:
      return positive ? Formula::conjunction(nnf(f.left(), true), nnf(f.right(), true))
                      : Formula::disjunction(nnf(f.left(), false), nnf(f.right(), false));
    case Formula::Kind::kImplies:
      return positive ? Formula::disjunction(nnf(f.left(), false), nnf(f.right(), true))
                      : Formula::conjunction(nnf(f.left(), true), nnf(f.right(), false));
    case Formula::Kind::kForall:
      return positive ? Formula::forall(f.variable(), nnf(f.body(), true))
                      : Formula::exists(f.variable(), nnf(f.body(), false));
    case Formula::Kind::kExists:
      return positive ? Formula::exists(f.variable(), nnf(f.body(), true))
                      : Formula::forall(f.variable(), nnf(f.body(), false));
    default:
      throw ModalNodeError("modal formula reached clausification: " + render(f));
  }
}

struct Renamer {
  int counter = 0;

  Formula run(const Formula& f) {
    if (f.is_quantifier()) {
      std::string fresh = "V" + std::to_string(counter++);
      Formula body = substitute(f.body(), {{f.variable(), Term::variable(fresh)}});
      body = run(body);
      return f.kind() == Formula::Kind::kForall ? Formula::forall(fresh, body) : Formula::exists(fresh, body);
    }
    switch (f.kind()) {
      case Formula::Kind::kAnd: return Formula::conjunction(run(f.left()), run(f.right()));
      case Formula::Kind::kOr: return Formula::disjunction(run(f.left()), run(f.right()));
      default: return f;
    }
  }
};

Formula skolemize(const Formula& f, std::vector<std::string>& universals, SkolemTable& skolems) {
  switch (f.kind()) {
    case Formula::Kind::kForall: {
      universals.push_back(f.variable());
      Formula body = skolemize(f.body(), universals, skolems);
      universals.pop_back();
      return Formula::forall(f.variable(), body);
    }
    case Formula::Kind::kExists: {
      auto free = free_variables(f);
      std::vector<std::string> governing;
      for (const auto& u : universals) {
        if (free.count(u)) governing.push_back(u);
      }
      Formula key = f;
      for (auto it = governing.rbegin(); it != governing.rend(); ++it) key = Formula::forall(*it, key);
      std::vector<Term> args;
      for (const auto& g : governing) args.push_back(Term::variable(g));
      Term witness = Term::app(skolems.symbol_for(canonical(key)), std::move(args));
      return skolemize(substitute(f.body(), {{f.variable(), witness}}), universals, skolems);
    }
    case Formula::Kind::kAnd:
      return Formula::conjunction(skolemize(f.left(), universals, skolems), skolemize(f.right(), universals, skolems));
    case Formula::Kind::kOr:
      return Formula::disjunction(skolemize(f.left(), universals, skolems), skolemize(f.right(), universals, skolems));
    default:
      return f;
  }
}

std::vector<LiteralList> distribute(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return {{Literal{true, f}}};
    case Formula::Kind::kNot:
      return {{Literal{false, f.operand()}}};
    case Formula::Kind::kForall:
      return distribute(f.body());
    case Formula::Kind::kAnd: {
      auto out = distribute(f.left());
      auto rhs = distribute(f.right());
      out.insert(out.end(), rhs.begin(), rhs.end());
      return out;
    }
    case Formula::Kind::kOr: {
      auto lhs = distribute(f.left());
      auto rhs = distribute(f.right());
      std::vector<LiteralList> out;
      out.reserve(lhs.size() * rhs.size());
      for (const auto& a : lhs) {
        for (const auto& b : rhs) {
          LiteralList c = a;
          c.insert(c.end(), b.begin(), b.end());
          out.push_back(std::move(c));
        }
      }
      return out;
    }
    default:
      throw ModalNodeError("unexpected node after Skolemization: " + render(f));
  }
}

}  // namespace

std::vector<LiteralList> cnf(const Formula& formula, SkolemTable& skolems) {
  Formula closed = formula;
  for (const auto& v : free_variables_ordered(formula)) closed = Formula::forall(v, closed);
  Formula prepared = Renamer{}.run(nnf(closed, true));
  std::vector<std::string> universals;
  Formula skolemized = skolemize(prepared, universals, skolems);

  std::vector<LiteralList> out;
  std::set<std::string> seen;
  for (LiteralList& clause : distribute(skolemized)) {
    LiteralList normal = normalize_clause(std::move(clause));
    if (is_tautology(normal)) continue;
    if (seen.insert(render(normal)).second) out.push_back(std::move(normal));
  }
  return out;
}

}  // namespace shadow::fo
