#include "shadow/transform.hpp"

#include <algorithm>
#include <map>

namespace shadow {

int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f.args().empty() ? 0 : 1;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return std::max(1, level(f.body()));
    case Formula::Kind::kBelieves:
    case Formula::Kind::kOught:
    case Formula::Kind::kGoal:
      return 2;
    default: {
      int l = 0;
      for (const Formula& c : f.children()) l = std::max(l, level(c));
      return l;
    }
  }
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      if (f.is_shadow_atom()) return;
      std::vector<std::string> vars;
      for (const Term& t : f.args()) t.collect_variables_ordered(vars);
      for (const auto& v : vars) {
        if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
      return;
    }
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      bound.push_back(f.variable());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      for (const Formula& c : f.children()) collect_free(c, bound, out);
  }
}

}  // namespace

std::vector<std::string> free_variables_ordered(const Formula& formula) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(formula, bound, out);
  return out;
}

std::set<std::string> free_variables(const Formula& formula) {
  auto ordered = free_variables_ordered(formula);
  return {ordered.begin(), ordered.end()};
}

bool is_closed(const Formula& formula) { return free_variables_ordered(formula).empty(); }

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> children) {
  switch (f.kind()) {
    case Formula::Kind::kNot: return Formula::negation(std::move(children[0]));
    case Formula::Kind::kOr: return Formula::disjunction(std::move(children[0]), std::move(children[1]));
    case Formula::Kind::kAnd: return Formula::conjunction(std::move(children[0]), std::move(children[1]));
    case Formula::Kind::kImplies: return Formula::implication(std::move(children[0]), std::move(children[1]));
    case Formula::Kind::kForall: return Formula::forall(f.variable(), std::move(children[0]));
    case Formula::Kind::kExists: return Formula::exists(f.variable(), std::move(children[0]));
    case Formula::Kind::kBelieves: return Formula::believes(f.agent(), f.time(), std::move(children[0]));
    case Formula::Kind::kOught:
      return Formula::ought(f.agent(), f.time(), std::move(children[0]), std::move(children[1]));
    case Formula::Kind::kGoal: return Formula::goal(f.agent(), f.time(), std::move(children[0]));
    case Formula::Kind::kAtom: break;
  }
  return f;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace

Formula substitute(const Formula& f, const Substitution& subst) {
  if (subst.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      if (f.is_shadow_atom() || f.args().empty()) return f;
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& t : f.args()) args.push_back(shadow::apply(subst, t));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      const std::string& var = f.variable();
      Substitution inner = subst;
      inner.erase(var);
      std::set<std::string> body_free = free_variables(f.body());
      std::set<std::string> range_vars;
      for (const auto& [v, t] : inner) {
        if (body_free.count(v)) t.collect_variables(range_vars);
      }
      std::string bound = var;
      if (range_vars.count(var)) {
        std::set<std::string> avoid = body_free;
        avoid.insert(range_vars.begin(), range_vars.end());
        for (const auto& [v, t] : inner) avoid.insert(v);
        bound = fresh_name(var, avoid);
        inner[var] = Term::variable(bound);
      }
      Formula body = substitute(f.body(), inner);
      return f.kind() == Formula::Kind::kForall ? Formula::forall(bound, std::move(body))
                                                : Formula::exists(bound, std::move(body));
    }
    default: {
      std::vector<Formula> children;
      for (const Formula& c : f.children()) children.push_back(substitute(c, subst));
      return rebuild(f, std::move(children));
    }
  }
}

Literal substitute(const Literal& literal, const Substitution& subst) {
  return Literal{literal.positive, substitute(literal.atom, subst)};
}

LiteralList substitute(const LiteralList& clause, const Substitution& subst) {
  LiteralList out;
  out.reserve(clause.size());
  for (const Literal& l : clause) out.push_back(substitute(l, subst));
  return out;
}

namespace {

struct CanonicalPrinter {
  std::vector<std::pair<std::string, std::string>> scope;  // bound name -> canonical name
  int counter = 0;
  std::string out;

  void term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVariable: {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (it->first == t.name()) {
            out += it->second;
            return;
          }
        }
        out += "?" + t.name();
        return;
      }
      case Term::Kind::kConstant:
        out += t.name();
        return;
      case Term::Kind::kApp:
        out += "(" + t.name();
        for (const Term& a : t.args()) {
          out += ' ';
          term(a);
        }
        out += ')';
        return;
    }
  }

  void formula(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kAtom:
        if (f.is_shadow_atom() || f.args().empty()) {
          out += f.predicate();
          return;
        }
        out += "(" + f.predicate();
        for (const Term& t : f.args()) {
          out += ' ';
          term(t);
        }
        out += ')';
        return;
      case Formula::Kind::kForall:
      case Formula::Kind::kExists: {
        std::string name = "%" + std::to_string(counter++);
        out += f.kind() == Formula::Kind::kForall ? "(forall " : "(exists ";
        out += name + ' ';
        scope.emplace_back(f.variable(), name);
        formula(f.body());
        scope.pop_back();
        out += ')';
        return;
      }
      case Formula::Kind::kBelieves:
      case Formula::Kind::kOught:
      case Formula::Kind::kGoal:
        out += f.kind() == Formula::Kind::kBelieves ? "(believes " : f.kind() == Formula::Kind::kOught ? "(ought " : "(goal-of ";
        out += f.agent().name + ' ' + std::to_string(f.time().index);
        for (const Formula& c : f.children()) {
          out += ' ';
          formula(c);
        }
        out += ')';
        return;
      default:
        out += f.kind() == Formula::Kind::kNot ? "(not" : f.kind() == Formula::Kind::kOr ? "(or" : f.kind() == Formula::Kind::kAnd ? "(and" : "(implies";
        for (const Formula& c : f.children()) {
          out += ' ';
          formula(c);
        }
        out += ')';
        return;
    }
  }
};

Formula negate(Formula f) {
  if (f.kind() == Formula::Kind::kNot) return f.operand();
  return Formula::negation(std::move(f));
}

}  // namespace

std::string canonical(const Formula& formula) {
  CanonicalPrinter p;
  p.formula(formula);
  return std::move(p.out);
}

bool alpha_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  return canonical(a) == canonical(b);
}

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f;
    case Formula::Kind::kNot:
      return negate(normalize(f.operand()));
    case Formula::Kind::kOr:
      return Formula::disjunction(normalize(f.left()), normalize(f.right()));
    case Formula::Kind::kAnd:
      return Formula::negation(
          Formula::disjunction(negate(normalize(f.left())), negate(normalize(f.right()))));
    case Formula::Kind::kImplies:
      return Formula::disjunction(negate(normalize(f.left())), normalize(f.right()));
    case Formula::Kind::kForall:
      return Formula::forall(f.variable(), normalize(f.body()));
    case Formula::Kind::kExists:
      return negate(Formula::forall(f.variable(), negate(normalize(f.body()))));
    default: {
      std::vector<Formula> children;
      for (const Formula& c : f.children()) children.push_back(normalize(c));
      return rebuild(f, std::move(children));
    }
  }
}

Formula universal_closure(const Formula& f) {
  auto vars = free_variables_ordered(f);
  if (vars.empty()) return f;
  if (f.kind() == Formula::Kind::kBelieves) {
    return Formula::believes(f.agent(), f.time(), universal_closure(f.body()));
  }
  if (f.kind() == Formula::Kind::kGoal) {
    return Formula::goal(f.agent(), f.time(), universal_closure(f.body()));
  }
  Formula out = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Formula::forall(*it, std::move(out));
  return out;
}

Formula strip_forall_prefix(const Formula& formula, std::vector<std::string>& vars) {
  const Formula* cur = &formula;
  while (cur->kind() == Formula::Kind::kForall) {
    vars.push_back(cur->variable());
    cur = &cur->body();
  }
  return *cur;
}

Formula wrap_context(const ContextPath& path, Formula inner) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    inner = Formula::believes(it->agent, it->time, std::move(inner));
  }
  return inner;
}

std::optional<Formula> unwrap_context(const ContextPath& path, const Formula& formula) {
  const Formula* cur = &formula;
  for (const Context& ctx : path) {
    if (cur->kind() != Formula::Kind::kBelieves || cur->agent() != ctx.agent || cur->time() != ctx.time) {
      return std::nullopt;
    }
    cur = &cur->body();
  }
  return *cur;
}

namespace {

void collect_times(const Formula& f, std::set<TimeSym>& out) {
  if (f.is_modal()) out.insert(f.time());
  if (f.is_shadow_atom()) {
    collect_times(f.shadowed(), out);
    return;
  }
  for (const Formula& c : f.children()) collect_times(c, out);
}

}  // namespace

std::set<TimeSym> times_in(const Formula& formula) {
  std::set<TimeSym> out;
  collect_times(formula, out);
  return out;
}

int modal_depth(const Formula& f) {
  if (f.is_shadow_atom()) return modal_depth(f.shadowed());
  int d = 0;
  for (const Formula& c : f.children()) d = std::max(d, modal_depth(c));
  return f.is_modal() ? d + 1 : d;
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (const Term& t : f.args()) n += t.size();
  if (f.is_shadow_atom()) return n;
  for (const Formula& c : f.children()) n += formula_size(c);
  return n;
}

}  // namespace shadow
