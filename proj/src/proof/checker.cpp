#include "shadow/proof/checker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "shadow/transform.hpp"

// Deliberately self-contained: nothing here calls into the first-order or
// modal engines, only into the formula representation.

namespace shadow::proof {

namespace {

struct Reject {
  std::string reason;
};

[[noreturn]] void reject(std::string reason) { throw Reject{std::move(reason)}; }

// ---- shadow atoms -------------------------------------------------------

Formula expand(const Formula& f) {
  using K = Formula::Kind;
  if (f.is_shadow_atom()) return expand(f.shadowed());
  switch (f.kind()) {
    case K::kAtom: return f;
    case K::kNot: return Formula::negation(expand(f.operand()));
    case K::kOr: return Formula::disjunction(expand(f.left()), expand(f.right()));
    case K::kAnd: return Formula::conjunction(expand(f.left()), expand(f.right()));
    case K::kImplies: return Formula::implication(expand(f.left()), expand(f.right()));
    case K::kForall: return Formula::forall(f.variable(), expand(f.body()));
    case K::kExists: return Formula::exists(f.variable(), expand(f.body()));
    case K::kBelieves: return Formula::believes(f.agent(), f.time(), expand(f.body()));
    case K::kGoal: return Formula::goal(f.agent(), f.time(), expand(f.body()));
    case K::kOught: return Formula::ought(f.agent(), f.time(), expand(f.condition()), expand(f.duty()));
  }
  return f;
}

bool opaque(const Formula& atom) { return atom.is_shadow_atom() || !atom.is_atom(); }

// ---- terms --------------------------------------------------------------

Term apply_once(const Substitution& s, const Term& t) {
  if (t.is_variable()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(apply_once(s, a));
  return Term::app(t.name(), std::move(args));
}

Literal apply_once(const Substitution& s, const Literal& l) {
  if (opaque(l.atom)) return l;
  std::vector<Term> args;
  for (const Term& a : l.atom.args()) args.push_back(apply_once(s, a));
  return Literal{l.positive, Formula::atom(l.atom.predicate(), std::move(args))};
}

Term walk(Term t, const Substitution& s) {
  while (t.is_variable()) {
    auto it = s.find(t.name());
    if (it == s.end()) break;
    t = it->second;
  }
  return t;
}

bool occurs_in(const std::string& v, const Term& t, const Substitution& s) {
  Term w = walk(t, s);
  if (w.is_variable()) return w.name() == v;
  return std::any_of(w.args().begin(), w.args().end(), [&](const Term& a) { return occurs_in(v, a, s); });
}

bool unify_terms(const Term& a, const Term& b, Substitution& s) {
  Term x = walk(a, s);
  Term y = walk(b, s);
  if (x.is_variable() && y.is_variable() && x.name() == y.name()) return true;
  if (x.is_variable()) {
    if (occurs_in(x.name(), y, s)) return false;
    s[x.name()] = y;
    return true;
  }
  if (y.is_variable()) return unify_terms(y, x, s);
  if (x.name() != y.name() || x.args().size() != y.args().size()) return false;
  for (std::size_t i = 0; i < x.args().size(); ++i) {
    if (!unify_terms(x.args()[i], y.args()[i], s)) return false;
  }
  return true;
}

Term deep(const Term& t, const Substitution& s) {
  Term w = walk(t, s);
  if (w.args().empty()) return w;
  std::vector<Term> args;
  for (const Term& a : w.args()) args.push_back(deep(a, s));
  return Term::app(w.name(), std::move(args));
}

/// Most general unifier of two literal atoms, solved form.
std::optional<Substitution> mgu(const Formula& a, const Formula& b) {
  if (opaque(a) || opaque(b)) {
    if (a.is_shadow_atom() && b.is_shadow_atom() && a.predicate() == b.predicate()) return Substitution{};
    return std::nullopt;
  }
  if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return std::nullopt;
  Substitution s;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (!unify_terms(a.args()[i], b.args()[i], s)) return std::nullopt;
  }
  Substitution solved;
  for (const auto& [v, t] : s) solved.emplace(v, deep(t, s));
  return solved;
}

void vars_of(const LiteralList& clause, std::set<std::string>& out) {
  for (const Literal& l : clause) {
    if (opaque(l.atom)) continue;
    for (const Term& t : l.atom.args()) t.collect_variables(out);
  }
}

// ---- variants -----------------------------------------------------------

struct Bijection {
  std::map<std::string, std::string> fwd;
  std::map<std::string, std::string> bwd;

  bool bind(const std::string& a, const std::string& b) {
    auto f = fwd.find(a);
    auto r = bwd.find(b);
    if (f != fwd.end() || r != bwd.end()) return f != fwd.end() && r != bwd.end() && f->second == b;
    fwd.emplace(a, b);
    bwd.emplace(b, a);
    return true;
  }
};

constexpr const char* kCheckerSkolem = "%sk";

bool is_checker_skolem(const std::string& name) { return name.rfind(kCheckerSkolem, 0) == 0; }

bool term_variant(const Term& e, const Term& c, Bijection& vars, Bijection& skolems) {
  if (e.is_variable() || c.is_variable()) {
    return e.is_variable() && c.is_variable() && vars.bind(e.name(), c.name());
  }
  if (e.args().size() != c.args().size()) return false;
  if (is_checker_skolem(c.name())) {
    if (!skolems.bind(e.name(), c.name())) return false;
  } else if (e.name() != c.name()) {
    return false;
  }
  for (std::size_t i = 0; i < e.args().size(); ++i) {
    if (!term_variant(e.args()[i], c.args()[i], vars, skolems)) return false;
  }
  return true;
}

bool literal_variant(const Literal& e, const Literal& c, Bijection& vars, Bijection& skolems) {
  if (e.positive != c.positive) return false;
  if (opaque(e.atom) || opaque(c.atom)) {
    return opaque(e.atom) && opaque(c.atom) && canonical(expand(e.atom)) == canonical(expand(c.atom));
  }
  if (e.atom.predicate() != c.atom.predicate() || e.atom.args().size() != c.atom.args().size()) return false;
  for (std::size_t i = 0; i < e.atom.args().size(); ++i) {
    if (!term_variant(e.atom.args()[i], c.atom.args()[i], vars, skolems)) return false;
  }
  return true;
}

bool clause_variant_from(const LiteralList& e, const LiteralList& c, std::size_t index, std::vector<bool>& used,
                         Bijection& vars, Bijection& skolems) {
  if (index == e.size()) return true;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (used[j]) continue;
    Bijection v = vars;
    Bijection s = skolems;
    if (!literal_variant(e[index], c[j], v, s)) continue;
    used[j] = true;
    if (clause_variant_from(e, c, index + 1, used, v, s)) {
      vars = std::move(v);
      skolems = std::move(s);
      return true;
    }
    used[j] = false;
  }
  return false;
}

LiteralList dedupe(const LiteralList& clause) {
  LiteralList out;
  for (const Literal& l : clause) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

/// Same literals up to a bijective renaming of variables (and of Skolem
/// symbols, where `c` carries the checker's own).
bool clause_variant(const LiteralList& e, const LiteralList& c, Bijection& skolems) {
  LiteralList a = dedupe(e);
  LiteralList b = dedupe(c);
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  Bijection vars;
  Bijection s = skolems;
  if (!clause_variant_from(a, b, 0, used, vars, s)) return false;
  skolems = std::move(s);
  return true;
}

// ---- clausal form -------------------------------------------------------

class Clausifier {
 public:
  std::vector<LiteralList> run(const Formula& f) {
    counter_ = 0;
    Formula g = rename(nnf(f, true));
    std::vector<std::string> universals;
    return distribute(skolemize(g, universals));
  }

 private:
  static bool is_opaque(const Formula& f) {
    return f.is_modal() || (f.is_quantifier() && level(f) > 1);
  }

  Formula nnf(const Formula& f, bool positive) {
    using K = Formula::Kind;
    if (f.is_atom() || is_opaque(f)) return positive ? f : Formula::negation(f);
    switch (f.kind()) {
      case K::kNot: return nnf(f.operand(), !positive);
      case K::kOr:
        return positive ? Formula::disjunction(nnf(f.left(), true), nnf(f.right(), true))
                        : Formula::conjunction(nnf(f.left(), false), nnf(f.right(), false));
      case K::kAnd:
        return positive ? Formula::conjunction(nnf(f.left(), true), nnf(f.right(), true))
                        : Formula::disjunction(nnf(f.left(), false), nnf(f.right(), false));
      case K::kImplies:
        return positive ? Formula::disjunction(nnf(f.left(), false), nnf(f.right(), true))
                        : Formula::conjunction(nnf(f.left(), true), nnf(f.right(), false));
      case K::kForall:
        return positive ? Formula::forall(f.variable(), nnf(f.body(), true))
                        : Formula::exists(f.variable(), nnf(f.body(), false));
      case K::kExists:
        return positive ? Formula::exists(f.variable(), nnf(f.body(), true))
                        : Formula::forall(f.variable(), nnf(f.body(), false));
      default: return f;
    }
  }

  Formula rename(const Formula& f) {
    using K = Formula::Kind;
    if (f.kind() == K::kForall || f.kind() == K::kExists) {
      std::string fresh = "%v" + std::to_string(counter_++);
      Formula body = rename(substitute(f.body(), {{f.variable(), Term::variable(fresh)}}));
      return f.kind() == K::kForall ? Formula::forall(fresh, body) : Formula::exists(fresh, body);
    }
    if (f.kind() == K::kOr) return Formula::disjunction(rename(f.left()), rename(f.right()));
    if (f.kind() == K::kAnd) return Formula::conjunction(rename(f.left()), rename(f.right()));
    return f;
  }

  Formula skolemize(const Formula& f, std::vector<std::string>& universals) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kForall: {
        universals.push_back(f.variable());
        Formula body = skolemize(f.body(), universals);
        universals.pop_back();
        return Formula::forall(f.variable(), body);
      }
      case K::kExists: {
        std::set<std::string> free = free_variables(f);
        std::vector<std::string> governing;
        std::vector<Term> args;
        for (const std::string& u : universals) {
          if (free.count(u)) {
            governing.push_back(u);
            args.push_back(Term::variable(u));
          }
        }
        Formula keyed = f;
        for (auto it = governing.rbegin(); it != governing.rend(); ++it) keyed = Formula::forall(*it, keyed);
        auto [slot, inserted] = names_.try_emplace(canonical(keyed));
        if (inserted) slot->second = kCheckerSkolem + std::to_string(names_.size());
        Term witness = Term::app(slot->second, std::move(args));
        return skolemize(substitute(f.body(), {{f.variable(), witness}}), universals);
      }
      case K::kOr: return Formula::disjunction(skolemize(f.left(), universals), skolemize(f.right(), universals));
      case K::kAnd: return Formula::conjunction(skolemize(f.left(), universals), skolemize(f.right(), universals));
      default: return f;
    }
  }

  std::vector<LiteralList> distribute(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kForall: return distribute(f.body());
      case K::kAnd: {
        auto out = distribute(f.left());
        for (auto& c : distribute(f.right())) out.push_back(std::move(c));
        return out;
      }
      case K::kOr: {
        std::vector<LiteralList> out;
        for (const auto& a : distribute(f.left())) {
          for (const auto& b : distribute(f.right())) {
            LiteralList c = a;
            c.insert(c.end(), b.begin(), b.end());
            out.push_back(std::move(c));
          }
        }
        return out;
      }
      case K::kNot: return {{Literal{false, f.operand()}}};
      default: return {{Literal{true, f}}};
    }
  }

  std::map<std::string, std::string> names_;
  int counter_ = 0;
};

// ---- the checker --------------------------------------------------------

std::string right_var(const std::string& v) {
  if (v.size() > 1 && v[0] == 'X' && std::all_of(v.begin() + 1, v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return "Y" + v.substr(1);
  }
  return "Y_" + v;
}

LiteralList standardize_right(const LiteralList& clause) {
  std::set<std::string> vars;
  vars_of(clause, vars);
  Substitution s;
  for (const std::string& v : vars) s.emplace(v, Term::variable(right_var(v)));
  LiteralList out;
  for (const Literal& l : clause) out.push_back(apply_once(s, l));
  return out;
}

Formula rename_prefix(const Formula& f, const std::string& stem) {
  std::vector<std::string> vars;
  Formula body = strip_forall_prefix(f, vars);
  Substitution s;
  for (std::size_t k = 0; k < vars.size(); ++k) s.emplace(vars[k], Term::variable(stem + std::to_string(k)));
  return substitute(body, s);
}

class Checker {
 public:
  Checker(const Proof& proof, const Problem& problem)
      : proof_(proof), problem_(problem), goal_(normalize(problem.goal)) {}

  CheckResult run() {
    if (proof_.steps.empty()) return fail(0, "proof has no steps");
    if (problem_.is_query() != proof_.answer.has_value()) {
      return fail(0, problem_.is_query() ? "answer proof carries no bindings" : "unexpected answer bindings");
    }
    if (proof_.answer) {
      for (const std::string& v : problem_.query_vars) {
        if (!proof_.answer->count(v)) return fail(0, "no binding for ?" + v);
      }
      if (proof_.answer->size() != problem_.query_vars.size()) return fail(0, "bindings for non-query variables");
    }
    for (std::size_t i = 0; i < proof_.steps.size(); ++i) {
      const Step& step = proof_.steps[i];
      try {
        if (step.id != i + 1) reject("step ids must be consecutive from 1");
        for (std::size_t p : step.parents) {
          if (p == 0 || p >= step.id) reject("parent " + std::to_string(p) + " does not precede the step");
        }
        register_shadows(step);
        check_step(step);
      } catch (const Reject& r) {
        return fail(step.id, r.reason);
      }
    }
    if (proof_.goal_step == 0 || proof_.goal_step > proof_.steps.size()) return fail(0, "goal step out of range");
    if (proof_.step(proof_.goal_step).rule != Rule::kUnshadow) {
      return fail(proof_.goal_step, "goal step is not an unshadow step");
    }
    return CheckResult{};
  }

 private:
  static CheckResult fail(std::size_t id, std::string reason) { return CheckResult{false, id, std::move(reason)}; }

  const Step& parent(const Step& step, std::size_t k) const { return proof_.step(step.parents.at(k)); }

  Substitution answer() const { return proof_.answer.value_or(Substitution{}); }

  void expect_parents(const Step& step, std::size_t n) const {
    if (step.parents.size() != n) {
      reject(to_string(step.rule) + " takes " + std::to_string(n) + " parent" + (n == 1 ? "" : "s"));
    }
  }

  void expect_kind(const Step& step, bool clause) const {
    if (step.is_clause() != clause) reject(to_string(step.rule) + " must conclude a " + (clause ? "clause" : "formula"));
  }

  void register_atom(const Formula& atom) {
    if (!atom.is_shadow_atom()) return;
    Formula original = expand(atom.shadowed());
    if (level(original) <= 1) reject("shadow atom " + atom.predicate() + " stands for a first-order formula");
    if (!is_closed(original)) reject("shadow atom " + atom.predicate() + " stands for an open formula");
    if (!shadows_.bind(atom.predicate(), canonical(original))) {
      reject("shadow atom " + atom.predicate() + " is used for two different formulae");
    }
  }

  void register_formula(const Formula& f) {
    if (f.is_shadow_atom()) {
      register_atom(f);
      return;
    }
    for (const Formula& c : f.children()) register_formula(c);
  }

  void register_shadows(const Step& step) {
    if (step.is_clause()) {
      for (const Literal& l : step.clause()) register_formula(l.atom);
    } else {
      register_formula(step.formula());
    }
  }

  Formula inside(const ContextPath& path, const Formula& f, const char* what) const {
    auto inner = unwrap_context(path, f);
    if (!inner) reject(std::string(what) + " does not live in the step's context");
    return *inner;
  }

  void check_step(const Step& step) {
    switch (step.rule) {
      case Rule::kInput: return check_input(step);
      case Rule::kShadow: return check_shadow(step);
      case Rule::kCnf: return check_cnf(step);
      case Rule::kResolve: return check_resolve(step);
      case Rule::kFactor: return check_factor(step);
      case Rule::kBelief: return check_belief(step);
      case Rule::kObligation: return check_obligation(step);
      case Rule::kPromote: return check_promote(step);
      case Rule::kUnshadow: return check_unshadow(step);
    }
  }

  void check_input(const Step& step) {
    expect_parents(step, 0);
    expect_kind(step, false);
    if (!step.context.empty()) reject("input steps live at top level");
    if (step.note == "negated goal") return check_negated_goal(step);
    for (const NamedFormula& a : problem_.assumptions) {
      if (a.name != step.note) continue;
      if (!alpha_equal(step.formula(), normalize(universal_closure(a.formula)))) {
        reject("conclusion differs from assumption " + a.name);
      }
      return;
    }
    reject("no assumption named '" + step.note + "'");
  }

  void check_negated_goal(const Step& step) {
    Formula e = expand(step.formula());
    Substitution sigma = answer();
    if (e.kind() == Formula::Kind::kNot) {
      if (!alpha_equal(e.operand(), substitute(goal_, sigma))) reject("negated goal does not match the goal");
      return;
    }
    std::vector<std::string> q;
    Formula body = strip_forall_prefix(e, q);
    if (body.kind() != Formula::Kind::kOr || body.left().kind() != Formula::Kind::kNot ||
        !body.right().is_atom() || body.right().predicate() != "$ans") {
      reject("negated goal must be (not G) or (forall vars (or (not G) ($ans vars)))");
    }
    const Formula& ans = body.right();
    if (ans.args().size() != q.size()) reject("answer literal does not list the quantified variables");
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (!ans.args()[k].is_variable() || ans.args()[k].name() != q[k]) {
        reject("answer literal does not list the quantified variables");
      }
      if (!sigma.count(q[k])) reject("?" + q[k] + " is not a query variable");
      sigma.erase(q[k]);
    }
    if (!alpha_equal(body.left().operand(), substitute(goal_, sigma))) {
      reject("negated goal does not match the goal");
    }
  }

  void check_shadow(const Step& step) {
    expect_parents(step, 1);
    expect_kind(step, false);
    const Step& p = parent(step, 0);
    if (p.is_clause()) reject("shadow step must shadow a formula");
    if (!step.context.empty()) reject("shadow steps live at top level");
    if (level(step.formula()) > 1) reject("shadowed formula is above level 1");
    if (!alpha_equal(expand(step.formula()), expand(p.formula()))) {
      reject("shadow atoms do not expand to the parent formula");
    }
  }

  void check_cnf(const Step& step) {
    expect_parents(step, 1);
    expect_kind(step, true);
    const Step& p = parent(step, 0);
    if (p.is_clause()) reject("cnf step must clausify a formula");
    Formula content = inside(step.context, p.formula(), "parent formula");
    Formula closed = content;
    for (const std::string& v : free_variables_ordered(content)) closed = Formula::forall(v, closed);
    for (const LiteralList& c : clausifier_.run(closed)) {
      if (clause_variant(step.clause(), c, skolems_)) return;
    }
    reject("clause is not in the clausal form of its parent");
  }

  /// Resolvent of `left` and the standardized `right` on some complementary
  /// pair, checked both under the stated unifier and under a recomputed mgu.
  void check_resolvent(const Step& step, const LiteralList& left, const LiteralList& right_raw,
                       const LiteralList& conclusion) {
    LiteralList right = standardize_right(right_raw);
    std::set<std::string> vars;
    vars_of(left, vars);
    vars_of(right, vars);
    for (const auto& [v, t] : step.subst) {
      if (!vars.count(v)) reject("substitution binds ?" + v + ", which is not a premise variable");
    }
    bool unifies_some = false;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (!left[i].positive) continue;
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (right[j].positive) continue;
        Literal a = apply_once(step.subst, left[i]);
        Literal b = apply_once(step.subst, right[j]);
        if (a.atom != b.atom) continue;
        unifies_some = true;
        auto mu = mgu(left[i].atom, right[j].atom);
        if (!mu) continue;
        auto build = [&](const Substitution& s) {
          LiteralList out;
          for (std::size_t k = 0; k < left.size(); ++k) {
            if (k != i) out.push_back(apply_once(s, left[k]));
          }
          for (std::size_t k = 0; k < right.size(); ++k) {
            if (k != j) out.push_back(apply_once(s, right[k]));
          }
          return out;
        };
        Bijection none;
        if (clause_variant(conclusion, build(step.subst), none) && clause_variant(conclusion, build(*mu), none)) return;
      }
    }
    reject(unifies_some ? "conclusion is not the resolvent under a most general unifier"
                        : "substitution does not unify a complementary pair");
  }

  void check_resolve(const Step& step) {
    expect_parents(step, 2);
    expect_kind(step, true);
    const Step& l = parent(step, 0);
    const Step& r = parent(step, 1);
    if (!l.is_clause() || !r.is_clause()) reject("I_R resolves two clauses");
    if (l.context != step.context || r.context != step.context) reject("I_R premises come from another context");
    check_resolvent(step, l.clause(), r.clause(), step.clause());
  }

  void check_factor(const Step& step) {
    expect_parents(step, 1);
    expect_kind(step, true);
    const Step& p = parent(step, 0);
    if (!p.is_clause()) reject("factor takes a clause");
    if (p.context != step.context) reject("factor premise comes from another context");
    const LiteralList& c = p.clause();
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[i].positive != c[j].positive) continue;
        if (apply_once(step.subst, c[i]) != apply_once(step.subst, c[j])) continue;
        auto mu = mgu(c[i].atom, c[j].atom);
        if (!mu) continue;
        LiteralList by_theta;
        LiteralList by_mu;
        for (const Literal& l : c) {
          by_theta.push_back(apply_once(step.subst, l));
          by_mu.push_back(apply_once(*mu, l));
        }
        Bijection none;
        if (clause_variant(step.clause(), by_theta, none) && clause_variant(step.clause(), by_mu, none)) return;
      }
    }
    reject("conclusion is not a factor of its parent");
  }

  void check_belief(const Step& step) {
    expect_parents(step, 2);
    expect_kind(step, false);
    const Step& l = parent(step, 0);
    const Step& r = parent(step, 1);
    if (!l.is_clause() || !r.is_clause()) reject("I_B resolves two belief clauses");
    const ContextPath& path = step.context;
    for (const Step* p : {&l, &r}) {
      if (p->context.size() != path.size() + 1 || !std::equal(path.begin(), path.end(), p->context.begin())) {
        reject("I_B premises must be read one belief context below the step");
      }
    }
    Formula belief = inside(path, step.formula(), "conclusion");
    if (belief.kind() != Formula::Kind::kBelieves) reject("I_B concludes a belief");
    const Context& cl = l.context.back();
    const Context& cr = r.context.back();
    if (cl.agent != cr.agent || belief.agent() != cl.agent) reject("I_B premises and conclusion name different agents");
    if (belief.time() < cl.time || belief.time() < cr.time) reject("time ordering");

    std::vector<LiteralList> body = clausifier_.run(belief.body());
    if (body.size() != 1) reject("I_B conclusion is not a single clause");
    check_resolvent(step, l.clause(), r.clause(), body.front());
  }

  void check_obligation(const Step& step) {
    expect_parents(step, 2);
    expect_kind(step, false);
    const Step& l = parent(step, 0);
    const Step& r = parent(step, 1);
    if (l.is_clause() || r.is_clause()) reject("I_O takes two beliefs");
    const ContextPath& path = step.context;
    Formula belief = inside(path, l.formula(), "first premise");
    Formula ought_belief = inside(path, r.formula(), "second premise");
    Formula goal = inside(path, step.formula(), "conclusion");
    if (belief.kind() != Formula::Kind::kBelieves || ought_belief.kind() != Formula::Kind::kBelieves) {
      reject("I_O premises must be beliefs");
    }
    if (goal.kind() != Formula::Kind::kGoal) reject("I_O concludes a goal");
    Formula ought = rename_prefix(ought_belief.body(), "Y");
    if (ought.kind() != Formula::Kind::kOught) reject("second I_O premise is not a believed obligation");
    const AgentSym& a = belief.agent();
    if (ought_belief.agent() != a || ought.agent() != a || goal.agent() != a) {
      reject("I_O premises and conclusion name different agents");
    }
    if (goal.time() != std::max(belief.time(), ought_belief.time())) reject("time ordering");

    const Formula& condition = ought.condition();
    Formula phi = condition.kind() == Formula::Kind::kForall ? belief.body() : rename_prefix(belief.body(), "X");
    std::set<std::string> allowed = free_variables(phi);
    for (const auto& v : free_variables(ought)) allowed.insert(v);
    for (const auto& [v, t] : step.subst) {
      if (!allowed.count(v)) reject("substitution binds ?" + v + ", which is not a premise variable");
    }
    if (!alpha_equal(substitute(phi, step.subst), substitute(condition, step.subst))) {
      reject("substitution does not unify the belief with the obligation's condition");
    }
    Formula expected = normalize(universal_closure(substitute(ought.duty(), step.subst)));
    if (!alpha_equal(goal.body(), expected)) reject("goal is not the obligation's duty under the substitution");
  }

  void check_promote(const Step& step) {
    expect_parents(step, 1);
    expect_kind(step, false);
    const Step& p = parent(step, 0);
    if (p.is_clause()) reject("promote takes a belief");
    Formula from = inside(step.context, p.formula(), "premise");
    Formula to = inside(step.context, step.formula(), "conclusion");
    if (from.kind() != Formula::Kind::kBelieves || to.kind() != Formula::Kind::kBelieves) {
      reject("promote moves beliefs only");
    }
    if (from.agent() != to.agent()) reject("promote changed the agent");
    if (to.time() < from.time()) reject("time ordering");
    if (!alpha_equal(from.body(), to.body())) reject("promote changed the belief's content");
  }

  void check_unshadow(const Step& step) {
    expect_parents(step, 2);
    expect_kind(step, false);
    const Step& k = parent(step, 0);
    const Step& n = parent(step, 1);
    if (!k.is_clause() || !k.context.empty()) reject("unshadow needs a top-level refutation clause");
    if (n.rule != Rule::kInput || n.note != "negated goal") reject("unshadow needs the negated goal");
    const LiteralList& c = k.clause();
    Substitution sigma = answer();
    if (!c.empty()) {
      if (c.size() != 1 || !c[0].positive || opaque(c[0].atom) || c[0].atom.predicate() != "$ans") {
        reject("refutation clause is neither empty nor a single answer literal");
      }
      std::vector<std::string> q;
      Formula e = expand(n.formula());
      strip_forall_prefix(e, q);
      if (q.size() != c[0].atom.args().size()) reject("answer literal arity differs from the negated goal");
      for (std::size_t i = 0; i < q.size(); ++i) {
        auto it = sigma.find(q[i]);
        if (it == sigma.end() || it->second != c[0].atom.args()[i]) reject("answer literal disagrees with the bindings");
      }
    }
    if (!alpha_equal(step.formula(), substitute(goal_, sigma))) reject("conclusion is not the goal");
  }

  const Proof& proof_;
  const Problem& problem_;
  Formula goal_;
  Bijection shadows_;
  Bijection skolems_;
  Clausifier clausifier_;
};

}  // namespace

CheckResult check(const Proof& proof, const Problem& problem) { return Checker(proof, problem).run(); }

}  // namespace shadow::proof
