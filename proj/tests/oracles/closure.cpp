#include "closure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "truth_table.hpp"

namespace oracle {

using shadow::Formula;

namespace {

struct Lit {
  bool positive;
  std::string key;
  Formula atom;

  bool operator<(const Lit& o) const { return std::tie(key, positive) < std::tie(o.key, o.positive); }
  bool operator==(const Lit& o) const { return key == o.key && positive == o.positive; }
};

using Clause = std::set<Lit>;
using Cnf = std::set<Clause>;

bool tautology(const Clause& c) {
  for (const Lit& l : c) {
    if (l.positive && c.count(Lit{false, l.key, l.atom})) return true;
  }
  return false;
}

Cnf product(const Cnf& a, const Cnf& b) {
  Cnf out;
  for (const Clause& x : a) {
    for (const Clause& y : b) {
      Clause c = x;
      c.insert(y.begin(), y.end());
      if (!tautology(c)) out.insert(std::move(c));
    }
  }
  return out;
}

Cnf united(Cnf a, const Cnf& b) {
  a.insert(b.begin(), b.end());
  return a;
}

Cnf clauses(const Formula& f, bool positive);

Cnf opaque(const Formula& f, bool positive) {
  Formula atom = closure_normal_form(f);
  return Cnf{Clause{Lit{positive, shadow::render(atom), atom}}};
}

Cnf clauses(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Formula::Kind::kNot:
      return clauses(f.operand(), !positive);
    case Formula::Kind::kOr:
      return positive ? product(clauses(f.left(), true), clauses(f.right(), true))
                      : united(clauses(f.left(), false), clauses(f.right(), false));
    case Formula::Kind::kAnd:
      return positive ? united(clauses(f.left(), true), clauses(f.right(), true))
                      : product(clauses(f.left(), false), clauses(f.right(), false));
    case Formula::Kind::kImplies:
      return positive ? product(clauses(f.left(), false), clauses(f.right(), true))
                      : united(clauses(f.left(), true), clauses(f.right(), false));
    default:
      return opaque(f, positive);
  }
}

Formula literal_formula(const Lit& l) { return l.positive ? l.atom : Formula::negation(l.atom); }

Formula rebuild_clause(const Clause& c) {
  auto it = c.begin();
  Formula out = literal_formula(*it);
  for (++it; it != c.end(); ++it) out = Formula::disjunction(out, literal_formula(*it));
  return out;
}

std::string key(const Formula& f) { return shadow::render(closure_normal_form(f)); }

using Path = std::vector<shadow::Context>;

Formula wrap(const Path& path, Formula inner) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) inner = Formula::believes(it->agent, it->time, inner);
  return closure_normal_form(inner);
}

}  // namespace

Formula closure_normal_form(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f;
    case Formula::Kind::kNot:
      return Formula::negation(closure_normal_form(f.operand()));
    case Formula::Kind::kOr:
      return Formula::disjunction(closure_normal_form(f.left()), closure_normal_form(f.right()));
    case Formula::Kind::kAnd:
      return Formula::conjunction(closure_normal_form(f.left()), closure_normal_form(f.right()));
    case Formula::Kind::kImplies:
      return Formula::implication(closure_normal_form(f.left()), closure_normal_form(f.right()));
    // Modal bodies keep their syntax: B(Q v Q) and B(Q) are different facts.
    case Formula::Kind::kBelieves:
      return Formula::believes(f.agent(), f.time(), closure_normal_form(f.body()));
    case Formula::Kind::kGoal:
      return Formula::goal(f.agent(), f.time(), closure_normal_form(f.body()));
    case Formula::Kind::kOught:
      return Formula::ought(f.agent(), f.time(), closure_normal_form(f.condition()), closure_normal_form(f.duty()));
    default:
      throw std::invalid_argument("quantifiers are outside the closure oracle's fragment");
  }
}

Closure::Closure(const shadow::Problem& problem) {
  for (const auto& a : problem.assumptions) {
    Formula nf = closure_normal_form(a.formula);
    kb_.emplace(shadow::render(nf), nf);
  }

  auto facts = [&](const Path& path) {
    std::vector<Formula> current;
    for (const auto& [k, f] : kb_) current.push_back(f);
    for (const shadow::Context& c : path) {
      std::vector<Formula> inner;
      for (const Formula& f : current) {
        if (f.kind() == Formula::Kind::kBelieves && f.agent() == c.agent && f.time() == c.time) {
          inner.push_back(f.body());
        }
      }
      current = std::move(inner);
    }
    return current;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Path> paths{{}};
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (paths[i].size() >= 2) continue;
      std::set<shadow::Context> children;
      for (const Formula& f : facts(paths[i])) {
        if (f.kind() == Formula::Kind::kBelieves) children.insert({f.agent(), f.time()});
      }
      for (const auto& c : children) {
        Path next = paths[i];
        next.push_back(c);
        paths.push_back(std::move(next));
      }
    }

    std::vector<Formula> derived;
    for (const Path& path : paths) {
      std::vector<Formula> here = facts(path);
      for (const Formula& x : here) {
        if (x.kind() != Formula::Kind::kBelieves) continue;
        for (const shadow::TimeSym& t : problem.decls.times) {
          if (x.time() < t) derived.push_back(wrap(path, Formula::believes(x.agent(), t, x.body())));
        }
        for (const Formula& y : here) {
          if (y.kind() != Formula::Kind::kBelieves || y.agent() != x.agent()) continue;
          shadow::TimeSym t = std::max(x.time(), y.time());
          for (const Clause& c1 : clauses(x.body(), true)) {
            for (const Clause& c2 : clauses(y.body(), true)) {
              for (const Lit& l : c1) {
                if (!l.positive || !c2.count(Lit{false, l.key, l.atom})) continue;
                Clause r;
                for (const Lit& m : c1) {
                  if (!(m == l)) r.insert(m);
                }
                for (const Lit& m : c2) {
                  if (!(m.key == l.key && !m.positive)) r.insert(m);
                }
                if (r.empty() || tautology(r)) continue;
                derived.push_back(wrap(path, Formula::believes(x.agent(), t, rebuild_clause(r))));
              }
            }
          }
          const Formula& o = y.body();
          if (o.kind() == Formula::Kind::kOught && o.agent() == x.agent() && key(o.condition()) == key(x.body())) {
            derived.push_back(wrap(path, Formula::goal(x.agent(), t, o.duty())));
          }
        }
      }
    }
    for (const Formula& f : derived) {
      if (kb_.emplace(shadow::render(f), f).second) changed = true;
    }
  }

  std::vector<Formula> premises;
  std::set<std::string> forced;
  for (const auto& [k, f] : kb_) {
    if (f.kind() == Formula::Kind::kBelieves || f.kind() == Formula::Kind::kGoal || f.kind() == Formula::Kind::kAtom) {
      forced.insert(k);
    } else {
      premises.push_back(f);
    }
  }
  // Facts that are opaque atoms are fixed to true rather than enumerated.
  AtomKey truth_key = [&](const Formula& f) {
    std::string k = key(f);
    return forced.count(k) ? std::string("Top") : k;
  };
  premises.push_back(Formula::atom("Top"));
  derives_goal_ = entails(premises, closure_normal_form(problem.goal), truth_key);
}

std::vector<std::string> Closure::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, f] : kb_) out.push_back(k);
  return out;
}

bool Closure::contains(const Formula& f) const { return kb_.count(key(f)) > 0; }

}  // namespace oracle
