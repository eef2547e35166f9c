#include "shadow/fo/clause.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "shadow/fo/unify.hpp"
#include "shadow/shadowing.hpp"
#include "shadow/transform.hpp"

namespace shadow::fo {

namespace {

std::string blind_key(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVariable: return "?";
    case Term::Kind::kConstant: return t.name();
    case Term::Kind::kApp: {
      std::string out = "(" + t.name();
      for (const Term& a : t.args()) out += " " + blind_key(a);
      return out + ")";
    }
  }
  return {};
}

// Shadow atoms sort by what they stand for, not by their table id.
std::string blind_key(const Literal& l) {
  std::string out = l.positive ? "+" : "-";
  if (l.atom.is_shadow_atom()) return out + "#" + canonical(unshadow(l.atom.shadowed()));
  out += l.atom.predicate();
  for (const Term& a : l.atom.args()) out += " " + blind_key(a);
  return out;
}

}  // namespace

LiteralList normalize_clause(LiteralList clause) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(clause.size());
  for (std::size_t i = 0; i < clause.size(); ++i) keys.emplace_back(blind_key(clause[i]), i);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  LiteralList sorted;
  sorted.reserve(clause.size());
  for (const auto& [key, index] : keys) sorted.push_back(clause[index]);

  std::vector<std::string> vars;
  for (const Literal& l : sorted) {
    for (const Term& t : l.atom.args()) t.collect_variables_ordered(vars);
  }
  Substitution rename;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string target = "X" + std::to_string(i);
    if (vars[i] != target) rename.emplace(vars[i], Term::variable(target));
  }
  LiteralList out;
  out.reserve(sorted.size());
  for (const Literal& l : sorted) {
    Literal renamed = rename.empty() ? l : Literal{l.positive, substitute(l.atom, rename)};
    if (std::find(out.begin(), out.end(), renamed) == out.end()) out.push_back(std::move(renamed));
  }
  return out;
}

std::string right_name(const std::string& var) {
  if (var.size() > 1 && var[0] == 'X' &&
      std::all_of(var.begin() + 1, var.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return "Y" + var.substr(1);
  }
  return "Y_" + var;
}

LiteralList rename_right(const LiteralList& clause) {
  std::vector<std::string> vars;
  for (const Literal& l : clause) {
    for (const Term& t : l.atom.args()) t.collect_variables_ordered(vars);
  }
  Substitution rename;
  for (const auto& v : vars) rename.emplace(v, Term::variable(right_name(v)));
  return substitute(clause, rename);
}

bool is_tautology(const LiteralList& clause) {
  for (std::size_t i = 0; i < clause.size(); ++i) {
    for (std::size_t j = i + 1; j < clause.size(); ++j) {
      if (clause[i].positive != clause[j].positive && clause[i].atom == clause[j].atom) return true;
    }
  }
  return false;
}

namespace {

bool subsume_from(const LiteralList& general, const LiteralList& specific, std::size_t index,
                  std::vector<bool>& used, Substitution& subst) {
  if (index == general.size()) return true;
  const Literal& g = general[index];
  for (std::size_t j = 0; j < specific.size(); ++j) {
    if (used[j] || specific[j].positive != g.positive) continue;
    Substitution trial = subst;
    if (!match_atoms(g.atom, specific[j].atom, trial)) continue;
    used[j] = true;
    if (subsume_from(general, specific, index + 1, used, trial)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool subsumes(const LiteralList& general, const LiteralList& specific) {
  if (general.size() > specific.size()) return false;
  // Keep the pattern's variables disjoint from the target's.
  std::vector<std::string> vars;
  for (const Literal& l : general) {
    for (const Term& t : l.atom.args()) t.collect_variables_ordered(vars);
  }
  Substitution rename;
  for (const auto& v : vars) rename.emplace(v, Term::variable("%s" + v));
  LiteralList pattern = substitute(general, rename);
  std::vector<bool> used(specific.size(), false);
  Substitution subst;
  return subsume_from(pattern, specific, 0, used, subst);
}

std::size_t weight(const LiteralList& clause) {
  std::size_t w = 0;
  for (const Literal& l : clause) {
    w += 1;
    for (const Term& t : l.atom.args()) w += t.size();
  }
  return w;
}

bool is_answer_literal(const Literal& literal) {
  return literal.atom.is_atom() && literal.atom.predicate() == kAnswerPredicate;
}

bool is_answer_clause(const LiteralList& clause) {
  return !clause.empty() && std::all_of(clause.begin(), clause.end(), is_answer_literal);
}

Formula clause_to_formula(const LiteralList& clause) {
  if (clause.empty()) throw std::invalid_argument("the empty clause has no formula reading");
  auto as_formula = [](const Literal& l) { return l.positive ? l.atom : Formula::negation(l.atom); };
  auto join = [&](const std::vector<Formula>& parts) {
    Formula out = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) out = Formula::disjunction(parts[i], out);
    return out;
  };
  // Closed literals stay outside the quantifier prefix so that a modal
  // literal does not lift the whole clause to level 2.
  std::vector<Formula> open;
  std::vector<Formula> closed;
  for (const Literal& l : clause) (is_closed(l.atom) ? closed : open).push_back(as_formula(l));
  std::vector<Formula> parts;
  if (!open.empty()) parts.push_back(universal_closure(join(open)));
  parts.insert(parts.end(), closed.begin(), closed.end());
  return join(parts);
}

}  // namespace shadow::fo
