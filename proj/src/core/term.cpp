#include "shadow/term.hpp"

#include <algorithm>
#include <functional>

namespace shadow {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term::Term() : Term(make(Kind::kConstant, "?", {})) {}

Term Term::make(Kind kind, std::string name, std::vector<Term> args) {
  std::size_t h = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(kind));
  std::size_t size = 1;
  bool ground = kind != Kind::kVariable;
  for (const Term& arg : args) {
    h = mix(h, arg.hash());
    size += arg.size();
    ground = ground && arg.is_ground();
  }
  return Term(std::make_shared<const Node>(Node{kind, std::move(name), std::move(args), h, size, ground}));
}

Term Term::variable(std::string name) { return make(Kind::kVariable, std::move(name), {}); }

Term Term::constant(std::string name) { return make(Kind::kConstant, std::move(name), {}); }

Term Term::app(std::string function, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(function));
  return make(Kind::kApp, std::move(function), std::move(args));
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const Term& arg : args()) d = std::max(d, arg.depth());
  return d + 1;
}

bool Term::occurs(const std::string& var) const {
  if (is_ground()) return false;
  if (is_variable()) return name() == var;
  return std::any_of(args().begin(), args().end(), [&](const Term& t) { return t.occurs(var); });
}

void Term::collect_variables(std::set<std::string>& out) const {
  if (is_ground()) return;
  if (is_variable()) {
    out.insert(name());
    return;
  }
  for (const Term& arg : args()) arg.collect_variables(out);
}

void Term::collect_variables_ordered(std::vector<std::string>& out) const {
  if (is_ground()) return;
  if (is_variable()) {
    if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
    return;
  }
  for (const Term& arg : args()) arg.collect_variables_ordered(out);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.name() != b.name()) return false;
  return a.args() == b.args();
}

int compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (int c = compare(a.args()[i], b.args()[i]); c != 0) return c;
  }
  return 0;
}

Term apply(const Substitution& subst, const Term& term) {
  if (subst.empty() || term.is_ground()) return term;
  if (term.is_variable()) {
    auto it = subst.find(term.name());
    return it == subst.end() ? term : it->second;
  }
  std::vector<Term> args;
  args.reserve(term.args().size());
  bool changed = false;
  for (const Term& arg : term.args()) {
    args.push_back(shadow::apply(subst, arg));
    changed = changed || !(args.back() == arg);
  }
  if (!changed) return term;
  return Term::app(term.name(), std::move(args));
}

Substitution resolve(const Substitution& subst) {
  Substitution out = subst;
  // Bounded by the number of bindings for acyclic input.
  for (std::size_t round = 0; round <= subst.size(); ++round) {
    bool changed = false;
    for (auto& [var, value] : out) {
      Term next = shadow::apply(out, value);
      if (!(next == value)) {
        value = next;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return out;
}

std::string render(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::kVariable:
      return "?" + term.name();
    case Term::Kind::kConstant:
      return term.name();
    case Term::Kind::kApp: {
      std::string out = "(" + term.name();
      for (const Term& arg : term.args()) out += " " + render(arg);
      return out + ")";
    }
  }
  return {};
}

std::string render(const Substitution& subst) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, value] : subst) {
    if (!first) out += ", ";
    first = false;
    out += "?" + var + " -> " + render(value);
  }
  return out + "}";
}

}  // namespace shadow
