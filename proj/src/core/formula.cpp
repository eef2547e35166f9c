#include "shadow/formula.hpp"

#include <functional>

namespace shadow {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const char* keyword(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kNot: return "not";
    case Formula::Kind::kOr: return "or";
    case Formula::Kind::kAnd: return "and";
    case Formula::Kind::kImplies: return "implies";
    case Formula::Kind::kForall: return "forall";
    case Formula::Kind::kExists: return "exists";
    case Formula::Kind::kBelieves: return "believes";
    case Formula::Kind::kOught: return "ought";
    case Formula::Kind::kGoal: return "goal-of";
    case Formula::Kind::kAtom: break;
  }
  return "";
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      if (f.is_shadow_atom()) {
        out += f.predicate();
        out += '{';
        print(f.shadowed(), out);
        out += '}';
      } else if (f.args().empty()) {
        out += f.predicate();
      } else {
        out += '(';
        out += f.predicate();
        for (const Term& t : f.args()) {
          out += ' ';
          out += render(t);
        }
        out += ')';
      }
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out += '(';
      out += keyword(f.kind());
      out += " (?" + f.variable() + ") ";
      print(f.body(), out);
      out += ')';
      return;
    case Formula::Kind::kBelieves:
    case Formula::Kind::kOught:
    case Formula::Kind::kGoal:
      out += '(';
      out += keyword(f.kind());
      out += ' ' + f.agent().name + ' ' + f.time().name;
      for (const Formula& c : f.children()) {
        out += ' ';
        print(c, out);
      }
      out += ')';
      return;
    default:
      out += '(';
      out += keyword(f.kind());
      for (const Formula& c : f.children()) {
        out += ' ';
        print(c, out);
      }
      out += ')';
      return;
  }
}

}  // namespace

Formula::Formula() : Formula(make(Node{})) {}

Formula Formula::make(Node node) {
  std::size_t h = mix(std::hash<std::string>{}(node.name), static_cast<std::size_t>(node.kind));
  for (const Term& t : node.args) h = mix(h, t.hash());
  for (const Formula& c : node.children) h = mix(h, c.hash());
  h = mix(h, std::hash<std::string>{}(node.agent.name));
  h = mix(h, static_cast<std::size_t>(node.time.index));
  node.hash = h;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  Node n;
  n.kind = Kind::kAtom;
  n.name = std::move(predicate);
  n.args = std::move(args);
  return make(std::move(n));
}

Formula Formula::shadow_atom(std::string id, Formula original) {
  Node n;
  n.kind = Kind::kAtom;
  n.name = std::move(id);
  n.children.push_back(std::move(original));
  n.shadow = true;
  return make(std::move(n));
}

Formula Formula::negation(Formula operand) {
  Node n;
  n.kind = Kind::kNot;
  n.children.push_back(std::move(operand));
  return make(std::move(n));
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  Node n;
  n.kind = kind;
  n.children.push_back(std::move(left));
  n.children.push_back(std::move(right));
  return make(std::move(n));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return binary(Kind::kOr, std::move(left), std::move(right));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return binary(Kind::kAnd, std::move(left), std::move(right));
}

Formula Formula::implication(Formula left, Formula right) {
  return binary(Kind::kImplies, std::move(left), std::move(right));
}

Formula Formula::forall(std::string variable, Formula body) {
  Node n;
  n.kind = Kind::kForall;
  n.name = std::move(variable);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::exists(std::string variable, Formula body) {
  Node n;
  n.kind = Kind::kExists;
  n.name = std::move(variable);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::believes(AgentSym agent, TimeSym time, Formula body) {
  Node n;
  n.kind = Kind::kBelieves;
  n.agent = std::move(agent);
  n.time = std::move(time);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::ought(AgentSym agent, TimeSym time, Formula condition, Formula duty) {
  Node n;
  n.kind = Kind::kOught;
  n.children.push_back(std::move(condition));
  n.children.push_back(std::move(duty));
  n.agent = std::move(agent);
  n.time = std::move(time);
  return make(std::move(n));
}

Formula Formula::goal(AgentSym agent, TimeSym time, Formula body) {
  Node n;
  n.kind = Kind::kGoal;
  n.agent = std::move(agent);
  n.time = std::move(time);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
std::size_t Formula::hash() const { return node_->hash; }
const std::string& Formula::predicate() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
bool Formula::is_shadow_atom() const { return node_->shadow; }
const Formula& Formula::shadowed() const { return node_->children.at(0); }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
const std::string& Formula::variable() const { return node_->name; }
const Formula& Formula::body() const { return node_->children.at(0); }
const AgentSym& Formula::agent() const { return node_->agent; }
const TimeSym& Formula::time() const { return node_->time; }
const std::vector<Formula>& Formula::children() const { return node_->children; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.hash == y.hash && x.kind == y.kind && x.shadow == y.shadow && x.name == y.name &&
         x.agent == y.agent && x.time == y.time && x.args == y.args && x.children == y.children;
}

std::string render(const Formula& formula) {
  std::string out;
  print(formula, out);
  return out;
}

std::string render(const Literal& literal) {
  std::string atom = render(literal.atom);
  return literal.positive ? atom : "(not " + atom + ")";
}

std::string render(const LiteralList& clause) {
  std::string out = "(clause";
  for (const Literal& l : clause) out += " " + render(l);
  return out + ")";
}

}  // namespace shadow
