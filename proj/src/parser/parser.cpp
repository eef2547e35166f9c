#include "shadow/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "shadow/errors.hpp"
#include "shadow/transform.hpp"

namespace shadow {

std::optional<AgentSym> Declarations::find_agent(std::string_view name) const {
  for (const AgentSym& a : agents) {
    if (a.name == name) return a;
  }
  return std::nullopt;
}

std::optional<TimeSym> Declarations::find_time(std::string_view name) const {
  for (const TimeSym& t : times) {
    if (t.name == name) return t;
  }
  return std::nullopt;
}

std::optional<TimeSym> Declarations::time_at(int index) const {
  if (index < 0 || index >= static_cast<int>(times.size())) return std::nullopt;
  return times[index];
}

namespace {

struct Sexp {
  enum class Kind { kSymbol, kList, kShadow };
  Kind kind = Kind::kSymbol;
  std::string text;  // symbol text or shadow id
  std::vector<Sexp> items;
  int line = 1;
  int column = 1;

  bool is_symbol() const { return kind == Kind::kSymbol; }
  bool is_list() const { return kind == Kind::kList; }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexp read_one() {
    skip_space();
    if (at_end()) throw SyntaxError("unexpected end of input, expected '(' or symbol", line_, column_);
    return read();
  }

  void expect_end() {
    skip_space();
    if (!at_end()) throw SyntaxError("unexpected trailing input, expected end of input", line_, column_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '{' || c == '}' || c == ';';
  }

  Sexp read() {
    Sexp s;
    s.line = line_;
    s.column = column_;
    char c = peek();
    if (c == ')' || c == '}') throw SyntaxError(std::string("unexpected '") + c + "', expected '(' or symbol", line_, column_);
    if (c == '{') throw SyntaxError("unexpected '{', expected '(' or symbol", line_, column_);
    if (c == '(') {
      advance();
      s.kind = Sexp::Kind::kList;
      for (;;) {
        skip_space();
        if (at_end()) throw SyntaxError("unterminated list, expected ')'", line_, column_);
        if (peek() == ')') {
          advance();
          return s;
        }
        s.items.push_back(read());
      }
    }
    std::size_t start = pos_;
    while (!at_end() && !delimiter(peek())) advance();
    s.text = std::string(text_.substr(start, pos_ - start));
    if (!at_end() && peek() == '{') {
      if (s.text.rfind("#shadow", 0) != 0) {
        throw SyntaxError("unexpected '{' after '" + s.text + "'", line_, column_);
      }
      advance();
      skip_space();
      if (at_end()) throw SyntaxError("unterminated shadow atom, expected formula", line_, column_);
      s.kind = Sexp::Kind::kShadow;
      s.items.push_back(read());
      skip_space();
      if (at_end() || peek() != '}') throw SyntaxError("expected '}' closing shadow atom", line_, column_);
      advance();
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> k = {"not", "or", "and", "implies", "forall",
                                                       "exists", "believes", "ought", "goal-of"};
  return k;
}

bool is_variable_token(const std::string& s) { return s.size() > 1 && s[0] == '?'; }

std::optional<int> as_integer(const std::string& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

class FormulaBuilder {
 public:
  FormulaBuilder(const Declarations& decls, SymbolCheck check) : decls_(decls), check_(check) {}

  Term term(const Sexp& s) const {
    if (s.kind == Sexp::Kind::kShadow) throw SyntaxError("shadow atom where a term was expected", s.line, s.column);
    if (s.is_symbol()) {
      if (is_variable_token(s.text)) return Term::variable(s.text.substr(1));
      check_symbol_name(s);
      if (strict() && !decls_.find_agent(s.text) && !decls_.find_time(s.text)) {
        check_function(s.text, 0, s);
      }
      return Term::constant(s.text);
    }
    if (s.items.empty() || !s.items[0].is_symbol() || is_variable_token(s.items[0].text)) {
      throw SyntaxError("expected function application '(f t ...)'", s.line, s.column);
    }
    const Sexp& head = s.items[0];
    check_symbol_name(head);
    std::vector<Term> args;
    for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(term(s.items[i]));
    if (strict()) check_function(head.text, static_cast<int>(args.size()), head);
    return Term::app(head.text, std::move(args));
  }

  Formula formula(const Sexp& s) const {
    if (s.kind == Sexp::Kind::kShadow) {
      return Formula::shadow_atom(s.text, formula(s.items[0]));
    }
    if (s.is_symbol()) {
      if (is_variable_token(s.text)) throw SyntaxError("variable " + s.text + " where a formula was expected", s.line, s.column);
      if (keywords().count(s.text)) throw SyntaxError("keyword '" + s.text + "' used as an atom", s.line, s.column);
      check_symbol_name(s);
      if (strict()) check_predicate(s.text, 0, s);
      return Formula::atom(s.text);
    }
    if (s.items.empty()) throw SyntaxError("empty list, expected formula", s.line, s.column);
    const Sexp& head = s.items[0];
    if (!head.is_symbol() || is_variable_token(head.text)) {
      throw SyntaxError("expected connective, modal operator or predicate", head.line, head.column);
    }
    const std::string& op = head.text;
    const std::size_t n = s.items.size() - 1;
    if (op == "not") {
      require(n == 1, "not requires exactly one operand", s);
      return Formula::negation(formula(s.items[1]));
    }
    if (op == "or" || op == "and") {
      require(n >= 2, op + " requires at least two operands", s);
      Formula acc = formula(s.items[n]);
      for (std::size_t i = n - 1; i >= 1; --i) {
        Formula lhs = formula(s.items[i]);
        acc = op == "or" ? Formula::disjunction(std::move(lhs), std::move(acc))
                         : Formula::conjunction(std::move(lhs), std::move(acc));
      }
      return acc;
    }
    if (op == "implies") {
      require(n == 2, "implies requires exactly two operands", s);
      return Formula::implication(formula(s.items[1]), formula(s.items[2]));
    }
    if (op == "forall" || op == "exists") {
      require(n == 2, op + " requires a variable list and a body", s);
      const Sexp& vars = s.items[1];
      if (!vars.is_list() || vars.items.empty()) {
        throw SyntaxError(op + " requires a non-empty variable list '(?x ...)'", vars.line, vars.column);
      }
      Formula body = formula(s.items[2]);
      for (auto it = vars.items.rbegin(); it != vars.items.rend(); ++it) {
        if (!it->is_symbol() || !is_variable_token(it->text)) {
          throw SyntaxError("expected variable '?name' in quantifier list", it->line, it->column);
        }
        std::string v = it->text.substr(1);
        body = op == "forall" ? Formula::forall(v, std::move(body)) : Formula::exists(v, std::move(body));
      }
      return body;
    }
    if (op == "believes" || op == "goal-of") {
      require(n == 3, op + " requires agent, time, body", s);
      AgentSym a = agent(s.items[1]);
      TimeSym t = time(s.items[2]);
      Formula body = formula(s.items[3]);
      return op == "believes" ? Formula::believes(a, t, std::move(body)) : Formula::goal(a, t, std::move(body));
    }
    if (op == "ought") {
      require(n == 4, "ought requires agent, time, condition, duty", s);
      AgentSym a = agent(s.items[1]);
      TimeSym t = time(s.items[2]);
      return Formula::ought(a, t, formula(s.items[3]), formula(s.items[4]));
    }
    check_symbol_name(head);
    std::vector<Term> args;
    for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(term(s.items[i]));
    if (strict()) check_predicate(op, static_cast<int>(args.size()), head);
    return Formula::atom(op, std::move(args));
  }

  Literal literal(const Sexp& s) const {
    if (s.is_list() && !s.items.empty() && s.items[0].is_symbol() && s.items[0].text == "not") {
      require(s.items.size() == 2, "not requires exactly one operand", s);
      Formula a = formula(s.items[1]);
      if (!a.is_atom()) throw SyntaxError("clause literal must be an atom", s.items[1].line, s.items[1].column);
      return Literal{false, a};
    }
    Formula a = formula(s);
    if (!a.is_atom()) throw SyntaxError("clause literal must be an atom or (not atom)", s.line, s.column);
    return Literal{true, a};
  }

 private:
  bool strict() const { return check_ == SymbolCheck::kStrict; }

  static void require(bool ok, const std::string& message, const Sexp& s) {
    if (!ok) throw SyntaxError(message, s.line, s.column);
  }

  void check_symbol_name(const Sexp& s) const {
    if (strict() && !s.text.empty() && (s.text[0] == '$' || s.text[0] == '#')) {
      throw SyntaxError("symbols starting with '$' or '#' are reserved: " + s.text, s.line, s.column);
    }
  }

  void check_predicate(const std::string& name, int arity, const Sexp& at) const {
    auto it = decls_.signature.predicates.find(name);
    if (it == decls_.signature.predicates.end()) {
      throw UndeclaredSymbolError("undeclared predicate " + name, at.line, at.column);
    }
    if (it->second != arity) {
      throw ArityError("predicate " + name + " has arity " + std::to_string(it->second) + ", used with " +
                           std::to_string(arity),
                       at.line, at.column);
    }
  }

  void check_function(const std::string& name, int arity, const Sexp& at) const {
    auto it = decls_.signature.functions.find(name);
    if (it == decls_.signature.functions.end()) {
      throw UndeclaredSymbolError(std::string(arity == 0 ? "undeclared constant " : "undeclared function ") + name,
                                  at.line, at.column);
    }
    if (it->second != arity) {
      throw ArityError("function " + name + " has arity " + std::to_string(it->second) + ", used with " +
                           std::to_string(arity),
                       at.line, at.column);
    }
  }

  AgentSym agent(const Sexp& s) const {
    if (!s.is_symbol() || is_variable_token(s.text)) throw SyntaxError("expected agent symbol", s.line, s.column);
    auto a = decls_.find_agent(s.text);
    if (!a) throw UndeclaredSymbolError("undeclared agent " + s.text, s.line, s.column);
    return *a;
  }

  TimeSym time(const Sexp& s) const {
    if (!s.is_symbol() || is_variable_token(s.text)) throw SyntaxError("expected time symbol", s.line, s.column);
    if (auto t = decls_.find_time(s.text)) return *t;
    if (auto index = as_integer(s.text)) {
      if (auto t = decls_.time_at(*index)) return *t;
      throw UndeclaredSymbolError("no time declared at index " + s.text, s.line, s.column);
    }
    throw UndeclaredSymbolError("undeclared time " + s.text, s.line, s.column);
  }

  const Declarations& decls_;
  SymbolCheck check_;
};

Sexp read_single(std::string_view text) {
  Reader reader(text);
  Sexp s = reader.read_one();
  reader.expect_end();
  return s;
}

const Sexp& expect_symbol(const Sexp& s, const std::string& what) {
  if (!s.is_symbol()) throw SyntaxError("expected " + what, s.line, s.column);
  return s;
}

int expect_arity(const Sexp& s) {
  if (!s.is_symbol()) throw SyntaxError("expected arity", s.line, s.column);
  auto v = as_integer(s.text);
  if (!v || *v < 0) throw SyntaxError("expected non-negative arity, got " + s.text, s.line, s.column);
  return *v;
}

void read_declarations(const Sexp& top, Declarations& decls) {
  std::set<std::string> agents;
  for (std::size_t i = 1; i < top.items.size(); ++i) {
    const Sexp& section = top.items[i];
    if (!section.is_list() || section.items.empty() || !section.items[0].is_symbol()) {
      throw SyntaxError("expected problem section '(agents|times|signature|assume|goal|answer ...)'", section.line,
                        section.column);
    }
    const std::string& head = section.items[0].text;
    if (head == "agents") {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const Sexp& a = expect_symbol(section.items[j], "agent symbol");
        if (!agents.insert(a.text).second) throw SyntaxError("agent " + a.text + " declared twice", a.line, a.column);
        decls.agents.push_back(AgentSym{a.text});
      }
    } else if (head == "times") {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const Sexp& t = expect_symbol(section.items[j], "time symbol");
        if (decls.find_time(t.text)) throw TimeOrderError("time " + t.text + " declared twice", t.line, t.column);
        decls.times.push_back(TimeSym{static_cast<int>(decls.times.size()), t.text});
      }
    } else if (head == "signature") {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const Sexp& d = section.items[j];
        if (!d.is_list() || d.items.size() != 3 || !d.items[0].is_symbol() ||
            (d.items[0].text != "pred" && d.items[0].text != "func")) {
          throw SyntaxError("expected '(pred Name arity)' or '(func name arity)'", d.line, d.column);
        }
        const Sexp& name = expect_symbol(d.items[1], "symbol name");
        if (keywords().count(name.text) || is_variable_token(name.text) || name.text[0] == '$' || name.text[0] == '#') {
          throw SyntaxError("reserved symbol name " + name.text, name.line, name.column);
        }
        int arity = expect_arity(d.items[2]);
        auto& table = d.items[0].text == "pred" ? decls.signature.predicates : decls.signature.functions;
        auto [it, inserted] = table.emplace(name.text, arity);
        if (!inserted && it->second != arity) {
          throw ArityError("symbol " + name.text + " redeclared with a different arity", name.line, name.column);
        }
      }
    }
  }
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Sexp top = read_single(text);
  if (!top.is_list() || top.items.empty() || !top.items[0].is_symbol() || top.items[0].text != "problem") {
    throw SyntaxError("expected '(problem ...)'", top.line, top.column);
  }
  Problem problem;
  read_declarations(top, problem.decls);
  FormulaBuilder build(problem.decls, SymbolCheck::kStrict);

  std::set<std::string> names;
  const Sexp* goal = nullptr;
  const Sexp* answer = nullptr;
  for (std::size_t i = 1; i < top.items.size(); ++i) {
    const Sexp& section = top.items[i];
    const std::string& head = section.items[0].text;
    if (head == "agents" || head == "times" || head == "signature") continue;
    if (head == "assume") {
      if (section.items.size() != 3) throw SyntaxError("assume requires a name and a formula", section.line, section.column);
      const Sexp& name = expect_symbol(section.items[1], "assumption name");
      if (!names.insert(name.text).second) {
        throw SyntaxError("assumption " + name.text + " declared twice", name.line, name.column);
      }
      problem.assumptions.push_back(NamedFormula{name.text, build.formula(section.items[2])});
    } else if (head == "goal") {
      if (goal) throw SyntaxError("goal declared twice", section.line, section.column);
      if (section.items.size() != 2) throw SyntaxError("goal requires exactly one formula", section.line, section.column);
      goal = &section;
    } else if (head == "answer") {
      if (answer) throw SyntaxError("answer declared twice", section.line, section.column);
      answer = &section;
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const Sexp& v = section.items[j];
        if (!v.is_symbol() || !is_variable_token(v.text)) {
          throw SyntaxError("expected query variable '?name'", v.line, v.column);
        }
        problem.query_vars.push_back(v.text.substr(1));
      }
      if (problem.query_vars.empty()) throw SyntaxError("answer requires at least one variable", section.line, section.column);
    } else {
      throw SyntaxError("unknown problem section '" + head + "'", section.line, section.column);
    }
  }
  if (!goal) throw SyntaxError("problem has no goal", top.line, top.column);
  problem.goal = build.formula(goal->items[1]);

  auto free = free_variables(problem.goal);
  std::set<std::string> wanted(problem.query_vars.begin(), problem.query_vars.end());
  if (free != wanted) {
    const Sexp& at = goal->items[1];
    for (const auto& v : free) {
      if (!wanted.count(v)) {
        throw SyntaxError("goal has free variable ?" + v + " not listed in (answer ...)", at.line, at.column);
      }
    }
    for (const auto& v : wanted) {
      if (!free.count(v)) {
        throw SyntaxError("query variable ?" + v + " does not occur free in the goal", answer->line, answer->column);
      }
    }
  }
  return problem;
}

Formula parse_formula(std::string_view text, const Declarations& decls, SymbolCheck check) {
  return FormulaBuilder(decls, check).formula(read_single(text));
}

Term parse_term(std::string_view text, const Declarations& decls, SymbolCheck check) {
  return FormulaBuilder(decls, check).term(read_single(text));
}

LiteralList parse_clause(std::string_view text, const Declarations& decls) {
  Sexp s = read_single(text);
  if (!s.is_list() || s.items.empty() || !s.items[0].is_symbol() || s.items[0].text != "clause") {
    throw SyntaxError("expected '(clause ...)'", s.line, s.column);
  }
  FormulaBuilder build(decls, SymbolCheck::kLenient);
  LiteralList out;
  for (std::size_t i = 1; i < s.items.size(); ++i) out.push_back(build.literal(s.items[i]));
  return out;
}

}  // namespace shadow
