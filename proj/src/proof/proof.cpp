#include "shadow/proof/proof.hpp"

#include <json.hpp>

#include "shadow/errors.hpp"
#include "shadow/shadowing.hpp"

namespace shadow::proof {

namespace {

using Json = nlohmann::ordered_json;

struct RuleName {
  Rule rule;
  const char* name;
};

constexpr RuleName kRuleNames[] = {
    {Rule::kInput, "input"},       {Rule::kResolve, "I_R"},       {Rule::kBelief, "I_B"},
    {Rule::kObligation, "I_O"},    {Rule::kPromote, "promote"},   {Rule::kShadow, "shadow"},
    {Rule::kUnshadow, "unshadow"}, {Rule::kFactor, "factor"},     {Rule::kCnf, "cnf"},
};

std::string render_context(const ContextPath& path) {
  std::string out;
  for (const Context& c : path) {
    if (!out.empty()) out += " ";
    out += "(" + c.agent.name + " " + c.time.name + ")";
  }
  return out;
}

std::string display(const Step& step) {
  if (!step.is_clause()) return render(unshadow(step.formula()));
  LiteralList expanded;
  for (const Literal& l : step.clause()) expanded.push_back(unshadow(l));
  return render(expanded);
}

std::string conclusion_text(const Step& step) {
  return step.is_clause() ? render(step.clause()) : render(step.formula());
}

}  // namespace

std::string to_string(Rule rule) {
  for (const RuleName& r : kRuleNames) {
    if (r.rule == rule) return r.name;
  }
  return "input";
}

std::optional<Rule> rule_from_string(std::string_view name) {
  for (const RuleName& r : kRuleNames) {
    if (name == r.name) return r.rule;
  }
  return std::nullopt;
}

std::string render_text(const Proof& proof) {
  std::string out;
  for (const Step& step : proof.steps) {
    out += std::to_string(step.id) + ". " + display(step) + " [" + to_string(step.rule);
    if (step.rule == Rule::kInput) {
      out += ": " + step.note + "]\n";
      continue;
    }
    for (std::size_t i = 0; i < step.parents.size(); ++i) {
      out += (i == 0 ? " " : ", ") + std::to_string(step.parents[i]);
    }
    if (!step.subst.empty()) out += "; " + render(step.subst);
    if (!step.context.empty()) out += "; in " + render_context(step.context);
    if (!step.note.empty()) out += "; " + step.note;
    out += "]\n";
  }
  return out;
}

std::string render_json(const Proof& proof, int indent) {
  Json steps = Json::array();
  for (const Step& step : proof.steps) {
    Json subst = Json::object();
    for (const auto& [var, value] : step.subst) subst["?" + var] = render(value);
    Json context = Json::array();
    for (const Context& c : step.context) context.push_back(Json::array({c.agent.name, c.time.name}));
    steps.push_back(Json{{"id", step.id},
                         {"rule", to_string(step.rule)},
                         {"kind", step.is_clause() ? "clause" : "formula"},
                         {"conclusion", conclusion_text(step)},
                         {"parents", step.parents},
                         {"subst", subst},
                         {"note", step.note},
                         {"context", context}});
  }
  Json stats{{"iterations", proof.stats.iterations}, {"clauses_generated", proof.stats.clauses_generated}};
  if (proof.stats.wall_time_ms) stats["wall_time_ms"] = *proof.stats.wall_time_ms;
  Json out{{"steps", steps}, {"goal", proof.goal_step}, {"stats", stats}};
  if (proof.answer) {
    Json answer = Json::object();
    for (const auto& [var, value] : *proof.answer) answer["?" + var] = render(value);
    out["answer"] = answer;
  }
  return out.dump(indent);
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ProofFormatError("malformed proof: " + what); }

const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) malformed(std::string("missing field '") + key + "'");
  return object.at(key);
}

std::string var_name(const std::string& key) {
  if (key.size() < 2 || key[0] != '?') malformed("substitution key '" + key + "' is not a variable");
  return key.substr(1);
}

Substitution parse_subst(const Json& j, const Declarations& decls) {
  if (!j.is_object()) malformed("substitution must be an object");
  Substitution out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) malformed("substitution values must be strings");
    out.emplace(var_name(key), parse_term(value.get<std::string>(), decls));
  }
  return out;
}

}  // namespace

Proof parse_json(std::string_view text, const Declarations& decls) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  try {
    Proof proof;
    for (const Json& j : field(root, "steps")) {
      Step step;
      step.id = field(j, "id").get<std::size_t>();
      auto rule = rule_from_string(field(j, "rule").get<std::string>());
      if (!rule) malformed("unknown rule '" + j.at("rule").get<std::string>() + "'");
      step.rule = *rule;
      std::string kind = field(j, "kind").get<std::string>();
      std::string conclusion = field(j, "conclusion").get<std::string>();
      if (kind == "clause") {
        step.conclusion = parse_clause(conclusion, decls);
      } else if (kind == "formula") {
        step.conclusion = parse_formula(conclusion, decls);
      } else {
        malformed("unknown step kind '" + kind + "'");
      }
      step.parents = field(j, "parents").get<std::vector<std::size_t>>();
      step.subst = parse_subst(field(j, "subst"), decls);
      step.note = field(j, "note").get<std::string>();
      for (const Json& c : field(j, "context")) {
        if (!c.is_array() || c.size() != 2) malformed("context entries are [agent, time] pairs");
        auto agent = decls.find_agent(c[0].get<std::string>());
        auto time = decls.find_time(c[1].get<std::string>());
        if (!agent || !time) malformed("context names an undeclared agent or time");
        step.context.push_back(Context{*agent, *time});
      }
      proof.steps.push_back(std::move(step));
    }
    proof.goal_step = field(root, "goal").get<std::size_t>();
    const Json& stats = field(root, "stats");
    proof.stats.iterations = field(stats, "iterations").get<std::size_t>();
    proof.stats.clauses_generated = field(stats, "clauses_generated").get<std::size_t>();
    if (stats.contains("wall_time_ms")) proof.stats.wall_time_ms = stats.at("wall_time_ms").get<std::int64_t>();
    if (root.contains("answer")) proof.answer = parse_subst(root.at("answer"), decls);
    return proof;
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace shadow::proof
