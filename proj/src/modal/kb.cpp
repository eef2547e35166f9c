#include "shadow/modal/kb.hpp"

#include <stdexcept>

#include "shadow/transform.hpp"

namespace shadow::modal {

std::optional<std::size_t> KnowledgeBase::add(Formula formula, Derivation derivation) {
  std::string key = canonical(formula);
  if (index_.count(key)) return std::nullopt;
  std::size_t id = entries_.size();
  index_.emplace(std::move(key), id);
  if (formula.kind() == Formula::Kind::kBelieves) beliefs_[formula.agent()].push_back(id);
  entries_.push_back(Entry{id, std::move(formula), std::move(derivation), generation_});
  return id;
}

bool KnowledgeBase::contains(const Formula& formula) const { return index_.count(canonical(formula)) > 0; }

std::optional<std::size_t> KnowledgeBase::find(const Formula& formula) const {
  auto it = index_.find(canonical(formula));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& KnowledgeBase::beliefs_of(const AgentSym& agent) const {
  static const std::vector<std::size_t> kNone;
  auto it = beliefs_.find(agent);
  return it == beliefs_.end() ? kNone : it->second;
}

std::vector<AgentSym> KnowledgeBase::believers() const {
  std::vector<AgentSym> out;
  for (const auto& [agent, ids] : beliefs_) out.push_back(agent);
  return out;
}

Formula resolve_source(const KnowledgeBase& kb, const Source& source) {
  Formula current = kb.entry(source.entry).formula;
  for (const PromoteHop& hop : source.hops) {
    auto inner = unwrap_context(hop.path, current);
    if (!inner || inner->kind() != Formula::Kind::kBelieves) {
      throw std::logic_error("promotion hop does not address a belief");
    }
    current = wrap_context(hop.path, Formula::believes(inner->agent(), hop.to, inner->body()));
  }
  return current;
}

}  // namespace shadow::modal
