#include "scs/scs.hpp"

#include <algorithm>
#include <set>

namespace scs {

Group::Group(std::vector<AgentId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Group::contains(AgentId a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool Group::subset_of(const Group& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Outcome<SCS> SCS::build(LatticePtr lattice, std::vector<AgentTable> agents) {
  if (!lattice) throw Error(ErrorKind::InvalidArgument, "null lattice");
  ValidationReport report;
  if (agents.empty()) report.add("no-agents", {});

  std::set<std::string> seen;
  std::vector<std::string> names;
  std::vector<SpaceFunction> spaces;
  for (auto& [name, table] : agents) {
    if (!seen.insert(name).second) {
      report.add("duplicate-agent", {name});
      continue;
    }
    if (table.size() != lattice->size()) {
      report.add("agent " + name + ": table-not-total", {std::to_string(table.size())});
      continue;
    }
    auto fn = SpaceFunction::make(lattice, std::move(table));
    if (!fn) {
      for (const auto& v : fn.report().violations) report.add("agent " + name + ": " + v.rule, v.witness);
      continue;
    }
    names.push_back(name);
    spaces.push_back(std::move(fn).value());
  }
  if (!report.ok()) return report;
  return SCS(std::move(lattice), std::move(names), std::move(spaces));
}

const std::string& SCS::agent_name(AgentId i) const {
  if (i >= names_.size()) throw Error(ErrorKind::UnknownAgent, "agent index " + std::to_string(i));
  return names_[i];
}

AgentId SCS::agent(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + std::string(name) + "'");
  return static_cast<AgentId>(it - names_.begin());
}

const SpaceFunction& SCS::space(AgentId i) const {
  if (i >= spaces_.size()) throw Error(ErrorKind::UnknownAgent, "agent index " + std::to_string(i));
  return spaces_[i];
}

Group SCS::group(std::span<const std::string> names) const {
  std::vector<AgentId> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.push_back(agent(n));
  return Group(std::move(ids));
}

Group SCS::all_agents() const {
  std::vector<AgentId> ids(agent_count());
  for (AgentId i = 0; i < ids.size(); ++i) ids[i] = i;
  return Group(std::move(ids));
}

std::vector<std::string> SCS::group_names(const Group& g) const {
  std::vector<std::string> out;
  for (AgentId i : g) out.push_back(agent_name(i));
  return out;
}

void SCS::check(const Group& g) const {
  for (AgentId i : g)
    if (i >= agent_count()) throw Error(ErrorKind::UnknownAgent, "agent index " + std::to_string(i));
}

}  // namespace scs
