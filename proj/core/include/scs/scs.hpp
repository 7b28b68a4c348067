#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scs/space_function.hpp"

namespace scs {

/// Dense index of an agent within its SCS.
using AgentId = std::size_t;

/// A set of agents of one SCS, kept sorted and duplicate-free. May be empty.
class Group {
 public:
  Group() = default;
  explicit Group(std::vector<AgentId> members);

  const std::vector<AgentId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(AgentId a) const;
  bool subset_of(const Group& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Group&, const Group&) = default;

 private:
  std::vector<AgentId> members_;
};

/// A finite spatial constraint system: a lattice with one validated space
/// function per agent.
class SCS {
 public:
  using AgentTable = std::pair<std::string, std::vector<Elem>>;

  /// Validates every agent table; the report aggregates all agents, each
  /// violation's rule prefixed with "agent <id>: ".
  static Outcome<SCS> build(LatticePtr lattice, std::vector<AgentTable> agents);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  std::size_t agent_count() const noexcept { return spaces_.size(); }
  const std::string& agent_name(AgentId i) const;
  /// Throws Error(UnknownAgent).
  AgentId agent(std::string_view name) const;
  const SpaceFunction& space(AgentId i) const;

  /// δ_i(c).
  Elem apply(AgentId i, Elem c) const { return space(i)(c); }

  /// Group from agent names; throws Error(UnknownAgent).
  Group group(std::span<const std::string> names) const;
  Group all_agents() const;
  std::vector<std::string> group_names(const Group& g) const;
  /// Throws Error(UnknownAgent) if g mentions agents this SCS lacks.
  void check(const Group& g) const;

 private:
  SCS(LatticePtr lattice, std::vector<std::string> names, std::vector<SpaceFunction> spaces)
      : lattice_(std::move(lattice)), names_(std::move(names)), spaces_(std::move(spaces)) {}

  LatticePtr lattice_;
  std::vector<std::string> names_;
  std::vector<SpaceFunction> spaces_;
};

}  // namespace scs
