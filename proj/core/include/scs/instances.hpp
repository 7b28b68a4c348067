#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scs/scs.hpp"

namespace scs {

/// The four-element diamond {bot, p, np, top} with agents "1" (swaps p and
/// np) and "2" (sends p to top, fixes np).
SCS m2_scs();

/// Subsets of {1..k} under inclusion, 0 ≤ k ≤ 6. Elements are named
/// "{}", "{1}", "{1,2}", ... and indexed by bitmask.
LatticePtr powerset_lattice(int k);

/// bot < a, b, c < top.
LatticePtr m3_lattice();
/// bot < a < b < top, bot < c < top.
LatticePtr n5_lattice();
/// bot < top, or a single point when points == 1; chain of the given length.
LatticePtr chain_lattice(std::size_t points);

/// Down-sets of a poset on `points` elements ordered by inclusion (always
/// distributive). below[i][j] means i < j in the poset; it must be a strict
/// order. Elements are named by their member lists, e.g. "d{0,2}".
LatticePtr downset_lattice(std::size_t points, const std::vector<std::vector<bool>>& below);

/// Random strict order on `points` elements: each pair i < j is related
/// with probability 1/2, then transitively closed.
std::vector<std::vector<bool>> random_poset(std::size_t points, std::mt19937_64& rng);

/// A random space function: random monotone images for the join-irreducibles,
/// completed by S.2, resampled until S.1/S.2 hold.
SpaceFunction random_space_function(const LatticePtr& lattice, std::mt19937_64& rng);

/// SCS with `agents` random space functions named "1".."agents".
SCS random_scs(const LatticePtr& lattice, std::size_t agents, std::mt19937_64& rng);

/// Events are subsets of states, bit s set when state s is in the event.
using Event = std::uint32_t;

/// States plus one partition of the states per agent.
struct AumannModel {
  std::vector<std::string> states;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> partitions;

  /// Throws Error(InvalidArgument) on empty/overlapping/non-covering blocks,
  /// unknown states or more than six states.
  void validate() const;
  std::size_t agent(const std::string& name) const;
  Event event(std::span<const std::string> states) const;
  /// Cell of state s for agent i, as an event.
  Event cell(std::size_t agent, std::size_t state) const;
  /// Canonical element name of an event: sorted state names, "{s1,s2}".
  std::string event_name(Event e) const;
};

/// Events ordered by reverse inclusion: join is intersection, meet is union,
/// bottom is the full state set and top is the empty event. δ_i = K_i.
SCS aumann_scs(const AumannModel& model);

/// Element of aumann_scs(model).lattice() that denotes the event.
Elem aumann_element(const SCS& compiled, const AumannModel& model, Event e);

/// K_i(e) = {s | P_i(s) ⊆ e}.
Event knowledge(const AumannModel& model, std::size_t agent, Event e);

/// D_I(e) = {s | ⋂_{i∈I} P_i(s) ⊆ e}, straight from the partitions.
Event distributed_knowledge(const AumannModel& model, std::span<const std::string> group, Event e);

AumannModel random_aumann_model(std::size_t states, std::size_t agents, std::mt19937_64& rng);

}  // namespace scs
