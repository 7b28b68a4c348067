#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scs/scs.hpp"

namespace scs {

enum class Algorithm { Oracle, Part1, Part2, Part3 };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view s);

/// Lattice-operation tallies of one Δ computation. `candidates` counts the
/// terms entering the outer meet of the recursive algorithms.
struct OpCounts {
  std::uint64_t joins = 0;
  std::uint64_t meets = 0;
  std::uint64_t implications = 0;
  std::uint64_t recursive_calls = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t candidates = 0;

  OpCounts& operator+=(const OpCounts& o);
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// One non-base evaluation of the recursive algorithm on the agent slice
/// [lo, hi) of the sorted group, at element c.
struct CallRecord {
  std::size_t lo = 0;
  std::size_t hi = 0;
  Elem element = 0;
  std::uint64_t candidates = 0;
};

struct DeltaResult {
  Group group;
  SpaceFunction table;
  Algorithm algorithm = Algorithm::Oracle;
  OpCounts op_counts;
  std::vector<CallRecord> calls;  // filled only when tracing was requested
};

struct OracleOptions {
  /// Enumeration is refused on lattices with more join-irreducibles.
  std::size_t max_join_irreducibles = 10;
};

/// Visits every space function f on the lattice with f(j) ⊑ bound[k] for the
/// k-th join-irreducible j (pass an empty bound for no restriction). Space
/// functions are determined by their values on join-irreducibles; the
/// remaining images are forced by S.2. Throws Error(CapExceeded).
void for_each_space_function(const Lattice& lattice, std::span<const Elem> bound,
                             const std::function<void(std::span<const Elem>)>& visit,
                             const OracleOptions& options = {});

/// Exact |S(C)| by enumeration. Throws Error(CapExceeded).
std::uint64_t count_space_functions(const Lattice& lattice, const OracleOptions& options = {});

/// Δ_I as the pointwise join of every space function below δ_i for all
/// i ∈ I. Works on any finite lattice. Throws Error(CapExceeded).
DeltaResult delta_oracle(const SCS& scs, const Group& group, const OracleOptions& options = {});

/// Δ_∅ = λ⊤.
SpaceFunction delta_empty(const SCS& scs);

/// Δ_I(c) by the recursive halving algorithm; variant is Part1, Part2 or
/// Part3. Throws Error(FrameRequired) on non-distributive lattices and
/// Error(EmptyGroup) for I = ∅.
Elem delta_part(const SCS& scs, const Group& group, Elem c, Algorithm variant, OpCounts* counts = nullptr);

/// Full Δ_I table by the recursive algorithm, memoized per
/// (agent slice, element) across all elements.
DeltaResult delta_table(const SCS& scs, const Group& group, Algorithm variant, bool trace = false);

/// Dispatches on the algorithm; I = ∅ yields λ⊤ for every algorithm.
DeltaResult delta(const SCS& scs, const Group& group, Algorithm algorithm,
                  const OracleOptions& options = {});

/// Part3 on distributive lattices, the oracle otherwise.
Algorithm default_algorithm(const Lattice& lattice);

/// π_i(c) = ⨆{e | δ_i(e) ⊑ c}.
Elem agent_projection(const SCS& scs, AgentId agent, Elem c);
/// π_I(c) = ⨆{π_i(c) | i ∈ I}; π_∅(c) = ⊥.
Elem join_projection(const SCS& scs, const Group& group, Elem c);
/// Π_I(c) = ⨆{e | Δ_I(e) ⊑ c} from a precomputed Δ_I. Throws
/// Error(GroupMismatch) if delta was computed for another group.
Elem group_projection(const SCS& scs, const Group& group, Elem c, const DeltaResult& delta);
Elem group_projection(const SCS& scs, const Group& group, Elem c);

/// Smallest J ⊆ I (lexicographic among equal sizes) with c ⊒ Δ_J(e), or
/// nullopt when c ⋣ Δ_I(e).
std::optional<Group> finite_witness(const SCS& scs, const Group& group, Elem c, Elem e);

}  // namespace scs
