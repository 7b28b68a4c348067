#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scs/error.hpp"

namespace scs {

/// Dense index of a lattice element, assigned in declaration order.
using Elem = std::uint32_t;

struct DistributivityCheck {
  bool distributive = true;
  /// (a, b, c) with a ⊔ (b ⊓ c) ≠ (a ⊔ b) ⊓ (a ⊔ c); set only when not distributive.
  std::optional<std::array<Elem, 3>> witness;
};

/// A finite complete lattice with precomputed join, meet and (for
/// distributive lattices) Heyting implication tables. Immutable once built.
///
/// The order is entailment: a ⊑ b means b carries at least the information
/// of a. bottom() is the empty join (no information) and top() the empty meet.
class Lattice {
 public:
  /// Builds from element names and any generating set of (lower, upper)
  /// pairs. The order is the reflexive-transitive closure of the pairs.
  static Outcome<Lattice> build(std::vector<std::string> names,
                                std::span<const std::pair<std::string, std::string>> order);

  /// Same as build() but the pairs are given as dense indices into names.
  static Outcome<Lattice> from_relation(std::vector<std::string> names,
                                        std::span<const std::pair<Elem, Elem>> order);

  std::size_t size() const noexcept { return names_.size(); }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  const std::string& name(Elem e) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Throws Error(UnknownElement).
  Elem at(std::string_view name) const;

  bool leq(Elem a, Elem b) const { return leq_[checked_index(a, b)] != 0; }
  Elem join(Elem a, Elem b) const { return join_[checked_index(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[checked_index(a, b)]; }
  Elem join(std::span<const Elem> elems) const;
  Elem meet(std::span<const Elem> elems) const;

  bool leq(std::string_view a, std::string_view b) const { return leq(at(a), at(b)); }

  const DistributivityCheck& distributivity() const noexcept { return distributivity_; }
  bool is_distributive() const noexcept { return distributivity_.distributive; }

  /// Heyting implication c → d = ⨅{e | c ⊔ e ⊒ d}. Throws
  /// Error(FrameRequired) on non-distributive lattices.
  Elem implies(Elem c, Elem d) const;

  /// Throws Error(UnknownElement) if e is out of range.
  void check(Elem e) const {
    if (e >= names_.size()) throw_unknown(e);
  }

  /// Covering pairs (a, b): a ⊏ b with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const;
  /// Length of the longest chain from bottom to e.
  std::vector<std::size_t> heights() const;
  /// Elements that are not bottom and not the join of strictly smaller elements.
  const std::vector<Elem>& join_irreducibles() const noexcept { return join_irreducibles_; }

  /// Generating order pairs (covers) as names, suitable for re-serialization.
  std::vector<std::pair<std::string, std::string>> cover_names() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  Lattice() = default;
  std::size_t index(Elem a, Elem b) const noexcept { return std::size_t{a} * names_.size() + b; }
  std::size_t checked_index(Elem a, Elem b) const {
    check(a);
    check(b);
    return index(a, b);
  }
  [[noreturn]] static void throw_unknown(Elem e);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> lookup_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> implies_;
  std::vector<Elem> join_irreducibles_;
  DistributivityCheck distributivity_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

}  // namespace scs
