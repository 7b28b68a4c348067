#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scs/scs.hpp"

namespace scs {

enum class ExtrusionMethod { SupPreimage, InfPreimage, External };

const char* to_string(ExtrusionMethod m);

/// A right inverse ↑ of a space function δ: δ(↑(c)) = c for all c (E.1).
/// Extrusions need not satisfy S.1/S.2 themselves.
class ExtrusionFunction {
 public:
  /// Accepts any user table and verifies only E.1 against f. Throws
  /// Error(NotRightInverse) with the first failing element.
  static ExtrusionFunction external(const SpaceFunction& f, std::vector<Elem> table);

  Elem operator()(Elem c) const {
    lattice_->check(c);
    return table_[c];
  }
  const Lattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  ExtrusionMethod method() const noexcept { return method_; }

  /// E.1 against f on every element.
  bool is_right_inverse_of(const SpaceFunction& f) const;

 private:
  ExtrusionFunction(LatticePtr lattice, std::vector<Elem> table, ExtrusionMethod method)
      : lattice_(std::move(lattice)), table_(std::move(table)), method_(method) {}

  friend ExtrusionFunction extrusion_sup(const SpaceFunction&);
  friend ExtrusionFunction extrusion_inf(const SpaceFunction&);

  LatticePtr lattice_;
  std::vector<Elem> table_;
  ExtrusionMethod method_;
};

struct SurjectivityCheck {
  bool surjective = true;
  std::optional<Elem> missing;  // an element with empty preimage
};

struct PreservationCheck {
  bool preserves = true;
  std::optional<std::pair<Elem, Elem>> witness;
};

SurjectivityCheck is_surjective(const SpaceFunction& f);

/// False when f(⊤) ≠ ⊤, which rules out any right inverse. True is
/// inconclusive; surjectivity is the full criterion.
bool has_right_inverse_precheck(const SpaceFunction& f);

/// f(a ⊓ b) = f(a) ⊓ f(b) for all pairs and f(⊤) = ⊤. A failing f(⊤) is
/// reported as the witness (⊤, ⊤).
PreservationCheck preserves_meets(const SpaceFunction& f);

/// Same checks for an arbitrary table (used on derived extrusions).
PreservationCheck preserves_meets(const Lattice& l, const std::vector<Elem>& table);
/// g(a ⊔ b) = g(a) ⊔ g(b) for all pairs and g(⊥) = ⊥.
PreservationCheck preserves_joins(const Lattice& l, const std::vector<Elem>& table);

/// c ↦ ⨆ f⁻¹(c); meet-preserving right inverse. Throws Error(NotSurjective).
ExtrusionFunction extrusion_sup(const SpaceFunction& f);

/// c ↦ ⨅ f⁻¹(c); join-preserving right inverse. Requires f surjective and
/// meet-preserving; throws Error(NotSurjective) or Error(NotMeetPreserving).
ExtrusionFunction extrusion_inf(const SpaceFunction& f);

/// δ_i(c ⊔ ↑(d)) == δ_i(c) ⊔ d. Throws Error(NotRightInverse) unless ext
/// satisfies E.1 for δ_i.
bool verify_extrusion_law(const SCS& scs, AgentId agent, const ExtrusionFunction& ext, Elem c, Elem d);

}  // namespace scs
