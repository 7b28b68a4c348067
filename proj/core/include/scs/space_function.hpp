#pragma once

#include <memory>
#include <span>
#include <vector>

#include "scs/error.hpp"
#include "scs/lattice.hpp"

namespace scs {

using LatticePtr = std::shared_ptr<const Lattice>;

/// Checks S.1 (f(⊥) = ⊥) and S.2 on every binary join. Throws
/// Error(TableNotTotal) if raw does not have one image per element.
ValidationReport check_space_axioms(const Lattice& lattice, std::span<const Elem> raw);

/// A join-homomorphism on a finite lattice that preserves bottom. Only
/// validated tables can become a SpaceFunction.
class SpaceFunction {
 public:
  static Outcome<SpaceFunction> make(LatticePtr lattice, std::vector<Elem> table);

  Elem operator()(Elem c) const {
    lattice_->check(c);
    return table_[c];
  }

  const Lattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  friend bool operator==(const SpaceFunction& a, const SpaceFunction& b) {
    return a.lattice_ == b.lattice_ && a.table_ == b.table_;
  }

 private:
  SpaceFunction(LatticePtr lattice, std::vector<Elem> table)
      : lattice_(std::move(lattice)), table_(std::move(table)) {}

  friend SpaceFunction lambda_top(const LatticePtr&);
  friend SpaceFunction lambda_bot(const LatticePtr&);
  friend SpaceFunction fn_join(const SpaceFunction&, const SpaceFunction&);
  friend class SpaceFunctionAccess;

  LatticePtr lattice_;
  std::vector<Elem> table_;
};

/// Pointwise order f ⊑̇ g. Throws Error(CarrierMismatch).
bool fn_leq(const SpaceFunction& f, const SpaceFunction& g);

/// Pointwise join; again a space function. There is deliberately no pointwise
/// meet: see delta_oracle / delta_table for the meet in the function lattice.
SpaceFunction fn_join(const SpaceFunction& f, const SpaceFunction& g);

/// λ⊤: ⊥ ↦ ⊥, everything else ↦ ⊤. Greatest space function.
SpaceFunction lambda_top(const LatticePtr& lattice);
/// λ⊥: everything ↦ ⊥. Least space function.
SpaceFunction lambda_bot(const LatticePtr& lattice);

/// ⨆{e | f(e) ⊑ c}; the projection induced by f.
Elem project(const SpaceFunction& f, Elem c);

/// Internal construction of tables already known to satisfy S.1/S.2 (results
/// of the distributed-space algorithms). Not for user input.
class SpaceFunctionAccess {
 public:
  static SpaceFunction trusted(LatticePtr lattice, std::vector<Elem> table) {
    return SpaceFunction(std::move(lattice), std::move(table));
  }
};

}  // namespace scs
