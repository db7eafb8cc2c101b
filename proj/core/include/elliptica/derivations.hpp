#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "elliptica/quotient.hpp"

namespace elliptica {

// A derivation of Q[x_1..x_k] of even degree, fixed by its generator images.
// images[i] is homogeneous of degree |x_i| + degree, or zero.
struct Derivation {
  int degree = 0;
  std::vector<Polynomial> images;
};

// delta(f) = sum_i (d f / d x_i) * delta(x_i). All Koszul signs are +1
// because every generator has even degree.
Polynomial apply(const Presentation& p, const Derivation& d, const Polynomial& f);

struct DerivationSpace {
  int degree = 0;
  std::vector<Derivation> lift_basis;  // ideal-preserving lifts
  std::size_t trivial_dim = 0;         // lifts with every image in the ideal
  std::size_t induced_dim = 0;         // lift_basis.size() - trivial_dim
  // Representatives of lift_basis modulo the trivial subspace, with every
  // image in normal form. induced_basis.size() == induced_dim.
  std::vector<Derivation> induced_basis;
};

// Degree-`degree` derivations of H* as ideal-preserving lifts. Odd degrees
// give the zero space. Precondition: q is elliptic.
DerivationSpace derivation_space(const Quotient& q, int degree);
DerivationSpace derivation_space(const Presentation& p, int degree);

struct HalperinReport {
  struct Entry {
    int degree = 0;
    std::size_t lift_dim = 0;
    std::size_t trivial_dim = 0;
    std::size_t induced_dim = 0;
  };
  std::vector<Entry> degrees;  // -2, -4, ..., -(max weight - 2)
  bool pass = true;
  std::optional<Derivation> witness;  // present iff !pass
  // Every negative-degree lift sends degree-0 targets to zero.
  bool land_in_zero_holds = true;
};

// Negative-degree derivation check over -(W-2) <= d <= -2, W the maximal
// generator weight. Below that range every image lands in H^0 or vanishes.
HalperinReport halperin_check(const Quotient& q);
HalperinReport halperin_check(const Presentation& p);

// Structural checks on a computed space; all fields true when the solver is sound.
struct SolverInvariants {
  bool ideal_preserved = true;  // delta(u_j) reduces to 0 for every basis element
  bool leibniz = true;          // on seeded random homogeneous pairs
  bool land_in_zero = true;     // negative degree: constant images vanish
  bool k_minus_one = true;      // negative degree: k-1 images in I forces trivial

  bool all() const { return ideal_preserved && leibniz && land_in_zero && k_minus_one; }
};

SolverInvariants check_solver_invariants(const Quotient& q, const DerivationSpace& space,
                                         std::uint64_t seed);

}  // namespace elliptica
