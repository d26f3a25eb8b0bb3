#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tensorideals/linalg.hpp"
#include "tensorideals/polynomial.hpp"
#include "tensorideals/report.hpp"
#include "tensorideals/symtensor.hpp"

namespace tid {

// Monomial (or polynomial) parameterization of a projective variety: one
// target form per ambient variable, parameters grouped by factor.
struct Parameterization {
  RegistryPtr ambient;
  RegistryPtr params;
  std::vector<Polynomial> targets;          // indexed by ambient VarId
  std::vector<std::uint32_t> param_group_of;  // param VarId -> factor index
  std::uint32_t group_count = 1;

  // Image of an ambient polynomial under the substitution.
  Polynomial pullback(const Polynomial& p) const;
  // Per-factor degrees shared by every target (validated on construction).
  std::vector<std::uint32_t> multidegree() const;
  void validate() const;
};

// The composite Veronese x ... x Veronese -> Segre embedding: the canonical
// variable with blocks B_j maps to prod_j prod_{i in B_j} w[j,i]. Specializes
// to the Segre map when all d_j = 1 and to the Veronese map when t = 1.
Parameterization segre_veronese_map(const SymProfile& profile, Field field = Field::rationals());

struct PullbackCheck {
  bool vanishes = true;
  std::optional<Polynomial> witness;        // first non-vanishing input
  std::optional<Polynomial> witness_image;  // its nonzero image
};

PullbackCheck pullback_vanishes(const std::vector<Polynomial>& polys, const Parameterization& p);

struct GradedKernel {
  std::size_t dim = 0;
  std::vector<Polynomial> basis;  // echelonized, ambient forms
};

// Dimension of the space of degree-`degree` ambient forms whose pullback is
// zero: the exact nullspace of the monomial-pullback matrix.
std::size_t graded_kernel_dim(const Parameterization& p, std::uint32_t degree);
GradedKernel graded_kernel(const Parameterization& p, std::uint32_t degree);

// Dimension of the degree-`degree` graded piece of the ideal spanned by
// `generators` (all of lower or equal degree).
std::size_t ideal_graded_dimension(const RegistryPtr& reg,
                                   const std::vector<Polynomial>& generators,
                                   std::uint32_t degree);

// Verification driver for the Segre-Veronese generator theorem: pullback
// containment, degree-2 dimension equality, degree-3 generation, and (in
// Groebner mode) full ideal equality against the elimination kernel.
VerificationReport verify_segre_veronese(const SymProfile& profile, VerifyMode mode,
                                         const VerifyOptions& opts = {});

}  // namespace tid
