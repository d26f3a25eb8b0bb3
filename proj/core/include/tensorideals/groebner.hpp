#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "tensorideals/polynomial.hpp"

namespace tid {

// Caps on Buchberger's loop. Exceeding a cap raises ResourceBudgetExceeded,
// which verification drivers report as "inconclusive", never as a failure.
// All caps are deterministic counters, not wall-clock limits.
struct GroebnerBudget {
  std::uint64_t max_pair_reductions = 200000;
  std::size_t max_basis_size = 4000;
  std::size_t max_poly_terms = 500000;
};

// Generating set of an ideal with an optional cached reduced Groebner basis.
// Generators are kept nonzero, sign-canonicalized, deduplicated and sorted.
class IdealBasis {
 public:
  IdealBasis(RegistryPtr reg, std::vector<Polynomial> generators);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_groebner() const { return gb_.has_value(); }
  // Reduced basis (monic, pairwise tail-reduced, sorted by leading monomial).
  const std::vector<Polynomial>& groebner() const;

  static IdealBasis with_cache(RegistryPtr reg, std::vector<Polynomial> generators,
                               std::vector<Polynomial> reduced_gb);

 private:
  RegistryPtr reg_;
  std::vector<Polynomial> gens_;
  std::optional<std::vector<Polynomial>> gb_;
};

// Buchberger with the normal selection strategy and the product/chain
// criteria; returns a copy of `ideal` carrying the reduced basis.
IdealBasis groebner_basis(const IdealBasis& ideal, const GroebnerBudget& budget = {});

// Remainder of full multivariate division by the cached basis; zero iff the
// polynomial lies in the ideal.
Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal);

bool ideal_member(const Polynomial& p, const IdealBasis& ideal);

// True iff the reduced Groebner bases under the common registry order agree.
bool ideal_equal(const IdealBasis& lhs, const IdealBasis& rhs,
                 const GroebnerBudget& budget = {});

// Generators of I intersected with the subring without `drop`, via a block
// elimination order. The result lives in a registry holding only the
// retained variables (original relative order, DegRevLex).
IdealBasis eliminate(const IdealBasis& ideal, const std::set<VarId>& drop,
                     const GroebnerBudget& budget = {});

// Ideal of all polynomial relations among the target forms: the kernel of
// ambient_var -> targets[var]. Targets must be homogeneous of one common
// degree; they live in `param_reg`.
IdealBasis kernel_of_map(const RegistryPtr& ambient_reg, const RegistryPtr& param_reg,
                         const std::vector<Polynomial>& targets,
                         const GroebnerBudget& budget = {});

// S-polynomial; exposed for the post-hoc Buchberger criterion check.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace tid
