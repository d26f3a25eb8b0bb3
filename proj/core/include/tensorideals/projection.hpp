#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tensorideals/form_matrix.hpp"
#include "tensorideals/hypermatrix.hpp"
#include "tensorideals/linalg.hpp"
#include "tensorideals/report.hpp"
#include "tensorideals/varieties.hpp"

namespace tid {

// Projection of the d-uple Veronese embedding of P^n from a codimension-2
// scheme of degree s = C(t+1,2) + k cut out by a Hilbert-Burch matrix.
// n = 2 is the classical surface case (projection from s general points).
struct ProjectionProfile {
  std::size_t n = 2;
  std::size_t d = 0;
  std::size_t t = 0;
  std::size_t k = 0;

  // k >= t/2 selects the shape with degree-(t+1) generators.
  bool high_k() const { return 2 * k >= t; }
  std::size_t s() const { return t * (t + 1) / 2 + k; }
  std::size_t f_count() const { return t - k + 1; }                  // forms of degree t
  std::size_t g_count() const { return high_k() ? 2 * k - t : 0; }   // forms of degree t+1
  std::size_t z_weight() const { return d - t - 1; }
  // Third-axis extent of the hypermatrix: (n+1)(t-k+1) + g_count.
  std::size_t slot_count() const { return (n + 1) * f_count() + g_count(); }

  void validate() const;  // InvalidProfile on violation
};

// The matrix of linear/quadratic forms whose maximal minors generate the
// ideal of the projected scheme, plus those minors.
struct HilbertBurch {
  FormMatrix L;
  std::vector<Polynomial> F;  // t-k+1 forms of degree t
  std::vector<Polynomial> G;  // g_count forms of degree t+1
};

// Expected number of emitted linear relations; specializes at n = 2 to the
// binomial counts k*C(d-t,2) and C(d-t+1,2)(t-2k) + C(d-t,2)k.
std::size_t expected_relation_count(const ProjectionProfile& p);

// (n+1) x (# degree-(weight-1) monomials) catalecticant over fresh variables
// z[a0,...,an]; entry (i, beta) = z_{beta + e_i}. weight >= 1 required.
FormMatrix catalecticant_matrix(std::size_t n, std::size_t weight,
                                Field field = Field::rationals());

// Seeded construction of the whole Section-4/5 apparatus. Pseudorandom
// entries of L are drawn from splitmix64 with small integer coefficients;
// failed genericity checks reseed deterministically (seed+1, recorded).
class Projection {
 public:
  explicit Projection(const ProjectionProfile& profile, Field field = Field::rationals(),
                      std::uint64_t seed = 1, std::size_t max_retries = 32);

  const ProjectionProfile& profile() const { return profile_; }
  const Field& field() const { return field_; }
  std::uint64_t effective_seed() const { return effective_seed_; }
  const std::vector<std::uint64_t>& reseed_trail() const { return reseed_trail_; }

  const RegistryPtr& w_registry() const { return w_reg_; }
  const RegistryPtr& ambient() const { return ambient_; }
  const HilbertBurch& hilbert_burch() const { return hb_; }

  std::size_t u() const { return z_exps_.size(); }
  // z-monomials of degree d-t-1 in decreasing lexicographic order.
  const std::vector<std::vector<std::uint32_t>>& z_exponents() const { return z_exps_; }

  // Ambient coordinate ids; h and j and l are 1-based, i runs over 0..n.
  VarId xt_id(std::size_t h, std::size_t i, std::size_t j) const;
  VarId x_id(std::size_t h, std::size_t l) const;

  // Labeled degree-d spanning set of J_d: one entry per ambient coordinate.
  std::vector<std::pair<std::string, Polynomial>> jd_spanning_set() const;

  // The border-row relation families (E1) resp. (E2), as linear forms in the
  // ambient variables.
  const std::vector<Polynomial>& linear_relations() const { return relations_; }
  // x~[beta+e_i; m, j] = x~[beta+e_m; i, j].
  const std::vector<Polynomial>& identification_relations() const { return identifications_; }

  struct RelationRank {
    std::size_t rows = 0;
    std::size_t rank = 0;
    bool is_maximal = false;
    // Rank of the relations together with the identifications: the full
    // space of linear forms vanishing on the parameterization.
    std::size_t combined_rank = 0;
  };
  RelationRank relation_rank() const;

  FormMatrix catalecticant() const;
  // Hypermatrix A of shape (n+1) x C(n+d-t-2, n) x slot_count.
  Hypermatrix build_A() const;
  // (XM, Cat): 2-minors of the u x slot_count coordinate matrix X, and the
  // catalecticant minors per coordinate family. Canonical sorted sets.
  std::pair<std::vector<Polynomial>, std::vector<Polynomial>> xm_cat_equations() const;

  // Ambient variable -> z_h w_i F_j resp. z_h G_l.
  Parameterization parameterization() const;

  // Rank-1 factorization of an ambient point satisfying the (XM) equations:
  // the u-vector of row ratios against the first nonzero row of X(Q).
  std::vector<Scalar> rank1_factor(const std::vector<Scalar>& ambient_point) const;

  // Sigma-expansions of the bordered determinants (the identities behind the
  // relations); every entry must be the zero polynomial.
  std::vector<Polynomial> border_identity_residues() const;

  // dim J_d, computed by the span of the labeled generators.
  std::size_t jd_dimension() const;

 private:
  void build_from_seed(std::uint64_t seed);
  bool validate_genericity() const;
  void build_relations();
  Polynomial target_of(VarId v) const;

  ProjectionProfile profile_;
  Field field_;
  std::uint64_t effective_seed_ = 0;
  std::vector<std::uint64_t> reseed_trail_;

  RegistryPtr w_reg_;
  RegistryPtr ambient_;
  HilbertBurch hb_{FormMatrix(nullptr, 0, 0), {}, {}};
  std::vector<std::vector<std::uint32_t>> z_exps_;     // degree d-t-1
  std::vector<std::vector<std::uint32_t>> beta_exps_;  // degree d-t-2
  std::vector<Polynomial> targets_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> identifications_;
};

// Verification driver for the set-theoretic and ideal-theoretic statements:
// pullback vanishing, relation rank maximality, the dimension audit, the
// (XM)/(Cat) coincidence, degree-2 graded equality on the quotient by the
// linear relations, rank-1 round-trips, and (Groebner mode) ideal equality.
VerificationReport verify_projection(const ProjectionProfile& profile, VerifyMode mode,
                                     const VerifyOptions& opts = {});

}  // namespace tid
