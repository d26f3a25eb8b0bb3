#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tensorideals/monomial.hpp"
#include "tensorideals/registry.hpp"
#include "tensorideals/scalar.hpp"

namespace tid {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse multivariate polynomial over one registry. Terms are kept sorted
// descending under the registry's monomial order with no zero coefficients,
// so equal polynomials have identical representations.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}

  static Polynomial zero(RegistryPtr reg) { return Polynomial(std::move(reg)); }
  static Polynomial constant(RegistryPtr reg, Scalar c);
  static Polynomial variable(RegistryPtr reg, VarId v);
  static Polynomial term(RegistryPtr reg, Monomial m, Scalar c);
  // Builds from unsorted term list; merges duplicates, drops zeros.
  static Polynomial from_terms(RegistryPtr reg, std::vector<Term> terms);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;  // requires nonzero
  std::optional<std::uint32_t> total_degree() const;  // max degree, nullopt when zero
  // Degree when homogeneous, nullopt for the zero polynomial; throws nothing.
  std::optional<std::uint32_t> homogeneous_degree() const;
  bool is_homogeneous_of(std::uint32_t d) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(std::uint32_t e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Leading coefficient made "positive" (rationals: > 0; prime field:
  // representative in [1, p/2]); identifies f with -f for set semantics.
  Polynomial canonical_sign() const;
  Polynomial monic() const;  // leading coefficient 1

  // If the polynomial is c * v for a single variable v with coefficient 1,
  // returns v.
  std::optional<VarId> as_plain_variable() const;

  // Image under variable -> polynomial over `target`; every variable in the
  // support must be assigned (UnassignedVariable otherwise).
  Polynomial substitute(const RegistryPtr& target,
                        const std::map<VarId, Polynomial>& images) const;
  // Rebuilds the polynomial over `target`, matching variables by label.
  Polynomial transport(const RegistryPtr& target) const;
  // Full evaluation; `point` is indexed by VarId over the whole registry.
  Scalar evaluate(const std::vector<Scalar>& point) const;

  std::vector<VarId> support() const;
  bool depends_on(VarId v) const;

  // Per-group degrees when homogeneous within each variable group, nullopt
  // otherwise. `group_of` maps VarId -> group index.
  std::optional<std::vector<std::uint32_t>> multidegree(
      const std::vector<std::uint32_t>& group_of, std::uint32_t ngroups) const;

  // Deterministic total order for sorting generator sets.
  static int cmp(const Polynomial& a, const Polynomial& b);

  // Text form: terms sorted by the active order, each as
  // "<sign><coeff>·v1^e1*v2^e2…"; the zero polynomial prints "0".
  std::string to_string() const;

 private:
  void validate_compatible(const Polynomial& o) const;

  RegistryPtr reg_;
  std::vector<Term> terms_;
};

}  // namespace tid
