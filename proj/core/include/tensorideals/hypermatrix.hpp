#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tensorideals/form_matrix.hpp"
#include "tensorideals/groebner.hpp"
#include "tensorideals/polynomial.hpp"

namespace tid {

// Dense t-dimensional array of polynomials, entries in row-major order of
// the multi-index (last axis fastest). Axes and index values are 1-based at
// the API surface, matching the usual tensor conventions.
class Hypermatrix {
 public:
  Hypermatrix(RegistryPtr reg, std::vector<std::size_t> shape);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t order() const { return shape_.size(); }
  std::size_t entry_count() const { return entries_.size(); }

  const Polynomial& at(const std::vector<std::size_t>& index) const;  // 1-based
  void set(const std::vector<std::size_t>& index, Polynomial p);
  const Polynomial& at_linear(std::size_t i) const { return entries_[i]; }
  void set_linear(std::size_t i, Polynomial p);

  std::size_t linear_index(const std::vector<std::size_t>& index) const;
  std::vector<std::size_t> multi_index(std::size_t linear) const;  // 1-based

  // Generic hypermatrix of indeterminates x[i1,...,it] over the rationals
  // (or the given field), one independent variable per cell.
  static Hypermatrix generic(const std::vector<std::size_t>& shape,
                             Field field = Field::rationals());

  // Pins axis `axis` (1-based) to `value` (1-based); the result keeps the
  // registry and has one axis fewer.
  Hypermatrix section(std::size_t axis, std::size_t value) const;

  struct Flattening {
    std::vector<std::size_t> j1, j2;  // 1-based axis subsets
    FormMatrix matrix;
  };

  // (J1, J2)-flattening; row index is the lexicographic rank of the J1
  // sub-index, column index likewise for J2.
  Flattening flatten(const std::vector<std::size_t>& j1) const;

  // Union over all flattenings of all d x d minors, sign-canonicalized,
  // deduplicated, deterministically sorted.
  std::vector<Polynomial> d_minors(std::size_t d) const;

  IdealBasis ideal_of_minors(std::size_t d) const;

  std::string to_json() const;  // {"shape":[...],"entries":[...]}

 private:
  RegistryPtr reg_;
  std::vector<std::size_t> shape_;
  std::vector<Polynomial> entries_;
};

// Canonical set form: sign-canonicalize, drop zeros, sort, dedup.
std::vector<Polynomial> canonical_poly_set(std::vector<Polynomial> polys);

}  // namespace tid
