#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tensorideals/form_matrix.hpp"
#include "tensorideals/polynomial.hpp"
#include "tensorideals/scalar.hpp"

namespace tid {

// Dense matrix of field elements.
class ScalarMatrix {
 public:
  ScalarMatrix(Field f, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Rank over the field: fraction-free Bareiss elimination over the rationals
// (after clearing row denominators), plain Gaussian elimination mod p.
std::size_t exact_rank(const ScalarMatrix& m);
// Same for a constant FormMatrix; throws NonConstantEntry otherwise.
std::size_t exact_rank(const FormMatrix& m);

struct KernelBasis {
  std::size_t dim = 0;
  // Echelonized (reduced, pivot coefficient 1) basis of the left kernel,
  // one vector per row.
  std::vector<std::vector<Scalar>> rows;
};

// Left kernel of m: all c with c * m = 0.
KernelBasis left_kernel(const ScalarMatrix& m);

// Incremental echelon form over a field for sparse rows; used for span
// dimensions. Column indices are arbitrary but fixed.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field f) : field_(f) {}

  using Row = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by column

  // Reduces the row against the current echelon; returns true (and absorbs
  // it) when it enlarges the span.
  bool add_row(Row row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  Field field_;
  std::map<std::size_t, Row> pivots_;  // leading column -> normalized row
};

// Dimension of the linear span of homogeneous degree-`degree` forms inside
// the full graded piece. Zero polynomials are tolerated; anything else that
// is not homogeneous of the given degree is rejected.
std::size_t span_dimension(const std::vector<Polynomial>& polys, std::uint32_t degree);

struct RrefResult {
  std::vector<std::vector<Scalar>> rows;  // nonzero rows, pivot coefficient 1
  std::vector<std::size_t> pivot_cols;    // one per row, strictly increasing
};

// Reduced row echelon form over the field.
RrefResult rref(const ScalarMatrix& m);

}  // namespace tid
