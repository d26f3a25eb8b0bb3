#pragma once

#include <cstddef>
#include <vector>

#include "tensorideals/polynomial.hpp"

namespace tid {

// Rectangular matrix of polynomials sharing one registry.
class FormMatrix {
 public:
  FormMatrix(RegistryPtr reg, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RegistryPtr& registry() const { return reg_; }

  const Polynomial& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Polynomial p);

  FormMatrix transpose() const;
  bool is_constant() const;  // every entry of degree <= 0

  // Determinant of the selected square submatrix, natural row/column order,
  // computed by Laplace expansion. Index sets must be strictly increasing.
  Polynomial minor_det(const std::vector<std::size_t>& row_sel,
                       const std::vector<std::size_t>& col_sel) const;
  Polynomial det() const;

  // All d x d minors (unsigned selections), in selection order.
  std::vector<Polynomial> all_minors(std::size_t d) const;

 private:
  RegistryPtr reg_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

}  // namespace tid
