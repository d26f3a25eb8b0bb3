#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tensorideals/registry.hpp"

namespace tid {

// Sparse exponent vector. Entries are (variable, exponent) pairs sorted by
// variable id with no zero exponents; the total degree is cached.
class Monomial {
 public:
  Monomial() = default;  // the unit monomial

  static Monomial one() { return Monomial(); }
  static Monomial variable(VarId v, std::uint32_t e = 1);
  static Monomial from_pairs(std::vector<std::pair<VarId, std::uint32_t>> exps);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const { return exps_.empty(); }
  const std::vector<std::pair<VarId, std::uint32_t>>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // *this | o
  Monomial quotient_of(const Monomial& o) const;  // o / *this, requires divides(o)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Three-way comparison under the given order: negative when a < b.
  static int cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

 private:
  std::vector<std::pair<VarId, std::uint32_t>> exps_;
  std::uint32_t degree_ = 0;
};

// Enumerates all exponent vectors of the given total degree over `nvars`
// variables in decreasing lexicographic order (w0^d first, w_{n}^d last).
std::vector<std::vector<std::uint32_t>> exponents_of_degree(std::size_t nvars, std::uint32_t degree);

}  // namespace tid
