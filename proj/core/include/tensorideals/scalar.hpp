#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "tensorideals/errors.hpp"

namespace tid {

// Coefficient field: the rationals, or Z/p for a prime p with
// 2^20 < p < 2^31 (products then fit in 64 bits and random-evaluation
// collisions are negligible).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  // Fixed table used by verification drivers: the default prime and the
  // fallbacks tried after a prime-field failure.
  static constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1
  static constexpr std::uint64_t kFallbackPrimes[2] = {2147483629ull, 2147483587ull};

  bool is_rationals() const { return modulus_ == 0; }
  bool is_prime_field() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }

  bool operator==(const Field&) const = default;

  std::string to_string() const;

 private:
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_;
};

bool is_prime_u64(std::uint64_t n);

// Immutable exact field element. Rational values are kept in lowest terms
// with positive denominator (GMP maintains that canonical form); prime-field
// values are residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), rat_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(long n, const Field& f);
  static Scalar of_rational(long num, long den);       // rationals only
  static Scalar of_mpq(const mpq_class& q);            // rationals only
  static Scalar of_residue(std::uint64_t r, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  const mpq_class& rational() const;           // requires rationals
  std::uint64_t residue() const { return res_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;     // throws DivisionByZero
  Scalar operator-() const;
  Scalar inverse() const;                      // throws DivisionByZero
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // True when the value is a negative rational, or a prime-field residue in
  // (p/2, p); used for sign canonicalization of generators.
  bool prefers_negation() const;

  // Deterministic total order (field-wise); used only for canonical sorting.
  static int cmp(const Scalar& a, const Scalar& b);

  // "p/q" or "n" over the rationals, "n mod p" over a prime field.
  std::string to_string() const;
  // Coefficient rendering inside polynomial text: no "mod p" suffix.
  std::string coeff_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;
  std::uint64_t res_ = 0;
};

}  // namespace tid
