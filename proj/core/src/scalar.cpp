#include "tensorideals/scalar.hpp"

#include <cassert>

namespace tid {

namespace {

// Debug check of the rational canonical form: lowest terms, positive
// denominator. mpq_class arithmetic maintains it; this guards against raw
// constructions slipping through.
inline void assert_canonical(const mpq_class& q) {
#ifndef NDEBUG
  assert(mpz_sgn(q.get_den().get_mpz_t()) > 0);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  assert(g == 1);
#else
  (void)q;
#endif
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // a, b < p < 2^31, so the product fits in 64 bits.
  return (a * b) % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin for n < 3.3e24 with this base set; we only
  // ever see n < 2^31.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p <= (1ull << 20) || p >= (1ull << 31)) {
    throw FieldMismatch("prime modulus must satisfy 2^20 < p < 2^31, got " + std::to_string(p));
  }
  if (!is_prime_u64(p)) {
    throw FieldMismatch("modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? "rationals" : "prime:" + std::to_string(modulus_);
}

Scalar Scalar::zero(const Field& f) { return of_int(0, f); }
Scalar Scalar::one(const Field& f) { return of_int(1, f); }

Scalar Scalar::of_int(long n, const Field& f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rationals()) {
    s.rat_ = mpq_class(n);
  } else {
    const std::int64_t p = static_cast<std::int64_t>(f.modulus());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
    s.rat_ = 0;
  }
  return s;
}

Scalar Scalar::of_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Scalar s;
  s.field_ = Field::rationals();
  s.rat_ = mpq_class(num, den);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::of_mpq(const mpq_class& q) {
  Scalar s;
  s.field_ = Field::rationals();
  s.rat_ = q;
  s.rat_.canonicalize();
  assert_canonical(s.rat_);
  return s;
}

Scalar Scalar::of_residue(std::uint64_t r, const Field& f) {
  if (f.is_rationals()) throw FieldMismatch("residue constructor needs a prime field");
  Scalar s;
  s.field_ = f;
  s.res_ = r % f.modulus();
  s.rat_ = 0;
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw FieldMismatch("not a rational value");
  return rat_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch(field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  if (field_.is_rationals()) {
    r.rat_ = rat_ + o.rat_;
    assert_canonical(r.rat_);
  } else {
    r.res_ = (res_ + o.res_) % field_.modulus();
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  if (field_.is_rationals()) {
    r.rat_ = rat_ - o.rat_;
  } else {
    r.res_ = (res_ + field_.modulus() - o.res_) % field_.modulus();
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  if (field_.is_rationals()) {
    r.rat_ = rat_ * o.rat_;
    assert_canonical(r.rat_);
  } else {
    r.res_ = mulmod(res_, o.res_, field_.modulus());
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rationals()) {
    r.rat_ = -rat_;
  } else if (res_ != 0) {
    r.res_ = field_.modulus() - res_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r = *this;
  if (field_.is_rationals()) {
    r.rat_ = 1 / rat_;
  } else {
    r.res_ = powmod(res_, field_.modulus() - 2, field_.modulus());
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::prefers_negation() const {
  if (field_.is_rationals()) return rat_ < 0;
  return res_ > field_.modulus() / 2;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rationals()) return ::cmp(a.rat_, b.rat_);
  if (a.res_ == b.res_) return 0;
  return a.res_ < b.res_ ? -1 : 1;
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(res_) + " mod " + std::to_string(field_.modulus());
}

std::string Scalar::coeff_string() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(res_);
}

}  // namespace tid
