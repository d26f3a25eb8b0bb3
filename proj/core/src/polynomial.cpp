#include "tensorideals/polynomial.hpp"

#include <algorithm>

#include "tensorideals/errors.hpp"

namespace tid {

Polynomial Polynomial::constant(RegistryPtr reg, Scalar c) {
  Polynomial p(std::move(reg));
  if (!(c.field() == p.reg_->field())) throw FieldMismatch("constant vs registry field");
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RegistryPtr reg, VarId v) {
  if (v >= reg->var_count()) throw IndexOutOfRange("variable id " + std::to_string(v));
  Scalar one = Scalar::one(reg->field());
  Polynomial p(std::move(reg));
  p.terms_.push_back({Monomial::variable(v), std::move(one)});
  return p;
}

Polynomial Polynomial::term(RegistryPtr reg, Monomial m, Scalar c) {
  Polynomial p(std::move(reg));
  if (!(c.field() == p.reg_->field())) throw FieldMismatch("coefficient vs registry field");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RegistryPtr reg, std::vector<Term> terms) {
  const MonomialOrder& ord = reg->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return Monomial::cmp(a.mono, b.mono, ord) > 0;
  });
  Polynomial p(std::move(reg));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.front();
}

std::optional<std::uint32_t> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::optional<std::uint32_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return std::nullopt;
  }
  return d;
}

bool Polynomial::is_homogeneous_of(std::uint32_t d) const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

void Polynomial::validate_compatible(const Polynomial& o) const {
  if (!same_registry(reg_, o.reg_)) throw RegistryMismatch("polynomial operands");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  validate_compatible(o);
  const MonomialOrder& ord = reg_->order();
  Polynomial r(reg_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == o.terms_.size()) {
      c = 1;
    } else {
      c = Monomial::cmp(terms_[i].mono, o.terms_[j].mono, ord);
    }
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(reg_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(reg_);
  Polynomial r(reg_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(reg_);
  Polynomial r(reg_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  validate_compatible(o);
  const MonomialOrder& ord = reg_->order();
  auto cmp = [&ord](const Monomial& a, const Monomial& b) {
    return Monomial::cmp(a, b, ord) > 0;  // descending
  };
  std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
  for (const auto& ta : terms_) {
    for (const auto& tb : o.terms_) {
      Monomial m = ta.mono * tb.mono;
      Scalar c = ta.coeff * tb.coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  Polynomial r(reg_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = Polynomial::constant(reg_, Scalar::one(reg_->field()));
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_registry(reg_, o.reg_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial Polynomial::canonical_sign() const {
  if (terms_.empty()) return *this;
  if (terms_.front().coeff.prefers_negation()) return -*this;
  return *this;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

std::optional<VarId> Polynomial::as_plain_variable() const {
  if (terms_.size() != 1) return std::nullopt;
  const Term& t = terms_.front();
  if (!t.coeff.is_one()) return std::nullopt;
  if (t.mono.degree() != 1) return std::nullopt;
  return t.mono.exponents().front().first;
}

Polynomial Polynomial::substitute(const RegistryPtr& target,
                                  const std::map<VarId, Polynomial>& images) const {
  for (const auto& [v, img] : images) {
    if (!same_registry(img.registry(), target)) {
      throw RegistryMismatch("substitution image for " + reg_->name(v));
    }
  }
  const Field& f = target->field();
  Polynomial acc(target);
  // Power cache per substituted variable.
  std::map<VarId, std::vector<Polynomial>> pows;
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, Scalar::one(f));
    for (const auto& [v, e] : t.mono.exponents()) {
      auto img = images.find(v);
      if (img == images.end()) throw UnassignedVariable(reg_->name(v));
      auto& cache = pows[v];
      if (cache.empty()) cache.push_back(img->second);  // cache[0] = image^1
      while (cache.size() < e) cache.push_back(cache.back() * img->second);
      prod = prod * cache[e - 1];
    }
    if (f.is_rationals()) {
      acc = acc + prod.scaled(t.coeff);
    } else if (t.coeff.field().is_rationals()) {
      // Rational coefficient pushed into a prime-field ring: reduce mod p.
      const mpq_class& q = t.coeff.rational();
      mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(f.modulus()));
      mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(f.modulus()));
      if (num < 0) num += static_cast<unsigned long>(f.modulus());
      Scalar c = Scalar::of_residue(num.get_ui(), f) / Scalar::of_residue(den.get_ui(), f);
      acc = acc + prod.scaled(c);
    } else {
      acc = acc + prod.scaled(t.coeff);
    }
  }
  return acc;
}

Polynomial Polynomial::transport(const RegistryPtr& target) const {
  if (same_registry(reg_, target)) {
    Polynomial copy = *this;
    return copy;
  }
  if (!(reg_->field() == target->field())) throw FieldMismatch("transport across fields");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::pair<VarId, std::uint32_t>> exps;
    exps.reserve(t.mono.exponents().size());
    for (const auto& [v, e] : t.mono.exponents()) {
      exps.emplace_back(target->id(reg_->name(v)), e);
    }
    terms.push_back({Monomial::from_pairs(std::move(exps)), t.coeff});
  }
  return from_terms(target, std::move(terms));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != reg_->var_count()) {
    throw IndexOutOfRange("evaluation point arity " + std::to_string(point.size()));
  }
  const Field& f = reg_->field();
  Scalar acc = Scalar::zero(f);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (const auto& [var, e] : t.mono.exponents()) {
      Scalar p = point[var];
      for (std::uint32_t i = 0; i < e; ++i) v = v * p;
    }
    acc = acc + v;
  }
  return acc;
}

std::vector<VarId> Polynomial::support() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.mono.exponents()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::depends_on(VarId v) const {
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) > 0) return true;
  }
  return false;
}

std::optional<std::vector<std::uint32_t>> Polynomial::multidegree(
    const std::vector<std::uint32_t>& group_of, std::uint32_t ngroups) const {
  if (terms_.empty()) return std::nullopt;
  std::vector<std::uint32_t> deg(ngroups, 0);
  bool first = true;
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> d(ngroups, 0);
    for (const auto& [v, e] : t.mono.exponents()) d[group_of.at(v)] += e;
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return std::nullopt;
    }
  }
  return deg;
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder& ord = a.reg_ ? a.reg_->order() : MonomialOrder::degrevlex();
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = Monomial::cmp(a.terms_[i].mono, b.terms_[i].mono, ord);
    if (c != 0) return c;
    c = Scalar::cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (c != 0) return c;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool neg = c.prefers_negation();
    if (neg) c = -c;
    if (!first) out += ' ';
    out += neg ? '-' : '+';
    out += c.coeff_string();
    if (!t.mono.is_one()) {
      out += "\xc2\xb7";  // '·'
      bool firstv = true;
      for (const auto& [v, e] : t.mono.exponents()) {
        if (!firstv) out += '*';
        out += reg_->name(v);
        if (e >= 2) out += '^' + std::to_string(e);
        firstv = false;
      }
    }
    first = false;
  }
  return out;
}

}  // namespace tid
