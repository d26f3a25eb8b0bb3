#include "tensorideals/monomial.hpp"

#include <algorithm>

#include "tensorideals/errors.hpp"

namespace tid {

Monomial Monomial::variable(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) {
    m.exps_.emplace_back(v, e);
    m.degree_ = e;
  }
  return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<VarId, std::uint32_t>> exps) {
  std::sort(exps.begin(), exps.end());
  Monomial m;
  for (const auto& [v, e] : exps) {
    if (e == 0) continue;
    if (!m.exps_.empty() && m.exps_.back().first == v) {
      m.exps_.back().second += e;
    } else {
      m.exps_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                             [](const auto& p, VarId x) { return p.first < x; });
  if (it != exps_.end() && it->first == v) return it->second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.reserve(exps_.size() + o.exps_.size());
  std::size_t i = 0, j = 0;
  while (i < exps_.size() || j < o.exps_.size()) {
    if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
      r.exps_.push_back(exps_[i++]);
    } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
      r.exps_.push_back(o.exps_[j++]);
    } else {
      r.exps_.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : exps_) {
    while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
    if (j == o.exps_.size() || o.exps_[j].first != v || o.exps_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : o.exps_) {
    std::uint32_t sub = 0;
    while (i < exps_.size() && exps_[i].first < v) ++i;
    if (i < exps_.size() && exps_[i].first == v) sub = exps_[i].second;
    if (sub > e) throw Error("monomial quotient is not a monomial");
    if (e > sub) {
      r.exps_.emplace_back(v, e - sub);
      r.degree_ += e - sub;
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.exps_.size() || j < b.exps_.size()) {
    if (j == b.exps_.size() || (i < a.exps_.size() && a.exps_[i].first < b.exps_[j].first)) {
      r.exps_.push_back(a.exps_[i++]);
    } else if (i == a.exps_.size() || b.exps_[j].first < a.exps_[i].first) {
      r.exps_.push_back(b.exps_[j++]);
    } else {
      r.exps_.emplace_back(a.exps_[i].first, std::max(a.exps_[i].second, b.exps_[j].second));
      ++i;
      ++j;
    }
  }
  for (const auto& [v, e] : r.exps_) r.degree_ += e;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  std::size_t i = 0, j = 0;
  while (i < exps_.size() && j < o.exps_.size()) {
    if (exps_[i].first == o.exps_[j].first) return false;
    if (exps_[i].first < o.exps_[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

namespace {

// First nonzero entry of exp(a) - exp(b) scanning variables upward.
int lex_scan(const Monomial& a, const Monomial& b, VarId from, VarId to_excl) {
  const auto& ae = a.exponents();
  const auto& be = b.exponents();
  std::size_t i = 0, j = 0;
  while (i < ae.size() && ae[i].first < from) ++i;
  while (j < be.size() && be[j].first < from) ++j;
  while (true) {
    VarId va = i < ae.size() ? ae[i].first : to_excl;
    VarId vb = j < be.size() ? be[j].first : to_excl;
    VarId v = std::min(va, vb);
    if (v >= to_excl) return 0;
    std::uint32_t ea = (va == v) ? ae[i].second : 0;
    std::uint32_t eb = (vb == v) ? be[j].second : 0;
    if (ea != eb) return ea > eb ? 1 : -1;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
}

// Last nonzero entry of exp(a) - exp(b) scanning variables downward, over
// variables in [from, ...). Returns its sign.
int revlex_last_diff(const Monomial& a, const Monomial& b, VarId from) {
  const auto& ae = a.exponents();
  const auto& be = b.exponents();
  auto ia = static_cast<std::ptrdiff_t>(ae.size()) - 1;
  auto ib = static_cast<std::ptrdiff_t>(be.size()) - 1;
  while (true) {
    while (ia >= 0 && ae[ia].first < from) ia = -1;
    while (ib >= 0 && be[ib].first < from) ib = -1;
    if (ia < 0 && ib < 0) return 0;
    VarId va = ia >= 0 ? ae[ia].first : 0;
    VarId vb = ib >= 0 ? be[ib].first : 0;
    if (ia >= 0 && (ib < 0 || va > vb)) {
      return 1;  // a has a nonzero entry past b's support
    }
    if (ib >= 0 && (ia < 0 || vb > va)) {
      return -1;
    }
    if (ae[ia].second != be[ib].second) {
      return ae[ia].second > be[ib].second ? 1 : -1;
    }
    --ia;
    --ib;
  }
}

std::uint32_t degree_from(const Monomial& m, VarId from) {
  std::uint32_t d = 0;
  for (const auto& [v, e] : m.exponents()) {
    if (v >= from) d += e;
  }
  return d;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b, VarId from) {
  std::uint32_t da = from == 0 ? a.degree() : degree_from(a, from);
  std::uint32_t db = from == 0 ? b.degree() : degree_from(b, from);
  if (da != db) return da > db ? 1 : -1;
  // Equal degree: a > b iff the last nonzero of exp(a)-exp(b) is negative.
  return -revlex_last_diff(a, b, from);
}

}  // namespace

int Monomial::cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  switch (order.kind) {
    case OrderKind::DegRevLex:
      return degrevlex_cmp(a, b, 0);
    case OrderKind::Lex:
      return lex_scan(a, b, 0, ~VarId{0});
    case OrderKind::Block: {
      int c = lex_scan(a, b, 0, order.block_split);
      if (c != 0) return c;
      return degrevlex_cmp(a, b, order.block_split);
    }
  }
  return 0;
}

std::vector<std::vector<std::uint32_t>> exponents_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<std::vector<std::uint32_t>> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  // Recursive descent emits decreasing lexicographic order.
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t rest) -> void {
    if (pos + 1 == nvars) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = rest; e + 1 > 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rest - e);
      if (e == 0) break;
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace tid
