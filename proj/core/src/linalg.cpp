#include "tensorideals/linalg.hpp"

#include <algorithm>

#include "tensorideals/errors.hpp"

namespace tid {

ScalarMatrix::ScalarMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

void ScalarMatrix::set(std::size_t r, std::size_t c, Scalar v) {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix entry");
  if (!(v.field() == field_)) throw FieldMismatch("matrix entry");
  a_[r * cols_ + c] = std::move(v);
}

namespace {

std::size_t rank_bareiss_mpz(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) { return (x * y) % p; };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t acc = 1;
    b %= p;
    while (e) {
      if (e & 1) acc = mulmod(acc, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return acc;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::uint64_t inv = powmod(a[r][c], p - 2);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] + p - mulmod(f, a[r][j])) % p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t exact_rank(const ScalarMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_rationals()) {
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      mpz_class lcm = 1;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).rational().get_den().get_mpz_t());
      }
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const mpq_class& q = m.at(r, c).rational();
        a[r][c] = q.get_num() * (lcm / q.get_den());
      }
    }
    return rank_bareiss_mpz(std::move(a));
  }
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).residue();
  }
  return rank_mod_p(std::move(a), m.field().modulus());
}

std::size_t exact_rank(const FormMatrix& m) {
  ScalarMatrix s(m.registry()->field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Polynomial& p = m.at(r, c);
      if (p.is_zero()) continue;
      auto d = p.total_degree();
      if (d && *d > 0) throw NonConstantEntry();
      s.set(r, c, p.terms().front().coeff);
    }
  }
  return exact_rank(s);
}

KernelBasis left_kernel(const ScalarMatrix& m) {
  const Field f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Row reduce [M | I]; rows whose M-part vanishes carry kernel vectors.
  std::vector<std::vector<Scalar>> a(rows), id(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    a[r].reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) a[r].push_back(m.at(r, c));
    id[r].assign(rows, Scalar::zero(f));
    id[r][r] = Scalar::one(f);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(id[pivot], id[rank]);
    Scalar inv = a[rank][c].inverse();
    for (auto& x : a[rank]) x = x * inv;
    for (auto& x : id[rank]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c].is_zero()) continue;
      Scalar fct = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - fct * a[rank][j];
      for (std::size_t j = 0; j < rows; ++j) id[i][j] = id[i][j] - fct * id[rank][j];
    }
    ++rank;
  }
  KernelBasis out;
  out.dim = rows - rank;
  std::vector<std::vector<Scalar>> raw;
  for (std::size_t r = rank; r < rows; ++r) raw.push_back(id[r]);
  // Echelonize the kernel rows for a canonical basis.
  std::size_t krank = 0;
  for (std::size_t c = 0; c < rows && krank < raw.size(); ++c) {
    std::size_t pivot = krank;
    while (pivot < raw.size() && raw[pivot][c].is_zero()) ++pivot;
    if (pivot == raw.size()) continue;
    std::swap(raw[pivot], raw[krank]);
    Scalar inv = raw[krank][c].inverse();
    for (auto& x : raw[krank]) x = x * inv;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (i == krank || raw[i][c].is_zero()) continue;
      Scalar fct = raw[i][c];
      for (std::size_t j = 0; j < rows; ++j) raw[i][j] = raw[i][j] - fct * raw[krank][j];
    }
    ++krank;
  }
  out.rows = std::move(raw);
  return out;
}

RrefResult rref(const ScalarMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Scalar>> a(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    a[r].reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) a[r].push_back(m.at(r, c));
  }
  RrefResult out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    Scalar inv = a[rank][c].inverse();
    for (auto& x : a[rank]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[rank][j];
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  out.rows.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rank));
  return out;
}

bool SparseEchelon::add_row(Row row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      // Normalize to pivot coefficient 1 and keep.
      Scalar inv = row.front().second.inverse();
      for (auto& [c, v] : row) v = v * inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    // row -= row[lead] * pivot
    const Scalar f = row.front().second;
    const Row& piv = it->second;
    Row merged;
    merged.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        merged.push_back(row[i++]);
      } else if (i == row.size() || piv[j].first < row[i].first) {
        merged.emplace_back(piv[j].first, -(f * piv[j].second));
        ++j;
      } else {
        Scalar v = row[i].second - f * piv[j].second;
        if (!v.is_zero()) merged.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row = std::move(merged);
  }
  return false;
}

std::size_t span_dimension(const std::vector<Polynomial>& polys, std::uint32_t degree) {
  RegistryPtr reg;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!reg) reg = p.registry();
    require_same_registry(reg, p.registry());
    if (!p.is_homogeneous_of(degree)) {
      throw InhomogeneousInput("expected homogeneous of degree " + std::to_string(degree));
    }
  }
  if (!reg) return 0;

  // Column ids: support monomials in descending registry order.
  const MonomialOrder& ord = reg->order();
  auto cmp = [&ord](const Monomial& a, const Monomial& b) {
    return Monomial::cmp(a, b, ord) > 0;
  };
  std::map<Monomial, std::size_t, decltype(cmp)> columns(cmp);
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) columns.emplace(t.mono, 0);
  }
  std::size_t next = 0;
  for (auto& [m, idx] : columns) idx = next++;

  SparseEchelon ech(reg->field());
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    SparseEchelon::Row row;
    row.reserve(p.terms().size());
    for (const auto& t : p.terms()) row.emplace_back(columns.at(t.mono), t.coeff);
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    ech.add_row(std::move(row));
  }
  return ech.rank();
}

}  // namespace tid
