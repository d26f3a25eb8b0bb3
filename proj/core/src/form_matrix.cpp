#include "tensorideals/form_matrix.hpp"

#include <map>

#include "tensorideals/errors.hpp"

namespace tid {

FormMatrix::FormMatrix(RegistryPtr reg, std::size_t rows, std::size_t cols)
    : reg_(std::move(reg)), rows_(rows), cols_(cols) {
  entries_.assign(rows_ * cols_, Polynomial::zero(reg_));
}

const Polynomial& FormMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix entry");
  return entries_[r * cols_ + c];
}

void FormMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix entry");
  if (!same_registry(p.registry(), reg_)) throw RegistryMismatch("matrix entry");
  entries_[r * cols_ + c] = std::move(p);
}

FormMatrix FormMatrix::transpose() const {
  FormMatrix t(reg_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

bool FormMatrix::is_constant() const {
  for (const auto& p : entries_) {
    auto d = p.total_degree();
    if (d && *d > 0) return false;
  }
  return true;
}

Polynomial FormMatrix::minor_det(const std::vector<std::size_t>& row_sel,
                                 const std::vector<std::size_t>& col_sel) const {
  if (row_sel.size() != col_sel.size()) {
    throw NotSquareSelection(std::to_string(row_sel.size()) + " rows vs " +
                             std::to_string(col_sel.size()) + " cols");
  }
  auto check = [](const std::vector<std::size_t>& sel, std::size_t bound) {
    for (std::size_t i = 0; i < sel.size(); ++i) {
      if (sel[i] >= bound) throw IndexOutOfRange("minor selection");
      if (i > 0 && sel[i] <= sel[i - 1]) throw IndexOutOfRange("minor selection not increasing");
    }
  };
  check(row_sel, rows_);
  check(col_sel, cols_);

  const std::size_t k = row_sel.size();
  if (k == 0) return Polynomial::constant(reg_, Scalar::one(reg_->field()));

  // Expansion along successive selected rows, memoized on the set of
  // remaining columns.
  std::map<std::uint64_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::size_t row_pos, std::uint64_t col_mask) -> Polynomial {
    if (row_pos == k) return Polynomial::constant(reg_, Scalar::one(reg_->field()));
    auto it = memo.find(col_mask);
    if (it != memo.end()) return it->second;
    Polynomial acc(reg_);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(col_mask & (1ull << c))) continue;
      const Polynomial& e = at(row_sel[row_pos], col_sel[c]);
      if (!e.is_zero()) {
        Polynomial sub = self(self, row_pos + 1, col_mask & ~(1ull << c));
        Polynomial term = e * sub;
        acc = (sign > 0) ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(col_mask, acc);
    return acc;
  };
  return rec(rec, 0, (k >= 64) ? ~0ull : ((1ull << k) - 1));
}

Polynomial FormMatrix::det() const {
  if (rows_ != cols_) throw NotSquareSelection("determinant of non-square matrix");
  std::vector<std::size_t> all(rows_);
  for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
  return minor_det(all, all);
}

std::vector<Polynomial> FormMatrix::all_minors(std::size_t d) const {
  std::vector<Polynomial> out;
  if (d == 0 || d > rows_ || d > cols_) return out;
  std::vector<std::size_t> rsel(d), csel(d);
  auto next_combo = [](std::vector<std::size_t>& sel, std::size_t n) -> bool {
    std::size_t k = sel.size();
    std::size_t i = k;
    while (i-- > 0) {
      if (sel[i] < n - k + i) {
        ++sel[i];
        for (std::size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < d; ++i) rsel[i] = i;
  do {
    for (std::size_t i = 0; i < d; ++i) csel[i] = i;
    do {
      out.push_back(minor_det(rsel, csel));
    } while (next_combo(csel, cols_));
  } while (next_combo(rsel, rows_));
  return out;
}

}  // namespace tid
