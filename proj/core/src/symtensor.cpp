#include "tensorideals/symtensor.hpp"

#include <algorithm>

#include "tensorideals/errors.hpp"

namespace tid {

void SymProfile::validate() const {
  if (n.empty() || n.size() != d.size()) {
    throw InvalidProfile("profile needs matching nonempty n and d lists");
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < 1 || d[j] < 1) throw InvalidProfile("n_j and d_j must be >= 1");
  }
}

std::vector<std::size_t> SymProfile::full_shape() const {
  std::vector<std::size_t> shape;
  for (std::size_t j = 0; j < n.size(); ++j) {
    for (std::size_t r = 0; r < d[j]; ++r) shape.push_back(n[j]);
  }
  return shape;
}

std::size_t SymProfile::block_of_axis(std::size_t axis) const {
  std::size_t a = axis;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (a <= d[j]) return j + 1;
    a -= d[j];
  }
  throw AxisOutOfRange("axis " + std::to_string(axis));
}

std::string CanonicalIndex::label() const {
  std::string s = "x[";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += ';';
    s += '{';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(blocks[b][i]);
    }
    s += '}';
  }
  s += ']';
  return s;
}

CanonicalIndex canonicalize(const SymProfile& profile, const std::vector<std::size_t>& raw) {
  profile.validate();
  std::size_t arity = 0;
  for (std::size_t dj : profile.d) arity += dj;
  if (raw.size() != arity) throw IndexOutOfRange("raw index arity");
  CanonicalIndex out;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < profile.factor_count(); ++j) {
    std::vector<std::size_t> block(raw.begin() + pos, raw.begin() + pos + profile.d[j]);
    for (std::size_t v : block) {
      if (v < 1 || v > profile.n[j]) throw IndexOutOfRange("index entry out of range");
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
    pos += profile.d[j];
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::uint64_t count_variables(const SymProfile& profile) {
  profile.validate();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < profile.factor_count(); ++j) {
    total *= binomial(profile.n[j] + profile.d[j] - 1, profile.d[j]);
  }
  return total;
}

namespace {

// Non-decreasing tuples of length d over [1, n], lexicographic order.
std::vector<std::vector<std::size_t>> sorted_tuples(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(d, 1);
  while (true) {
    out.push_back(cur);
    std::size_t i = d;
    while (i-- > 0) {
      if (cur[i] < n) {
        ++cur[i];
        for (std::size_t j = i + 1; j < d; ++j) cur[j] = cur[i];
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace

std::vector<CanonicalIndex> enumerate_canonical_indices(const SymProfile& profile) {
  profile.validate();
  std::vector<std::vector<std::vector<std::size_t>>> per_block;
  for (std::size_t j = 0; j < profile.factor_count(); ++j) {
    per_block.push_back(sorted_tuples(profile.n[j], profile.d[j]));
  }
  std::vector<CanonicalIndex> out;
  std::vector<std::size_t> pick(profile.factor_count(), 0);
  while (true) {
    CanonicalIndex ci;
    for (std::size_t j = 0; j < pick.size(); ++j) ci.blocks.push_back(per_block[j][pick[j]]);
    out.push_back(std::move(ci));
    std::size_t j = pick.size();
    bool done = true;
    while (j-- > 0) {
      if (++pick[j] < per_block[j].size()) {
        done = false;
        break;
      }
      pick[j] = 0;
      if (j == 0) break;
    }
    if (done) break;
  }
  return out;
}

Hypermatrix generic_sym_hypermatrix(const SymProfile& profile, Field field) {
  profile.validate();
  auto canonical = enumerate_canonical_indices(profile);
  std::vector<std::string> names;
  names.reserve(canonical.size());
  for (const auto& ci : canonical) names.push_back(ci.label());
  RegistryPtr reg = VarRegistry::make(std::move(names), MonomialOrder::degrevlex(), field);

  Hypermatrix h(reg, profile.full_shape());
  const std::size_t count = h.entry_count();
  for (std::size_t lin = 0; lin < count; ++lin) {
    CanonicalIndex ci = canonicalize(profile, h.multi_index(lin));
    h.set_linear(lin, Polynomial::variable(reg, reg->id(ci.label())));
  }
  return h;
}

}  // namespace tid
