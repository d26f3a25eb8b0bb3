#include "tensorideals/hypermatrix.hpp"

#include <algorithm>

#include <json.hpp>

#include "tensorideals/errors.hpp"

namespace tid {

Hypermatrix::Hypermatrix(RegistryPtr reg, std::vector<std::size_t> shape)
    : reg_(std::move(reg)), shape_(std::move(shape)) {
  std::size_t count = 1;
  for (std::size_t n : shape_) {
    if (n == 0) throw InvalidProfile("hypermatrix extent must be positive");
    count *= n;
  }
  entries_.assign(count, Polynomial::zero(reg_));
}

std::size_t Hypermatrix::linear_index(const std::vector<std::size_t>& index) const {
  if (index.size() != shape_.size()) throw IndexOutOfRange("hypermatrix index arity");
  std::size_t lin = 0;
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    if (index[a] < 1 || index[a] > shape_[a]) throw IndexOutOfRange("hypermatrix index");
    lin = lin * shape_[a] + (index[a] - 1);
  }
  return lin;
}

std::vector<std::size_t> Hypermatrix::multi_index(std::size_t linear) const {
  std::vector<std::size_t> idx(shape_.size());
  for (std::size_t a = shape_.size(); a-- > 0;) {
    idx[a] = linear % shape_[a] + 1;
    linear /= shape_[a];
  }
  return idx;
}

const Polynomial& Hypermatrix::at(const std::vector<std::size_t>& index) const {
  return entries_[linear_index(index)];
}

void Hypermatrix::set(const std::vector<std::size_t>& index, Polynomial p) {
  set_linear(linear_index(index), std::move(p));
}

void Hypermatrix::set_linear(std::size_t i, Polynomial p) {
  if (!same_registry(p.registry(), reg_)) throw RegistryMismatch("hypermatrix entry");
  entries_[i] = std::move(p);
}

Hypermatrix Hypermatrix::generic(const std::vector<std::size_t>& shape, Field field) {
  std::vector<std::string> names;
  std::size_t count = 1;
  for (std::size_t n : shape) count *= n;
  names.reserve(count);
  // Build labels in row-major order.
  std::vector<std::size_t> idx(shape.size(), 1);
  for (std::size_t lin = 0; lin < count; ++lin) {
    std::string label = "x[";
    for (std::size_t a = 0; a < shape.size(); ++a) {
      if (a) label += ',';
      label += std::to_string(idx[a]);
    }
    label += ']';
    names.push_back(std::move(label));
    for (std::size_t a = shape.size(); a-- > 0;) {
      if (++idx[a] <= shape[a]) break;
      idx[a] = 1;
    }
  }
  RegistryPtr reg = VarRegistry::make(std::move(names), MonomialOrder::degrevlex(), field);
  Hypermatrix h(reg, shape);
  for (std::size_t lin = 0; lin < count; ++lin) {
    h.entries_[lin] = Polynomial::variable(reg, static_cast<VarId>(lin));
  }
  return h;
}

Hypermatrix Hypermatrix::section(std::size_t axis, std::size_t value) const {
  if (axis < 1 || axis > shape_.size()) throw AxisOutOfRange("section axis " + std::to_string(axis));
  if (value < 1 || value > shape_[axis - 1]) {
    throw IndexOutOfRange("section value " + std::to_string(value));
  }
  std::vector<std::size_t> new_shape;
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    if (a != axis - 1) new_shape.push_back(shape_[a]);
  }
  Hypermatrix out(reg_, new_shape);
  const std::size_t n = out.entry_count();
  for (std::size_t lin = 0; lin < n; ++lin) {
    std::vector<std::size_t> sub = out.multi_index(lin);
    std::vector<std::size_t> full;
    full.reserve(shape_.size());
    std::size_t k = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) {
      full.push_back(a == axis - 1 ? value : sub[k++]);
    }
    out.entries_[lin] = at(full);
  }
  return out;
}

Hypermatrix::Flattening Hypermatrix::flatten(const std::vector<std::size_t>& j1) const {
  const std::size_t t = shape_.size();
  std::vector<bool> in_j1(t, false);
  for (std::size_t a : j1) {
    if (a < 1 || a > t) throw InvalidAxisSubset("axis " + std::to_string(a));
    if (in_j1[a - 1]) throw InvalidAxisSubset("repeated axis " + std::to_string(a));
    in_j1[a - 1] = true;
  }
  if (j1.empty() || j1.size() >= t) {
    throw InvalidAxisSubset("J1 must be a nonempty proper axis subset");
  }
  Flattening out{{}, {}, FormMatrix(reg_, 0, 0)};
  std::size_t rows = 1, cols = 1;
  for (std::size_t a = 0; a < t; ++a) {
    if (in_j1[a]) {
      out.j1.push_back(a + 1);
      rows *= shape_[a];
    } else {
      out.j2.push_back(a + 1);
      cols *= shape_[a];
    }
  }
  FormMatrix m(reg_, rows, cols);
  const std::size_t n = entries_.size();
  for (std::size_t lin = 0; lin < n; ++lin) {
    std::vector<std::size_t> idx = multi_index(lin);
    std::size_t r = 0, c = 0;
    for (std::size_t a : out.j1) r = r * shape_[a - 1] + (idx[a - 1] - 1);
    for (std::size_t a : out.j2) c = c * shape_[a - 1] + (idx[a - 1] - 1);
    m.set(r, c, entries_[lin]);
  }
  out.matrix = std::move(m);
  return out;
}

std::vector<Polynomial> canonical_poly_set(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    out.push_back(p.canonical_sign());
  }
  std::sort(out.begin(), out.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::cmp(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Polynomial> Hypermatrix::d_minors(std::size_t d) const {
  if (d == 0) throw InvalidProfile("minor size must be >= 1");
  std::vector<Polynomial> raw;
  const std::size_t t = shape_.size();
  if (t >= 2) {
    // Flattenings with axis 1 on the row side; the complementary flattening
    // is the transpose and contributes the same minor set.
    for (std::size_t bits = 0; bits < (1ull << (t - 1)); ++bits) {
      std::vector<std::size_t> j1{1};
      for (std::size_t a = 2; a <= t; ++a) {
        if (bits & (1ull << (a - 2))) j1.push_back(a);
      }
      if (j1.size() == t) continue;
      Flattening f = flatten(j1);
      auto minors = f.matrix.all_minors(d);
      raw.insert(raw.end(), minors.begin(), minors.end());
    }
  }
  return canonical_poly_set(std::move(raw));
}

IdealBasis Hypermatrix::ideal_of_minors(std::size_t d) const {
  return IdealBasis(reg_, d_minors(d));
}

std::string Hypermatrix::to_json() const {
  nlohmann::ordered_json j;
  j["shape"] = shape_;
  std::vector<std::string> entries;
  entries.reserve(entries_.size());
  for (const auto& p : entries_) entries.push_back(p.to_string());
  j["entries"] = entries;
  return j.dump();
}

}  // namespace tid
