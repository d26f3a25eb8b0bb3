#include "tensorideals/weak_generic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "tensorideals/errors.hpp"
#include "tensorideals/monomial.hpp"

namespace tid {

std::string to_string(StructureClass c) {
  switch (c) {
    case StructureClass::NoTwoMinors:
      return "no-two-minors";
    case StructureClass::Generic:
      return "generic";
    case StructureClass::SymmetricPattern:
      return "symmetric";
    case StructureClass::Catalecticant:
      return "catalecticant";
    case StructureClass::WeakGeneric:
      return "weak-generic";
    case StructureClass::Unrecognized:
      return "unrecognized";
  }
  return "?";
}

namespace {

// Entry variables of a variable-entry hypermatrix, linear order; nullopt when
// some entry is not a single variable with coefficient one.
std::optional<std::vector<VarId>> entry_variables(const Hypermatrix& a) {
  std::vector<VarId> vars;
  vars.reserve(a.entry_count());
  for (std::size_t i = 0; i < a.entry_count(); ++i) {
    auto v = a.at_linear(i).as_plain_variable();
    if (!v) return std::nullopt;
    vars.push_back(*v);
  }
  return vars;
}

bool all_distinct(const std::vector<VarId>& vars) {
  std::set<VarId> seen(vars.begin(), vars.end());
  return seen.size() == vars.size();
}

bool swap_invariant(const Hypermatrix& a, const std::vector<VarId>& vars, std::size_t ax1,
                    std::size_t ax2) {
  const std::size_t n = a.entry_count();
  for (std::size_t lin = 0; lin < n; ++lin) {
    std::vector<std::size_t> idx = a.multi_index(lin);
    std::swap(idx[ax1], idx[ax2]);
    if (vars[lin] != vars[a.linear_index(idx)]) return false;
  }
  return true;
}

// Detects the generic (n, d)-symmetric pattern: partition axes into groups
// of equal extent closed under entry-preserving swaps; entries must be equal
// exactly on the orbits of within-group permutations and distinct otherwise.
bool symmetric_pattern(const Hypermatrix& a, const std::vector<VarId>& vars) {
  const std::size_t t = a.order();
  if (t < 2) return false;
  std::vector<std::size_t> group(t);
  for (std::size_t i = 0; i < t; ++i) group[i] = i;
  auto root = [&](std::size_t x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (a.shape()[i] != a.shape()[j]) continue;
      if (swap_invariant(a, vars, i, j)) group[root(i)] = root(j);
    }
  }
  bool nontrivial = false;
  for (std::size_t i = 0; i < t && !nontrivial; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (root(i) == root(j)) nontrivial = true;
    }
  }
  if (!nontrivial) return false;

  // Orbit key: per group, the sorted tuple of that group's index entries.
  std::map<std::vector<std::vector<std::size_t>>, VarId> orbit_to_var;
  std::map<VarId, std::vector<std::vector<std::size_t>>> var_to_orbit;
  const std::size_t n = a.entry_count();
  for (std::size_t lin = 0; lin < n; ++lin) {
    std::vector<std::size_t> idx = a.multi_index(lin);
    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t ax = 0; ax < t; ++ax) buckets[root(ax)].push_back(idx[ax]);
    std::vector<std::vector<std::size_t>> key;
    for (auto& [r, vals] : buckets) {
      std::sort(vals.begin(), vals.end());
      key.push_back(vals);
    }
    auto [it, inserted] = orbit_to_var.emplace(key, vars[lin]);
    if (!inserted && it->second != vars[lin]) return false;
    auto [it2, inserted2] = var_to_orbit.emplace(vars[lin], key);
    if (!inserted2 && it2->second != key) return false;
  }
  return true;
}

// Catalecticant pattern on an R x C variable matrix: columns indexed by
// degree-m exponent vectors beta over R variables (decreasing lex), entry
// (i, c) carrying the variable of beta(c) + e_i, one variable per degree
// (m+1) monomial.
bool catalecticant_pattern_oriented(std::size_t rows, std::size_t cols,
                                    const std::vector<VarId>& vars) {
  if (rows < 2) return false;
  const std::size_t nv = rows;  // exponent vectors over `rows` variables
  std::uint32_t m = 0;
  std::vector<std::vector<std::uint32_t>> betas;
  while (true) {
    betas = exponents_of_degree(nv, m);
    if (betas.size() == cols) break;
    if (betas.size() > cols) return false;
    ++m;
  }
  std::map<std::vector<std::uint32_t>, VarId> gamma_to_var;
  std::map<VarId, std::vector<std::uint32_t>> var_to_gamma;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<std::uint32_t> gamma = betas[c];
      gamma[i] += 1;
      VarId v = vars[i * cols + c];
      auto [it, inserted] = gamma_to_var.emplace(gamma, v);
      if (!inserted && it->second != v) return false;
      auto [it2, inserted2] = var_to_gamma.emplace(v, gamma);
      if (!inserted2 && it2->second != gamma) return false;
    }
  }
  return true;
}

bool catalecticant_pattern(const Hypermatrix& a, const std::vector<VarId>& vars) {
  if (a.order() != 2) return false;
  const std::size_t rows = a.shape()[0];
  const std::size_t cols = a.shape()[1];
  if (catalecticant_pattern_oriented(rows, cols, vars)) return true;
  // Transposed orientation.
  std::vector<VarId> tv(vars.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) tv[c * rows + r] = vars[r * cols + c];
  }
  return catalecticant_pattern_oriented(cols, rows, tv);
}

bool has_two_minors(const Hypermatrix& a) {
  std::size_t big_axes = 0;
  for (std::size_t n : a.shape()) {
    if (n >= 2) ++big_axes;
  }
  return big_axes >= 2;
}

constexpr int kMaxDepth = 4;

WeakGenericReport classify_impl(const Hypermatrix& a, int depth);

StructureClass classify_structure_impl(const Hypermatrix& a, int depth) {
  auto vars = entry_variables(a);
  if (!vars) return StructureClass::Unrecognized;
  if (!has_two_minors(a)) return StructureClass::NoTwoMinors;
  if (all_distinct(*vars)) return StructureClass::Generic;
  if (symmetric_pattern(a, *vars)) return StructureClass::SymmetricPattern;
  if (catalecticant_pattern(a, *vars)) return StructureClass::Catalecticant;
  // The recursive fallback only applies in dimension >= 3, where the
  // sections are matrices that get classified for real. For a 2-D input the
  // sections are vectors with zero minor ideals and the recursion would
  // accept any variable matrix with a unique entry.
  if (a.order() >= 3 && depth < kMaxDepth) {
    WeakGenericReport sub = classify_impl(a, depth + 1);
    if (sub.all()) return StructureClass::WeakGeneric;
  }
  return StructureClass::Unrecognized;
}

WeakGenericReport classify_impl(const Hypermatrix& a, int depth) {
  auto vars = entry_variables(a);
  if (!vars) throw NotVariableEntries();

  WeakGenericReport rep;
  rep.variable_entries = true;

  std::map<VarId, std::size_t> occurrences;
  for (VarId v : *vars) ++occurrences[v];
  rep.unique_entry_exists = false;
  for (const auto& [v, count] : occurrences) {
    if (count == 1) {
      rep.unique_entry_exists = true;
      break;
    }
  }

  rep.sections_recognized = true;
  for (std::size_t axis = 1; axis <= a.order(); ++axis) {
    for (std::size_t value = 1; value <= a.shape()[axis - 1]; ++value) {
      StructureClass cls = classify_structure_impl(a.section(axis, value), depth);
      rep.sections.push_back({axis, value, cls});
      if (cls == StructureClass::Unrecognized) rep.sections_recognized = false;
    }
  }
  return rep;
}

}  // namespace

StructureClass classify_structure(const Hypermatrix& a, int depth) {
  return classify_structure_impl(a, depth);
}

WeakGenericReport classify_weak_generic(const Hypermatrix& a) { return classify_impl(a, 0); }

}  // namespace tid
