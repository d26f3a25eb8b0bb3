#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tensorideals/hypermatrix.hpp"

namespace tid {

// Factor dimensions n_j and symmetrization degrees d_j of an
// (n, d)-symmetric hypermatrix.
struct SymProfile {
  std::vector<std::size_t> n;
  std::vector<std::size_t> d;

  std::size_t factor_count() const { return n.size(); }
  void validate() const;  // all n_j, d_j >= 1, sizes match
  // Axis layout of the full hypermatrix: n_1 repeated d_1 times, etc.
  std::vector<std::size_t> full_shape() const;
  // Factor block of a 1-based axis.
  std::size_t block_of_axis(std::size_t axis) const;
};

// Multi-block index with per-block sortedness; the coordinate label of the
// symmetrized coordinate ring.
struct CanonicalIndex {
  std::vector<std::vector<std::size_t>> blocks;  // each sorted ascending

  bool operator==(const CanonicalIndex&) const = default;
  bool operator<(const CanonicalIndex& o) const { return blocks < o.blocks; }
  // "x[{1,2,2};{1}]"
  std::string label() const;
};

// Sorts the raw multi-index within each factor block; idempotent.
CanonicalIndex canonicalize(const SymProfile& profile, const std::vector<std::size_t>& raw);

// N = prod C(n_j + d_j - 1, d_j), the number of distinct canonical labels.
std::uint64_t count_variables(const SymProfile& profile);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// All canonical indices in lexicographic order (block-major); their order
// defines the ambient registry layout.
std::vector<CanonicalIndex> enumerate_canonical_indices(const SymProfile& profile);

// The generic (n, d)-symmetric hypermatrix: entry at a raw index is the
// variable labeled by its canonical index.
Hypermatrix generic_sym_hypermatrix(const SymProfile& profile, Field field = Field::rationals());

}  // namespace tid
