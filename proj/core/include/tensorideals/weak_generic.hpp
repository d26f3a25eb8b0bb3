#pragma once

#include <string>
#include <vector>

#include "tensorideals/hypermatrix.hpp"

namespace tid {

// Structural classes whose 2-minor ideals are known to be prime. The
// classifier is conservative: it recognizes structure, it never decides
// primality for anything else.
enum class StructureClass {
  NoTwoMinors,       // fewer than two axes of extent >= 2: the zero ideal
  Generic,           // all entries pairwise distinct variables
  SymmetricPattern,  // generic (n, d)-symmetric pattern up to axis labels
  Catalecticant,     // 2-D catalecticant pattern (possibly transposed)
  WeakGeneric,       // recursively weak generic
  Unrecognized,
};

std::string to_string(StructureClass c);

struct SectionClass {
  std::size_t axis = 0;   // 1-based
  std::size_t value = 0;  // 1-based
  StructureClass cls = StructureClass::Unrecognized;
};

struct WeakGenericReport {
  bool variable_entries = false;
  bool unique_entry_exists = false;
  bool sections_recognized = false;
  std::vector<SectionClass> sections;

  bool all() const { return variable_entries && unique_entry_exists && sections_recognized; }
};

// Pattern-level classification of a variable-entry hypermatrix.
StructureClass classify_structure(const Hypermatrix& a, int depth = 0);

// The three conditions of the weak-generic definition, with condition (3)
// checked structurally section by section. Entries must be plain variables
// (NotVariableEntries otherwise).
WeakGenericReport classify_weak_generic(const Hypermatrix& a);

}  // namespace tid
