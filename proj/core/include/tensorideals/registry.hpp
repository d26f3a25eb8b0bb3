#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorideals/scalar.hpp"

namespace tid {

using VarId = std::uint32_t;

enum class OrderKind { DegRevLex, Lex, Block };

// Monomial order tag. Block compares the eliminated prefix [0, block_split)
// lexicographically first and the retained suffix by DegRevLex, which makes
// it an elimination order for the prefix.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  VarId block_split = 0;

  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block(VarId split) { return {OrderKind::Block, split}; }

  bool operator==(const MonomialOrder&) const = default;
  std::string to_string() const;
};

class VarRegistry;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

// Polynomial ring descriptor: ordered distinct variable labels, the active
// monomial order and the coefficient field. Variable identity is positional
// and stable for the registry's lifetime.
class VarRegistry {
 public:
  VarRegistry(std::vector<std::string> names, MonomialOrder order, Field field);

  static RegistryPtr make(std::vector<std::string> names,
                          MonomialOrder order = MonomialOrder::degrevlex(),
                          Field field = Field::rationals());

  std::size_t var_count() const { return names_.size(); }
  const std::string& name(VarId v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VarId> find(const std::string& label) const;
  VarId id(const std::string& label) const;  // throws UnknownVariable
  const MonomialOrder& order() const { return order_; }
  const Field& field() const { return field_; }

  // Structural ring identity: same labels in the same positions, same order,
  // same field. Registries created independently but structurally equal are
  // interchangeable.
  bool same_ring(const VarRegistry& other) const;
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, VarId> index_;
  MonomialOrder order_;
  Field field_;
  std::uint64_t fingerprint_ = 0;
};

// Pointer equality fast path, structural comparison fallback.
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);
void require_same_registry(const RegistryPtr& a, const RegistryPtr& b);

}  // namespace tid
