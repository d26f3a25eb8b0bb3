#include "tensorideals/registry.hpp"

#include "tensorideals/errors.hpp"

namespace tid {

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block:
      return "block:" + std::to_string(block_split);
  }
  return "?";
}

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

VarRegistry::VarRegistry(std::vector<std::string> names, MonomialOrder order, Field field)
    : names_(std::move(names)), order_(order), field_(field) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (VarId v = 0; v < names_.size(); ++v) {
    auto [it, inserted] = index_.emplace(names_[v], v);
    if (!inserted) throw Error("duplicate variable label: " + names_[v]);
    h = fnv1a(names_[v], h);
    h = fnv1a("|", h);
  }
  h = fnv1a(order_.to_string(), h);
  h = fnv1a(field_.to_string(), h);
  fingerprint_ = h;
}

RegistryPtr VarRegistry::make(std::vector<std::string> names, MonomialOrder order, Field field) {
  return std::make_shared<const VarRegistry>(std::move(names), order, field);
}

const std::string& VarRegistry::name(VarId v) const {
  if (v >= names_.size()) throw IndexOutOfRange("variable id " + std::to_string(v));
  return names_[v];
}

std::optional<VarId> VarRegistry::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarId VarRegistry::id(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownVariable(label);
  return it->second;
}

bool VarRegistry::same_ring(const VarRegistry& other) const {
  if (this == &other) return true;
  if (fingerprint_ != other.fingerprint_) return false;
  return names_ == other.names_ && order_ == other.order_ && field_ == other.field_;
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_ring(*b);
}

void require_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (!same_registry(a, b)) throw RegistryMismatch("operands live in different rings");
}

}  // namespace tid
