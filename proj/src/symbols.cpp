// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/symbols.hpp"

#include <stdexcept>

namespace nf {

int SymbolTable::add(const std::string& name, SymbolKind kind) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate symbol: " + name);
  int slot;
  if (kind == SymbolKind::Parameter) {
    slot = static_cast<int>(param_names_.size());
    param_names_.push_back(name);
  } else {
    slot = static_cast<int>(var_names_.size());
    var_names_.push_back(name);
  }
  by_name_.emplace(name, Entry{kind, slot});
  return slot;
}

int SymbolTable::var_index(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end() || it->second.kind == SymbolKind::Parameter) return -1;
  return it->second.slot;
}

int SymbolTable::param_index(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end() || it->second.kind != SymbolKind::Parameter) return -1;
  return it->second.slot;
}

SymbolKind SymbolTable::kind_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw std::invalid_argument("unknown symbol: " + name);
  return it->second.kind;
}

}  // namespace nf
