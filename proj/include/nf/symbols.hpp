// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace nf {

// Frequencies and coefficients become polynomial variables of the scalar
// domain; parameters are tracked structurally as unfolding directions.
enum class SymbolKind { Frequency, Coefficient, Parameter };

class SymbolTable {
 public:
  // Returns the slot of the new symbol: a variable slot for frequencies and
  // coefficients, a parameter slot for parameters.
  int add(const std::string& name, SymbolKind kind);

  bool contains(const std::string& name) const { return by_name_.count(name) != 0; }
  // -1 when the name is unknown or of the other category.
  int var_index(const std::string& name) const;
  int param_index(const std::string& name) const;
  SymbolKind kind_of(const std::string& name) const;

  int num_vars() const { return static_cast<int>(var_names_.size()); }
  int num_params() const { return static_cast<int>(param_names_.size()); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<std::string>& param_names() const { return param_names_; }

 private:
  struct Entry {
    SymbolKind kind;
    int slot;
  };
  std::unordered_map<std::string, Entry> by_name_;
  std::vector<std::string> var_names_;
  std::vector<std::string> param_names_;
};

}  // namespace nf
