#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace resurgence {

/// Ordered set of distinct variable names; fixes the ambient polynomial ring.
class VariableSet {
public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < (int)names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("empty variable name");
      if (!index_.emplace(names_[i], i).second)
        throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
  }

  /// x1, x2, ..., xn
  static VariableSet numbered(int n, const std::string& stem = "x") {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return VariableSet(std::move(names));
  }

  int count() const { return (int)names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }

  /// -1 when absent.
  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  bool operator==(const VariableSet& o) const { return names_ == o.names_; }
  bool operator!=(const VariableSet& o) const { return !(*this == o); }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace resurgence
