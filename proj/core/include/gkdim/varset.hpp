#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkdim {

// Ordered list of distinct variable names; the list position fixes the
// well-order x_1 < x_2 < ... used everywhere downstream.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  // x1, x2, ..., xr
  static VarSet numbered(int count);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const;
  std::optional<int> index_of(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

}  // namespace gkdim
