#pragma once

#include <string>
#include <vector>

namespace lkb {

struct CheckItem {
  std::string name;
  bool pass = false;
};

struct Report {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

}  // namespace lkb
