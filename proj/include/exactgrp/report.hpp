#pragma once

#include <string>
#include <vector>

namespace exactgrp {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool ok() const {
    for (auto const &c : checks)
      if (!c.pass)
        return false;
    return !checks.empty();
  }
  Check const *find(std::string const &name) const {
    for (auto const &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }
};

}  // namespace exactgrp
