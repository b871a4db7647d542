#pragma once

#include <string>
#include <vector>

#include "polypart/rational.hpp"

namespace polypart {

struct AuditEntry {
  std::string name;
  Rational observed;
  Rational bound;
  bool pass = false;  // observed <= bound
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  void add(const std::string& name, const Rational& observed,
           const Rational& bound) {
    entries.push_back({name, observed, bound, observed <= bound});
  }
  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  // CSV with columns (check_name, observed, bound, pass).
  std::string to_csv() const;
};

}  // namespace polypart
