#pragma once

#include <string>
#include <vector>

namespace cstar {

/// One checked law on one instance.
struct LawRecord {
  std::string law;
  std::string instance;
  double defect = 0.0;
  bool pass = false;
};

using LawReport = std::vector<LawRecord>;

inline bool all_pass(const LawReport& report) {
  for (const auto& r : report) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace cstar
