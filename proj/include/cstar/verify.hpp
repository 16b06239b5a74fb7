#pragma once

// The property suite behind `cstar verify`: duality round trips, naturality
// squares, the ideal correspondence and the spectral laws, run on exhaustive
// small spaces plus seeded random instances.

#include "cstar/core.hpp"
#include "cstar/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace cstar {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t max_size = 8;
  double tol = 1e-9;
  std::size_t random_morphisms = 200;
};

/// Folds per-instance checks into one record per law. A passing law reports
/// its worst instance; a failing law reports the first failing instance, which
/// is the smallest one because instances are generated in increasing size.
class LawAccumulator {
public:
  void add(const std::string& law, const std::string& instance, double defect, double tol);
  void add(const LawRecord& record);
  void merge(const LawReport& report);
  LawReport finish() const;

private:
  struct Entry {
    std::size_t checked = 0;
    double worst = 0.0;
    std::string worst_instance;
    std::optional<LawRecord> first_failure;
  };
  std::map<std::string, Entry> laws_;
};

/// Runs every law; records come back sorted by law name.
LawReport run_verification(const VerifyOptions& options, const std::optional<Element>& input = std::nullopt);

}  // namespace cstar
