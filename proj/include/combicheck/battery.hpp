#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "combicheck/parallel.hpp"
#include "combicheck/report.hpp"

namespace combicheck {

struct BatteryOptions {
  /// Reduces every size parameter by one.
  bool quick = false;
  /// Drives all random sampling (currently the Bruhat perturbations).
  std::uint64_t seed = 1;
};

/// One numbered acceptance criterion and the reports backing it.
struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Report> reports;
  /// No report is a counterexample and at least one instance was checked.
  bool passed() const;
};

nlohmann::json to_json(const CriterionResult& c);

/// Acceptance criteria 1 to 12. Criteria 1 to 3 share one exhaustive lattice
/// sweep, which is computed on first use and cached.
class Battery {
 public:
  static constexpr int kFirst = 1;
  static constexpr int kLast = 12;

  Battery(BatteryOptions options, Executor exec);
  ~Battery();
  Battery(const Battery&) = delete;
  Battery& operator=(const Battery&) = delete;

  /// Throws std::out_of_range for ids outside [kFirst, kLast].
  CriterionResult run(int id);

  /// Runs every criterion in order, calling `progress` after each one.
  std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& progress = {});

 private:
  struct Cache;
  BatteryOptions options_;
  Executor exec_;
  std::unique_ptr<Cache> cache_;
};

/// Greene oracle against shape partial sums for every word over [alphabet] of
/// length at most max_len.
Report verify_greene(int alphabet, int max_len);

/// bruhat(P) = P for every permutation matrix of size <= max_n, and
/// bruhat(U1 W U2) = bruhat(W) for `trials` random unit upper-triangular U1, U2
/// (entries in [-2, 2]) and each catalog Cartan matrix W.
Report verify_bruhat_consistency(int max_n, int trials, std::uint64_t seed);

}  // namespace combicheck
