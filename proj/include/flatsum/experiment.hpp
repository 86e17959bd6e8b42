#pragma once

// Named constructions and scan rows used by the command-line front end.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "flatsum/trigsum.hpp"

namespace flatsum {

/// Parameters of a named construction: "consecutive" (n), "random"
/// (n, lambda_min, lambda_max, seed), "sidon-diff" (p) or "rounded-exp" (n).
struct ConstructionParams {
  std::string name;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t lambda_min = 11;
  std::int64_t lambda_max = 1'000'000;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& construction_names();

FrequencySet build_construction(const ConstructionParams& params);

/// Sidecar recorded next to every generated set file.
nlohmann::json provenance(const ConstructionParams& params, const FrequencySet& set);

struct ScanRow {
  std::string construction;
  std::int64_t n = 0;
  std::int64_t lambda_n = 0;
  double m1_value = 0.0;
  double m1_certified_bound = 0.0;
  double m2_value = 0.0;
  double m2_certified_bound = 0.0;
  double parseval_floor = 0.0;
  double runtime_ms = 0.0;
  std::string error;  // empty on success
};

ScanRow run_scan_row(const ConstructionParams& params, double tol,
                     const ExtremumOptions& options = {});

std::string scan_csv_header();
std::string to_csv(const ScanRow& row);

}  // namespace flatsum
