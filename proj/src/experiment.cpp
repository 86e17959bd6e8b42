#include "flatsum/experiment.hpp"

#include <chrono>
#include <cstdio>

#include "flatsum/constructions.hpp"

namespace flatsum {

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {"consecutive", "random", "sidon-diff",
                                                 "rounded-exp"};
  return names;
}

FrequencySet build_construction(const ConstructionParams& params) {
  if (params.name == "consecutive") return consecutive(params.n);
  if (params.name == "random") {
    return random_set(params.n, params.lambda_min, params.lambda_max, Seed{params.seed});
  }
  if (params.name == "sidon-diff") return difference_set(erdos_turan_sidon(params.p));
  if (params.name == "rounded-exp") return rounded_exponential(params.n);
  throw DomainError("unknown construction '" + params.name + "'");
}

nlohmann::json provenance(const ConstructionParams& params, const FrequencySet& set) {
  nlohmann::json j{{"name", params.name}, {"N", set.size()}, {"lambda_N", set.max()}};
  if (params.name == "sidon-diff") {
    j["p"] = params.p;
  } else {
    j["n"] = params.n;
  }
  if (params.name == "random") {
    j["min"] = params.lambda_min;
    j["max"] = params.lambda_max;
    j["seed"] = params.seed;
  }
  return j;
}

ScanRow run_scan_row(const ConstructionParams& params, double tol,
                     const ExtremumOptions& options) {
  ScanRow row;
  row.construction = params.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    const FrequencySet set = build_construction(params);
    row.n = static_cast<std::int64_t>(set.size());
    row.lambda_n = set.max();
    const ExtremumCertificate c1 = m1(set, tol, options);
    const ExtremumCertificate c2 = m2(set, tol, options);
    row.m1_value = c1.value;
    row.m1_certified_bound = c1.certified_bound;
    row.m2_value = c2.value;
    row.m2_certified_bound = c2.certified_bound;
    row.parseval_floor = parseval_floor(row.n);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return row;
}

std::string scan_csv_header() {
  return "construction,n,lambda_n,m1_value,m1_certified_bound,m2_value,"
         "m2_certified_bound,parseval_floor,runtime_ms,error";
}

std::string to_csv(const ScanRow& row) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%lld,%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.3f,",
                row.construction.c_str(), static_cast<long long>(row.n),
                static_cast<long long>(row.lambda_n), row.m1_value,
                row.m1_certified_bound, row.m2_value, row.m2_certified_bound,
                row.parseval_floor, row.runtime_ms);
  std::string out = buf;
  if (!row.error.empty()) {
    std::string quoted = "\"";
    for (char ch : row.error) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    out += quoted + "\"";
  }
  return out;
}

}  // namespace flatsum
