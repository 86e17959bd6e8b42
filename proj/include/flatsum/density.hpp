#pragma once

// Conjugate Dirichlet kernel D*_M(x) = sum_{j=1}^M sin(jx) and the counting
// bound it gives. For f = sum_j sin(lambda_j x), orthogonality yields
//
//   #{j : lambda_j <= M} = (1/pi) int_0^{2pi} f D*_M dx <= M1 * ||D*_M||,
//
// where ||D*_M|| = (1/pi) int_0^{2pi} |D*_M| grows like (2/pi) log M.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flatsum/trigsum.hpp"

namespace flatsum {

class KernelOrder {
 public:
  static constexpr std::int64_t kMax = std::int64_t{1} << 52;

  explicit KernelOrder(std::int64_t m);
  std::int64_t value() const { return m_; }

 private:
  std::int64_t m_;
};

double conj_dirichlet_eval(KernelOrder m, double x);

/// (1/pi) int_0^{2pi} |D*_M(x)| dx. Orders up to 2^16 use Gauss-Kronrod on
/// every lobe (>= 4M panels); larger orders integrate the first 2^13 and the
/// last periods lobe by lobe and the rest through the period average
/// E_theta |cos(x/2) - cos theta| / (2 sin(x/2)).
double conj_dirichlet_l1(KernelOrder m, double quad_tol = 1e-10);

struct InnerCount {
  std::int64_t exact = 0;  // #{j : lambda_j <= M}
  double numeric = 0.0;    // (1/pi) int_0^{2pi} f D*_M
};

/// Trapezoidal rule on more than lambda_max + M nodes, which is exact for
/// the trigonometric polynomial f * D*_M.
InnerCount sine_inner_count(const FrequencySet& set, KernelOrder m,
                            double quad_tol = 1e-10);

/// m1_value * ||D*_M||: an upper bound on #{lambda_j <= M} for every set
/// whose M1 is at most m1_value.
double density_upper_bound(double m1_value, KernelOrder m, double quad_tol = 1e-10);

struct CutoffResult {
  std::int64_t cutoff = 0;   // smallest M with bound >= n (or the cap)
  bool exceeded = false;     // no M <= KernelOrder::kMax reaches n
  double bound = 0.0;        // density_upper_bound at `cutoff`
};

/// Smallest M with density_upper_bound(m1_value, M) >= n, by doubling and
/// bisection. Any set of n frequencies with M1 <= m1_value has
/// lambda_n >= cutoff.
CutoffResult min_cutoff_for_count(std::int64_t n, double m1_value,
                                  double quad_tol = 1e-10);

struct DensityReport {
  std::int64_t m = 0;
  double l1_norm = 0.0;
  std::optional<std::int64_t> count_exact;
  std::optional<double> count_numeric;
  std::optional<double> count_bound;
  std::optional<double> m1_used;
};

/// One row of a density sweep; the count fields need a set, the bound needs
/// an m1 value.
DensityReport density_report(const FrequencySet* set, KernelOrder m,
                             std::optional<double> m1_used, double quad_tol = 1e-10);

struct LogFit {
  double a = 0.0;  // slope in ln m
  double b = 0.0;
  double r2 = 0.0;
};

/// Least-squares fit of values ~ a ln(m) + b.
LogFit fit_log_growth(std::span<const std::int64_t> m, std::span<const double> values);

}  // namespace flatsum
