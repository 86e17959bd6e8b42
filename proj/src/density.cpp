#include "flatsum/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flatsum/precise.hpp"
#include "lattice.hpp"
#include "quadrature.hpp"

namespace flatsum {

KernelOrder::KernelOrder(std::int64_t m) : m_(m) {
  if (m < 1 || m > kMax) {
    throw DomainError("kernel order " + std::to_string(m) + " outside [1, 2^52]");
  }
}

namespace {

constexpr std::int64_t kDirectFallbackMax = std::int64_t{1} << 20;
constexpr std::int64_t kLobeByLobeMax = std::int64_t{1} << 16;
constexpr std::int64_t kExactPeriods = std::int64_t{1} << 13;

// sin(k * r / 2) for a two-word angle r.
double sin_half_multiple(std::int64_t k, DoubleDouble r) {
  const SinCos sc = sincos_multiple(k, 0.5 * r.hi);
  const double delta = static_cast<double>(k) * 0.5 * r.lo;
  return sc.sin + sc.cos * delta;
}

// int_lo^hi |D*_M| with panels split at every zero of sin(Mx/2) and
// sin((M+1)x/2), each lobe halved.
double lobe_integral(std::int64_t M, double lo, double hi, double rel_tol) {
  auto integrand = [M](double x) {
    return std::fabs(conj_dirichlet_eval(KernelOrder(M), x));
  };
  const double step_a = kTwoPi / static_cast<double>(M);
  const double step_b = kTwoPi / static_cast<double>(M + 1);
  auto ka = static_cast<std::int64_t>(std::floor(lo / step_a)) + 1;
  auto kb = static_cast<std::int64_t>(std::floor(lo / step_b)) + 1;
  // Spread an absolute budget of rel_tol over the half panels, so the
  // near-empty panels between nearly coincident zeros stop early.
  const double abs_tol = rel_tol / (4.0 * (hi - lo) / step_b + 4.0);
  CompensatedSum total;
  double left = lo;
  while (left < hi) {
    const double za = static_cast<double>(ka) * step_a;
    const double zb = static_cast<double>(kb) * step_b;
    double right = std::min({za, zb, hi});
    if (right == za) ++ka;
    if (right == zb) ++kb;
    if (right <= left) continue;
    const double mid = left + 0.5 * (right - left);
    total.add(detail::integrate_panel(integrand, left, mid, 8, rel_tol, abs_tol));
    total.add(detail::integrate_panel(integrand, mid, right, 8, rel_tol, abs_tol));
    left = right;
  }
  return total.value();
}

// int_lo^hi of the period-averaged integrand
// E|cos(x/2) - cos t| / (2 sin(x/2)) = (1/pi) (1 + ((pi - x)/2) cot(x/2)).
double averaged_integral(double lo, double hi, double rel_tol) {
  auto integrand = [](double x) {
    return (1.0 + 0.5 * (kPi - x) / std::tan(0.5 * x)) / kPi;
  };
  CompensatedSum total;
  double left = lo;
  while (left < hi) {
    const double right = std::min(hi, 2.0 * left);
    total.add(detail::integrate_panel(integrand, left, right, 15, rel_tol));
    left = right;
  }
  return total.value();
}

}  // namespace

double conj_dirichlet_eval(KernelOrder order, double x) {
  if (!std::isfinite(x)) throw DomainError("conj_dirichlet_eval: x must be finite");
  const std::int64_t M = order.value();
  const DoubleDouble r = reduce_angle(1, x);
  if (r.hi == 0.0 && r.lo == 0.0) return 0.0;
  const double s_half = sin_half_multiple(1, r);
  if (std::fabs(s_half) < 1e-6 && M <= kDirectFallbackMax) {
    CompensatedSum sum;
    for (std::int64_t j = 1; j <= M; ++j) sum.add(sincos_multiple(j, x).sin);
    return sum.value();
  }
  return sin_half_multiple(M, r) * sin_half_multiple(M + 1, r) / s_half;
}

double conj_dirichlet_l1(KernelOrder order, double quad_tol) {
  if (!(quad_tol > 0.0)) throw DomainError("conj_dirichlet_l1: quad_tol must be positive");
  const std::int64_t M = order.value();
  // The norm is below 2 + log(M); a relative target keeps the absolute error
  // under quad_tol. Below 1e-12 the panel error estimates hit rounding noise
  // in the integrand and the adaptive recursion no longer converges.
  const double scale = 2.0 + std::log(static_cast<double>(M));
  const double rel_tol = std::clamp(0.25 * quad_tol / scale, 1e-12, 1e-9);

  // |D*_M| is symmetric about pi.
  double half;
  if (M <= kLobeByLobeMax) {
    half = lobe_integral(M, 0.0, kPi, rel_tol);
  } else {
    const double N = static_cast<double>(M) + 0.5;
    // Period boundaries of cos((M + 1/2) x) sit at odd multiples of pi / N.
    const double x_head = static_cast<double>(2 * kExactPeriods + 1) * kPi / N;
    const std::int64_t j_tail = (M - 1) / 2;
    const double x_tail = static_cast<double>(2 * j_tail + 1) * kPi / N;
    half = lobe_integral(M, 0.0, x_head, rel_tol) +
           averaged_integral(x_head, x_tail, rel_tol) +
           lobe_integral(M, x_tail, kPi, rel_tol);
  }
  return 2.0 * half / kPi;
}

InnerCount sine_inner_count(const FrequencySet& set, KernelOrder order,
                            double quad_tol) {
  if (!(quad_tol > 0.0)) throw DomainError("sine_inner_count: quad_tol must be positive");
  const std::int64_t M = order.value();
  InnerCount out;
  const auto f = set.freqs();
  out.exact = std::upper_bound(f.begin(), f.end(), M) - f.begin();

  const double degree = static_cast<double>(set.max()) + static_cast<double>(M);
  std::size_t n = 4096;
  while (static_cast<double>(n) <= degree) {
    n <<= 1;
    if (n > kMaxGridPoints) {
      throw ResourceError("sine_inner_count: quadrature needs more than 2^28 nodes");
    }
  }
  const auto lat = detail::sample_lattice(set, SumKind::Sine, n, 0, n, 1);
  const double step = kTwoPi / static_cast<double>(n);
  CompensatedSum sum;
  for (std::size_t i = 1; i < n; ++i) {
    sum.add(lat.d0[i] * conj_dirichlet_eval(order, static_cast<double>(i) * step));
  }
  out.numeric = 2.0 * sum.value() / static_cast<double>(n);
  return out;
}

double density_upper_bound(double m1_value, KernelOrder m, double quad_tol) {
  if (!(m1_value >= 0.0)) throw DomainError("density_upper_bound: m1_value must be >= 0");
  if (m1_value == 0.0) return 0.0;
  return m1_value * conj_dirichlet_l1(m, quad_tol);
}

CutoffResult min_cutoff_for_count(std::int64_t n, double m1_value, double quad_tol) {
  if (n < 1) throw DomainError("min_cutoff_for_count: n must be >= 1");
  if (!(m1_value > 0.0)) throw DomainError("min_cutoff_for_count: m1_value must be > 0");
  const auto target = static_cast<double>(n);
  auto bound = [&](std::int64_t M) {
    return density_upper_bound(m1_value, KernelOrder(M), quad_tol);
  };

  std::int64_t lo = 0;  // largest order known to fail (0: none yet)
  std::int64_t hi = 1;
  double hi_bound = bound(hi);
  while (hi_bound < target) {
    if (hi == KernelOrder::kMax) return {hi, true, hi_bound};
    lo = hi;
    hi = std::min(2 * hi, KernelOrder::kMax);
    hi_bound = bound(hi);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    const double b = bound(mid);
    if (b >= target) {
      hi = mid;
      hi_bound = b;
    } else {
      lo = mid;
    }
  }
  return {hi, false, hi_bound};
}

DensityReport density_report(const FrequencySet* set, KernelOrder m,
                             std::optional<double> m1_used, double quad_tol) {
  DensityReport r;
  r.m = m.value();
  r.l1_norm = conj_dirichlet_l1(m, quad_tol);
  if (set != nullptr) {
    const InnerCount c = sine_inner_count(*set, m, quad_tol);
    r.count_exact = c.exact;
    r.count_numeric = c.numeric;
  }
  if (m1_used) {
    r.m1_used = *m1_used;
    r.count_bound = *m1_used * r.l1_norm;
  }
  return r;
}

LogFit fit_log_growth(std::span<const std::int64_t> m, std::span<const double> values) {
  if (m.size() != values.size() || m.size() < 2) {
    throw DomainError("fit_log_growth: need at least two paired samples");
  }
  const auto k = static_cast<double>(m.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    sx += std::log(static_cast<double>(m[i]));
    sy += values[i];
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double dx = std::log(static_cast<double>(m[i])) - mx;
    const double dy = values[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LogFit fit;
  fit.a = sxy / sxx;
  fit.b = my - fit.a * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace flatsum
