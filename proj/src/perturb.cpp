#include "flatsum/perturb.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "flatsum/precise.hpp"
#include "quadrature.hpp"

namespace flatsum {

std::string to_string(PerturbationCase c) {
  return c == PerturbationCase::Sine ? "sine" : "cosine";
}

Window case_window(PerturbationCase c) {
  if (c == PerturbationCase::Sine) return {kPi / 4.0, kPi / 2.0};
  return {4.0 * kPi / 6.0, 5.0 * kPi / 6.0};
}

SignVector::SignVector(std::vector<int> eps) : eps_(std::move(eps)) {
  for (int e : eps_) {
    if (e != 1 && e != -1) throw DomainError("sign vector entries must be +1 or -1");
  }
}

namespace {

double rectified_term(std::int64_t lambda, PerturbationCase c, double x) {
  const SinCos sc = sincos_multiple(lambda, x);
  return std::fabs(c == PerturbationCase::Sine ? sc.cos : sc.sin);
}

}  // namespace

double rectified_sum(const FrequencySet& set, PerturbationCase c, double x) {
  CompensatedSum sum;
  for (std::int64_t lambda : set.freqs()) sum.add(rectified_term(lambda, c, x));
  return sum.value();
}

double select_x0(const FrequencySet& set, PerturbationCase c, std::uint64_t budget) {
  if (budget < 1024) throw DomainError("select_x0: budget must be >= 1024");
  const Window w = case_window(c);
  const double dense = 16.0 * static_cast<double>(set.max());
  const auto samples = static_cast<std::size_t>(
      std::max(2.0, std::min(static_cast<double>(budget), dense)));
  const double h = w.length() / static_cast<double>(samples - 1);
  auto point = [&](std::size_t i) {
    return i + 1 == samples ? w.b : w.a + static_cast<double>(i) * h;
  };

  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double v = rectified_sum(set, c, point(i));
    if (v > best) {
      best = v;
      arg = i;
    }
  }

  const double lo = arg == 0 ? w.a : point(arg - 1);
  const double hi = arg + 1 == samples ? w.b : point(arg + 1);
  const auto [x, neg] = boost::math::tools::brent_find_minima(
      [&](double t) { return -rectified_sum(set, c, t); }, lo, hi,
      std::numeric_limits<double>::digits);
  if (-neg > best && x >= w.a && x <= w.b) return x;
  return point(arg);
}

double rectified_average(std::int64_t lambda, PerturbationCase c) {
  if (lambda < 1) throw DomainError("rectified_average: lambda must be >= 1");
  const Window w = case_window(c);
  const auto lam = static_cast<double>(lambda);
  // Kinks sit at x = (k + offset) * pi / lambda.
  const double offset = c == PerturbationCase::Sine ? 0.5 : 0.0;
  auto kink = [&](std::int64_t k) {
    return (static_cast<double>(k) + offset) * kPi / lam;
  };
  const auto k_first = static_cast<std::int64_t>(std::ceil(w.a * lam / kPi - offset));
  const auto k_last = static_cast<std::int64_t>(std::floor(w.b * lam / kPi - offset));

  auto integrand = [&](double x) { return rectified_term(lambda, c, x); };
  auto panel = [&](double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    return detail::integrate_panel(integrand, lo, hi, 10, 1e-13);
  };

  std::vector<double> breaks;
  breaks.push_back(w.a);
  if (k_last >= k_first) {
    breaks.push_back(std::max(w.a, kink(k_first)));
    const std::int64_t full = k_last - k_first;
    constexpr std::int64_t kMaxPanels = std::int64_t{1} << 20;
    if (full > kMaxPanels) {
      // Whole panels are translates of one another; integrate one.
      const double whole = panel(kink(k_first), kink(k_first + 1));
      const double ends = panel(w.a, breaks.back()) + panel(kink(k_last), w.b);
      return (ends + static_cast<double>(full) * whole) / w.length();
    }
    for (std::int64_t k = k_first + 1; k <= k_last; ++k) breaks.push_back(kink(k));
  }
  breaks.push_back(w.b);

  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    total.add(panel(breaks[i], std::min(breaks[i + 1], w.b)));
  }
  return total.value() / w.length();
}

SignVector choose_signs(const FrequencySet& set, double x0, PerturbationCase c) {
  const Window w = case_window(c);
  if (!(x0 >= w.a && x0 <= w.b)) {
    throw DomainError("choose_signs: x0 outside the case window");
  }
  std::vector<int> eps(set.size());
  for (std::size_t j = 0; j < set.size(); ++j) {
    const SinCos sc = sincos_multiple(set[j], x0);
    const double v = c == PerturbationCase::Sine ? sc.cos : sc.sin;
    eps[j] = v >= 0.0 ? 1 : -1;
  }
  return SignVector(std::move(eps));
}

PerturbedSet apply_perturbation(const FrequencySet& set, const SignVector& eps) {
  if (eps.size() != set.size()) {
    throw DomainError("apply_perturbation: sign vector length " +
                      std::to_string(eps.size()) + " does not match set size " +
                      std::to_string(set.size()));
  }
  std::vector<std::int64_t> shifted(set.size());
  for (std::size_t j = 0; j < set.size(); ++j) {
    shifted[j] = set[j] + eps[j];
    if (shifted[j] < 1) {
      throw DomainError("apply_perturbation: lambda + eps = " +
                        std::to_string(shifted[j]) + " is below 1");
    }
  }
  // Already sorted except where lambda_j + 1 and lambda_{j+1} - 1 swap.
  std::sort(shifted.begin(), shifted.end());
  std::vector<PerturbedEntry> entries;
  for (std::int64_t v : shifted) {
    if (!entries.empty() && entries.back().value == v) {
      ++entries.back().multiplicity;
    } else {
      entries.push_back({v, 1});
    }
  }
  return PerturbedSet(entries);
}

PerturbationReport run_theorem(const FrequencySet& set, PerturbationCase c,
                               double tol, const TheoremOptions& options) {
  std::vector<std::string> warnings;
  if (set[0] <= 10) {
    warnings.push_back(
        "frequencies <= 10 present; the rectified-average constant is only "
        "established for lambda >= 11");
  }
  const double x0 = select_x0(set, c, options.x0_budget);
  SignVector eps = options.forced_signs ? *options.forced_signs : choose_signs(set, x0, c);
  PerturbedSet perturbed = apply_perturbation(set, eps);

  const bool sine = c == PerturbationCase::Sine;
  const SumKind kind = sine ? SumKind::Sine : SumKind::Cosine;
  CompensatedSum ii;
  for (std::size_t j = 0; j < set.size(); ++j) {
    const SinCos sc = sincos_multiple(set[j], x0);
    ii.add(eps[j] * (sine ? sc.cos : sc.sin));
  }
  const double term_i = std::cos(x0) * eval_point(set, kind, x0);
  const double value_at_x0 = eval_point(perturbed, kind, x0);

  ExtremumOptions perturbed_opts = options.extremum;
  perturbed_opts.hints.push_back(x0);
  const ExtremumCertificate original =
      sine ? m1(set, tol, options.extremum) : m2(set, tol, options.extremum);
  const ExtremumCertificate after =
      sine ? m1(perturbed, tol, perturbed_opts) : m2(perturbed, tol, perturbed_opts);

  auto collisions = perturbed.collisions();
  return PerturbationReport{
      .perturbation_case = c,
      .x0 = x0,
      .eps = std::move(eps),
      .rectified_sum = rectified_sum(set, c, x0),
      .term_i = term_i,
      .term_ii = ii.value(),
      .perturbed_value_at_x0 = value_at_x0,
      .original_extremum = original,
      .perturbed_extremum = after,
      .c_empirical = after.value / static_cast<double>(set.size()),
      .collisions = std::move(collisions),
      .perturbed = std::move(perturbed),
      .signs_forced = options.forced_signs.has_value(),
      .warnings = std::move(warnings),
  };
}

}  // namespace flatsum
