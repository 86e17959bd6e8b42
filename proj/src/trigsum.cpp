#include "flatsum/trigsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "flatsum/precise.hpp"
#include "lattice.hpp"

namespace flatsum {

std::string to_string(SumKind kind) {
  return kind == SumKind::Sine ? "sine" : "cosine";
}

FrequencySet::FrequencySet(std::vector<std::int64_t> freqs)
    : freqs_(std::move(freqs)) {
  if (freqs_.empty()) {
    throw DomainError("frequency set must be non-empty");
  }
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    if (freqs_[i] < 1 || freqs_[i] > kMaxFrequency) {
      std::ostringstream msg;
      msg << "frequency " << freqs_[i] << " outside [1, 2^46]";
      throw DomainError(msg.str());
    }
    if (i > 0 && freqs_[i] <= freqs_[i - 1]) {
      std::ostringstream msg;
      msg << "frequencies not strictly increasing at index " << i << " ("
          << freqs_[i - 1] << ", " << freqs_[i] << ")";
      throw DomainError(msg.str());
    }
  }
}

PerturbedSet::PerturbedSet(const std::vector<PerturbedEntry>& entries) {
  if (entries.empty()) {
    throw DomainError("perturbed set must be non-empty");
  }
  values_.reserve(entries.size());
  mult_.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.value < 1 || e.value > FrequencySet::kMaxFrequency) {
      throw DomainError("perturbed value " + std::to_string(e.value) +
                        " is not a valid frequency");
    }
    if (e.multiplicity < 1 || e.multiplicity > 2) {
      throw DomainError("perturbed multiplicity must be 1 or 2");
    }
    if (!values_.empty() && e.value <= values_.back()) {
      throw DomainError("perturbed values not strictly increasing");
    }
    values_.push_back(e.value);
    mult_.push_back(e.multiplicity);
  }
}

std::vector<PerturbedEntry> PerturbedSet::entries() const {
  std::vector<PerturbedEntry> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = {values_[i], mult_[i]};
  return out;
}

std::vector<PerturbedEntry> PerturbedSet::collisions() const {
  std::vector<PerturbedEntry> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (mult_[i] == 2) out.push_back({values_[i], 2});
  }
  return out;
}

std::size_t PerturbedSet::total_multiplicity() const {
  return std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
}

std::size_t Spectrum::count() const {
  if (multiplicities.empty()) return values.size();
  return std::accumulate(multiplicities.begin(), multiplicities.end(),
                         std::size_t{0});
}

GridSpec GridSpec::make(double a, double b, std::size_t n_points) {
  if (!(a >= 0.0 && a < b && b <= kTwoPi)) {
    throw DomainError("grid requires 0 <= a < b <= 2pi");
  }
  if (n_points < 2) {
    throw DomainError("grid requires at least two points");
  }
  return GridSpec{a, b, n_points};
}

double GridSpec::point(std::size_t i) const {
  if (i + 1 == n_points) return b;
  return a + static_cast<double>(i) * spacing();
}

double eval_point(Spectrum set, SumKind kind, double x) {
  if (!std::isfinite(x)) {
    throw DomainError("eval_point: x must be finite");
  }
  CompensatedSum sum;
  for (std::size_t j = 0; j < set.size(); ++j) {
    const SinCos sc = sincos_multiple(set.values[j], x);
    const double m = set.multiplicity(j);
    sum.add(m * (kind == SumKind::Sine ? sc.sin : sc.cos));
  }
  return sum.value();
}

Jet eval_jet(Spectrum set, SumKind kind, double x) {
  if (!std::isfinite(x)) {
    throw DomainError("eval_jet: x must be finite");
  }
  CompensatedSum s0, s1, s2;
  for (std::size_t j = 0; j < set.size(); ++j) {
    const SinCos sc = sincos_multiple(set.values[j], x);
    const double m = set.multiplicity(j);
    const auto lambda = static_cast<double>(set.values[j]);
    if (kind == SumKind::Sine) {
      s0.add(m * sc.sin);
      s1.add(m * lambda * sc.cos);
      s2.add(-m * lambda * lambda * sc.sin);
    } else {
      s0.add(m * sc.cos);
      s1.add(-m * lambda * sc.sin);
      s2.add(-m * lambda * lambda * sc.cos);
    }
  }
  return {s0.value(), s1.value(), s2.value()};
}

namespace {

// Below this many terms a direct loop beats the FFT for eval_grid.
constexpr std::size_t kFftMinTerms = 32;

}  // namespace

std::vector<double> eval_grid(Spectrum set, SumKind kind, const GridSpec& grid) {
  if (grid.n_points > kMaxGridPoints) {
    throw ResourceError("eval_grid: more than 2^28 grid points requested");
  }
  GridSpec::make(grid.a, grid.b, grid.n_points);
  std::vector<double> out(grid.n_points);
  const bool full_period = grid.a == 0.0 && grid.b == kTwoPi;
  if (full_period && grid.n_points >= 3 && set.size() >= kFftMinTerms) {
    const std::size_t n = grid.n_points - 1;
    const auto lat = detail::sample_lattice(set, kind, n, 0, n, 1);
    std::copy(lat.d0.begin(), lat.d0.end(), out.begin());
    out.back() = eval_point(set, kind, grid.b);
    return out;
  }
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    out[i] = eval_point(set, kind, grid.point(i));
  }
  return out;
}

std::int64_t lipschitz_bound(Spectrum set) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < set.size(); ++j) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(set.values[j],
                               static_cast<std::int64_t>(set.multiplicity(j)),
                               &term) ||
        __builtin_add_overflow(total, term, &total)) {
      throw ResourceError("lipschitz_bound: sum of frequencies exceeds 2^63");
    }
  }
  return total;
}

double parseval_floor(std::int64_t n) {
  if (n < 1) throw DomainError("parseval_floor: n must be >= 1");
  return std::sqrt(static_cast<double>(n) / 2.0);
}

namespace {

enum class Objective { Abs, Neg };

double objective(Objective o, double v) {
  return o == Objective::Abs ? std::fabs(v) : -v;
}

// Absolute error allowances on d0, d1, d2 for one source of samples.
struct Slack {
  double e0 = 0.0, e1 = 0.0, e2 = 0.0;
};

struct Node {
  double x = 0.0;
  Jet jet;
  const Slack* slack = nullptr;
};

struct Bracket {
  Node u, v;
  double ub = 0.0;
};

struct Bounder {
  Objective obj;
  double third;  // bound on |f'''|

  // Max over t in [0, h] of the objective along the Taylor model at `n`
  // moving in direction `dir`.
  double half(const Node& n, double h, double dir) const {
    auto quad_max = [&](double sgn) {
      const double c0 = sgn * n.jet.d0;
      const double c1 = sgn * dir * n.jet.d1;
      const double c2 = sgn * n.jet.d2;
      double best = std::max(c0, c0 + c1 * h + 0.5 * c2 * h * h);
      if (c2 < 0.0) {
        const double t = -c1 / c2;
        if (t > 0.0 && t < h) best = std::max(best, c0 + 0.5 * c1 * t);
      }
      return best;
    };
    const double q = obj == Objective::Abs
                         ? std::max(quad_max(1.0), quad_max(-1.0))
                         : quad_max(-1.0);
    const Slack& s = *n.slack;
    return q + s.e0 + s.e1 * h + 0.5 * s.e2 * h * h + third * h * h * h / 6.0;
  }

  double bound(const Node& u, const Node& v) const {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double h = 0.5 * (v.x - u.x) + 8.0 * eps * std::fabs(v.x);
    return std::max(half(u, h, 1.0), half(v, h, -1.0));
  }
};

struct Weights {
  double w[4] = {0, 0, 0, 0};   // sum m lambda^k
  double l2[3] = {0, 0, 0};     // sqrt(sum (m lambda^k)^2)
};

Weights weights_of(Spectrum set) {
  Weights out;
  double sq[3] = {0, 0, 0};
  for (std::size_t j = 0; j < set.size(); ++j) {
    const double m = set.multiplicity(j);
    const auto lambda = static_cast<double>(set.values[j]);
    double p = m;
    for (int k = 0; k < 4; ++k) {
      out.w[k] += p;
      if (k < 3) sq[k] += p * p;
      p *= lambda;
    }
  }
  for (int k = 0; k < 3; ++k) out.l2[k] = std::sqrt(sq[k]);
  return out;
}

std::size_t lattice_size(std::int64_t lambda_max) {
  const double target = std::max(4096.0, 8.0 * static_cast<double>(lambda_max));
  std::size_t n = 4096;
  while (static_cast<double>(n) < target) n <<= 1;
  return n;
}

ExtremumCertificate certified_extremum(Spectrum set, SumKind kind,
                                       Objective obj, double a, double b,
                                       double tol,
                                       const ExtremumOptions& options) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("certified extremum: tol must be positive and finite");
  }
  if (!(a >= 0.0 && a < b && b <= kTwoPi)) {
    throw DomainError("certified extremum: interval must satisfy 0 <= a < b <= 2pi");
  }
  if (set.size() == 0) {
    throw DomainError("certified extremum: empty frequency set");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();

  ExtremumCertificate best;
  best.tol = tol;
  best.lipschitz = lipschitz_bound(set);
  best.value = -std::numeric_limits<double>::infinity();

  const Weights wts = weights_of(set);
  const Bounder bounder{obj, wts.w[3] * (1.0 + 1e-12)};
  const Slack exact_slack{32 * eps * wts.w[0], 32 * eps * wts.w[1],
                          32 * eps * wts.w[2]};
  // |f| <= sum of multiplicities everywhere.
  const double trivial_bound = wts.w[0] + exact_slack.e0;

  std::uint64_t used = 0;
  auto fail = [&](const std::string& why, double bound) {
    ExtremumCertificate partial = best;
    partial.certified_bound = std::max(bound, partial.value);
    throw ExtremumBudgetError(why, partial);
  };
  auto exact_node = [&](double x) {
    if (used >= options.budget) {
      fail("certified extremum: evaluation budget exhausted", trivial_bound);
    }
    ++used;
    Node node{x, eval_jet(set, kind, x), &exact_slack};
    const double val = objective(obj, node.jet.d0);
    if (val > best.value) {
      best.value = val;
      best.x_star = x;
    }
    return node;
  };

  const Node left = exact_node(a);
  const Node right = exact_node(b);
  for (double h : options.hints) {
    if (h >= a && h <= b) exact_node(h);
  }

  const std::size_t n = lattice_size(set.max());
  if (used + n > options.budget) {
    fail("certified extremum: initial grid exceeds the evaluation budget",
         trivial_bound);
  }
  used += n;
  const double step = kTwoPi / static_cast<double>(n);
  auto lattice_x = [&](std::size_t i) { return static_cast<double>(i) * step; };
  std::size_t first = static_cast<std::size_t>(std::floor(a / step));
  while (first < n && lattice_x(first) <= a) ++first;
  std::size_t last = first;
  while (last < n && lattice_x(last) < b) ++last;
  const std::size_t count = last - first;  // lattice points strictly inside

  const double log_n = std::log2(static_cast<double>(n));
  const double fft_scale = 4.0 * eps * log_n * std::sqrt(static_cast<double>(n));
  const Slack lattice_slack{fft_scale * wts.l2[0], fft_scale * wts.l2[1],
                            fft_scale * wts.l2[2]};

  detail::LatticeSamples lat;
  if (count > 0) {
    lat = detail::sample_lattice(set, kind, n, first, count, 3);
    std::size_t arg = 0;
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
      const double v = objective(obj, lat.d0[i]);
      if (v > top) {
        top = v;
        arg = i;
      }
    }
    exact_node(lattice_x(first + arg));
  }

  auto lattice_node = [&](std::size_t i) {
    return Node{lattice_x(first + i), Jet{lat.d0[i], lat.d1[i], lat.d2[i]},
                &lattice_slack};
  };

  std::vector<Bracket> live;
  auto push_if_alive = [&](const Node& u, const Node& v) {
    const double ub = bounder.bound(u, v);
    if (ub > best.value) live.push_back({u, v, ub});
  };
  if (count == 0) {
    push_if_alive(left, right);
  } else {
    push_if_alive(left, lattice_node(0));
    for (std::size_t i = 0; i + 1 < count; ++i) {
      push_if_alive(lattice_node(i), lattice_node(i + 1));
    }
    push_if_alive(lattice_node(count - 1), right);
  }
  lat = {};

  std::vector<Bracket> next;
  while (true) {
    std::erase_if(live, [&](const Bracket& br) { return br.ub <= best.value; });
    const bool done = std::none_of(live.begin(), live.end(), [&](const Bracket& br) {
      return br.ub > best.value + tol;
    });
    if (done) break;

    next.clear();
    for (const Bracket& br : live) {
      if (br.ub <= best.value + tol) {
        next.push_back(br);
        continue;
      }
      const double mid = br.u.x + 0.5 * (br.v.x - br.u.x);
      if (!(mid > br.u.x && mid < br.v.x)) {
        double bound = best.value;
        for (const Bracket& other : live) bound = std::max(bound, other.ub);
        fail("certified extremum: tolerance below floating-point resolution",
             bound);
      }
      if (used >= options.budget) {
        double bound = best.value;
        for (const Bracket& other : live) bound = std::max(bound, other.ub);
        fail("certified extremum: evaluation budget exhausted", bound);
      }
      const Node m = exact_node(mid);
      next.push_back({br.u, m, bounder.bound(br.u, m)});
      next.push_back({m, br.v, bounder.bound(m, br.v)});
    }
    live.swap(next);
  }

  best.certified_bound = best.value;
  for (const Bracket& br : live) {
    best.certified_bound = std::max(best.certified_bound, br.ub);
  }
  return best;
}

}  // namespace

ExtremumCertificate certified_max_abs(Spectrum set, SumKind kind, double a,
                                      double b, double tol,
                                      const ExtremumOptions& options) {
  return certified_extremum(set, kind, Objective::Abs, a, b, tol, options);
}

ExtremumCertificate certified_neg_min(Spectrum set, SumKind kind, double a,
                                      double b, double tol,
                                      const ExtremumOptions& options) {
  return certified_extremum(set, kind, Objective::Neg, a, b, tol, options);
}

ExtremumCertificate m1(Spectrum set, double tol, const ExtremumOptions& options) {
  return certified_max_abs(set, SumKind::Sine, 0.0, kPi, tol, options);
}

ExtremumCertificate m2(Spectrum set, double tol, const ExtremumOptions& options) {
  return certified_neg_min(set, SumKind::Cosine, 0.0, kPi, tol, options);
}

}  // namespace flatsum
