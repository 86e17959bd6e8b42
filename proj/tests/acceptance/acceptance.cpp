// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "flatsum/constructions.hpp"
#include "flatsum/density.hpp"
#include "flatsum/perturb.hpp"
#include "flatsum/precise.hpp"
#include "flatsum/trigsum.hpp"

using namespace flatsum;

namespace {

constexpr double kTol = 1e-6;
constexpr double kM1OneToTen = 7.5962876115887774;
constexpr double kM2OneToTen = 2.7984650508372188;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

FrequencySet random_small_set(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                              std::int64_t hi) {
  std::vector<std::int64_t> v;
  std::uniform_int_distribution<std::int64_t> u(lo, hi);
  while (v.size() < n) {
    v.push_back(u(rng));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return FrequencySet(v);
}

struct CorpusEntry {
  std::string name;
  FrequencySet set;
};

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> c;
  for (std::int64_t n : {10, 100, 1000, 2000}) {
    c.push_back({fmt("consecutive(%lld)", static_cast<long long>(n)), consecutive(n)});
  }
  for (std::int64_t n : {100, 1000, 2000}) {
    c.push_back({fmt("random(%lld)", static_cast<long long>(n)),
                 random_set(n, 11, 1'000'000, Seed{1})});
  }
  for (std::int64_t p : {11, 31, 61}) {
    c.push_back({fmt("sidon-diff(p=%lld)", static_cast<long long>(p)),
                 difference_set(erdos_turan_sidon(p))});
  }
  for (std::int64_t n : {10, 100, 1000, 2000}) {
    c.push_back({fmt("rounded-exp(%lld)", static_cast<long long>(n)), rounded_exponential(n)});
  }
  return c;
}

// m1 certificates are shared by criteria 2 and 8.
const std::vector<std::pair<CorpusEntry, ExtremumCertificate>>& corpus_m1() {
  static const auto cache = [] {
    std::vector<std::pair<CorpusEntry, ExtremumCertificate>> out;
    for (auto& e : corpus()) {
      auto c = m1(e.set, kTol);
      out.emplace_back(e, c);
    }
    return out;
  }();
  return cache;
}

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> ux(0, 2 * kPi);
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    auto s = random_small_set(rng, 20 + rng() % 480, 11, 1'000'000);
    std::vector<int> e;
    for (std::size_t i = 0; i < s.size(); ++i) e.push_back(rng() & 1 ? 1 : -1);
    auto p = apply_perturbation(s, SignVector(e));
    const double n = static_cast<double>(s.size());
    for (int k = 0; k < 1000; ++k) {
      double x = ux(rng);
      double term_ii = 0;
      for (std::size_t i = 0; i < s.size(); ++i) term_ii += e[i] * sincos_multiple(s[i], x).cos;
      double rhs = std::cos(x) * eval_point(s, SumKind::Sine, x) + std::sin(x) * term_ii;
      double err = std::abs(eval_point(p, SumKind::Sine, x) - rhs) / n;
      worst = std::max(worst, err);
    }
  }
  double worst_count = 0;
  for (int t = 0; t < 20; ++t) {
    auto s = random_set(10 + static_cast<std::int64_t>(rng() % 200), 1, 50000, Seed{rng()});
    std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 60000);
    auto r = sine_inner_count(s, KernelOrder(m));
    worst_count = std::max(worst_count, std::abs(r.numeric - static_cast<double>(r.exact)));
  }
  o.pass = worst <= 1e-9 && worst_count <= 1e-6;
  o.detail = fmt("identity max err %.2e*N, count max err %.2e", worst, worst_count);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst_margin = INFINITY;
  std::string worst_name;
  for (const auto& [e, c] : corpus_m1()) {
    double floor = parseval_floor(static_cast<std::int64_t>(e.set.size()));
    double margin = c.certified_bound - (floor - 1e-6);
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_name = e.name;
    }
    if (c.certified_bound < floor - 1e-6) o.pass = false;
  }
  o.detail = fmt("%zu sets, tightest %s margin %.3g", corpus_m1().size(), worst_name.c_str(),
                 worst_margin);
  return o;
}

Outcome theorem_case(PerturbationCase c) {
  Outcome o;
  double min_ii = INFINITY, min_ext = INFINITY, max_seed_s = 0;
  int chain_fail = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto t0 = Clock::now();
    auto s = random_set(1000, 11, 1'000'000, Seed{seed});
    auto r = run_theorem(s, c, kTol);
    const double n = 1000;
    min_ii = std::min(min_ii, r.term_ii / n);
    min_ext = std::min(min_ext, r.perturbed_extremum.value / n);
    double lower = c == PerturbationCase::Sine ? std::sin(r.x0) * r.term_ii - std::abs(r.term_i)
                                               : std::sin(r.x0) * r.term_ii - r.term_i;
    if (r.perturbed_extremum.value < lower - 1e-9 * n) ++chain_fail;
    if (std::abs(r.term_ii - r.rectified_sum) > 1e-9 * n) ++chain_fail;
    max_seed_s = std::max(max_seed_s, seconds_since(t0));
  }
  o.pass = min_ii >= 0.5 && min_ext >= 0.3 && chain_fail == 0 && max_seed_s < 60;
  o.detail = fmt("min term_II/N %.4f, min extremum/N %.4f, chain failures %d, slowest seed %.1fs",
                 min_ii, min_ext, chain_fail, max_seed_s);
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(505);
  int max_mult = 0;
  for (int t = 0; t < 10000; ++t) {
    auto s = random_small_set(rng, 1 + rng() % 60, 2, 120);
    std::vector<int> e;
    for (std::size_t i = 0; i < s.size(); ++i) e.push_back(rng() & 1 ? 1 : -1);
    auto p = apply_perturbation(s, SignVector(e));
    for (int m : p.multiplicities()) max_mult = std::max(max_mult, m);
  }
  auto pair = apply_perturbation(FrequencySet({5, 7}), SignVector({1, -1}));
  bool constructed = pair.collisions() == std::vector<PerturbedEntry>{{6, 2}};
  o.pass = max_mult <= 2 && constructed;
  o.detail = fmt("max multiplicity %d over 1e4 fuzz cases, {5,7}/(+1,-1) -> 6 x%d", max_mult,
                 pair.multiplicities().empty() ? 0 : pair.multiplicities()[0]);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::string d;
  for (std::int64_t p : {11, 31, 61, 101}) {
    auto s = difference_set(erdos_turan_sidon(p));
    auto c = m2(s, kTol);
    const double n = static_cast<double>(s.size());
    double ratio = c.certified_bound / std::sqrt(n);
    double packing = static_cast<double>(s.max()) / n;
    bool ok = c.certified_bound <= p / 2.0 + 1e-6 && ratio <= 0.75 && packing <= 4.5;
    o.pass = o.pass && ok;
    d += fmt("p=%lld: M2=%.4f M2/sqrtN=%.3f lambdaN/N=%.3f; ", static_cast<long long>(p),
             c.certified_bound, ratio, packing);
  }
  o.detail = d;
  return o;
}

Outcome criterion7() {
  Outcome o;
  double l1_one = conj_dirichlet_l1(KernelOrder(1));
  std::vector<std::int64_t> ms;
  std::vector<double> vs;
  bool increasing = true;
  for (std::int64_t m = 8; m <= 4096; m *= 2) {
    double v = conj_dirichlet_l1(KernelOrder(m));
    if (!vs.empty() && v <= vs.back()) increasing = false;
    ms.push_back(m);
    vs.push_back(v);
  }
  auto fit = fit_log_growth(ms, vs);
  o.pass = std::abs(l1_one - 4 / kPi) <= 1e-6 && fit.r2 >= 0.99 && increasing;
  o.detail = fmt("l1(1)-4/pi=%.2e, fit a=%.4f b=%.4f R2=%.6f, increasing=%d", l1_one - 4 / kPi,
                 fit.a, fit.b, fit.r2, increasing ? 1 : 0);
  return o;
}

Outcome criterion8() {
  Outcome o;
  int probes = 0, violations = 0;
  for (const auto& [e, c] : corpus_m1()) {
    const double top = static_cast<double>(e.set.max());
    for (int k = 0; k < 10; ++k) {
      auto m = static_cast<std::int64_t>(std::llround(std::pow(top, (k + 1) / 10.0)));
      m = std::max<std::int64_t>(m, 1);
      auto count = sine_inner_count(e.set, KernelOrder(m));
      if (static_cast<double>(count.exact) >
          c.certified_bound * conj_dirichlet_l1(KernelOrder(m)) + 1e-6) {
        ++violations;
      }
      ++probes;
    }
  }
  std::vector<double> cube, logc;
  std::string growth;
  bool exceeded = false;
  for (std::int64_t n : {100, 1000, 10000}) {
    double nd = static_cast<double>(n);
    auto r = min_cutoff_for_count(n, std::pow(nd, 2.0 / 3.0), 1e-10);
    exceeded = exceeded || r.exceeded;
    cube.push_back(std::cbrt(nd));
    logc.push_back(std::log(static_cast<double>(r.cutoff)));
    growth += fmt("n=%lld ln(cutoff)=%.3f; ", static_cast<long long>(n), logc.back());
  }
  bool linear = !exceeded;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    if (logc[i] < cube[i]) linear = false;
    if (i > 0 && (logc[i] - logc[i - 1]) / (cube[i] - cube[i - 1]) < 1.0) linear = false;
  }
  o.pass = violations == 0 && linear;
  o.detail = fmt("%d probes, %d violations; ", probes, violations) + growth;
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto a = m1(consecutive(10), kTol);
  auto b = m2(consecutive(10), kTol);
  auto s = random_set(100, 11, 1'000'000, Seed{9});
  auto grid = GridSpec::make(0, 2 * kPi, std::size_t{1} << 16);
  auto fast = eval_grid(s, SumKind::Sine, grid);
  double worst = 0;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    worst = std::max(worst, std::abs(fast[i] - eval_point(s, SumKind::Sine, grid.point(i))));
  }
  o.pass = std::abs(a.value - kM1OneToTen) <= 5e-2 && std::abs(b.value - kM2OneToTen) <= 5e-2 &&
           worst <= 1e-8 * 100;
  o.detail = fmt("m1 err %.2e, m2 err %.2e, grid max err %.2e*N", a.value - kM1OneToTen,
                 b.value - kM2OneToTen, worst / 100);
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(1010);
  int checked = 0, failures = 0;
  for (int t = 0; t < 200; ++t) {
    auto s = random_small_set(rng, 1 + rng() % 12, 11, 1'000'000);
    Window w = case_window(PerturbationCase::Sine);
    double x0 = w.a + std::uniform_real_distribution<double>(0, 1)(rng) * w.length();
    auto eps = choose_signs(s, x0, PerturbationCase::Sine);
    std::vector<double> c(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) c[i] = sincos_multiple(s[i], x0).cos;
    double chosen = 0;
    for (std::size_t i = 0; i < s.size(); ++i) chosen += eps[i] * c[i];
    double best = -INFINITY;
    for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
      double acc = 0;
      for (std::size_t i = 0; i < s.size(); ++i) acc += ((mask >> i) & 1 ? 1 : -1) * c[i];
      best = std::max(best, acc);
    }
    if (chosen < best - 1e-12) ++failures;
    ++checked;
  }
  o.pass = failures == 0;
  o.detail = fmt("%d sets, %d suboptimal", checked, failures);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria{
      {1, "exact identities", criterion1, 30},
      {2, "Parseval floor on corpus", criterion2, 0},
      {3, "perturbation, sine case", [] { return theorem_case(PerturbationCase::Sine); }, 0},
      {4, "perturbation, cosine case", [] { return theorem_case(PerturbationCase::Cosine); }, 0},
      {5, "collision multiplicity", criterion5, 0},
      {6, "Sidon difference sets", criterion6, 0},
      {7, "conjugate kernel L1 growth", criterion7, 0},
      {8, "density soundness and growth", criterion8, 0},
      {9, "oracle spot values", criterion9, 0},
      {10, "sign optimality", criterion10, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(t0);
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += fmt(" (over %.0fs limit)", c.limit_s);
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s -- %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
