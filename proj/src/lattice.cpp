#include "lattice.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>

namespace flatsum::detail {
namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
struct PlanDestroy {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

}  // namespace

LatticeSamples sample_lattice(Spectrum set, SumKind kind, std::size_t n,
                              std::size_t first, std::size_t count,
                              int orders) {
  if (n < 2 || first + count > n || orders < 1 || orders > 3) {
    throw DomainError("sample_lattice: bad lattice request");
  }
  const std::size_t half = n / 2 + 1;
  std::unique_ptr<double, FftwFree> in(fftw_alloc_real(n));
  std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(half));
  if (!in || !out) {
    throw ResourceError("sample_lattice: FFT buffer allocation failed");
  }
  std::unique_ptr<fftw_plan_s, PlanDestroy> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(),
                                    FFTW_ESTIMATE));
  }
  if (!plan) {
    throw ResourceError("sample_lattice: FFT planning failed");
  }

  LatticeSamples result;
  result.n = n;
  result.first = first;
  std::vector<double>* dest[3] = {&result.d0, &result.d1, &result.d2};

  for (int order = 0; order < orders; ++order) {
    std::fill(in.get(), in.get() + n, 0.0);
    for (std::size_t j = 0; j < set.size(); ++j) {
      const auto lambda = static_cast<double>(set.values[j]);
      const double w = set.multiplicity(j) * std::pow(lambda, order);
      in.get()[static_cast<std::size_t>(set.values[j]) % n] += w;
    }
    fftw_execute_dft_r2c(plan.get(), in.get(), out.get());

    // out[k] = sum_r a_r exp(-2 pi i r k / n); indices past n/2 by symmetry.
    auto& d = *dest[order];
    d.resize(count);
    const fftw_complex* X = out.get();
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t k = first + i;
      double re, im;
      if (k < half) {
        re = X[k][0];
        im = X[k][1];
      } else {
        re = X[n - k][0];
        im = -X[n - k][1];
      }
      if (kind == SumKind::Sine) {
        d[i] = order == 0 ? -im : order == 1 ? re : im;
      } else {
        d[i] = order == 0 ? re : order == 1 ? im : -re;
      }
    }
  }
  return result;
}

}  // namespace flatsum::detail
