#pragma once

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

namespace flatsum::detail {

// Adaptive GK15 on [lo, hi] with the panel mapped onto [0, 1]. Boost tests
// the unit-interval error against a width-scaled tolerance, so narrow panels
// would otherwise recurse to full depth.
//
// abs_tol > 0 relaxes the relative target on panels whose L1 mass is so
// small that abs_tol dominates.
template <class F>
double integrate_panel(F f, double lo, double hi, unsigned depth, double rel_tol,
                       double abs_tol = 0.0) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double width = hi - lo;
  auto g = [&](double t) { return f(lo + width * t); };
  // Nodes lo + width * t are only resolved to an ulp of hi, which limits the
  // attainable relative accuracy on narrow panels far from the origin.
  rel_tol = std::max(rel_tol, 16.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::fabs(lo), std::fabs(hi)) / width);
  if (abs_tol > 0.0) {
    double err = 0.0, l1 = 0.0;
    const double rough = Kronrod::integrate(g, 0.0, 1.0, 0, rel_tol, &err, &l1);
    if (err * width <= abs_tol) return width * rough;
    if (l1 * width > 0.0) rel_tol = std::max(rel_tol, abs_tol / (l1 * width));
  }
  return width * Kronrod::integrate(g, 0.0, 1.0, depth, rel_tol);
}

}  // namespace flatsum::detail
