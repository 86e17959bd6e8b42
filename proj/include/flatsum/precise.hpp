#pragma once

// Two-word floating point helpers: exact products, argument reduction of
// integer multiples of x modulo 2*pi, and compensated accumulation.

#include <cmath>
#include <cstdint>

namespace flatsum {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble dd_add(DoubleDouble a, double b) {
  DoubleDouble s = two_sum(a.hi, b);
  s.lo += a.lo;
  return two_sum(s.hi, s.lo);
}

/// Largest |multiplier| accepted by reduce_angle (exact as a double).
inline constexpr std::int64_t kMaxReductionMultiplier = std::int64_t{1} << 53;

/// Returns r with r ≡ multiplier * x (mod 2*pi), |r| <= pi (up to rounding),
/// where multiplier * x is taken as the exact real product of the two inputs.
DoubleDouble reduce_angle(std::int64_t multiplier, double x);

struct SinCos {
  double sin = 0.0;
  double cos = 0.0;
};

/// sin and cos of multiplier * x, evaluated on the reduced angle.
inline SinCos sincos_multiple(std::int64_t multiplier, double x) {
  const DoubleDouble r = reduce_angle(multiplier, x);
  const double s = std::sin(r.hi);
  const double c = std::cos(r.hi);
  return {s + c * r.lo, c - s * r.lo};
}

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace flatsum
