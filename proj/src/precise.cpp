#include "flatsum/precise.hpp"

#include <cstdlib>

namespace flatsum {
namespace {

// 2*pi = kC1 + kC2 + kC3 to about 160 bits.
constexpr double kC1 = 0x1.921fb54442d18p+2;
constexpr double kC2 = 0x1.1a62633145c07p-52;
constexpr double kC3 = -0x1.f1976b7ed8fbcp-108;
constexpr double kInvTwoPi = 0.15915494309189533576888376337251436;

}  // namespace

DoubleDouble reduce_angle(std::int64_t multiplier, double x) {
  const double m = static_cast<double>(multiplier);
  const DoubleDouble p = two_prod(m, x);
  const double k = std::nearbyint(p.hi * kInvTwoPi);
  if (k == 0.0) {
    return two_sum(p.hi, p.lo);
  }
  const DoubleDouble t1 = two_prod(k, kC1);
  const DoubleDouble t2 = two_prod(k, kC2);
  // p.hi and t1.hi lie within a factor of two of each other, so this is exact.
  DoubleDouble r = two_sum(p.hi - t1.hi, p.lo);
  r = dd_add(r, -t1.lo);
  r = dd_add(r, -t2.hi);
  r = dd_add(r, -t2.lo);
  r = dd_add(r, -k * kC3);
  return r;
}

}  // namespace flatsum
