#pragma once

#include <cstddef>
#include <vector>

#include "flatsum/trigsum.hpp"

namespace flatsum::detail {

/// Sum value and derivatives at x_i = 2*pi*i/n, i in [first, first + count).
struct LatticeSamples {
  std::size_t n = 0;
  std::size_t first = 0;
  std::vector<double> d0, d1, d2;
};

/// Evaluates the first `orders` (1..3) derivative orders on the lattice with
/// one real-to-complex FFT per order.
LatticeSamples sample_lattice(Spectrum set, SumKind kind, std::size_t n,
                              std::size_t first, std::size_t count,
                              int orders);

}  // namespace flatsum::detail
