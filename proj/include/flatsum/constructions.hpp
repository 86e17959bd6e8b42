#pragma once

// Frequency-set generators: consecutive integers, uniform random sets,
// Erdos-Turan Sidon sets and their difference sets (cosine sums bounded
// below by -m/2), and rounded-exponential growth sets exp(j^{1/3}).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flatsum/trigsum.hpp"

namespace flatsum {

struct Seed {
  std::uint64_t value = 0;
};

/// Sorted distinct non-negative integers whose pairwise differences are all
/// distinct (a B2 set). The constructor verifies the property by brute force.
class SidonSet {
 public:
  explicit SidonSet(std::vector<std::int64_t> elems,
                    std::optional<std::int64_t> p = std::nullopt);

  std::span<const std::int64_t> elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  /// Generating prime, when built by erdos_turan_sidon.
  std::optional<std::int64_t> p() const { return p_; }

 private:
  std::vector<std::int64_t> elems_;
  std::optional<std::int64_t> p_;
};

/// {1, ..., n}.
FrequencySet consecutive(std::int64_t n);

/// n distinct integers drawn uniformly from [lambda_min, lambda_max], sorted.
/// Deterministic for a fixed seed.
FrequencySet random_set(std::int64_t n, std::int64_t lambda_min,
                        std::int64_t lambda_max, Seed seed);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// {2pj + (j^2 mod p) : j = 0..p-1}; p must be prime.
SidonSet erdos_turan_sidon(std::int64_t p);

/// True iff every positive difference of `s` occurs exactly once.
bool is_sidon(std::span<const std::int64_t> s);

/// The m(m-1)/2 positive differences, sorted. For a Sidon input they are
/// distinct and sum_j cos(lambda_j x) = (|sum_a e^{iax}|^2 - m)/2 >= -m/2.
FrequencySet difference_set(const SidonSet& s);

/// round(exp(j^{1/3})) before collision bumping.
std::int64_t rounded_exponential_term(std::int64_t j);

/// lambda_j = round(exp(j^{1/3})), j = 1..n, each collision bumped to the next
/// unused integer.
FrequencySet rounded_exponential(std::int64_t n);

}  // namespace flatsum
