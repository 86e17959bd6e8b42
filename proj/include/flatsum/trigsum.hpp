#pragma once

// Frequency sets and the sine/cosine sums they define, with certified
// extrema
//
//   M1 = max_{0<=x<=2pi} |sum_j sin(lambda_j x)|
//   M2 = -min_{0<=x<=2pi} sum_j cos(lambda_j x).
//
// Every extremum is reported as a two-sided bracket: `value` is attained at
// `x_star`, and `certified_bound` is an upper bound on the supremum obtained
// by branch and bound with Taylor bounds on grid brackets.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flatsum/errors.hpp"

namespace flatsum {

enum class SumKind { Sine, Cosine };

std::string to_string(SumKind kind);

/// Strictly increasing positive integer frequencies lambda_1 < ... < lambda_N.
class FrequencySet {
 public:
  static constexpr std::int64_t kMaxFrequency = std::int64_t{1} << 46;

  /// Throws DomainError unless `freqs` is non-empty, strictly increasing and
  /// within [1, kMaxFrequency].
  explicit FrequencySet(std::vector<std::int64_t> freqs);

  std::span<const std::int64_t> freqs() const { return freqs_; }
  std::size_t size() const { return freqs_.size(); }
  std::int64_t max() const { return freqs_.back(); }
  std::int64_t operator[](std::size_t i) const { return freqs_[i]; }

  friend bool operator==(const FrequencySet&, const FrequencySet&) = default;

 private:
  std::vector<std::int64_t> freqs_;
};

struct PerturbedEntry {
  std::int64_t value = 0;
  int multiplicity = 1;
  friend bool operator==(const PerturbedEntry&, const PerturbedEntry&) = default;
};

/// Multiset of positive integers in which every value occurs at most twice.
class PerturbedSet {
 public:
  explicit PerturbedSet(const std::vector<PerturbedEntry>& entries);

  std::span<const std::int64_t> values() const { return values_; }
  std::span<const int> multiplicities() const { return mult_; }
  std::vector<PerturbedEntry> entries() const;
  /// Entries with multiplicity 2.
  std::vector<PerturbedEntry> collisions() const;
  std::size_t distinct() const { return values_.size(); }
  std::size_t total_multiplicity() const;
  std::int64_t max() const { return values_.back(); }

 private:
  std::vector<std::int64_t> values_;
  std::vector<int> mult_;
};

/// Read-only view used by every evaluator: frequencies with optional
/// multiplicities (empty span means all ones).
struct Spectrum {
  std::span<const std::int64_t> values;
  std::span<const int> multiplicities;

  Spectrum(const FrequencySet& s) : values(s.freqs()) {}  // NOLINT
  Spectrum(const PerturbedSet& s)                         // NOLINT
      : values(s.values()), multiplicities(s.multiplicities()) {}
  Spectrum(std::span<const std::int64_t> v, std::span<const int> m = {})
      : values(v), multiplicities(m) {}

  int multiplicity(std::size_t i) const {
    return multiplicities.empty() ? 1 : multiplicities[i];
  }
  std::size_t size() const { return values.size(); }
  /// Sum of multiplicities (the N of the source set).
  std::size_t count() const;
  std::int64_t max() const { return values.empty() ? 0 : values.back(); }
};

/// Uniform grid a, a+h, ..., b with h = (b-a)/(n_points-1).
struct GridSpec {
  double a = 0.0;
  double b = 0.0;
  std::size_t n_points = 2;

  /// Validates 0 <= a < b <= 2pi and n_points >= 2.
  static GridSpec make(double a, double b, std::size_t n_points);
  double spacing() const { return (b - a) / static_cast<double>(n_points - 1); }
  double point(std::size_t i) const;
};

struct ExtremumCertificate {
  double x_star = 0.0;
  double value = 0.0;
  double certified_bound = 0.0;
  double tol = 0.0;
  std::int64_t lipschitz = 0;
};

/// Raised when a certified extremum runs out of evaluations; carries the
/// best certificate found so far (its gap exceeds the requested tol).
class ExtremumBudgetError : public ResourceError {
 public:
  ExtremumBudgetError(const std::string& what, ExtremumCertificate best)
      : ResourceError(what), best_(best) {}
  const ExtremumCertificate& best_so_far() const { return best_; }

 private:
  ExtremumCertificate best_;
};

/// sum_j m_j sin(lambda_j x) or sum_j m_j cos(lambda_j x).
double eval_point(Spectrum set, SumKind kind, double x);

/// Value and first two derivatives of the sum at x.
struct Jet {
  double d0 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};
Jet eval_jet(Spectrum set, SumKind kind, double x);

inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 28;

std::vector<double> eval_grid(Spectrum set, SumKind kind, const GridSpec& grid);

/// Exact sum of m_j * lambda_j; throws ResourceError past 2^63.
std::int64_t lipschitz_bound(Spectrum set);

struct ExtremumOptions {
  /// Maximum number of sample evaluations (lattice points plus exact
  /// refinement evaluations).
  std::uint64_t budget = std::uint64_t{1} << 28;
  /// Points evaluated up front; the reported value is at least the
  /// objective at each hint lying inside the interval.
  std::vector<double> hints;
};

/// Certified sup of |f| over [a, b] ⊆ [0, 2pi].
ExtremumCertificate certified_max_abs(Spectrum set, SumKind kind, double a,
                                      double b, double tol,
                                      const ExtremumOptions& options = {});

/// Certified sup of -f over [a, b], i.e. minus the minimum of f.
ExtremumCertificate certified_neg_min(Spectrum set, SumKind kind, double a,
                                      double b, double tol,
                                      const ExtremumOptions& options = {});

/// M1 of the sine sum. Computed over [0, pi] since |f(2pi - x)| = |f(x)|.
ExtremumCertificate m1(Spectrum set, double tol,
                       const ExtremumOptions& options = {});

/// M2 of the cosine sum, over [0, pi] by evenness about pi.
ExtremumCertificate m2(Spectrum set, double tol,
                       const ExtremumOptions& options = {});

/// sqrt(n / 2): the mean square of a sine sum with n distinct frequencies is
/// n/2, so M1 >= sqrt(n/2).
double parseval_floor(std::int64_t n);

}  // namespace flatsum
