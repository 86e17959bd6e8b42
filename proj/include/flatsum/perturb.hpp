#pragma once

// The +-1 perturbation procedure. For the sine case
//
//   sum_j sin((lambda_j + e_j) x) = cos x * S(x) + sin x * sum_j e_j cos(lambda_j x)
//                                 =        I     +       II,
//
// and on [pi/4, pi/2] (where sin x >= 2^{-1/2}) a point x0 with large
// rectified sum sum_j |cos(lambda_j x0)| plus e_j = sgn cos(lambda_j x0)
// makes II large. The cosine case is the same with
//
//   sum_j cos((lambda_j + e_j) x) = cos x * C(x) - sin x * sum_j e_j sin(lambda_j x)
//
// on [4pi/6, 5pi/6].

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flatsum/trigsum.hpp"

namespace flatsum {

enum class PerturbationCase { Sine, Cosine };

std::string to_string(PerturbationCase c);

struct Window {
  double a = 0.0;
  double b = 0.0;
  double length() const { return b - a; }
};

/// [pi/4, pi/2] for the sine case, [4pi/6, 5pi/6] for the cosine case.
Window case_window(PerturbationCase c);

/// Entries in {-1, +1}.
class SignVector {
 public:
  explicit SignVector(std::vector<int> eps);
  std::span<const int> values() const { return eps_; }
  std::size_t size() const { return eps_.size(); }
  int operator[](std::size_t i) const { return eps_[i]; }
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> eps_;
};

/// sum_j |cos(lambda_j x)| (sine case) or sum_j |sin(lambda_j x)| (cosine case).
double rectified_sum(const FrequencySet& set, PerturbationCase c, double x);

/// Best point of the rectified sum on min(budget, 16 lambda_max) uniform
/// samples of the case window, smallest x on ties, followed by a local
/// refinement that is kept only when it strictly improves the sum.
double select_x0(const FrequencySet& set, PerturbationCase c, std::uint64_t budget);

/// Window mean of |cos(lambda x)| (sine case) or |sin(lambda x)| (cosine
/// case), integrated panel by panel between the kinks.
double rectified_average(std::int64_t lambda, PerturbationCase c);

/// e_j = sgn cos(lambda_j x0) or sgn sin(lambda_j x0), with sgn(0) = +1.
SignVector choose_signs(const FrequencySet& set, double x0, PerturbationCase c);

/// The multiset {lambda_j + e_j}; a value can be hit at most twice.
PerturbedSet apply_perturbation(const FrequencySet& set, const SignVector& eps);

struct TheoremOptions {
  std::uint64_t x0_budget = std::uint64_t{1} << 14;
  ExtremumOptions extremum;
  /// Replaces the sign rule (diagnostics only; the report then no longer
  /// satisfies term_II == rectified_sum).
  std::optional<SignVector> forced_signs;
};

struct PerturbationReport {
  PerturbationCase perturbation_case;
  double x0;
  SignVector eps;
  double rectified_sum;
  double term_i;   // cos x0 * (original sum at x0)
  double term_ii;  // sum_j e_j cos(lambda_j x0), or e_j sin(...) for cosine
  double perturbed_value_at_x0;
  ExtremumCertificate original_extremum;
  ExtremumCertificate perturbed_extremum;
  double c_empirical;
  std::vector<PerturbedEntry> collisions;
  PerturbedSet perturbed;
  bool signs_forced = false;
  std::vector<std::string> warnings;
};

/// select_x0 -> choose_signs -> apply_perturbation -> certified extremum of
/// the perturbed sum (M1 for the sine case, M2 for the cosine case).
PerturbationReport run_theorem(const FrequencySet& set, PerturbationCase c,
                               double tol, const TheoremOptions& options = {});

}  // namespace flatsum
