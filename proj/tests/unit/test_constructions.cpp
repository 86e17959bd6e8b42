#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "flatsum/constructions.hpp"

using namespace flatsum;

namespace {

std::vector<std::int64_t> to_vec(const FrequencySet& s) {
  return {s.freqs().begin(), s.freqs().end()};
}

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// max over u > 0 of (1 - cos u) / u, by golden section on [1, 4].
double coherent_limit() {
  auto f = [](double u) { return (1 - std::cos(u)) / u; };
  double a = 1, b = 4;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int i = 0; i < 200; ++i) {
    double c = b - g * (b - a), d = a + g * (b - a);
    (f(c) > f(d) ? b : a) = (f(c) > f(d) ? d : c);
  }
  return f((a + b) / 2);
}

}  // namespace

TEST_CASE("consecutive") {
  CHECK(to_vec(consecutive(1)) == std::vector<std::int64_t>{1});
  CHECK(to_vec(consecutive(3)) == std::vector<std::int64_t>{1, 2, 3});
  CHECK(consecutive(10).size() == 10);
  CHECK_THROWS_AS(consecutive(0), DomainError);
  CHECK(std::abs(m2(consecutive(10), 1e-9).value - 2.7984650508372188) < 1e-9);
}

TEST_CASE("random_set") {
  CHECK(to_vec(random_set(5, 1, 5, Seed{1})) == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  CHECK(to_vec(random_set(1, 7, 7, Seed{1})) == std::vector<std::int64_t>{7});
  CHECK_THROWS_AS(random_set(6, 1, 5, Seed{1}), DomainError);
  CHECK_THROWS_AS(random_set(3, 0, 5, Seed{1}), DomainError);
  CHECK_THROWS_AS(random_set(0, 1, 5, Seed{1}), DomainError);
  auto a = random_set(500, 11, 1'000'000, Seed{42});
  auto b = random_set(500, 11, 1'000'000, Seed{42});
  auto c = random_set(500, 11, 1'000'000, Seed{43});
  CHECK(a == b);
  CHECK(!(a == c));
  CHECK(a.freqs().front() >= 11);
  CHECK(a.max() <= 1'000'000);
}

TEST_CASE("random positive frequencies are coherent near zero") {
  // All terms share the sign of sin(lambda x) for x below 1 / lambda_max.
  const double limit = coherent_limit();
  CHECK(limit == doctest::Approx(0.7246).epsilon(1e-3));
  auto s = random_set(1000, 11, 1'000'000, Seed{42});
  auto c = m1(s, 1e-6);
  CHECK(std::abs(c.value / 1000.0 - limit) < 0.05);
  CHECK(c.x_star < 1e-4);
}

TEST_CASE("is_prime") {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    if (is_prime(n) != trial_division(n)) {
      FAIL("mismatch at " << n);
    }
  }
  CHECK(!is_prime(561));
  CHECK(!is_prime(3215031751ULL));
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK(!is_prime((1ULL << 61) + 1));
}

TEST_CASE("Erdos-Turan Sidon sets") {
  auto s5 = erdos_turan_sidon(5);
  CHECK(std::vector<std::int64_t>(s5.elems().begin(), s5.elems().end()) ==
        std::vector<std::int64_t>{0, 11, 24, 34, 41});
  auto s2 = erdos_turan_sidon(2);
  CHECK(std::vector<std::int64_t>(s2.elems().begin(), s2.elems().end()) ==
        std::vector<std::int64_t>{0, 5});
  auto s3 = erdos_turan_sidon(3);
  CHECK(std::vector<std::int64_t>(s3.elems().begin(), s3.elems().end()) ==
        std::vector<std::int64_t>{0, 7, 13});
  CHECK_THROWS_AS(erdos_turan_sidon(4), DomainError);
  CHECK_THROWS_AS(erdos_turan_sidon(1), DomainError);
  for (std::int64_t p = 2; p <= 211; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    auto s = erdos_turan_sidon(p);
    CHECK(s.size() == static_cast<std::size_t>(p));
    CHECK(is_sidon(s.elems()));
    CHECK(s.elems().back() < 2 * p * p);
  }
}

TEST_CASE("is_sidon") {
  std::vector<std::int64_t> yes{0, 1, 3}, no{0, 1, 2}, no2{0, 2, 3, 5};
  CHECK(is_sidon(yes));
  CHECK(!is_sidon(no));
  CHECK(!is_sidon(no2));
  CHECK_THROWS_AS(SidonSet({0, 1, 2}), DomainError);
  CHECK_THROWS_AS(SidonSet({3, 1}), DomainError);
}

TEST_CASE("difference sets") {
  CHECK(to_vec(difference_set(SidonSet({0, 1, 3}))) == std::vector<std::int64_t>{1, 2, 3});
  CHECK(to_vec(difference_set(erdos_turan_sidon(5))) ==
        std::vector<std::int64_t>{7, 10, 11, 13, 17, 23, 24, 30, 34, 41});
  for (std::int64_t p : {7, 11, 13, 31}) {
    auto d = difference_set(erdos_turan_sidon(p));
    CHECK(d.size() == static_cast<std::size_t>(p * (p - 1) / 2));
    CHECK(d.max() < 2 * p * p);
  }
  auto d11 = difference_set(erdos_turan_sidon(11));
  CHECK(d11.size() == 55);
  CHECK(m2(d11, 1e-9).certified_bound <= 5.5 + 1e-6);
}

TEST_CASE("rounded exponential") {
  CHECK(to_vec(rounded_exponential(1)) == std::vector<std::int64_t>{3});
  CHECK(to_vec(rounded_exponential(2)) == std::vector<std::int64_t>{3, 4});
  CHECK(to_vec(rounded_exponential(8)) == std::vector<std::int64_t>{3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(rounded_exponential_term(8) == 7);
  auto big = rounded_exponential(2000);
  for (std::size_t j = 0; j < big.size(); ++j) {
    CHECK(big[j] >= rounded_exponential_term(static_cast<std::int64_t>(j) + 1));
  }
  CHECK_THROWS_AS(rounded_exponential(0), DomainError);
  CHECK_THROWS_AS(rounded_exponential(40000), DomainError);
}
