#include "flatsum/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

namespace flatsum {

SidonSet::SidonSet(std::vector<std::int64_t> elems, std::optional<std::int64_t> p)
    : elems_(std::move(elems)), p_(p) {
  if (elems_.empty()) throw DomainError("Sidon set must be non-empty");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 0) throw DomainError("Sidon set elements must be >= 0");
    if (i > 0 && elems_[i] <= elems_[i - 1]) {
      throw DomainError("Sidon set elements must be strictly increasing");
    }
  }
  if (!is_sidon(elems_)) {
    throw DomainError("set is not Sidon: two pairwise differences coincide");
  }
}

FrequencySet consecutive(std::int64_t n) {
  if (n < 1) throw DomainError("consecutive: n must be >= 1");
  std::vector<std::int64_t> f(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = i + 1;
  return FrequencySet(std::move(f));
}

FrequencySet random_set(std::int64_t n, std::int64_t lambda_min,
                        std::int64_t lambda_max, Seed seed) {
  if (n < 1) throw DomainError("random_set: n must be >= 1");
  if (lambda_min < 1 || lambda_max > FrequencySet::kMaxFrequency) {
    throw DomainError("random_set: range must lie in [1, 2^46]");
  }
  if (lambda_max < lambda_min || lambda_max - lambda_min + 1 < n) {
    throw DomainError("random_set: range [" + std::to_string(lambda_min) + ", " +
                      std::to_string(lambda_max) + "] holds fewer than " +
                      std::to_string(n) + " integers");
  }
  // Floyd's sampling of n distinct offsets from [0, range).
  const std::int64_t range = lambda_max - lambda_min + 1;
  std::mt19937_64 rng(seed.value);
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(n) * 2);
  for (std::int64_t j = range - n; j < range; ++j) {
    std::uniform_int_distribution<std::int64_t> pick(0, j);
    const std::int64_t t = pick(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::int64_t> f;
  f.reserve(chosen.size());
  for (std::int64_t v : chosen) f.push_back(v + lambda_min);
  std::sort(f.begin(), f.end());
  return FrequencySet(std::move(f));
}

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Jim Sinclair's base set: deterministic below 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    const std::uint64_t base = a % n;
    if (base == 0) continue;
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

SidonSet erdos_turan_sidon(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw DomainError("erdos_turan_sidon: p = " + std::to_string(p) + " is not prime");
  }
  if (p > (std::int64_t{1} << 22)) {
    throw DomainError("erdos_turan_sidon: p too large");
  }
  std::vector<std::int64_t> elems(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) {
    elems[static_cast<std::size_t>(j)] = 2 * p * j + (j * j) % p;
  }
  return SidonSet(std::move(elems), p);
}

bool is_sidon(std::span<const std::int64_t> s) {
  std::vector<std::int64_t> diffs;
  diffs.reserve(s.size() * (s.size() > 0 ? s.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const std::int64_t d = s[j] - s[i];
      if (d == 0) return false;
      diffs.push_back(d < 0 ? -d : d);
    }
  }
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

FrequencySet difference_set(const SidonSet& s) {
  const auto e = s.elems();
  std::vector<std::int64_t> diffs;
  diffs.reserve(e.size() * (e.size() - 1) / 2);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) diffs.push_back(e[j] - e[i]);
  }
  if (diffs.empty()) {
    throw DomainError("difference_set: need at least two elements");
  }
  std::sort(diffs.begin(), diffs.end());
  return FrequencySet(std::move(diffs));
}

std::int64_t rounded_exponential_term(std::int64_t j) {
  if (j < 1) throw DomainError("rounded_exponential_term: j must be >= 1");
  return std::llround(std::exp(std::cbrt(static_cast<double>(j))));
}

FrequencySet rounded_exponential(std::int64_t n) {
  if (n < 1) throw DomainError("rounded_exponential: n must be >= 1");
  if (std::cbrt(static_cast<double>(n)) > std::log(static_cast<double>(FrequencySet::kMaxFrequency))) {
    throw DomainError("rounded_exponential: exp(n^{1/3}) exceeds 2^46");
  }
  std::vector<std::int64_t> f;
  f.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 1; j <= n; ++j) {
    std::int64_t v = rounded_exponential_term(j);
    if (!f.empty() && v <= f.back()) v = f.back() + 1;
    f.push_back(v);
  }
  if (f.back() > FrequencySet::kMaxFrequency) {
    throw DomainError("rounded_exponential: bumped value exceeds 2^46");
  }
  return FrequencySet(std::move(f));
}

}  // namespace flatsum
