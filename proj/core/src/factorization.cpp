#include <gonal/factorization.hpp>

#include <algorithm>
#include <stdexcept>

namespace gonal {

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  Factorization f;
  f.n = n;
  std::int64_t m = n;
  auto strip = [&](std::int64_t p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // Remaining prime factors lie in the 6k +- 1 residue classes.
  for (std::int64_t p = 5; p <= m / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t p = 5; p <= n / p; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

int distinct_prime_count(const Factorization& f) { return static_cast<int>(f.factors.size()); }

int distinct_prime_count(std::int64_t n) { return distinct_prime_count(factorize(n)); }

std::vector<std::int64_t> divisors(const Factorization& f) {
  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    std::int64_t pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::int64_t euler_phi(std::int64_t n) {
  const Factorization f = factorize(n);
  std::int64_t phi = 1;
  for (const auto& [p, e] : f.factors) {
    std::int64_t pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

}  // namespace gonal
