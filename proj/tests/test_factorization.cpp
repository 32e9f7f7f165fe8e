#include <gonal/factorization.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace gonal;

TEST_CASE("factorize on known shapes") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(97).factors == std::vector<std::pair<std::int64_t, int>>{{97, 1}});
  CHECK(factorize(360).factors == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1024).factors == std::vector<std::pair<std::int64_t, int>>{{2, 10}});
  CHECK(factorize(999983).factors == std::vector<std::pair<std::int64_t, int>>{{999983, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-6), std::invalid_argument);
}

TEST_CASE("factorize reconstructs its argument, primes ascending") {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    std::int64_t prod = 1;
    std::int64_t last_prime = 0;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > last_prime);
      CHECK(is_prime(p));
      CHECK(e >= 1);
      for (int i = 0; i < e; ++i) prod *= p;
      last_prime = p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("primality by trial division") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(49));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));  // 7 * 13, the classic trap
  CHECK(is_prime(2147483647));
  // Agreement with the factorization route.
  for (std::int64_t n = 2; n <= 2000; ++n) {
    const Factorization f = factorize(n);
    CHECK(is_prime(n) == (f.factors.size() == 1 && f.factors[0].second == 1));
  }
}

TEST_CASE("distinct prime count") {
  CHECK(distinct_prime_count(1) == 0);
  CHECK(distinct_prime_count(8) == 1);
  CHECK(distinct_prime_count(30) == 3);
  CHECK(distinct_prime_count(97) == 1);
  CHECK(distinct_prime_count(2 * 3 * 5 * 7 * 11 * 13) == 6);
}

TEST_CASE("divisor lists") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(49) == std::vector<std::int64_t>{1, 7, 49});
  // Count matches prod (e_i + 1) and the list is sorted and divides n.
  for (std::int64_t n = 1; n <= 1000; ++n) {
    const Factorization f = factorize(n);
    const auto divs = divisors(f);
    std::size_t expect = 1;
    for (const auto& [p, e] : f.factors) expect *= static_cast<std::size_t>(e) + 1;
    CHECK(divs.size() == expect);
    CHECK(std::is_sorted(divs.begin(), divs.end()));
    for (const std::int64_t d : divs) CHECK(n % d == 0);
  }
}

TEST_CASE("euler phi against direct gcd counting") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(97) == 96);
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::int64_t direct = 0;
    for (std::int64_t a = 1; a <= n; ++a)
      if (std::gcd(a, n) == 1) ++direct;
    CHECK(euler_phi(n) == direct);
  }
}
