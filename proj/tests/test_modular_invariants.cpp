#include <gonal/modular_invariants.hpp>

#include <gonal/screen.hpp>  // the genus-0 / genus-1 level constants

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace gonal;

TEST_CASE("index psi on known levels") {
  // Cross-checked against the projective-line enumeration below.
  CHECK(psi_index(1) == 1);
  CHECK(psi_index(2) == 3);
  CHECK(psi_index(6) == 12);
  CHECK(psi_index(12) == 24);
  CHECK(psi_index(23) == 24);
  CHECK(psi_index(37) == 38);
  CHECK(psi_index(97) == 98);
  CHECK(psi_index(10000000) == 18000000);
}

TEST_CASE("psi is multiplicative across coprime factors") {
  for (std::int64_t m = 1; m <= 60; ++m) {
    for (std::int64_t n = 1; m * n <= 2000; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(psi_index(m * n) == psi_index(m) * psi_index(n));
    }
  }
}

TEST_CASE("projective-line enumeration agrees with the formula") {
  // The enumeration counts orbits directly and shares nothing with the
  // multiplicative formula; full agreement up to 2000 runs in the selftest
  // and the acceptance suite, a decent prefix here.
  for (std::int64_t n = 1; n <= 300; ++n) {
    CHECK(psi_projective_line_count(n) == psi_index(n));
  }
  CHECK(psi_projective_line_count(1024) == psi_index(1024));
  CHECK(psi_projective_line_count(1800) == psi_index(1800));
  CHECK_THROWS_AS(psi_projective_line_count(0), std::invalid_argument);
  CHECK_THROWS_AS(psi_projective_line_count(30000), std::invalid_argument);
}

TEST_CASE("elliptic point counts") {
  // nu2: zero when 4 | n, otherwise split by primes mod 4.
  CHECK(elliptic_point_counts(1).nu2 == 1);
  CHECK(elliptic_point_counts(2).nu2 == 1);
  CHECK(elliptic_point_counts(4).nu2 == 0);
  CHECK(elliptic_point_counts(5).nu2 == 2);
  CHECK(elliptic_point_counts(25).nu2 == 2);
  CHECK(elliptic_point_counts(65).nu2 == 4);  // 5 * 13, both 1 mod 4
  CHECK(elliptic_point_counts(3).nu2 == 0);   // 3 mod 4 kills it
  CHECK(elliptic_point_counts(37).nu2 == 2);
  // nu3: zero when 9 | n, otherwise split by primes mod 3.
  CHECK(elliptic_point_counts(1).nu3 == 1);
  CHECK(elliptic_point_counts(3).nu3 == 1);
  CHECK(elliptic_point_counts(9).nu3 == 0);
  CHECK(elliptic_point_counts(7).nu3 == 2);
  CHECK(elliptic_point_counts(91).nu3 == 4);  // 7 * 13, both 1 mod 3
  CHECK(elliptic_point_counts(2).nu3 == 0);   // 2 mod 3 kills it
  CHECK(elliptic_point_counts(37).nu3 == 2);
}

TEST_CASE("cusp counts") {
  CHECK(cusp_count(1) == 1);
  CHECK(cusp_count(2) == 2);
  CHECK(cusp_count(4) == 3);
  CHECK(cusp_count(12) == 6);
  CHECK(cusp_count(36) == 12);
  CHECK(cusp_count(49) == 8);
  CHECK(cusp_count(97) == 2);  // primes always have exactly two cusps
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 37, 59, 71}) CHECK(cusp_count(p) == 2);
}

TEST_CASE("full invariants at level 37") {
  const ModularInvariants inv = modular_invariants(37);
  CHECK(inv.psi == 38);
  CHECK(inv.nu2 == 2);
  CHECK(inv.nu3 == 2);
  CHECK(inv.cusps == 2);
  CHECK(inv.genus == 2);
}

TEST_CASE("genus lists up to 200 match the classical tables") {
  std::vector<std::int64_t> g0, g1;
  for (std::int64_t n = 1; n <= 200; ++n) {
    const std::int64_t g = modular_invariants(n).genus;
    if (g == 0) g0.push_back(n);
    if (g == 1) g1.push_back(n);
  }
  CHECK(std::equal(g0.begin(), g0.end(), kGenusZeroLevels.begin(), kGenusZeroLevels.end()));
  CHECK(std::equal(g1.begin(), g1.end(), kGenusOneLevels.begin(), kGenusOneLevels.end()));
}

TEST_CASE("genus formula denominators always clear") {
  // 12(g - 1) = psi - 3 nu2 - 4 nu3 - 6 cusps, so the right side must be
  // divisible by 12 and bounded below by -12; modular_invariants throws if
  // its internal integrality check ever fails.
  std::int64_t violations = 0;
  for (std::int64_t n = 1; n <= 100000; ++n) {
    const ModularInvariants inv = modular_invariants(n);
    const std::int64_t combo = inv.psi - 3 * inv.nu2 - 4 * inv.nu3 - 6 * inv.cusps;
    if (combo % 12 != 0 || combo / 12 != inv.genus - 1 || inv.genus < 0 || inv.psi < n ||
        inv.cusps < 1)
      ++violations;
  }
  CHECK(violations == 0);
}
