#pragma once

#include <gonal/bounds.hpp>
#include <gonal/rational.hpp>
#include <gonal/wide_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gonal {

// Closed-form level bounds beyond which the screen provably excludes
// d-gonality (equivalently: torsion growth) for the stated level class.
//   odd      — odd levels:            60d - 25 (d <= 2), else 48(d-1)^2 + 35
//   coprime3 — levels prime to 3:     60d - 11 (d <= 2), else 36(d-1)^2 + 47
//   combined — all levels:            odd * coprime3
//   sharp    — best known:            25 (d = 1), 71 (d = 2), combined after
enum class BoundVariant { combined, odd, coprime3, sharp };

std::string to_string(BoundVariant v);
std::optional<BoundVariant> bound_variant_from_string(const std::string& s);

struct BoundResult {
  std::int64_t d = 1;
  BoundVariant variant = BoundVariant::combined;
  i128 value = 0;
};

BoundResult level_bound(std::int64_t d, BoundVariant variant);

// One component of the screen: the point-count lower bound for the part of
// the level prime to p, measured against the d-gonal cap over F_{p^2}.
struct ScreenComponent {
  std::int64_t part = 1;   // the factor of n being reduced
  std::int64_t prime = 2;  // reduction characteristic
  Rational lhs;            // guaranteed points of X0(part) over F_{p^2}
  i128 cap = 0;            // max points compatible with a degree-d map to P^1
  bool pass = true;        // lhs <= cap (ties pass: the screen only excludes)
};

// Verdict of the d-gonality screen at level n.
//
// The screen is one-sided: FAIL proves X0(n) admits no degree-d map to P^1
// (too many guaranteed points on a good reduction), while PASS proves
// nothing by itself.  For d >= 2 the verdict is the conjunction of the
// component passes; for d = 1 an exact criterion exists (genus 0) and the
// verdict additionally requires it, with the computed genus recorded.
// A level equal to 1 in a component passes trivially.  margin is
// min(cap - lhs) over the components (empty only in extended mode when no
// reduction prime is available).
struct ScreenReport {
  std::int64_t n = 1;
  std::int64_t d = 1;
  std::vector<ScreenComponent> components;
  std::optional<std::int64_t> genus;  // engaged only for d = 1
  bool pass = true;
  std::optional<Rational> margin;
};

// Single-prime screen: requires p prime and p not dividing n.
ScreenComponent screen_prime(std::int64_t n, std::int64_t d, std::int64_t p);

// Default screen: split n = 2^l * m with m odd, screen m at p = 2 and 2^l
// at p = 3.  Every level has both components defined.
ScreenReport screen_level(std::int64_t n, std::int64_t d);

// Extended screen: one component per prime p <= max_prime with p not
// dividing n, applied to the full level.  Strictly more aggressive primes
// rarely help (the cap grows like p^2) but the mode makes that observable.
ScreenReport screen_level_extended(std::int64_t n, std::int64_t d, std::int64_t max_prime);

// All levels n <= level_bound(d, combined) passing the degree-d screen,
// ascending.  Large ranges are sharded across hardware threads; the result
// is deterministic regardless of thread count.
std::vector<std::int64_t> enumerate_admissible(std::int64_t d);

// Smallest d the screen cannot rule out at level n (a true lower bound for
// the gonality of X0(n)), and the classical genus-based upper bound
// 1 + ceil(g/2) coming from the Brill–Noether pencil.
std::int64_t gonality_lower_bound(std::int64_t n);
std::int64_t gonality_upper_bound(std::int64_t n);

// Levels with genus(X0(n)) = 0 resp. 1 — finite, classical lists used as
// fixed points for self-checks.
inline constexpr std::array<std::int64_t, 15> kGenusZeroLevels = {1, 2,  3,  4,  5,  6,  7, 8,
                                                                 9, 10, 12, 13, 16, 18, 25};
inline constexpr std::array<std::int64_t, 12> kGenusOneLevels = {11, 14, 15, 17, 19, 20,
                                                                21, 24, 27, 32, 36, 49};

// Ogg's classification of the hyperelliptic X0(n) (Ogg 1974): 19 levels.
// A 17-level variant omitting 40 and 48 circulates in parts of the
// literature; both are kept so consistency checks can target the union.
inline constexpr std::array<std::int64_t, 19> kOggHyperelliptic = {
    22, 23, 26, 28, 29, 30, 31, 33, 35, 37, 39, 40, 41, 46, 47, 48, 50, 59, 71};
inline constexpr std::array<std::int64_t, 17> kOggHyperellipticPartial = {
    22, 23, 26, 28, 29, 30, 31, 33, 35, 37, 39, 41, 46, 47, 50, 59, 71};

}  // namespace gonal
