#pragma once

#include <gonal/rational.hpp>
#include <gonal/wide_int.hpp>

#include <cstdint>

namespace gonal {

// Castelnuovo–Severi: a curve of genus g admitting independent maps of
// degrees d1, d2 to curves of genera g1, g2 satisfies
// g <= d1*g1 + d2*g2 + (d1-1)*(d2-1).  Returns that cap.
i128 castelnuovo_severi_bound(i128 g1, i128 g2, std::int64_t d1, std::int64_t d2);

// Genus cap for an intermediate curve in a tower: if gonalities d' | d
// stack through a degree-(d/d') map, the middle genus is at most
// (d/d' - 1)^2.  Throws unless d' divides d.
i128 tower_genus_bound(std::int64_t d, std::int64_t d_prime);

// One step of degree e >= 2 below a curve of genus g contributes at most
// 2*e*g + (e-1)^2 to the genus (Castelnuovo–Severi with a rational base).
i128 tower_step_bound(i128 g, std::int64_t e);

// A single gonality-tower step: parent gonality = e * child gonality.
struct TowerStep {
  std::int64_t d_parent = 2;
  std::int64_t e = 2;       // step degree, >= 2
  std::int64_t d_child = 1; // d_parent / e
};
TowerStep make_tower_step(std::int64_t d_parent, std::int64_t e);

// Mass of the supersingular locus in characteristic p: each supersingular
// j-point weighted by 1/|Aut|.  Eichler's mass formula gives (p-1)/24 for
// p >= 5; the small characteristics carry extra automorphisms and have
// masses 1/24 (p = 2) and 1/12 (p = 3).
struct MassValue {
  std::int64_t p = 2;
  Rational mass;
};
MassValue supersingular_mass(std::int64_t p);

// Independent verification route for supersingular_mass, sharing nothing
// with the closed formula: finds the roots of the Deuring polynomial
// H_p(t) = sum_i binom((p-1)/2, i)^2 t^i by exhaustive evaluation over
// F_{p^2}, maps each root lambda to j = 2^8 (lambda^2-lambda+1)^3 /
// (lambda^2 (lambda-1)^2), deduplicates, and adds 1/6 for j = 0, 1/4 for
// j = 1728, 1/2 otherwise.  Practical for odd primes 5 <= p <= 499.
MassValue supersingular_mass_deuring(std::int64_t p);

// Guaranteed points on the reduction of X0(n) at a good prime p (p not
// dividing n): 2^(number of distinct primes of n) rational cusps plus the
// supersingular weight 2 * mass(p) * psi(n).  Exact rational; throws if
// p | n or p is composite.
Rational point_count_lower_bound(std::int64_t n, std::int64_t p);

// Weil bound #C(F_q) <= q + 2g*sqrt(q) + 1 for a genus-g curve over F_q;
// only exact for square q, so non-squares are rejected.
i128 weil_upper_bound(i128 g, std::int64_t q);

// Cap on F_{p^2}-points of a curve admitting a degree-d map to P^1 over
// F_{p^2}: the larger of the Weil count at genus (d-1)^2 and the pullback
// count d*(p^2+1).  Both branches are always evaluated.
i128 gonal_point_cap(std::int64_t p, std::int64_t d);

}  // namespace gonal
