#include <gonal/bounds.hpp>

#include <gonal/factorization.hpp>
#include <gonal/modular_invariants.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gonal {

i128 castelnuovo_severi_bound(i128 g1, i128 g2, std::int64_t d1, std::int64_t d2) {
  if (g1 < 0 || g2 < 0) throw std::invalid_argument("castelnuovo_severi_bound: negative genus");
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("castelnuovo_severi_bound: degrees must be >= 1");
  return checked_add(checked_add(checked_mul(d1, g1), checked_mul(d2, g2)),
                     checked_mul(d1 - 1, d2 - 1));
}

i128 tower_genus_bound(std::int64_t d, std::int64_t d_prime) {
  if (d_prime < 1 || d < 1) throw std::invalid_argument("tower_genus_bound: degrees must be >= 1");
  if (d % d_prime != 0) throw std::invalid_argument("tower_genus_bound: d' must divide d");
  const i128 r = d / d_prime - 1;
  return checked_mul(r, r);
}

i128 tower_step_bound(i128 g, std::int64_t e) {
  if (g < 0) throw std::invalid_argument("tower_step_bound: negative genus");
  if (e < 2) throw std::invalid_argument("tower_step_bound: step degree must be >= 2");
  return checked_add(checked_mul(checked_mul(2, e), g), checked_mul(e - 1, e - 1));
}

TowerStep make_tower_step(std::int64_t d_parent, std::int64_t e) {
  if (e < 2) throw std::invalid_argument("make_tower_step: step degree must be >= 2");
  if (d_parent < 1 || d_parent % e != 0)
    throw std::invalid_argument("make_tower_step: step degree must divide parent gonality");
  return TowerStep{d_parent, e, d_parent / e};
}

MassValue supersingular_mass(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("supersingular_mass: p must be prime");
  if (p == 2) return {2, Rational(1, 24)};
  if (p == 3) return {3, Rational(1, 12)};
  return {p, Rational(p - 1, 24)};
}

namespace {

// Minimal arithmetic in F_{p^2} = F_p(sqrt(r)), r a quadratic non-residue.
// Everything fits comfortably in int64 for the supported p < 500.
struct Fp2 {
  std::int64_t a = 0;  // a + b*sqrt(r)
  std::int64_t b = 0;
  friend bool operator==(const Fp2&, const Fp2&) = default;
  friend bool operator<(const Fp2& x, const Fp2& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

struct QuadraticField {
  std::int64_t p;
  std::int64_t r;

  explicit QuadraticField(std::int64_t prime) : p(prime), r(2) {
    while (pow_mod(r, (p - 1) / 2) != p - 1) ++r;  // find a non-residue
  }

  std::int64_t pow_mod(std::int64_t base, std::int64_t exp) const {
    std::int64_t acc = 1;
    base %= p;
    while (exp > 0) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return acc;
  }

  Fp2 add(const Fp2& x, const Fp2& y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
  Fp2 sub(const Fp2& x, const Fp2& y) const {
    return {(x.a - y.a % p + p) % p, (x.b - y.b % p + p) % p};
  }
  Fp2 mul(const Fp2& x, const Fp2& y) const {
    return {(x.a * y.a + x.b * y.b % p * r) % p, (x.a * y.b + x.b * y.a) % p};
  }
  Fp2 inv(const Fp2& x) const {
    // (a + b sqrt r)^-1 = (a - b sqrt r) / (a^2 - r b^2); the norm is a
    // nonzero element of F_p, inverted by Fermat.
    const std::int64_t norm = ((x.a * x.a - x.b * x.b % p * r) % p + p) % p;
    const std::int64_t ninv = pow_mod(norm, p - 2);
    return {x.a * ninv % p, (p - x.b % p) % p * ninv % p};
  }
};

}  // namespace

MassValue supersingular_mass_deuring(std::int64_t p) {
  if (!is_prime(p) || p < 5 || p > 499)
    throw std::invalid_argument("supersingular_mass_deuring: need a prime 5 <= p <= 499");

  // Coefficients of the Deuring polynomial H_p(t) = sum_i C(m, i)^2 t^i,
  // m = (p-1)/2, from a Pascal triangle reduced mod p (m < p, so no
  // carrying subtleties).
  const std::int64_t m = (p - 1) / 2;
  std::vector<std::int64_t> row{1};
  for (std::int64_t k = 1; k <= m; ++k) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(k) + 1, 1);
    for (std::int64_t i = 1; i < k; ++i)
      next[static_cast<std::size_t>(i)] =
          (row[static_cast<std::size_t>(i - 1)] + row[static_cast<std::size_t>(i)]) % p;
    row = std::move(next);
  }
  std::vector<std::int64_t> coeff(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) coeff[i] = row[i] * row[i] % p;

  const QuadraticField F(p);

  // The supersingular lambda-line: every root of H_p in F_{p^2}, located by
  // brute-force evaluation at all p^2 field elements.
  std::set<Fp2> jays;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      const Fp2 lambda{a, b};
      Fp2 value{0, 0};
      for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {  // Horner
        value = F.add(F.mul(value, lambda), Fp2{*it, 0});
      }
      if (value != Fp2{0, 0}) continue;

      // j(lambda) = 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda-1)^2);
      // H_p has no root at 0 or 1, so the denominator never vanishes.
      const Fp2 one{1, 0};
      const Fp2 num = F.sub(F.add(F.mul(lambda, lambda), one), lambda);
      const Fp2 num3 = F.mul(F.mul(num, num), num);
      const Fp2 lm1 = F.sub(lambda, one);
      const Fp2 den = F.mul(F.mul(lambda, lambda), F.mul(lm1, lm1));
      jays.insert(F.mul(Fp2{256 % p, 0}, F.mul(num3, F.inv(den))));
    }
  }

  // Mass = sum over supersingular j of 1/|Aut|: 6 automorphisms at j = 0,
  // 4 at j = 1728, 2 otherwise (p >= 5 keeps those two loci distinct).
  Rational mass(0);
  for (const Fp2& j : jays) {
    if (j == Fp2{0, 0}) {
      mass = mass + Rational(1, 6);
    } else if (j == Fp2{1728 % p, 0}) {
      mass = mass + Rational(1, 4);
    } else {
      mass = mass + Rational(1, 2);
    }
  }
  return {p, mass};
}

Rational point_count_lower_bound(std::int64_t n, std::int64_t p) {
  if (n < 1) throw std::invalid_argument("point_count_lower_bound: level must be positive");
  const MassValue mv = supersingular_mass(p);  // validates primality
  if (n % p == 0)
    throw std::invalid_argument("point_count_lower_bound: p must not divide the level");
  const Factorization f = factorize(n);
  const i128 cusp_classes = checked_pow(2, distinct_prime_count(f));
  return Rational(cusp_classes) + Rational(2) * mv.mass * Rational(psi_index(f));
}

i128 weil_upper_bound(i128 g, std::int64_t q) {
  if (g < 0) throw std::invalid_argument("weil_upper_bound: negative genus");
  if (q < 2) throw std::invalid_argument("weil_upper_bound: field size must be >= 2");
  const i128 s = isqrt(q);
  if (checked_mul(s, s) != q)
    throw std::invalid_argument("weil_upper_bound: field size must be a perfect square");
  return checked_add(checked_add(checked_mul(checked_mul(2, g), s), q), 1);
}

i128 gonal_point_cap(std::int64_t p, std::int64_t d) {
  if (p < 2) throw std::invalid_argument("gonal_point_cap: p must be >= 2");
  if (d < 1) throw std::invalid_argument("gonal_point_cap: gonality must be >= 1");
  // Weil branch at the tower genus cap (d-1)^2 over F_{p^2}, against the
  // degree-d pullback branch; the true cap is whichever is larger.
  const i128 q = checked_mul(p, p);
  const i128 weil = weil_upper_bound(checked_mul(d - 1, d - 1), to_int64(q));
  const i128 pullback = checked_mul(checked_add(q, 1), d);
  return std::max(weil, pullback);
}

}  // namespace gonal
