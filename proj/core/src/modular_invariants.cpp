#include <gonal/modular_invariants.hpp>

#include <gonal/rational.hpp>
#include <gonal/wide_int.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace gonal {
namespace {

// Division-free modular reduction for 32-bit operands (Lemire 2019); the
// orbit enumeration below spends nearly all its time in (u*a) % n.
struct FastMod {
  std::uint64_t magic;
  std::uint64_t n;
  explicit FastMod(std::uint64_t modulus) : magic(~0ull / modulus + 1), n(modulus) {}
  std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t low = magic * (static_cast<std::uint64_t>(a) * b);
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(low) * n) >> 64);
  }
};

}  // namespace

std::int64_t psi_index(const Factorization& f) {
  // psi(n) = prod p^(e-1) * (p + 1).
  i128 psi = 1;
  for (const auto& [p, e] : f.factors) {
    psi = checked_mul(psi, checked_mul(checked_pow(p, e - 1), p + 1));
  }
  return to_int64(psi);
}

std::int64_t psi_index(std::int64_t n) { return psi_index(factorize(n)); }

std::int64_t psi_projective_line_count(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("psi_projective_line_count: argument must be positive");
  if (n == 1) return 1;
  if (n > 20000)
    throw std::invalid_argument("psi_projective_line_count: n too large for quadratic enumeration");

  // P^1(Z/n) = { (a : b) : gcd(a, b, n) = 1 } / (Z/n)^x.  Scan all pairs in
  // lexicographic order; each previously unseen valid pair opens a new
  // projective class, whose full unit orbit is then marked visited.  Nothing
  // here assumes multiplicativity, unit-orbit freeness, or any formula.
  const auto un = static_cast<std::uint32_t>(n);
  const FastMod fm(un);

  std::vector<std::uint32_t> units;
  for (std::uint32_t u = 1; u < un; ++u) {
    if (std::gcd<std::int64_t, std::int64_t>(u, n) == 1) units.push_back(u);
  }

  // gcd(a, b, n) = 1 iff gcd(gcd(a,n), gcd(b,n)) = 1; tabulate coprimality
  // on divisor indices so the hot loop does two table lookups per pair.
  const std::vector<std::int64_t> divs = divisors(n);
  const std::size_t ndiv = divs.size();
  std::vector<std::uint8_t> div_index(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    const std::int64_t g = std::gcd(a, n);
    const auto it = std::lower_bound(divs.begin(), divs.end(), g);
    div_index[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(it - divs.begin());
  }
  std::vector<std::uint8_t> coprime(ndiv * ndiv);
  for (std::size_t i = 0; i < ndiv; ++i)
    for (std::size_t j = 0; j < ndiv; ++j)
      coprime[i * ndiv + j] = std::gcd(divs[i], divs[j]) == 1 ? 1 : 0;

  std::vector<bool> visited(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::int64_t classes = 0;
  for (std::uint32_t a = 0; a < un; ++a) {
    const std::size_t row = static_cast<std::size_t>(a) * un;
    const std::uint8_t* corow = coprime.data() + static_cast<std::size_t>(div_index[a]) * ndiv;
    for (std::uint32_t b = 0; b < un; ++b) {
      if (visited[row + b] || !corow[div_index[b]]) continue;
      ++classes;
      for (const std::uint32_t u : units) {
        visited[static_cast<std::size_t>(fm.mul_mod(u, a)) * un + fm.mul_mod(u, b)] = true;
      }
    }
  }
  return classes;
}

EllipticPointCounts elliptic_point_counts(std::int64_t n) {
  const Factorization f = factorize(n);
  EllipticPointCounts c;
  if (n % 4 == 0) {
    c.nu2 = 0;
  } else {
    for (const auto& [p, e] : f.factors) {
      (void)e;
      // 1 + chi_{-1}(p): chi_{-1} is the non-trivial character mod 4.
      if (p == 2) continue;                 // chi = 0
      c.nu2 *= (p % 4 == 1) ? 2 : 0;
    }
  }
  if (n % 9 == 0) {
    c.nu3 = 0;
  } else {
    for (const auto& [p, e] : f.factors) {
      (void)e;
      // 1 + chi_{-3}(p): chi_{-3} is the non-trivial character mod 3.
      if (p == 3) continue;                 // chi = 0
      c.nu3 *= (p % 3 == 1) ? 2 : 0;
    }
  }
  return c;
}

std::int64_t cusp_count(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cusp_count: argument must be positive");
  std::int64_t total = 0;
  for (const std::int64_t d : divisors(n)) {
    total += euler_phi(std::gcd(d, n / d));
  }
  return total;
}

ModularInvariants modular_invariants(std::int64_t n) {
  ModularInvariants inv;
  inv.n = n;
  inv.psi = psi_index(n);
  const EllipticPointCounts ell = elliptic_point_counts(n);
  inv.nu2 = ell.nu2;
  inv.nu3 = ell.nu3;
  inv.cusps = cusp_count(n);

  // Exact rational arithmetic; the result must be a non-negative integer for
  // every n >= 1, so anything else is an implementation bug.
  const Rational genus = Rational(1) + Rational(inv.psi, 12) - Rational(inv.nu2, 4) -
                         Rational(inv.nu3, 3) - Rational(inv.cusps, 2);
  if (!genus.is_integer() || genus.numerator() < 0)
    throw invariant_error("genus-integrality",
                          "genus formula gave " + genus.str() + " at level " + std::to_string(n));
  inv.genus = to_int64(genus.numerator());
  return inv;
}

}  // namespace gonal
