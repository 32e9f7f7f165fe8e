#pragma once

#include <gonal/factorization.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gonal {

// Thrown when a structural identity that must hold for every valid input
// fails — that always signals an implementation bug, never bad user input.
// `name` identifies the violated invariant; the CLI surfaces it and exits
// with the dedicated internal-error code.
struct invariant_error : std::logic_error {
  std::string name;
  invariant_error(std::string invariant_name, const std::string& detail)
      : std::logic_error(invariant_name + ": " + detail), name(std::move(invariant_name)) {}
};

// Standard invariants of the modular curve X0(n) (Shimura, Introduction to
// the Arithmetic Theory of Automorphic Functions, ch. 1).
struct ModularInvariants {
  std::int64_t n = 1;
  std::int64_t psi = 1;    // index [SL2(Z) : Gamma_0(n)]
  std::int64_t nu2 = 1;    // elliptic points of order 2
  std::int64_t nu3 = 1;    // elliptic points of order 3
  std::int64_t cusps = 1;  // cusp count
  std::int64_t genus = 0;
};

// Index psi(n) = n * prod_{p | n} (1 + 1/p), the Dedekind psi function.
std::int64_t psi_index(std::int64_t n);
std::int64_t psi_index(const Factorization& f);

// Independent check on psi_index: counts points of P^1(Z/n) directly by
// orbit enumeration of unit scaling on coprime pairs, sharing no code with
// the multiplicative formula.  Quadratic memory; intended for n <= ~1e4.
std::int64_t psi_projective_line_count(std::int64_t n);

// Elliptic point counts nu2(n), nu3(n) via the quadratic characters mod 4
// and mod 3: nu2 = 0 if 4 | n else prod_p (1 + chi_{-1}(p)), and nu3 = 0 if
// 9 | n else prod_p (1 + chi_{-3}(p)).
struct EllipticPointCounts {
  std::int64_t nu2 = 1;
  std::int64_t nu3 = 1;
};
EllipticPointCounts elliptic_point_counts(std::int64_t n);

// Cusp count sum_{d | n} phi(gcd(d, n/d)).
std::int64_t cusp_count(std::int64_t n);

// All invariants at once; the genus comes from the exact rational identity
// g = 1 + psi/12 - nu2/4 - nu3/3 - cusps/2 and is checked to be a
// non-negative integer (invariant "genus-integrality") before returning.
ModularInvariants modular_invariants(std::int64_t n);

}  // namespace gonal
