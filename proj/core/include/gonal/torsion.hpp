#pragma once

#include <gonal/screen.hpp>

#include <cstdint>
#include <string>

namespace gonal {

// Can an elliptic curve over a degree-d-gonal function field (in odd
// characteristic, constant field algebraically closed) have a rational
// torsion point of order n?  Levels above the degree-d bound are excluded
// outright; at any level, a failed d-gonality screen at X0(n) is a proof of
// impossibility, because such torsion forces a degree-d function on X0(n).
struct TorsionQuery {
  std::int64_t order = 1;  // candidate torsion-point order
  std::int64_t d = 1;      // gonality of the base function field
};

enum class TorsionVerdict { possible, excluded };

std::string to_string(TorsionVerdict v);

struct TorsionCheck {
  TorsionQuery query;
  TorsionVerdict verdict = TorsionVerdict::possible;
  ScreenReport witness;  // the screen run backing the verdict
};

// Upper bound for torsion orders compatible with gonality d; defaults to
// the sharp variant (25 for d = 1, 71 for d = 2, the combined closed form
// beyond).  The formula variants stay selectable for comparison.
BoundResult torsion_bound(std::int64_t d, BoundVariant variant = BoundVariant::sharp);

TorsionCheck torsion_possible(std::int64_t order, std::int64_t d);
TorsionCheck torsion_possible(const TorsionQuery& q);

}  // namespace gonal
