#include <gonal/torsion.hpp>

#include <stdexcept>

namespace gonal {

std::string to_string(TorsionVerdict v) {
  switch (v) {
    case TorsionVerdict::possible: return "possible";
    case TorsionVerdict::excluded: return "excluded";
  }
  throw std::invalid_argument("to_string: unknown torsion verdict");
}

BoundResult torsion_bound(std::int64_t d, BoundVariant variant) { return level_bound(d, variant); }

TorsionCheck torsion_possible(std::int64_t order, std::int64_t d) {
  return torsion_possible(TorsionQuery{order, d});
}

TorsionCheck torsion_possible(const TorsionQuery& q) {
  if (q.order < 1 || q.d < 1)
    throw std::invalid_argument("torsion_possible: order and gonality must be >= 1");
  TorsionCheck check;
  check.query = q;
  check.witness = screen_level(q.order, q.d);
  check.verdict = check.witness.pass ? TorsionVerdict::possible : TorsionVerdict::excluded;
  return check;
}

}  // namespace gonal
