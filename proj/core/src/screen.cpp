#include <gonal/screen.hpp>

#include <gonal/factorization.hpp>
#include <gonal/modular_invariants.hpp>

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace gonal {

std::string to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::combined: return "combined";
    case BoundVariant::odd: return "odd";
    case BoundVariant::coprime3: return "coprime3";
    case BoundVariant::sharp: return "sharp";
  }
  throw std::invalid_argument("to_string: unknown bound variant");
}

std::optional<BoundVariant> bound_variant_from_string(const std::string& s) {
  if (s == "combined") return BoundVariant::combined;
  if (s == "odd") return BoundVariant::odd;
  if (s == "coprime3") return BoundVariant::coprime3;
  if (s == "sharp") return BoundVariant::sharp;
  return std::nullopt;
}

BoundResult level_bound(std::int64_t d, BoundVariant variant) {
  if (d < 1) throw std::invalid_argument("level_bound: gonality must be >= 1");
  // The d <= 2 linear segments are strictly better than the quadratic tails
  // would be there; both stems are exactly 12*cap(2,d) - 25 resp.
  // 6*cap(3,d) - 11 (covered by tests).
  const auto odd = [&]() -> i128 {
    return d <= 2 ? 60 * d - 25 : checked_add(checked_mul(48, checked_mul(i128(d) - 1, i128(d) - 1)), 35);
  };
  const auto coprime3 = [&]() -> i128 {
    return d <= 2 ? 60 * d - 11 : checked_add(checked_mul(36, checked_mul(i128(d) - 1, i128(d) - 1)), 47);
  };
  i128 value = 0;
  switch (variant) {
    case BoundVariant::odd: value = odd(); break;
    case BoundVariant::coprime3: value = coprime3(); break;
    case BoundVariant::combined: value = checked_mul(odd(), coprime3()); break;
    case BoundVariant::sharp:
      value = d == 1 ? 25 : d == 2 ? 71 : checked_mul(odd(), coprime3());
      break;
  }
  return BoundResult{d, variant, value};
}

ScreenComponent screen_prime(std::int64_t n, std::int64_t d, std::int64_t p) {
  ScreenComponent c;
  c.part = n;
  c.prime = p;
  c.lhs = point_count_lower_bound(n, p);  // validates p prime, p coprime to n
  c.cap = gonal_point_cap(p, d);
  c.pass = !(Rational(c.cap) < c.lhs);  // ties pass: only strict excess excludes
  return c;
}

namespace {

ScreenReport finalize_report(std::int64_t n, std::int64_t d, std::vector<ScreenComponent> comps) {
  ScreenReport r;
  r.n = n;
  r.d = d;
  r.components = std::move(comps);
  r.pass = std::all_of(r.components.begin(), r.components.end(),
                       [](const ScreenComponent& c) { return c.pass; });
  for (const ScreenComponent& c : r.components) {
    const Rational m = Rational(c.cap) - c.lhs;
    if (!r.margin || m < *r.margin) r.margin = m;
  }
  if (d == 1) {
    // Degree 1 means isomorphic to P^1, which is exactly genus 0 — an exact
    // criterion, so the screen sharpens to it instead of staying one-sided.
    r.genus = modular_invariants(n).genus;
    r.pass = r.pass && *r.genus == 0;
  }
  return r;
}

}  // namespace

ScreenReport screen_level(std::int64_t n, std::int64_t d) {
  if (n < 1) throw std::invalid_argument("screen_level: level must be positive");
  if (d < 1) throw std::invalid_argument("screen_level: gonality must be >= 1");
  std::int64_t odd_part = n;
  std::int64_t two_part = 1;
  while (odd_part % 2 == 0) {
    odd_part /= 2;
    two_part *= 2;
  }
  std::vector<ScreenComponent> comps;
  comps.reserve(2);
  comps.push_back(screen_prime(odd_part, d, 2));
  comps.push_back(screen_prime(two_part, d, 3));
  return finalize_report(n, d, std::move(comps));
}

ScreenReport screen_level_extended(std::int64_t n, std::int64_t d, std::int64_t max_prime) {
  if (n < 1) throw std::invalid_argument("screen_level_extended: level must be positive");
  if (d < 1) throw std::invalid_argument("screen_level_extended: gonality must be >= 1");
  std::vector<ScreenComponent> comps;
  for (std::int64_t p = 2; p <= max_prime; ++p) {
    if (is_prime(p) && n % p != 0) comps.push_back(screen_prime(n, d, p));
  }
  return finalize_report(n, d, std::move(comps));
}

std::vector<std::int64_t> enumerate_admissible(std::int64_t d) {
  const i128 raw_bound = level_bound(d, BoundVariant::combined).value;
  if (raw_bound > i128(1) << 40)
    throw std::overflow_error("enumerate_admissible: level range too large to iterate");
  const std::int64_t bound = to_int64(raw_bound);

  const auto collect = [d](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& out) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (screen_level(n, d).pass) out.push_back(n);
    }
  };

  constexpr std::int64_t kSerialCutoff = 50000;
  unsigned threads = std::thread::hardware_concurrency();
  if (bound <= kSerialCutoff || threads < 2) {
    std::vector<std::int64_t> out;
    collect(1, bound, out);
    return out;
  }

  // Contiguous shards, concatenated in order: identical output for any
  // thread count.
  threads = std::min<unsigned>(threads, 16);
  const std::int64_t chunk = (bound + threads - 1) / threads;
  std::vector<std::vector<std::int64_t>> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::int64_t lo = 1 + t * chunk;
    const std::int64_t hi = std::min<std::int64_t>(bound, (t + 1) * chunk);
    if (lo > hi) continue;
    pool.emplace_back([&, lo, hi, t] { collect(lo, hi, parts[t]); });
  }
  for (std::thread& th : pool) th.join();
  std::vector<std::int64_t> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::int64_t gonality_lower_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("gonality_lower_bound: level must be positive");
  // screen pass is monotone in d (caps grow, the lhs does not move), so the
  // first non-excluded degree is a genuine lower bound.
  for (std::int64_t d = 1;; ++d) {
    if (screen_level(n, d).pass) return d;
    if (d > 1000000)
      throw invariant_error("screen-monotone-termination",
                            "no admissible degree found below 1e6 at level " + std::to_string(n));
  }
}

std::int64_t gonality_upper_bound(std::int64_t n) {
  const std::int64_t g = modular_invariants(n).genus;
  // Genus 0 is rational (gonality 1); otherwise a g^1_{ceil(g/2)+1} exists
  // on any curve of genus g (Brill–Noether), giving gonality <= ceil(g/2)+1.
  return g == 0 ? 1 : 1 + (g + 1) / 2;
}

}  // namespace gonal
