#include "cli.hpp"

#include <gonal/bounds.hpp>
#include <gonal/factorization.hpp>
#include <gonal/modular_invariants.hpp>
#include <gonal/screen.hpp>
#include <gonal/torsion.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gonal::cli {
namespace {

using nlohmann::json;

// Machine formats never use floating point: rationals go out as reduced
// "a/b" strings ("a" when integral), and integers wider than 64 bits fall
// back to decimal strings.
json json_int(i128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json json_rational(const Rational& r) { return r.str(); }

// Every command answers with one record: what was asked, with which inputs,
// what came out, and which computation route produced it.  Identical inputs
// yield identical bytes in every format.
void emit(std::ostream& out, const std::string& format, const std::string& command,
          json inputs, json result, const std::string& provenance, const std::string& text,
          const std::string& csv) {
  if (format == "json") {
    const json record{{"command", command},
                      {"inputs", std::move(inputs)},
                      {"result", std::move(result)},
                      {"provenance", provenance}};
    out << record.dump(2) << "\n";
  } else if (format == "csv") {
    out << csv;
  } else {
    out << text;
  }
}

std::string verdict_word(bool pass) { return pass ? "pass" : "fail"; }

json screen_result_json(const ScreenReport& r) {
  json comps = json::array();
  for (const ScreenComponent& c : r.components) {
    comps.push_back({{"part", c.part},
                     {"prime", c.prime},
                     {"points_lower_bound", json_rational(c.lhs)},
                     {"cap", json_int(c.cap)},
                     {"pass", c.pass}});
  }
  json result{{"n", r.n},
              {"d", r.d},
              {"components", std::move(comps)},
              {"verdict", verdict_word(r.pass)},
              {"margin", r.margin ? json_rational(*r.margin) : json()}};
  if (r.genus) result["genus"] = *r.genus;
  return result;
}

void screen_text_lines(std::ostream& os, const ScreenReport& r) {
  for (const ScreenComponent& c : r.components) {
    os << "  part " << c.part << " at p=" << c.prime << ": points >= " << c.lhs.str() << ", cap "
       << to_string(c.cap) << " -> " << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  if (r.genus) os << "genus    " << *r.genus << "\n";
  os << "margin   " << (r.margin ? r.margin->str() : "-") << "\n";
  os << "verdict  " << (r.pass ? "PASS" : "FAIL") << "\n";
}

void screen_csv_rows(std::ostream& os, const ScreenReport& r) {
  for (const ScreenComponent& c : r.components) {
    os << r.n << "," << r.d << "," << c.part << "," << c.prime << "," << c.lhs.str() << ","
       << to_string(c.cap) << "," << verdict_word(c.pass) << "," << verdict_word(r.pass) << ","
       << (r.margin ? r.margin->str() : "-") << "\n";
  }
}

int cmd_invariants(std::ostream& out, const std::string& format, std::int64_t n) {
  const ModularInvariants inv = modular_invariants(n);
  std::ostringstream text;
  text << "level    " << inv.n << "\n"
       << "psi      " << inv.psi << "\n"
       << "nu2      " << inv.nu2 << "\n"
       << "nu3      " << inv.nu3 << "\n"
       << "cusps    " << inv.cusps << "\n"
       << "genus    " << inv.genus << "\n";
  std::ostringstream csv;
  csv << "n,psi,nu2,nu3,cusps,genus\n"
      << inv.n << "," << inv.psi << "," << inv.nu2 << "," << inv.nu3 << "," << inv.cusps << ","
      << inv.genus << "\n";
  emit(out, format, "invariants", json{{"n", n}},
       json{{"n", inv.n},
            {"psi", inv.psi},
            {"nu2", inv.nu2},
            {"nu3", inv.nu3},
            {"cusps", inv.cusps},
            {"genus", inv.genus}},
       "gamma0-invariant-formulas", text.str(), csv.str());
  return 0;
}

int cmd_genus_list(std::ostream& out, const std::string& format, std::int64_t genus,
                   std::int64_t max) {
  std::vector<std::int64_t> levels;
  std::vector<ModularInvariants> rows;
  for (std::int64_t n = 1; n <= max; ++n) {
    ModularInvariants inv = modular_invariants(n);
    if (inv.genus == genus) {
      levels.push_back(n);
      rows.push_back(inv);
    }
  }
  std::ostringstream text;
  text << levels.size() << " levels with genus " << genus << " (n <= " << max << "):\n";
  for (const std::int64_t n : levels) text << n << "\n";
  std::ostringstream csv;
  csv << "n,genus\n";
  for (const ModularInvariants& inv : rows) csv << inv.n << "," << inv.genus << "\n";
  emit(out, format, "genus-list", json{{"genus", genus}, {"max", max}},
       json{{"count", levels.size()}, {"levels", levels}}, "gamma0-invariant-formulas", text.str(),
       csv.str());
  return 0;
}

int cmd_screen(std::ostream& out, const std::string& format, std::int64_t n, std::int64_t d,
               bool extended, std::int64_t max_prime) {
  const ScreenReport r = extended ? screen_level_extended(n, d, max_prime) : screen_level(n, d);
  std::ostringstream text;
  text << "level    " << r.n << "\n"
       << "degree   " << r.d << "\n";
  screen_text_lines(text, r);
  std::ostringstream csv;
  csv << "n,d,part,prime,points_lower_bound,cap,component,verdict,margin\n";
  screen_csv_rows(csv, r);
  json inputs{{"n", n}, {"d", d}, {"extended", extended}};
  if (extended) inputs["max_prime"] = max_prime;
  emit(out, format, "screen", std::move(inputs), screen_result_json(r), "point-count-screen",
       text.str(), csv.str());
  return 0;
}

int cmd_bound(std::ostream& out, const std::string& format, const std::string& command,
              std::int64_t d, const std::string& variant_name) {
  const auto variant = bound_variant_from_string(variant_name);
  if (!variant) throw std::invalid_argument("unknown bound variant: " + variant_name);
  const BoundResult b = level_bound(d, *variant);
  std::ostringstream text;
  text << "degree   " << b.d << "\n"
       << "variant  " << to_string(b.variant) << "\n"
       << "value    " << to_string(b.value) << "\n";
  std::ostringstream csv;
  csv << "d,variant,value\n" << b.d << "," << to_string(b.variant) << "," << to_string(b.value)
      << "\n";
  emit(out, format, command, json{{"d", d}, {"variant", to_string(b.variant)}},
       json{{"d", b.d}, {"variant", to_string(b.variant)}, {"value", json_int(b.value)}},
       "level-bound/" + to_string(b.variant), text.str(), csv.str());
  return 0;
}

int cmd_enumerate(std::ostream& out, const std::string& format, std::int64_t d) {
  const i128 bound = level_bound(d, BoundVariant::combined).value;
  const std::vector<std::int64_t> levels = enumerate_admissible(d);
  std::ostringstream text;
  text << levels.size() << " admissible levels for degree " << d << " (searched n <= "
       << to_string(bound) << "):\n";
  for (const std::int64_t n : levels) text << n << "\n";
  std::ostringstream csv;
  csv << "n\n";
  for (const std::int64_t n : levels) csv << n << "\n";
  emit(out, format, "enumerate", json{{"d", d}},
       json{{"d", d}, {"bound", json_int(bound)}, {"count", levels.size()}, {"levels", levels}},
       "point-count-screen/enumeration", text.str(), csv.str());
  return 0;
}

int cmd_torsion_check(std::ostream& out, const std::string& format, std::int64_t order,
                      std::int64_t d) {
  const TorsionCheck check = torsion_possible(order, d);
  std::ostringstream text;
  text << "order    " << order << "\n"
       << "degree   " << d << "\n"
       << "verdict  " << to_string(check.verdict) << "\n";
  for (const ScreenComponent& c : check.witness.components) {
    text << "  part " << c.part << " at p=" << c.prime << ": points >= " << c.lhs.str() << ", cap "
         << to_string(c.cap) << " -> " << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  text << "margin   " << (check.witness.margin ? check.witness.margin->str() : "-") << "\n";
  std::ostringstream csv;
  csv << "order,d,verdict,part,prime,points_lower_bound,cap,component\n";
  for (const ScreenComponent& c : check.witness.components) {
    csv << order << "," << d << "," << to_string(check.verdict) << "," << c.part << "," << c.prime
        << "," << c.lhs.str() << "," << to_string(c.cap) << "," << verdict_word(c.pass) << "\n";
  }
  emit(out, format, "torsion-check", json{{"n", order}, {"d", d}},
       json{{"n", order},
            {"d", d},
            {"verdict", to_string(check.verdict)},
            {"witness", screen_result_json(check.witness)}},
       "point-count-screen/torsion", text.str(), csv.str());
  return 0;
}

struct SelftestSuite {
  std::string name;
  std::string detail;
  bool pass = false;
};

int cmd_selftest(std::ostream& out, const std::string& format, bool fast) {
  const std::int64_t psi_max = fast ? 500 : 2000;
  const std::int64_t mass_max = fast ? 47 : 97;
  const std::int64_t genus_max = 200;

  std::vector<SelftestSuite> suites;
  {
    SelftestSuite s{"index-vs-projective-line", "n <= " + std::to_string(psi_max), true};
    for (std::int64_t n = 1; n <= psi_max; ++n) {
      if (psi_index(n) != psi_projective_line_count(n)) {
        s.pass = false;
        s.detail = "first mismatch at n = " + std::to_string(n);
        break;
      }
    }
    suites.push_back(std::move(s));
  }
  {
    SelftestSuite s{"mass-vs-deuring", "primes 5 <= p <= " + std::to_string(mass_max), true};
    for (std::int64_t p = 5; p <= mass_max; ++p) {
      if (!is_prime(p)) continue;
      if (supersingular_mass(p).mass != supersingular_mass_deuring(p).mass) {
        s.pass = false;
        s.detail = "mismatch at p = " + std::to_string(p);
        break;
      }
    }
    suites.push_back(std::move(s));
  }
  {
    SelftestSuite s{"genus-lists", "n <= " + std::to_string(genus_max), true};
    std::vector<std::int64_t> g0, g1;
    for (std::int64_t n = 1; n <= genus_max; ++n) {
      const std::int64_t g = modular_invariants(n).genus;
      if (g == 0) g0.push_back(n);
      if (g == 1) g1.push_back(n);
    }
    s.pass = std::equal(g0.begin(), g0.end(), kGenusZeroLevels.begin(), kGenusZeroLevels.end()) &&
             std::equal(g1.begin(), g1.end(), kGenusOneLevels.begin(), kGenusOneLevels.end());
    suites.push_back(std::move(s));
  }

  const bool all_pass =
      std::all_of(suites.begin(), suites.end(), [](const SelftestSuite& s) { return s.pass; });

  std::ostringstream text;
  for (const SelftestSuite& s : suites) {
    text << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << "  (" << s.detail << ")\n";
  }
  text << "selftest: " << (all_pass ? "all suites passed" : "suite failure") << "\n";
  std::ostringstream csv;
  csv << "suite,detail,pass\n";
  for (const SelftestSuite& s : suites) {
    csv << s.name << "," << s.detail << "," << (s.pass ? "true" : "false") << "\n";
  }
  json jsuites = json::array();
  for (const SelftestSuite& s : suites) {
    jsuites.push_back({{"name", s.name}, {"detail", s.detail}, {"pass", s.pass}});
  }
  emit(out, format, "selftest", json{{"fast", fast}},
       json{{"suites", std::move(jsuites)}, {"pass", all_pass}}, "independent-oracles", text.str(),
       csv.str());
  return all_pass ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact gonality screens and torsion caps for the modular curves X0(n)"};
  app.require_subcommand(1);

  // Integer-typed range validators so diagnostics never show floating point.
  const CLI::Range kPositiveInt(std::int64_t{1}, std::numeric_limits<std::int64_t>::max());
  const CLI::Range kNonNegativeInt(std::int64_t{0}, std::numeric_limits<std::int64_t>::max());

  // Shared by every subcommand; validated by CLI11.
  std::string format = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  std::int64_t n = 1, d = 1, genus = 0, max = 100, max_prime = 31;
  std::string variant = "combined";
  bool extended = false, fast = false;

  CLI::App* c_inv = app.add_subcommand("invariants", "Index, elliptic points, cusps and genus of X0(n)");
  c_inv->add_option("n", n, "Level")->required()->check(kPositiveInt);
  add_format(c_inv);

  CLI::App* c_glist = app.add_subcommand("genus-list", "All levels up to a cap with the given genus");
  c_glist->add_option("--genus", genus, "Genus to match")->required()->check(kNonNegativeInt);
  c_glist->add_option("--max", max, "Largest level to inspect")->required()->check(kPositiveInt);
  add_format(c_glist);

  CLI::App* c_screen = app.add_subcommand("screen", "Point-count screen for a degree-d map X0(n) -> P1");
  c_screen->add_option("n", n, "Level")->required()->check(kPositiveInt);
  c_screen->add_option("d", d, "Gonality degree")->required()->check(kPositiveInt);
  CLI::Option* ext_flag = c_screen->add_flag("--extended", extended, "Screen the full level at every good prime up to --max-prime");
  c_screen->add_option("--max-prime", max_prime, "Largest reduction prime for --extended")
      ->check(kPositiveInt)
      ->needs(ext_flag);
  add_format(c_screen);

  CLI::App* c_bound = app.add_subcommand("bound", "Level bound excluding degree-d maps beyond it");
  c_bound->add_option("d", d, "Gonality degree")->required()->check(kPositiveInt);
  c_bound->add_option("--variant", variant, "Bound variant")
      ->check(CLI::IsMember({"combined", "odd", "coprime3", "sharp"}))
      ->capture_default_str();
  add_format(c_bound);

  CLI::App* c_enum = app.add_subcommand("enumerate", "All levels the degree-d screen cannot exclude");
  c_enum->add_option("d", d, "Gonality degree")->required()->check(kPositiveInt);
  add_format(c_enum);

  std::string torsion_variant = "sharp";
  CLI::App* c_tbound = app.add_subcommand("torsion-bound", "Cap on torsion orders over degree-d-gonal function fields");
  c_tbound->add_option("d", d, "Gonality of the base field")->required()->check(kPositiveInt);
  c_tbound->add_option("--variant", torsion_variant, "Bound variant")
      ->check(CLI::IsMember({"combined", "odd", "coprime3", "sharp"}))
      ->capture_default_str();
  add_format(c_tbound);

  CLI::App* c_tcheck = app.add_subcommand("torsion-check", "Whether order-n torsion survives the degree-d screen");
  c_tcheck->add_option("n", n, "Torsion order")->required()->check(kPositiveInt);
  c_tcheck->add_option("d", d, "Gonality of the base field")->required()->check(kPositiveInt);
  add_format(c_tcheck);

  CLI::App* c_self = app.add_subcommand("selftest", "Cross-check formulas against their independent oracles");
  c_self->add_flag("--fast", fast, "Reduced ranges");
  add_format(c_self);

  // argv shape: CLI11 wants argv[0] = program name.
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gonal");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help is a success; every other parse problem is a usage error.
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (c_inv->parsed()) return cmd_invariants(out, format, n);
    if (c_glist->parsed()) return cmd_genus_list(out, format, genus, max);
    if (c_screen->parsed()) return cmd_screen(out, format, n, d, extended, max_prime);
    if (c_bound->parsed()) return cmd_bound(out, format, "bound", d, variant);
    if (c_enum->parsed()) return cmd_enumerate(out, format, d);
    if (c_tbound->parsed()) return cmd_bound(out, format, "torsion-bound", d, torsion_variant);
    if (c_tcheck->parsed()) return cmd_torsion_check(out, format, n, d);
    if (c_self->parsed()) return cmd_selftest(out, format, fast);
  } catch (const invariant_error& e) {
    err << "internal invariant violated [" << e.name << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command selected\n";
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace gonal::cli
