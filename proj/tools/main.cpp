#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hipstergf/recurrences.hpp"
#include "hipstergf/singularity.hpp"
#include "hipstergf/tree_enum.hpp"
#include "hipstergf/verification.hpp"

namespace {

using hipstergf::BoundKind;
using hipstergf::FamilyId;
using hipstergf::Integer;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputational = 3;

struct GlobalOptions {
  int order = hipstergf::kDefaultOrder;
  double tol = 1e-12;
  std::string format = "table";
  int oracle_limit = -1;  // -1: per-family default
};

int default_oracle_limit(FamilyId family) {
  return family == FamilyId::ColoredRightBinary ? 12 : 14;
}

int oracle_limit_for(const GlobalOptions& opts, FamilyId family) {
  return opts.oracle_limit >= 0 ? opts.oracle_limit : default_oracle_limit(family);
}

// Doubles are reported with 12 significant digits everywhere (table, CSV,
// and the values stored into JSON).
std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round12(double v) { return std::stod(format_double(v)); }

struct Row {
  int n = 0;
  std::optional<std::string> f;
  std::string h;
  std::optional<std::string> g;
  std::optional<std::string> oracle;
  bool ok = true;
};

void emit_rows(const GlobalOptions& opts, FamilyId family, int n_max, const std::vector<Row>& rows) {
  if (opts.format == "json") {
    json doc;
    doc["family"] = std::string(hipstergf::family_name(family));
    doc["order"] = n_max;
    doc["rows"] = json::array();
    for (const Row& row : rows) {
      json r;
      r["n"] = row.n;
      if (row.f) r["f"] = *row.f;
      r["h"] = row.h;
      if (row.g) r["g"] = *row.g;
      if (row.oracle) r["oracle"] = *row.oracle;
      r["ok"] = row.ok;
      doc["rows"].push_back(std::move(r));
    }
    std::cout << doc.dump(2) << "\n";
    return;
  }

  const bool with_f = !rows.empty() && rows.front().f.has_value();
  const bool with_g = !rows.empty() && rows.front().g.has_value();
  const bool with_oracle = !rows.empty() && rows.front().oracle.has_value();

  if (opts.format == "csv") {
    std::string header = "n";
    if (with_f) header += ",f";
    header += ",h";
    if (with_g) header += ",g";
    if (with_oracle) header += ",oracle";
    header += ",ok";
    std::cout << header << "\n";
    for (const Row& row : rows) {
      std::cout << row.n;
      if (with_f) std::cout << "," << *row.f;
      std::cout << "," << row.h;
      if (with_g) std::cout << "," << *row.g;
      if (with_oracle) std::cout << "," << *row.oracle;
      std::cout << "," << (row.ok ? "true" : "false") << "\n";
    }
    return;
  }

  // table
  auto width_of = [&](const char* name, auto getter) {
    std::size_t w = std::string(name).size();
    for (const Row& row : rows) w = std::max(w, getter(row).size());
    return static_cast<int>(w);
  };
  const int wn = width_of("n", [](const Row& r) { return std::to_string(r.n); });
  const int wf = with_f ? width_of("f", [](const Row& r) { return *r.f; }) : 0;
  const int wh = width_of("h", [](const Row& r) { return r.h; });
  const int wg = with_g ? width_of("g", [](const Row& r) { return *r.g; }) : 0;
  const int wo = with_oracle ? width_of("oracle", [](const Row& r) { return *r.oracle; }) : 0;

  std::printf("family %s, n <= %d\n", std::string(hipstergf::family_name(family)).c_str(), n_max);
  std::printf("%*s", wn, "n");
  if (with_f) std::printf("  %*s", wf, "f");
  std::printf("  %*s", wh, "h");
  if (with_g) std::printf("  %*s", wg, "g");
  if (with_oracle) std::printf("  %*s", wo, "oracle");
  std::printf("  ok\n");
  for (const Row& row : rows) {
    std::printf("%*d", wn, row.n);
    if (with_f) std::printf("  %*s", wf, row.f->c_str());
    std::printf("  %*s", wh, row.h.c_str());
    if (with_g) std::printf("  %*s", wg, row.g->c_str());
    if (with_oracle) std::printf("  %*s", wo, row.oracle->c_str());
    std::printf("  %s\n", row.ok ? "yes" : "NO");
  }
}

int run_count(const GlobalOptions& opts, FamilyId family, int n_max, bool with_oracle) {
  const int limit = oracle_limit_for(opts, family);
  if (with_oracle && n_max > limit) {
    std::cerr << "count: --oracle is limited to n <= " << limit << " for family "
              << hipstergf::family_name(family) << "\n";
    return kExitUsage;
  }
  const std::vector<Integer> h = hipstergf::exact_counts(family, n_max);
  std::vector<Row> rows(static_cast<std::size_t>(n_max) + 1);
  bool all_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    Row& row = rows[static_cast<std::size_t>(n)];
    row.n = n;
    row.h = h[static_cast<std::size_t>(n)].get_str();
    if (with_oracle) {
      const Integer oracle(static_cast<long>(hipstergf::count_hipster(family, n, limit)));
      row.oracle = oracle.get_str();
      row.ok = oracle == h[static_cast<std::size_t>(n)];
    }
    if (!row.ok) all_ok = false;
  }
  emit_rows(opts, family, n_max, rows);
  return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_bounds(const GlobalOptions& opts, FamilyId family, int n_max) {
  const hipstergf::SandwichReport report = hipstergf::sandwich_report(family, n_max);
  std::vector<Row> rows(report.rows.size());
  bool all_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    const hipstergf::SandwichRow& src = report.rows[static_cast<std::size_t>(n)];
    Row& row = rows[static_cast<std::size_t>(n)];
    row.n = n;
    row.f = src.lower.get_str();
    row.h = src.exact.get_str();
    row.g = src.upper.get_str();
    row.ok = sgn(src.lower) > 0 && src.lower <= src.exact && src.exact <= src.upper;
    if (!row.ok) all_ok = false;
  }
  emit_rows(opts, family, n_max, rows);
  return all_ok ? kExitOk : kExitVerificationFailure;
}

struct GrowthRow {
  FamilyId family = FamilyId::BinaryPlane;
  hipstergf::SingularityResult upper_eq;
  hipstergf::SingularityResult lower_eq;
  std::optional<double> closed_form_delta;
  std::optional<double> cube_root_delta;  // diagnostic, table output only
};

GrowthRow compute_growth(FamilyId family, double tol) {
  GrowthRow row;
  row.family = family;
  row.upper_eq = hipstergf::find_dominant_singularity(family, BoundKind::Upper, tol);
  row.lower_eq = hipstergf::find_dominant_singularity(family, BoundKind::Lower, tol);
  if (family == FamilyId::BinaryPlane) {
    const auto [radical_upper, radical_lower] = hipstergf::closed_form_binary_roots();
    row.closed_form_delta = std::abs(radical_upper - row.upper_eq.rho);
    row.cube_root_delta = std::abs(radical_lower - row.lower_eq.rho);
  }
  return row;
}

json growth_json(const GrowthRow& row) {
  json doc;
  doc["family"] = std::string(hipstergf::family_name(row.family));
  doc["lower"] = round12(row.lower_eq.growth);
  doc["upper"] = round12(row.upper_eq.growth);
  doc["rho_lower_eq"] = round12(row.lower_eq.rho);
  doc["rho_upper_eq"] = round12(row.upper_eq.rho);
  doc["bracket_width"] = round12(std::max(row.upper_eq.bracket_hi - row.upper_eq.bracket_lo,
                                          row.lower_eq.bracket_hi - row.lower_eq.bracket_lo));
  if (row.closed_form_delta) doc["closed_form_delta"] = round12(*row.closed_form_delta);
  return doc;
}

int run_growth(const GlobalOptions& opts, const std::string& family_arg) {
  std::vector<FamilyId> families;
  if (family_arg == "all") {
    families.assign(hipstergf::kAllFamilies.begin(), hipstergf::kAllFamilies.end());
  } else {
    families.push_back(*hipstergf::parse_family(family_arg));
  }

  std::vector<GrowthRow> rows;
  rows.reserve(families.size());
  for (FamilyId family : families) {
    rows.push_back(compute_growth(family, opts.tol));
  }

  if (opts.format == "json") {
    if (rows.size() == 1) {
      std::cout << growth_json(rows.front()).dump(2) << "\n";
    } else {
      json doc = json::array();
      for (const GrowthRow& row : rows) doc.push_back(growth_json(row));
      std::cout << doc.dump(2) << "\n";
    }
    return kExitOk;
  }

  if (opts.format == "csv") {
    std::cout << "family,lower,upper,rho_lower_eq,rho_upper_eq,bracket_width,closed_form_delta\n";
    for (const GrowthRow& row : rows) {
      std::cout << hipstergf::family_name(row.family) << ","
                << format_double(row.lower_eq.growth) << "," << format_double(row.upper_eq.growth)
                << "," << format_double(row.lower_eq.rho) << "," << format_double(row.upper_eq.rho)
                << ","
                << format_double(std::max(row.upper_eq.bracket_hi - row.upper_eq.bracket_lo,
                                          row.lower_eq.bracket_hi - row.lower_eq.bracket_lo))
                << ","
                << (row.closed_form_delta ? format_double(*row.closed_form_delta) : std::string())
                << "\n";
    }
    return kExitOk;
  }

  for (const GrowthRow& row : rows) {
    std::printf("family %s\n", std::string(hipstergf::family_name(row.family)).c_str());
    std::printf("  growth interval     [%s, %s]\n", format_double(row.lower_eq.growth).c_str(),
                format_double(row.upper_eq.growth).c_str());
    std::printf("  upper equation      rho=%s  bracket=[%s, %s]  width=%s  iterations=%d\n",
                format_double(row.upper_eq.rho).c_str(),
                format_double(row.upper_eq.bracket_lo).c_str(),
                format_double(row.upper_eq.bracket_hi).c_str(),
                format_double(row.upper_eq.bracket_hi - row.upper_eq.bracket_lo).c_str(),
                row.upper_eq.iterations);
    std::printf("  lower equation      rho=%s  bracket=[%s, %s]  width=%s  iterations=%d\n",
                format_double(row.lower_eq.rho).c_str(),
                format_double(row.lower_eq.bracket_lo).c_str(),
                format_double(row.lower_eq.bracket_hi).c_str(),
                format_double(row.lower_eq.bracket_hi - row.lower_eq.bracket_lo).c_str(),
                row.lower_eq.iterations);
    if (row.closed_form_delta) {
      std::printf("  radical (upper)     |delta|=%s\n",
                  format_double(*row.closed_form_delta).c_str());
      std::printf("  cube root (lower)   |delta|=%s (diagnostic only)\n",
                  format_double(*row.cube_root_delta).c_str());
    }
  }
  return kExitOk;
}

int run_verify(const GlobalOptions& opts) {
  // The battery runs with its pinned orders and tolerances; only the output
  // format comes from the command line.
  const hipstergf::VerifyReport report = hipstergf::run_verification();

  if (opts.format == "json") {
    json doc;
    doc["pass"] = report.pass;
    doc["checks"] = json::array();
    for (const hipstergf::CheckResult& check : report.checks) {
      json c;
      c["name"] = check.name;
      c["pass"] = check.pass;
      c["detail"] = check.detail;
      doc["checks"].push_back(std::move(c));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "name,pass,detail\n";
    for (const hipstergf::CheckResult& check : report.checks) {
      std::cout << '"' << check.name << "\"," << (check.pass ? "true" : "false") << ",\""
                << check.detail << "\"\n";
    }
  } else {
    for (const hipstergf::CheckResult& check : report.checks) {
      std::printf("%-32s %s  %s\n", check.name.c_str(), check.pass ? "pass" : "FAIL",
                  check.detail.c_str());
    }
    std::printf("%-32s %s\n", "overall", report.pass ? "pass" : "FAIL");
  }
  return report.pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and growth-rate bounds for hipster trees"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--order", opts.order, "default n_max for count/bounds")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", opts.tol, "bisection tolerance for growth")->check(CLI::PositiveNumber);
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--oracle-limit", opts.oracle_limit,
                 "brute-force enumeration limit (default 14/14/12 per family)")
      ->check(CLI::NonNegativeNumber);

  const std::vector<std::string> family_choices = {"binary", "one2", "colored"};

  std::string count_family;
  int count_n = -1;
  bool count_oracle = false;
  CLI::App* count = app.add_subcommand("count", "hipster counts from the recurrence");
  count->fallthrough();
  count->add_option("--family", count_family)->required()->check(CLI::IsMember(family_choices));
  count->add_option("--n", count_n, "largest n (default --order)")->check(CLI::NonNegativeNumber);
  count->add_flag("--oracle", count_oracle, "compare against brute-force enumeration");

  std::string bounds_family;
  int bounds_n = -1;
  CLI::App* bounds = app.add_subcommand("bounds", "sandwich series f <= h <= g");
  bounds->fallthrough();
  bounds->add_option("--family", bounds_family)->required()->check(CLI::IsMember(family_choices));
  bounds->add_option("--n", bounds_n, "largest n (default --order)")->check(CLI::NonNegativeNumber);

  std::string growth_family = "all";
  CLI::App* growth = app.add_subcommand("growth", "dominant singularities and growth intervals");
  growth->fallthrough();
  growth->add_option("--family", growth_family)
      ->check(CLI::IsMember({"binary", "one2", "colored", "all"}));

  CLI::App* verify = app.add_subcommand("verify", "run the full verification battery");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(count)) {
      const int n_max = count_n >= 0 ? count_n : opts.order;
      return run_count(opts, *hipstergf::parse_family(count_family), n_max, count_oracle);
    }
    if (app.got_subcommand(bounds)) {
      const int n_max = bounds_n >= 0 ? bounds_n : opts.order;
      return run_bounds(opts, *hipstergf::parse_family(bounds_family), n_max);
    }
    if (app.got_subcommand(growth)) {
      return run_growth(opts, growth_family);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputational;
  }
  return kExitUsage;
}
