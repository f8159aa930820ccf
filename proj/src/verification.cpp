#include "hipstergf/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "hipstergf/known_gfs.hpp"
#include "hipstergf/recurrences.hpp"
#include "hipstergf/singularity.hpp"
#include "hipstergf/tree_enum.hpp"

namespace hipstergf {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

int oracle_limit(const VerifyOptions& options, FamilyId family) {
  switch (family) {
    case FamilyId::BinaryPlane:
      return options.oracle_limit_binary;
    case FamilyId::PlaneOneTwo:
      return options.oracle_limit_one2;
    case FamilyId::ColoredRightBinary:
      return options.oracle_limit_colored;
  }
  return 0;
}

CheckResult check_oracle_equivalence(const VerifyOptions& options) {
  CheckResult result{"oracle equivalence", true, "", 0.0};
  const auto start = Clock::now();
  for (FamilyId family : kAllFamilies) {
    const int limit = oracle_limit(options, family);
    const std::vector<Integer> counts = exact_counts(family, limit);
    std::string mismatch;
    if (!counts_match_oracle(family, counts, limit, &mismatch)) {
      result.pass = false;
      result.detail += std::string(family_name(family)) + " " + mismatch + "; ";
    } else {
      result.detail += std::string(family_name(family)) + "<=" + std::to_string(limit) + " ok; ";
    }
  }
  result.seconds = elapsed_seconds(start);
  if (result.seconds >= 120.0) {
    result.pass = false;
    result.detail += "exceeded the 120 s budget; ";
  }
  return result;
}

CheckResult check_total_calibration(const VerifyOptions& options) {
  CheckResult result{"total-count calibration", true, "", 0.0};
  const auto start = Clock::now();
  for (FamilyId family : kAllFamilies) {
    const int limit = oracle_limit(options, family);
    const KnownGf gf = family == FamilyId::BinaryPlane      ? KnownGf::Catalan
                       : family == FamilyId::PlaneOneTwo    ? KnownGf::Motzkin
                                                            : KnownGf::SchroederLittle;
    const PowerSeries series = expand(gf, limit);
    bool family_ok = true;
    for (int n = 0; n <= limit && family_ok; ++n) {
      const std::int64_t census = count_total(family, n, limit);
      // for plane 1-2 trees, m_{n-1} counts trees on n vertices
      const Integer expected =
          family == FamilyId::PlaneOneTwo
              ? (n == 0 ? Integer(1) : Integer(coefficient(series, n - 1).get_num()))
              : Integer(coefficient(series, n).get_num());
      if (expected != census) {
        family_ok = false;
        result.pass = false;
        result.detail += std::string(family_name(family)) + " differs at n=" + std::to_string(n) + "; ";
      }
    }
    if (family_ok) {
      result.detail += std::string(family_name(family)) + "<=" + std::to_string(limit) + " ok; ";
    }
  }
  result.seconds = elapsed_seconds(start);
  return result;
}

CheckResult check_growth_endpoints(const VerifyOptions& options) {
  struct Reference {
    FamilyId family;
    double lower, upper;     // growth interval endpoints
    double rho_up, rho_lo;   // root locations (NaN = no reference value)
  };
  static const Reference table[] = {
      {FamilyId::BinaryPlane, 3.923450, 3.923909, std::nan(""), std::nan("")},
      {FamilyId::PlaneOneTwo, 2.824486, 2.854882, 0.350277, 0.354047},
      {FamilyId::ColoredRightBinary, 5.731821, 5.732051, 0.174458, 0.174465},
  };
  constexpr double kTol = 1e-5;

  CheckResult result{"growth endpoints", true, "", 0.0};
  const auto start = Clock::now();
  for (const Reference& row : table) {
    const auto t0 = Clock::now();
    const SingularityResult up = find_dominant_singularity(row.family, BoundKind::Upper, options.tol);
    const double up_seconds = elapsed_seconds(t0);
    const auto t1 = Clock::now();
    const SingularityResult lo = find_dominant_singularity(row.family, BoundKind::Lower, options.tol);
    const double lo_seconds = elapsed_seconds(t1);

    bool ok = std::abs(lo.growth - row.lower) < kTol && std::abs(up.growth - row.upper) < kTol;
    if (!std::isnan(row.rho_up)) ok = ok && std::abs(up.rho - row.rho_up) < kTol;
    if (!std::isnan(row.rho_lo)) ok = ok && std::abs(lo.rho - row.rho_lo) < kTol;
    if (up_seconds >= 1.0 || lo_seconds >= 1.0) {
      ok = false;
      result.detail += std::string(family_name(row.family)) + " exceeded the 1 s budget; ";
    }
    if (!ok) result.pass = false;
    result.detail += std::string(family_name(row.family)) + " [" + fmt("%.6f", lo.growth) + ", " +
                     fmt("%.6f", up.growth) + "]" + (ok ? " ok; " : " MISMATCH; ");
  }
  result.seconds = elapsed_seconds(start);
  return result;
}

CheckResult check_closed_forms(const VerifyOptions& options) {
  CheckResult result{"closed-form roots", true, "", 0.0};
  const auto start = Clock::now();

  const auto [radical_upper, radical_lower] = closed_form_binary_roots();
  const SingularityResult up =
      find_dominant_singularity(FamilyId::BinaryPlane, BoundKind::Upper, options.tol);
  const double delta_upper = std::abs(radical_upper - up.rho);
  if (delta_upper >= 1e-9) {
    result.pass = false;
    result.detail += "binary upper radical delta " + fmt("%.3e", delta_upper) + " >= 1e-9; ";
  } else {
    result.detail += "binary upper radical delta " + fmt("%.3e", delta_upper) + " ok; ";
  }

  const double x0 = (4.0 - std::sqrt(3.0)) / 13.0;
  const double residual = std::abs(discriminant(FamilyId::ColoredRightBinary, BoundKind::Upper, x0));
  if (residual >= 1e-10) {
    result.pass = false;
    result.detail += "colored upper |D((4-sqrt3)/13)| " + fmt("%.3e", residual) + " >= 1e-10; ";
  } else {
    result.detail += "colored upper |D((4-sqrt3)/13)| " + fmt("%.3e", residual) + " ok; ";
  }

  // Reported only, never asserted: the cube-root radical vs the lower root.
  const SingularityResult lo =
      find_dominant_singularity(FamilyId::BinaryPlane, BoundKind::Lower, options.tol);
  result.detail +=
      "binary lower cube-root delta " + fmt("%.3e", std::abs(radical_lower - lo.rho)) + " (reported only); ";

  result.seconds = elapsed_seconds(start);
  return result;
}

CheckResult check_sandwich(const VerifyOptions& options) {
  CheckResult result{"sandwich bounds", true, "", 0.0};
  const auto start = Clock::now();
  for (FamilyId family : kAllFamilies) {
    const SandwichReport report = sandwich_report(family, options.sandwich_order);
    if (!report.pass) {
      result.pass = false;
      result.detail += std::string(family_name(family)) + " violated; ";
    } else {
      result.detail += std::string(family_name(family)) + "<=" +
                       std::to_string(options.sandwich_order) + " ok; ";
    }
  }
  result.seconds = elapsed_seconds(start);
  if (result.seconds >= 30.0) {
    result.pass = false;
    result.detail += "exceeded the 30 s budget; ";
  }
  return result;
}

// Residual of the fixed-point equation, which must vanish identically:
//   alpha*x*Y^2 - (beta*x + 1)*Y - gamma*x*(Sub - 1) + c0*x + 1.
bool residual_is_zero(FamilyId family, BoundKind kind, int order) {
  const FamilyParams p = family_params(family);
  const PowerSeries y = kind == BoundKind::Exact ? exact_series(family, order)
                                                 : bound_series(family, kind, order);
  PowerSeries sub_sq = [&] {
    switch (kind) {
      case BoundKind::Exact:
        return substitute_square(y);
      case BoundKind::Upper:
      case BoundKind::Lower: {
        PowerSeries s = kind == BoundKind::Upper
                            ? expand(family == FamilyId::BinaryPlane  ? KnownGf::ChainBinary
                                     : family == FamilyId::PlaneOneTwo ? KnownGf::ChainOneTwo
                                                                        : KnownGf::ChainColored,
                                     order)
                            : expand(family == FamilyId::BinaryPlane  ? KnownGf::Catalan
                                     : family == FamilyId::PlaneOneTwo ? KnownGf::Motzkin
                                                                        : KnownGf::SchroederLittle,
                                     order);
        return substitute_square(s);
      }
    }
    throw std::logic_error("residual_is_zero: bad kind");
  }();

  PowerSeries residual = scale(shift_up(mul(y, y)), Coefficient(p.alpha));
  residual = sub(residual, add(scale(shift_up(y), Coefficient(p.beta)), y));
  residual = sub(residual, scale(shift_up(sub(sub_sq, PowerSeries::one(order))),
                                 Coefficient(p.gamma)));
  std::vector<Coefficient> tail(static_cast<std::size_t>(order) + 1);
  tail[0] = 1;
  if (order >= 1) tail[1] = p.c0;
  residual = add(residual, PowerSeries(std::move(tail), order));
  return residual == PowerSeries::zero(order);
}

CheckResult check_residuals(const VerifyOptions& options) {
  CheckResult result{"functional-equation residuals", true, "", 0.0};
  const auto start = Clock::now();
  for (FamilyId family : kAllFamilies) {
    for (BoundKind kind : {BoundKind::Exact, BoundKind::Upper, BoundKind::Lower}) {
      if (!residual_is_zero(family, kind, options.residual_order)) {
        result.pass = false;
        result.detail += std::string(family_name(family)) + "/" + std::string(bound_name(kind)) +
                         " nonzero; ";
      }
    }
  }
  if (result.pass) {
    result.detail =
        "all 9 series zero through order " + std::to_string(options.residual_order) + "; ";
  }
  result.seconds = elapsed_seconds(start);
  return result;
}

CheckResult check_ratio_diagnostic(const VerifyOptions& options) {
  CheckResult result{"coefficient-ratio diagnostic", true, "", 0.0};
  const auto start = Clock::now();
  constexpr double kWiden = 0.02;
  for (FamilyId family : kAllFamilies) {
    const GrowthInterval interval = growth_interval(family, options.tol);
    const double ratio =
        empirical_growth(exact_series(family, options.ratio_index), options.ratio_index);
    const bool ok = interval.lower - kWiden <= ratio && ratio <= interval.upper + kWiden;
    if (!ok) result.pass = false;
    result.detail += std::string(family_name(family)) + " h_" + std::to_string(options.ratio_index) +
                     "/h_" + std::to_string(options.ratio_index - 1) + "=" + fmt("%.6f", ratio) +
                     (ok ? " inside; " : " OUTSIDE; ");
  }
  result.seconds = elapsed_seconds(start);
  return result;
}

CheckResult check_series_properties(const VerifyOptions& options) {
  CheckResult result{"series-core properties", true, "", 0.0};
  const auto start = Clock::now();

  std::mt19937 rng(20240531u);
  std::uniform_int_distribution<int> order_dist(0, 12);
  std::uniform_int_distribution<long> num_dist(-9, 9);
  std::uniform_int_distribution<long> den_dist(1, 9);

  auto random_series = [&](int order) {
    std::vector<Coefficient> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = make_rational(num_dist(rng), den_dist(rng));
    return PowerSeries(std::move(c), order);
  };

  int failures = 0;
  for (int iter = 0; iter < options.property_cases; ++iter) {
    const int order = order_dist(rng);
    const PowerSeries a = random_series(order);
    const PowerSeries b = random_series(order);
    const PowerSeries c = random_series(order);

    bool ok = add(a, b) == add(b, a) && mul(a, b) == mul(b, a) &&
              add(add(a, b), c) == add(a, add(b, c)) && mul(mul(a, b), c) == mul(a, mul(b, c)) &&
              mul(a, add(b, c)) == add(mul(a, b), mul(a, c));

    // substitution index law
    const PowerSeries asq = substitute_square(a);
    for (int n = 0; n <= order && ok; ++n) {
      if (n % 2 == 1) {
        ok = asq.at(n) == 0;
      } else {
        ok = asq.at(n) == a.at(n / 2);
      }
    }

    // sqrt roundtrip on a copy normalized to constant term 1
    std::vector<Coefficient> u = a.coeffs();
    u[0] = 1;
    const PowerSeries unit(std::move(u), order);
    const PowerSeries root = sqrt_series(unit);
    ok = ok && mul(root, root) == unit;

    if (!ok) ++failures;
  }

  if (failures > 0) {
    result.pass = false;
    result.detail = std::to_string(failures) + " of " + std::to_string(options.property_cases) +
                    " randomized cases failed; ";
  } else {
    result.detail = std::to_string(options.property_cases) + " randomized cases exact; ";
  }
  result.seconds = elapsed_seconds(start);
  return result;
}

}  // namespace

bool counts_match_oracle(FamilyId family, const std::vector<Integer>& counts, int limit,
                         std::string* detail) {
  for (int n = 0; n <= limit; ++n) {
    if (n >= static_cast<int>(counts.size()) ||
        counts[static_cast<std::size_t>(n)] != count_hipster(family, n, limit)) {
      if (detail != nullptr) *detail += "mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_oracle_equivalence(options));
  report.checks.push_back(check_total_calibration(options));
  report.checks.push_back(check_growth_endpoints(options));
  report.checks.push_back(check_closed_forms(options));
  report.checks.push_back(check_sandwich(options));
  report.checks.push_back(check_residuals(options));
  report.checks.push_back(check_ratio_diagnostic(options));
  report.checks.push_back(check_series_properties(options));
  report.pass = true;
  for (const CheckResult& check : report.checks) {
    if (!check.pass) report.pass = false;
  }
  return report;
}

}  // namespace hipstergf
