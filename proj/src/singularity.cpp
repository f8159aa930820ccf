#include "hipstergf/singularity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hipstergf/known_gfs.hpp"
#include "hipstergf/recurrences.hpp"

namespace hipstergf {

namespace {

KnownGf substituted_gf(FamilyId family, BoundKind kind) {
  if (kind == BoundKind::Upper) {
    switch (family) {
      case FamilyId::BinaryPlane:
        return KnownGf::ChainBinary;
      case FamilyId::PlaneOneTwo:
        return KnownGf::ChainOneTwo;
      case FamilyId::ColoredRightBinary:
        return KnownGf::ChainColored;
    }
  }
  if (kind == BoundKind::Lower) {
    switch (family) {
      case FamilyId::BinaryPlane:
        return KnownGf::Catalan;
      case FamilyId::PlaneOneTwo:
        return KnownGf::Motzkin;
      case FamilyId::ColoredRightBinary:
        return KnownGf::SchroederLittle;
    }
  }
  throw std::invalid_argument("substituted_gf: kind must be Upper or Lower");
}

std::string where(FamilyId family, BoundKind kind) {
  return std::string(family_name(family)) + "/" + std::string(bound_name(kind));
}

}  // namespace

double discriminant(FamilyId family, BoundKind kind, double x) {
  const KnownGf gf = substituted_gf(family, kind);
  if (x < 0.0 || x >= branch_limit(family, kind)) {
    throw std::domain_error("discriminant(" + where(family, kind) + "): x=" + std::to_string(x) +
                            " outside [0, branch_limit)");
  }
  const FamilyParams p = family_params(family);
  const double sub = eval_real(gf, x * x);
  const double b = p.beta * x + 1.0;
  const double c = x * (p.c0 + p.gamma * (1.0 - sub)) + 1.0;
  return b * b - 4.0 * p.alpha * x * c;
}

double branch_limit(FamilyId family, BoundKind kind) {
  return std::sqrt(singular_point(substituted_gf(family, kind)));
}

SingularityResult find_dominant_singularity(FamilyId family, BoundKind kind, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("find_dominant_singularity: tol must be positive");
  }
  const double blim = branch_limit(family, kind);
  const double step = 1e-3;

  double lo = 0.0;
  double hi = 0.0;
  bool found = false;
  for (int k = 1; k * step < blim; ++k) {
    const double x = k * step;
    if (discriminant(family, kind, x) <= 0.0) {
      lo = (k - 1) * step;
      hi = x;
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::runtime_error("find_dominant_singularity(" + where(family, kind) +
                             "): no sign change on (0, " + std::to_string(blim) + ")");
  }

  SingularityResult result;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket no longer splittable
    ++result.iterations;
    if (discriminant(family, kind, mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (hi - lo > tol) {
    throw std::runtime_error("find_dominant_singularity(" + where(family, kind) +
                             "): bisection stalled above tol=" + std::to_string(tol));
  }

  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.rho = 0.5 * (lo + hi);
  result.residual = discriminant(family, kind, result.rho);
  result.growth = 1.0 / result.rho;

  if (!(result.rho < blim)) {
    throw std::logic_error("find_dominant_singularity(" + where(family, kind) +
                           "): root not below the branch limit");
  }
  const double below = std::max(0.0, result.rho - tol);
  const double above = std::min(result.rho + tol, blim * (1.0 - 1e-12));
  if (!(discriminant(family, kind, below) > 0.0) ||
      !(discriminant(family, kind, above) <= 0.0)) {
    throw std::logic_error("find_dominant_singularity(" + where(family, kind) +
                           "): rho +/- tol does not straddle the root");
  }
  return result;
}

GrowthInterval growth_interval(FamilyId family, double tol) {
  const SingularityResult upper_eq = find_dominant_singularity(family, BoundKind::Upper, tol);
  const SingularityResult lower_eq = find_dominant_singularity(family, BoundKind::Lower, tol);
  GrowthInterval interval;
  interval.family = family;
  interval.lower = lower_eq.growth;
  interval.upper = upper_eq.growth;
  interval.rho_lower_eq = lower_eq.rho;
  interval.rho_upper_eq = upper_eq.rho;
  return interval;
}

std::pair<double, double> closed_form_binary_roots() {
  const double upper = (-2.0 - std::sqrt(2.0) + std::sqrt(14.0 + 4.0 * std::sqrt(2.0))) / 4.0;
  const double s69 = std::sqrt(69.0);
  const double lower =
      (-20.0 + std::cbrt(6400.0 - 768.0 * s69) + 4.0 * std::cbrt(4.0) * std::cbrt(25.0 + 3.0 * s69)) /
      24.0;
  return {upper, lower};
}

double empirical_growth(const PowerSeries& series, int n) {
  if (n < 1 || n > series.order()) {
    throw std::out_of_range("empirical_growth: index " + std::to_string(n) + " outside [1, " +
                            std::to_string(series.order()) + "]");
  }
  const Coefficient& prev = series.at(n - 1);
  const Coefficient& cur = series.at(n);
  if (sgn(prev) <= 0 || sgn(cur) <= 0) {
    throw std::domain_error("empirical_growth: coefficients must be positive");
  }
  Coefficient ratio = cur / prev;
  return ratio.get_d();
}

}  // namespace hipstergf
