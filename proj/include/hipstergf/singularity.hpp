#pragma once

#include <utility>

#include "hipstergf/families.hpp"
#include "hipstergf/series.hpp"

namespace hipstergf {

/// Certified enclosure of the smallest positive discriminant root.
struct SingularityResult {
  double rho = 0.0;         // midpoint of the final bracket
  double bracket_lo = 0.0;  // discriminant positive here
  double bracket_hi = 0.0;  // discriminant nonpositive here
  double growth = 0.0;      // 1 / rho
  double residual = 0.0;    // discriminant value at rho
  int iterations = 0;       // bisection steps
};

struct GrowthInterval {
  FamilyId family = FamilyId::BinaryPlane;
  double lower = 0.0;  // 1 / rho of the Lower-bound equation
  double upper = 0.0;  // 1 / rho of the Upper-bound equation
  double rho_lower_eq = 0.0;
  double rho_upper_eq = 0.0;
};

/// Discriminant (beta*x+1)^2 - 4*alpha*x*(x*(c0 + gamma*(1 - Sub(x^2))) + 1)
/// of the bounding equation; vanishing marks the dominant singularity of the
/// solved branch. `kind` selects the substituted series (Upper: chain,
/// Lower: total-count family).
double discriminant(FamilyId family, BoundKind kind, double x);

/// Smallest positive x at which Sub(x^2) stops being real-analytic; the root
/// search is confined to (0, branch_limit).
double branch_limit(FamilyId family, BoundKind kind);

/// Scans (0, branch_limit) with step 1e-3 for the first sign change of the
/// discriminant and bisects the bracket down to width <= tol.
SingularityResult find_dominant_singularity(FamilyId family, BoundKind kind, double tol = 1e-12);

GrowthInterval growth_interval(FamilyId family, double tol = 1e-12);

/// The two closed-form radicals for the binary family, upper-equation root
/// first. The second (a cube-root expression for the lower-equation root) is
/// diagnostic only.
std::pair<double, double> closed_form_binary_roots();

/// Coefficient ratio a_n / a_{n-1} as a real; requires positive coefficients.
double empirical_growth(const PowerSeries& series, int n);

}  // namespace hipstergf
