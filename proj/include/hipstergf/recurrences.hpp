#pragma once

#include <vector>

#include "hipstergf/families.hpp"
#include "hipstergf/series.hpp"

namespace hipstergf {

/// Multipliers of a family's quadratic fixed-point equation
///   Y = x * (alpha*Y^2 - beta*Y - gamma*(Sub(x^2) - 1) + c0) + 1,
/// where Sub is the substituted series (Y itself for the exact count, a
/// chain or total-count series for the bounding variants).
struct FamilyParams {
  int alpha;
  int beta;
  int gamma;
  int c0;
};

FamilyParams family_params(FamilyId family);

/// Coefficient recurrence for the fixed-point equation above:
///   y_0 = 1,
///   y_n = alpha * sum_{i=0..n-1} y_i y_{n-1-i} - beta * y_{n-1}
///         - gamma * sub_{(n-1)/2}  (only when n >= 3 and n-1 is even)
///         + c0                     (only when n = 1).
/// `sub` supplies the substituted series' coefficients (indices up to
/// (order-1)/2 are read); nullptr selects self-substitution, sub_k = y_k.
std::vector<Integer> recurrence_counts(const FamilyParams& params, int order,
                                       const std::vector<Integer>* sub);

std::vector<Integer> exact_counts(FamilyId family, int order);
std::vector<Integer> bound_counts(FamilyId family, BoundKind kind, int order);

/// Total census of the family: Catalan / shifted Motzkin / little Schroeder.
std::vector<Integer> total_counts(FamilyId family, int order);

PowerSeries exact_series(FamilyId family, int order);
PowerSeries bound_series(FamilyId family, BoundKind kind, int order);

struct SandwichRow {
  Integer lower;  // f_n
  Integer exact;  // h_n
  Integer upper;  // g_n
  Integer total;
  bool ok;        // 0 < f_n <= h_n <= g_n <= total_n
};

struct SandwichReport {
  FamilyId family = FamilyId::BinaryPlane;
  int order = 0;
  std::vector<SandwichRow> rows;
  bool pass = false;
};

SandwichReport sandwich_report(FamilyId family, int order);

}  // namespace hipstergf
