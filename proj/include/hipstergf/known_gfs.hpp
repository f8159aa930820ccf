#pragma once

#include <string_view>

#include "hipstergf/series.hpp"

namespace hipstergf {

/// Closed-form generating functions used as substitution ingredients: the
/// total-count series of each family and the one-child chain series.
enum class KnownGf {
  Catalan,         // binary trees: 1, 1, 2, 5, 14, ...
  Motzkin,         // plane 1-2 trees on n+1 vertices: 1, 1, 2, 4, 9, ...
  SchroederLittle, // binary trees with 2-colored right edges: 1, 1, 3, 11, 45, ...
  ChainBinary,     // at most one child, left/right marked: 1, 1, 2, 4, 8, ...
  ChainOneTwo,     // at most one child, unmarked: all ones
  ChainColored,    // at most one child, left / blue-right / red-right: 1, 1, 3, 9, 27, ...
};

std::string_view gf_name(KnownGf gf);

/// Exact truncated expansion. Every family has constant term 1.
PowerSeries expand(KnownGf gf, int order);

/// Value of the closed form at a real point; x = 0 returns the limit value 1.
/// Throws std::domain_error naming the violated radicand or pole.
double eval_real(KnownGf gf, double x);

/// Smallest positive x at which the closed form stops being real-analytic
/// (zero of the radicand, or pole of the chain denominator).
double singular_point(KnownGf gf);

}  // namespace hipstergf
