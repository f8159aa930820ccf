#include "hipstergf/known_gfs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hipstergf {

namespace {

// Polynomial as a series of the given order (missing coefficients are zero).
PowerSeries polynomial(std::initializer_list<long> coeffs, int order) {
  std::vector<Coefficient> c(static_cast<std::size_t>(order) + 1);
  std::size_t i = 0;
  for (long v : coeffs) {
    if (i > static_cast<std::size_t>(order)) break;
    c[i++] = v;
  }
  return PowerSeries(std::move(c), order);
}

PowerSeries geometric_chain(long ratio, int order) {
  // 1 + x + ratio*x^2 + ratio^2*x^3 + ...: chain trees, one per length with
  // `ratio` annotation choices per edge below the first.
  std::vector<Coefficient> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  Integer power = 1;
  for (int n = 1; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = Coefficient(power);
    power *= ratio;
  }
  return PowerSeries(std::move(c), order);
}

[[noreturn]] void domain_violation(const char* name, const char* what, double x) {
  throw std::domain_error(std::string(name) + ": " + what + " at x=" + std::to_string(x));
}

}  // namespace

std::string_view gf_name(KnownGf gf) {
  switch (gf) {
    case KnownGf::Catalan:
      return "catalan";
    case KnownGf::Motzkin:
      return "motzkin";
    case KnownGf::SchroederLittle:
      return "schroeder";
    case KnownGf::ChainBinary:
      return "chain-binary";
    case KnownGf::ChainOneTwo:
      return "chain-one2";
    case KnownGf::ChainColored:
      return "chain-colored";
  }
  return "?";
}

PowerSeries expand(KnownGf gf, int order) {
  if (order < 0) {
    throw std::invalid_argument("expand: negative order");
  }
  switch (gf) {
    case KnownGf::Catalan: {
      // C = (1 - sqrt(1-4x)) / (2x); the numerator starts at x^1.
      PowerSeries root = sqrt_series(polynomial({1, -4}, order + 1));
      std::vector<Coefficient> c(static_cast<std::size_t>(order) + 1);
      for (int n = 0; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = -root.at(n + 1) / 2;
      }
      return PowerSeries(std::move(c), order);
    }
    case KnownGf::Motzkin: {
      // M = (1 - x - sqrt(1-2x-3x^2)) / (2x^2); the numerator starts at x^2.
      PowerSeries root = sqrt_series(polynomial({1, -2, -3}, order + 2));
      std::vector<Coefficient> c(static_cast<std::size_t>(order) + 1);
      for (int n = 0; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = -root.at(n + 2) / 2;
      }
      return PowerSeries(std::move(c), order);
    }
    case KnownGf::SchroederLittle: {
      // S = (1 + x - sqrt(1-6x+x^2)) / (4x); numerator coefficient of x is
      // 1 - root_1 = 4, so the constant term is 1.
      PowerSeries root = sqrt_series(polynomial({1, -6, 1}, order + 1));
      std::vector<Coefficient> c(static_cast<std::size_t>(order) + 1);
      c[0] = (Coefficient(1) - root.at(1)) / 4;
      for (int n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = -root.at(n + 1) / 4;
      }
      return PowerSeries(std::move(c), order);
    }
    case KnownGf::ChainBinary:
      return geometric_chain(2, order);
    case KnownGf::ChainOneTwo:
      return geometric_chain(1, order);
    case KnownGf::ChainColored:
      return geometric_chain(3, order);
  }
  throw std::invalid_argument("expand: unknown generating function");
}

double eval_real(KnownGf gf, double x) {
  // The three algebraic families use the conjugate form 2/(p(x) + sqrt(r(x)))
  // of the textbook radical quotient; identical values, but no 0/0 at the
  // origin and no catastrophic cancellation for small x.
  switch (gf) {
    case KnownGf::Catalan: {
      const double r = 1.0 - 4.0 * x;
      if (r < 0.0) domain_violation("catalan", "radicand 1-4x negative", x);
      return 2.0 / (1.0 + std::sqrt(r));
    }
    case KnownGf::Motzkin: {
      const double r = 1.0 - 2.0 * x - 3.0 * x * x;
      if (r < 0.0) domain_violation("motzkin", "radicand 1-2x-3x^2 negative", x);
      return 2.0 / (1.0 - x + std::sqrt(r));
    }
    case KnownGf::SchroederLittle: {
      const double r = 1.0 - 6.0 * x + x * x;
      if (r < 0.0) domain_violation("schroeder", "radicand 1-6x+x^2 negative", x);
      return 2.0 / (1.0 + x + std::sqrt(r));
    }
    case KnownGf::ChainBinary:
      if (x >= 0.5) domain_violation("chain-binary", "pole 1-2x reached", x);
      return 1.0 + x / (1.0 - 2.0 * x);
    case KnownGf::ChainOneTwo:
      if (x >= 1.0) domain_violation("chain-one2", "pole 1-x reached", x);
      return 1.0 / (1.0 - x);
    case KnownGf::ChainColored:
      if (x >= 1.0 / 3.0) domain_violation("chain-colored", "pole 1-3x reached", x);
      return 1.0 + x / (1.0 - 3.0 * x);
  }
  throw std::invalid_argument("eval_real: unknown generating function");
}

double singular_point(KnownGf gf) {
  switch (gf) {
    case KnownGf::Catalan:
      return 0.25;
    case KnownGf::Motzkin:
      return 1.0 / 3.0;
    case KnownGf::SchroederLittle:
      return 3.0 - 2.0 * std::sqrt(2.0);
    case KnownGf::ChainBinary:
      return 0.5;
    case KnownGf::ChainOneTwo:
      return 1.0;
    case KnownGf::ChainColored:
      return 1.0 / 3.0;
  }
  throw std::invalid_argument("singular_point: unknown generating function");
}

}  // namespace hipstergf
