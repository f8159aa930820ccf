#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hipstergf/recurrences.hpp"
#include "hipstergf/tree_enum.hpp"
#include "hipstergf/verification.hpp"

using namespace hipstergf;

namespace {

void check_prefix(const std::vector<Integer>& actual, const std::vector<long>& expected) {
  REQUIRE(actual.size() >= expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CAPTURE(n);
    CHECK(actual[n] == expected[n]);
  }
}

}  // namespace

TEST_CASE("family parameters") {
  const FamilyParams binary = family_params(FamilyId::BinaryPlane);
  CHECK(binary.alpha == 1);
  CHECK(binary.beta == 0);
  CHECK(binary.gamma == 1);
  CHECK(binary.c0 == 0);

  const FamilyParams one2 = family_params(FamilyId::PlaneOneTwo);
  CHECK(one2.alpha == 1);
  CHECK(one2.beta == 1);
  CHECK(one2.gamma == 1);
  CHECK(one2.c0 == 1);

  const FamilyParams colored = family_params(FamilyId::ColoredRightBinary);
  CHECK(colored.alpha == 2);
  CHECK(colored.beta == 1);
  CHECK(colored.gamma == 2);
  CHECK(colored.c0 == 0);
}

TEST_CASE("exact series prefixes match the brute-force census") {
  check_prefix(exact_counts(FamilyId::BinaryPlane, 11),
               {1, 1, 2, 4, 12, 34, 108, 344, 1136, 3796, 12920, 44442});
  check_prefix(exact_counts(FamilyId::PlaneOneTwo, 12),
               {1, 1, 1, 1, 3, 5, 13, 29, 71, 171, 427, 1067, 2709});
  check_prefix(exact_counts(FamilyId::ColoredRightBinary, 9),
               {1, 1, 3, 9, 39, 165, 759, 3549, 17067, 83409});

  for (FamilyId family : kAllFamilies) {
    const int top = family == FamilyId::ColoredRightBinary ? 10 : 11;
    const std::vector<Integer> h = exact_counts(family, top);
    for (int n = 0; n <= top; ++n) {
      CAPTURE(family_name(family));
      CAPTURE(n);
      CHECK(h[static_cast<std::size_t>(n)] == count_hipster(family, n));
    }
  }

  CHECK(coefficient(exact_series(FamilyId::BinaryPlane, 5), 4) == 12);
}

TEST_CASE("upper bound equals the exact series until the chain falls behind") {
  const std::vector<Integer> h = exact_counts(FamilyId::BinaryPlane, 12);
  const std::vector<Integer> g = bound_counts(FamilyId::BinaryPlane, BoundKind::Upper, 12);
  for (int n = 0; n <= 8; ++n) {
    CHECK(g[static_cast<std::size_t>(n)] == h[static_cast<std::size_t>(n)]);
  }
  // at n = 9 the substituted term uses l_4 = 8 instead of h_4 = 12
  CHECK(g[9] == h[9] + 4);
  CHECK(g[9] == 3800);
  for (int n = 9; n <= 12; ++n) {
    CHECK(g[static_cast<std::size_t>(n)] > h[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("bound series sandwich the exact series") {
  for (FamilyId family : kAllFamilies) {
    const int order = 200;
    const std::vector<Integer> f = bound_counts(family, BoundKind::Lower, order);
    const std::vector<Integer> h = exact_counts(family, order);
    const std::vector<Integer> g = bound_counts(family, BoundKind::Upper, order);
    for (int n = 0; n <= order; ++n) {
      CAPTURE(family_name(family));
      CAPTURE(n);
      CHECK(sgn(f[static_cast<std::size_t>(n)]) > 0);
      CHECK(f[static_cast<std::size_t>(n)] <= h[static_cast<std::size_t>(n)]);
      CHECK(h[static_cast<std::size_t>(n)] <= g[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("sandwich report") {
  for (FamilyId family : kAllFamilies) {
    const SandwichReport report = sandwich_report(family, 200);
    CHECK(report.pass);
    CHECK(report.rows.size() == 201);
    for (const SandwichRow& row : report.rows) {
      CHECK(row.ok);
    }
  }

  const SandwichReport one2 = sandwich_report(FamilyId::PlaneOneTwo, 8);
  CHECK(one2.rows[5].lower == 4);
  CHECK(one2.rows[5].exact == 5);
  CHECK(one2.rows[5].upper == 5);
  CHECK(one2.rows[5].total == 9);
}

TEST_CASE("total counts match the census and the standard sequences") {
  check_prefix(total_counts(FamilyId::BinaryPlane, 8), {1, 1, 2, 5, 14, 42, 132, 429, 1430});
  check_prefix(total_counts(FamilyId::PlaneOneTwo, 9), {1, 1, 1, 2, 4, 9, 21, 51, 127, 323});
  check_prefix(total_counts(FamilyId::ColoredRightBinary, 7), {1, 1, 3, 11, 45, 197, 903, 4279});
  for (FamilyId family : kAllFamilies) {
    const std::vector<Integer> totals = total_counts(family, 9);
    for (int n = 0; n <= 9; ++n) {
      CHECK(totals[static_cast<std::size_t>(n)] == count_total(family, n));
    }
  }
}

TEST_CASE("replacing the lower substitution by the exact one reproduces the exact series") {
  for (FamilyId family : kAllFamilies) {
    const std::vector<Integer> h = exact_counts(family, 120);
    const std::vector<Integer> again = recurrence_counts(family_params(family), 120, &h);
    CHECK(h == again);
  }
}

TEST_CASE("functional-equation residuals vanish") {
  // alpha*x*Y^2 - (beta*x+1)*Y - gamma*x*(Sub - 1) + c0*x + 1 == 0, assembled
  // here from series primitives as an independent route.
  constexpr int kOrder = 64;
  for (FamilyId family : kAllFamilies) {
    const FamilyParams p = family_params(family);
    for (BoundKind kind : {BoundKind::Exact, BoundKind::Upper, BoundKind::Lower}) {
      const PowerSeries y =
          kind == BoundKind::Exact ? exact_series(family, kOrder) : bound_series(family, kind, kOrder);

      PowerSeries sub_series = PowerSeries::zero(kOrder);
      if (kind == BoundKind::Exact) {
        sub_series = substitute_square(y);
      } else {
        std::vector<Integer> raw(static_cast<std::size_t>(kOrder) + 1);
        if (kind == BoundKind::Upper) {
          long ratio = family == FamilyId::BinaryPlane       ? 2
                       : family == FamilyId::ColoredRightBinary ? 3
                                                                : 1;
          raw[0] = 1;
          Integer power = 1;
          for (int n = 1; n <= kOrder; ++n) {
            raw[static_cast<std::size_t>(n)] = power;
            power *= ratio;
          }
        } else if (family == FamilyId::PlaneOneTwo) {
          // the substituted series is the Motzkin expansion m_n = census(n+1),
          // not the vertex-shifted census itself
          const std::vector<Integer> census = total_counts(family, kOrder + 1);
          raw.assign(census.begin() + 1, census.end());
        } else {
          raw = total_counts(family, kOrder);
        }
        std::vector<Coefficient> c(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) c[i] = Coefficient(raw[i]);
        sub_series = substitute_square(PowerSeries(std::move(c), kOrder));
      }

      PowerSeries residual = scale(shift_up(mul(y, y)), Coefficient(p.alpha));
      residual = sub(residual, add(scale(shift_up(y), Coefficient(p.beta)), y));
      residual = sub(residual,
                     scale(shift_up(sub(sub_series, PowerSeries::one(kOrder))), Coefficient(p.gamma)));
      std::vector<Coefficient> tail(static_cast<std::size_t>(kOrder) + 1);
      tail[0] = 1;
      tail[1] = p.c0;
      residual = add(residual, PowerSeries(std::move(tail), kOrder));

      CAPTURE(family_name(family));
      CAPTURE(bound_name(kind));
      CHECK(residual == PowerSeries::zero(kOrder));
    }
  }
}

TEST_CASE("all series coefficients are nonnegative integers") {
  for (FamilyId family : kAllFamilies) {
    for (BoundKind kind : {BoundKind::Exact, BoundKind::Upper, BoundKind::Lower}) {
      const PowerSeries s =
          kind == BoundKind::Exact ? exact_series(family, 300) : bound_series(family, kind, 300);
      CHECK(s.integral());
      for (int n = 0; n <= 300; ++n) {
        CHECK(sgn(s.at(n)) >= 0);
      }
    }
  }
}

TEST_CASE("the oracle comparison catches a corrupted recurrence constant") {
  std::vector<Integer> good = exact_counts(FamilyId::BinaryPlane, 8);
  CHECK(counts_match_oracle(FamilyId::BinaryPlane, good, 8));

  // alpha bumped from 1 to 2 diverges at n = 1 already
  FamilyParams corrupt = family_params(FamilyId::BinaryPlane);
  corrupt.alpha = 2;
  std::string detail;
  CHECK_FALSE(
      counts_match_oracle(FamilyId::BinaryPlane, recurrence_counts(corrupt, 8, nullptr), 8, &detail));
  CHECK(detail.find("n=1") != std::string::npos);

  // a single flipped coefficient is flagged too
  good[5] += 1;
  CHECK_FALSE(counts_match_oracle(FamilyId::BinaryPlane, good, 8));
}

TEST_CASE("argument checking") {
  CHECK_THROWS_AS(bound_counts(FamilyId::BinaryPlane, BoundKind::Exact, 10), std::invalid_argument);
  CHECK_THROWS_AS(bound_series(FamilyId::BinaryPlane, BoundKind::Exact, 10), std::invalid_argument);
  CHECK_THROWS_AS(exact_counts(FamilyId::BinaryPlane, -1), std::invalid_argument);
  const std::vector<Integer> too_short(3, Integer(1));
  CHECK_THROWS_AS(recurrence_counts(family_params(FamilyId::BinaryPlane), 10, &too_short),
                  std::invalid_argument);
}
