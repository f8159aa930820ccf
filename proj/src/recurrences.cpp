#include "hipstergf/recurrences.hpp"

#include <stdexcept>

namespace hipstergf {

namespace {

std::vector<Integer> catalan_counts(int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integer acc;
    for (int i = 0; i < n; ++i) {
      acc += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - 1 - i)];
    }
    c[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return c;
}

std::vector<Integer> motzkin_counts(int order) {
  std::vector<Integer> m(static_cast<std::size_t>(order) + 1);
  m[0] = 1;
  for (int n = 0; n < order; ++n) {
    Integer acc = m[static_cast<std::size_t>(n)];
    for (int i = 0; i < n; ++i) {
      acc += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(n - 1 - i)];
    }
    m[static_cast<std::size_t>(n + 1)] = std::move(acc);
  }
  return m;
}

std::vector<Integer> schroeder_counts(int order) {
  // Census recurrence for binary trees with 2-colored right edges: a root
  // with one child (3 annotations) or two children (2 right-edge colors).
  std::vector<Integer> s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  if (order >= 1) s[1] = 1;
  for (int n = 2; n <= order; ++n) {
    Integer acc = 3 * s[static_cast<std::size_t>(n - 1)];
    for (int i = 1; i < n - 1; ++i) {
      acc += 2 * s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n - 1 - i)];
    }
    s[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return s;
}

std::vector<Integer> chain_counts(FamilyId family, int order) {
  long ratio = 1;
  if (family == FamilyId::BinaryPlane) ratio = 2;
  if (family == FamilyId::ColoredRightBinary) ratio = 3;
  std::vector<Integer> l(static_cast<std::size_t>(order) + 1);
  l[0] = 1;
  Integer power = 1;
  for (int n = 1; n <= order; ++n) {
    l[static_cast<std::size_t>(n)] = power;
    power *= ratio;
  }
  return l;
}

PowerSeries to_series(std::vector<Integer> counts, int order) {
  std::vector<Coefficient> c(static_cast<std::size_t>(order) + 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = Coefficient(counts[n]);
  }
  return PowerSeries(std::move(c), order);
}

}  // namespace

FamilyParams family_params(FamilyId family) {
  switch (family) {
    case FamilyId::BinaryPlane:
      return {1, 0, 1, 0};
    case FamilyId::PlaneOneTwo:
      return {1, 1, 1, 1};
    case FamilyId::ColoredRightBinary:
      return {2, 1, 2, 0};
  }
  throw std::invalid_argument("family_params: unknown family");
}

std::vector<Integer> recurrence_counts(const FamilyParams& params, int order,
                                       const std::vector<Integer>* sub) {
  if (order < 0) {
    throw std::invalid_argument("recurrence_counts: negative order");
  }
  if (sub != nullptr && static_cast<int>(sub->size()) <= (order - 1) / 2) {
    throw std::invalid_argument("recurrence_counts: substituted series too short");
  }
  std::vector<Integer> y(static_cast<std::size_t>(order) + 1);
  y[0] = 1;
  for (int n = 1; n <= order; ++n) {
    const int m = n - 1;
    Integer conv;
    for (int i = 0; 2 * i < m; ++i) {
      conv += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(m - i)];
    }
    conv *= 2;
    if (m % 2 == 0) {
      conv += y[static_cast<std::size_t>(m / 2)] * y[static_cast<std::size_t>(m / 2)];
    }
    Integer value = params.alpha * conv;
    if (params.beta != 0) value -= params.beta * y[static_cast<std::size_t>(m)];
    if (n >= 3 && m % 2 == 0) {
      const std::size_t k = static_cast<std::size_t>(m / 2);
      value -= params.gamma * (sub != nullptr ? (*sub)[k] : y[k]);
    }
    if (n == 1) value += params.c0;
    y[static_cast<std::size_t>(n)] = std::move(value);
  }
  return y;
}

std::vector<Integer> exact_counts(FamilyId family, int order) {
  return recurrence_counts(family_params(family), order, nullptr);
}

std::vector<Integer> bound_counts(FamilyId family, BoundKind kind, int order) {
  const int sub_order = order < 1 ? 0 : (order - 1) / 2;
  std::vector<Integer> sub;
  switch (kind) {
    case BoundKind::Upper:
      sub = chain_counts(family, sub_order);
      break;
    case BoundKind::Lower:
      // Per-family total series: Catalan, Motzkin as printed (m_k at index k,
      // not the vertex-shifted census), little Schroeder.
      switch (family) {
        case FamilyId::BinaryPlane:
          sub = catalan_counts(sub_order);
          break;
        case FamilyId::PlaneOneTwo:
          sub = motzkin_counts(sub_order);
          break;
        case FamilyId::ColoredRightBinary:
          sub = schroeder_counts(sub_order);
          break;
      }
      break;
    case BoundKind::Exact:
      throw std::invalid_argument("bound_counts: kind must be Upper or Lower");
  }
  return recurrence_counts(family_params(family), order, &sub);
}

std::vector<Integer> total_counts(FamilyId family, int order) {
  switch (family) {
    case FamilyId::BinaryPlane:
      return catalan_counts(order);
    case FamilyId::PlaneOneTwo: {
      // t_0 = 1 and t_n = m_{n-1}: the census of plane 1-2 trees by vertices.
      std::vector<Integer> m = motzkin_counts(order);
      std::vector<Integer> t(static_cast<std::size_t>(order) + 1);
      t[0] = 1;
      for (int n = 1; n <= order; ++n) {
        t[static_cast<std::size_t>(n)] = m[static_cast<std::size_t>(n - 1)];
      }
      return t;
    }
    case FamilyId::ColoredRightBinary:
      return schroeder_counts(order);
  }
  throw std::invalid_argument("total_counts: unknown family");
}

PowerSeries exact_series(FamilyId family, int order) {
  return to_series(exact_counts(family, order), order);
}

PowerSeries bound_series(FamilyId family, BoundKind kind, int order) {
  return to_series(bound_counts(family, kind, order), order);
}

SandwichReport sandwich_report(FamilyId family, int order) {
  SandwichReport report;
  report.family = family;
  report.order = order;
  report.pass = true;

  std::vector<Integer> f = bound_counts(family, BoundKind::Lower, order);
  std::vector<Integer> h = exact_counts(family, order);
  std::vector<Integer> g = bound_counts(family, BoundKind::Upper, order);
  std::vector<Integer> t = total_counts(family, order);

  report.rows.resize(static_cast<std::size_t>(order) + 1);
  for (std::size_t n = 0; n < report.rows.size(); ++n) {
    SandwichRow& row = report.rows[n];
    row.lower = std::move(f[n]);
    row.exact = std::move(h[n]);
    row.upper = std::move(g[n]);
    row.total = std::move(t[n]);
    row.ok = sgn(row.lower) > 0 && row.lower <= row.exact && row.exact <= row.upper &&
             row.upper <= row.total;
    if (!row.ok) report.pass = false;
  }
  return report;
}

}  // namespace hipstergf
