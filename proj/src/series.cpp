#include "hipstergf/series.hpp"

#include <stdexcept>
#include <string>

namespace hipstergf {

Coefficient make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  Coefficient q(num, den);
  q.canonicalize();
  return q;
}

Coefficient make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

PowerSeries::PowerSeries(std::vector<Coefficient> coeffs, int order) {
  if (order < 0) {
    throw std::invalid_argument("PowerSeries: negative order " + std::to_string(order));
  }
  if (coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("PowerSeries: order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  coeffs_ = std::move(coeffs);
}

PowerSeries PowerSeries::zero(int order) {
  if (order < 0) {
    throw std::invalid_argument("PowerSeries: negative order " + std::to_string(order));
  }
  return PowerSeries(std::vector<Coefficient>(order + 1), order);
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s = zero(order);
  std::vector<Coefficient> c = s.coeffs_;
  c[0] = 1;
  return PowerSeries(std::move(c), order);
}

const Coefficient& PowerSeries::at(int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("PowerSeries: coefficient index " + std::to_string(n) +
                            " outside order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

bool PowerSeries::integral() const {
  for (const Coefficient& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) +
                                ")");
  }
}

}  // namespace

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "add");
  std::vector<Coefficient> out(a.coeffs());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] += b.coeffs()[n];
  }
  return PowerSeries(std::move(out), a.order());
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "sub");
  std::vector<Coefficient> out(a.coeffs());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] -= b.coeffs()[n];
  }
  return PowerSeries(std::move(out), a.order());
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "mul");
  const int order = a.order();
  std::vector<Coefficient> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Coefficient acc;
    for (int i = 0; i <= n; ++i) {
      acc += a.coeffs()[static_cast<std::size_t>(i)] * b.coeffs()[static_cast<std::size_t>(n - i)];
    }
    out[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return PowerSeries(std::move(out), order);
}

PowerSeries scale(const PowerSeries& a, const Coefficient& factor) {
  std::vector<Coefficient> out(a.coeffs());
  for (Coefficient& c : out) {
    c *= factor;
  }
  return PowerSeries(std::move(out), a.order());
}

PowerSeries shift_up(const PowerSeries& a) {
  std::vector<Coefficient> out(a.coeffs().size());
  for (int n = 1; n <= a.order(); ++n) {
    out[static_cast<std::size_t>(n)] = a.coeffs()[static_cast<std::size_t>(n - 1)];
  }
  return PowerSeries(std::move(out), a.order());
}

PowerSeries substitute_square(const PowerSeries& a) {
  std::vector<Coefficient> out(a.coeffs().size());
  for (int k = 0; 2 * k <= a.order(); ++k) {
    out[static_cast<std::size_t>(2 * k)] = a.coeffs()[static_cast<std::size_t>(k)];
  }
  return PowerSeries(std::move(out), a.order());
}

PowerSeries sqrt_series(const PowerSeries& a) {
  if (a.at(0) != 1) {
    throw std::invalid_argument("sqrt_series: constant term must be 1");
  }
  const int order = a.order();
  std::vector<Coefficient> s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  // From s^2 = a: a_n = 2 s_0 s_n + sum_{i=1..n-1} s_i s_{n-i}.
  for (int n = 1; n <= order; ++n) {
    Coefficient acc = a.coeffs()[static_cast<std::size_t>(n)];
    for (int i = 1; i < n; ++i) {
      acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n - i)];
    }
    acc /= 2;
    s[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return PowerSeries(std::move(s), order);
}

const Coefficient& coefficient(const PowerSeries& a, int n) { return a.at(n); }

}  // namespace hipstergf
