#include "ktrees/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "ktrees/errors.hpp"

namespace ktrees {

namespace {

std::size_t slots(int order) {
  if (order < 0) throw std::invalid_argument("Series: truncation order must be nonnegative");
  return static_cast<std::size_t>(order) + 1;
}

}  // namespace

Series::Series(int order) : coefficients_(slots(order)) {}

Series::Series(int order, std::vector<mpq_class> coefficients) : coefficients_(std::move(coefficients)) {
  coefficients_.resize(slots(order));
}

Series::Series(int order, std::initializer_list<long> coefficients) : coefficients_(slots(order)) {
  std::size_t d = 0;
  for (long c : coefficients) {
    if (d >= coefficients_.size()) break;
    coefficients_[d++] = c;
  }
}

Series Series::one(int order) { return monomial(order, 0); }

Series Series::monomial(int order, int degree, const mpq_class& coefficient) {
  Series s(order);
  if (degree >= 0 && degree <= order) s.coefficients_[static_cast<std::size_t>(degree)] = coefficient;
  return s;
}

Series Series::from_integers(int order, std::span<const mpz_class> coefficients) {
  Series s(order);
  for (std::size_t d = 0; d < coefficients.size() && d < s.coefficients_.size(); ++d) {
    s.coefficients_[d] = mpq_class(coefficients[d]);
  }
  return s;
}

Series Series::truncated(int order) const {
  std::vector<mpq_class> c(coefficients_.begin(),
                           coefficients_.begin() + static_cast<long>(std::min(slots(order), coefficients_.size())));
  return Series(order, std::move(c));
}

bool Series::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

std::string Series::to_string() const {
  std::string out;
  for (std::size_t d = 0; d < coefficients_.size(); ++d) {
    if (d) out += ", ";
    out += coefficients_[d].get_str();
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d) {
    if (a[d] != b[d]) return false;
  }
  return true;
}

Series add(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(slots(n));
  for (int d = 0; d <= n; ++d) c[static_cast<std::size_t>(d)] = a[d] + b[d];
  return Series(n, std::move(c));
}

Series subtract(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(slots(n));
  for (int d = 0; d <= n; ++d) c[static_cast<std::size_t>(d)] = a[d] - b[d];
  return Series(n, std::move(c));
}

Series mul(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(slots(n));
  for (int i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return Series(n, std::move(c));
}

Series scale(const Series& a, const mpq_class& q) {
  std::vector<mpq_class> c(a.coefficients());
  for (auto& v : c) v *= q;
  return Series(a.order(), std::move(c));
}

Series substitute_power(const Series& a, int m) {
  if (m < 1) throw std::invalid_argument("substitute_power: m must be positive");
  std::vector<mpq_class> c(slots(a.order()));
  for (int d = 0; d * m <= a.order(); ++d) c[static_cast<std::size_t>(d * m)] = a[d];
  return Series(a.order(), std::move(c));
}

Series shift(const Series& a, int by) {
  if (by < 0) throw std::invalid_argument("shift: negative shift");
  std::vector<mpq_class> c(slots(a.order()));
  for (int d = 0; d + by <= a.order(); ++d) c[static_cast<std::size_t>(d + by)] = a[d];
  return Series(a.order(), std::move(c));
}

Series exp(const Series& g) {
  if (sgn(g[0]) != 0) throw std::domain_error("exp: series has a nonzero constant term");
  const int n = g.order();
  std::vector<mpq_class> f(slots(n));
  f[0] = 1;
  for (int d = 1; d <= n; ++d) {
    mpq_class acc = 0;
    for (int m = 1; m <= d; ++m) {
      if (sgn(g[m]) == 0) continue;
      acc += m * g[m] * f[static_cast<std::size_t>(d - m)];
    }
    f[static_cast<std::size_t>(d)] = acc / d;
  }
  return Series(n, std::move(f));
}

std::vector<mpz_class> assert_nonneg_integers(const Series& a) {
  std::vector<mpz_class> out;
  out.reserve(a.coefficients().size());
  for (int d = 0; d <= a.order(); ++d) {
    const mpq_class& c = a[d];
    if (c.get_den() != 1) {
      throw InvariantViolation("coefficient of x^" + std::to_string(d) + " is not an integer: " + c.get_str());
    }
    if (sgn(c) < 0) {
      throw InvariantViolation("coefficient of x^" + std::to_string(d) + " is negative: " + c.get_str());
    }
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace ktrees
