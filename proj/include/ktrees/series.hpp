#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ktrees {

// Truncated power series sum_{d=0}^{N} c_d x^d with exact rational
// coefficients. N is the truncation order; degrees above N are never stored.
//
// Binary operations on series of different orders work at the smaller order.
// Multiplication is schoolbook; every generating function in this project is
// dense and of modest order.
class Series {
 public:
  // The zero series of truncation order `order`.
  explicit Series(int order);
  Series(int order, std::vector<mpq_class> coefficients);
  Series(int order, std::initializer_list<long> coefficients);

  static Series one(int order);
  static Series monomial(int order, int degree, const mpq_class& coefficient = 1);
  static Series from_integers(int order, std::span<const mpz_class> coefficients);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const mpq_class& operator[](int degree) const { return coefficients_[static_cast<std::size_t>(degree)]; }
  const std::vector<mpq_class>& coefficients() const { return coefficients_; }

  Series truncated(int order) const;
  bool is_zero() const;

  // "1, 1, 3, 10"; non-integral coefficients render as num/den.
  std::string to_string() const;

  // Coefficient-wise comparison up to the common truncation order.
  friend bool operator==(const Series& a, const Series& b);

 private:
  std::vector<mpq_class> coefficients_;
};

Series add(const Series& a, const Series& b);
Series subtract(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const mpq_class& q);

// a(x^m): the coefficient of x^d moves to x^{dm}.
Series substitute_power(const Series& a, int m);

// x^shift * a, truncated.
Series shift(const Series& a, int shift);

// exp(g) through f' = g' f:  f_d = (1/d) sum_{m=1..d} m g_m f_{d-m}.
// Throws std::domain_error if g has a nonzero constant term.
Series exp(const Series& g);

// The coefficients as integers. Throws InvariantViolation if a coefficient is
// fractional or negative; counts of structures are never either.
std::vector<mpz_class> assert_nonneg_integers(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return subtract(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

}  // namespace ktrees
