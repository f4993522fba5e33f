#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ihara/matrix.hpp"
#include "ihara/numbers.hpp"

namespace ihara {

// Coefficient-ring hooks for the series template below. Shapes (matrix
// dimensions) are derived from an existing coefficient, never from a default
// constructor, so matrix series carry their dimension implicitly.
template <typename C>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational invert(const Rational& c) {
    if (c == 0) throw std::invalid_argument("division by zero coefficient");
    return Rational(1) / c;
  }
  static Rational div_int(const Rational& c, long n) { return c / Rational(n); }
  static Rational mul_int(const Rational& c, long n) { return c * Rational(n); }
};

template <>
struct CoeffOps<double> {
  static double zero_like(double) { return 0.0; }
  static double one_like(double) { return 1.0; }
  static bool is_zero(double c) { return c == 0.0; }
  static double invert(double c) {
    if (c == 0.0) throw std::invalid_argument("division by zero coefficient");
    return 1.0 / c;
  }
  static double div_int(double c, long n) { return c / static_cast<double>(n); }
  static double mul_int(double c, long n) { return c * static_cast<double>(n); }
};

template <typename K>
struct CoeffOps<Matrix<K>> {
  static Matrix<K> zero_like(const Matrix<K>& proto) {
    return Matrix<K>(proto.rows(), proto.cols());
  }
  static Matrix<K> one_like(const Matrix<K>& proto) {
    if (proto.rows() != proto.cols())
      throw std::invalid_argument("identity needs a square shape");
    return Matrix<K>::identity(proto.rows());
  }
  static bool is_zero(const Matrix<K>& c) { return c.is_zero(); }
  static Matrix<K> invert(const Matrix<K>& c) { return inverse(c); }
  static Matrix<K> div_int(const Matrix<K>& c, long n) {
    return c * CoeffOps<K>::invert(K(n));
  }
  static Matrix<K> mul_int(const Matrix<K>& c, long n) { return c * K(n); }
};

// Power series truncated at a fixed order; all coefficients up to and
// including u^order are stored and exact (for exact coefficient rings).
// Operations on series of different orders are rejected rather than silently
// truncated.
template <typename C>
class Series {
 public:
  using coeff_type = C;

  // Order-0 zero series; placeholder for members assigned later.
  Series() : coeffs_(1, C{}) {}

  // Zero series of the given order. Only meaningful for scalar coefficients;
  // matrix series need an explicitly sized zero.
  explicit Series(long order) : Series(order, C{}) {}

  Series(long order, const C& zero)
      : coeffs_(static_cast<std::size_t>(order) + 1, zero) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  }
  explicit Series(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const C& coeff(long i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  C& coeff(long i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  C zero_coeff() const { return CoeffOps<C>::zero_like(coeffs_[0]); }
  C one_coeff() const { return CoeffOps<C>::one_like(coeffs_[0]); }

  bool is_zero() const {
    for (const C& c : coeffs_)
      if (!CoeffOps<C>::is_zero(c)) return false;
    return true;
  }

  bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series truncated(long new_order) const {
    if (new_order < 0 || new_order > order())
      throw std::invalid_argument("cannot truncate to a higher order");
    std::vector<C> out(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return Series(std::move(out));
  }

  Series& operator+=(const Series& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_order(b);
    Series out(a.order(), a.zero_coeff());
    for (long i = 0; i <= a.order(); ++i) {
      if (CoeffOps<C>::is_zero(a.coeff(i))) continue;
      for (long j = 0; i + j <= a.order(); ++j) {
        if (CoeffOps<C>::is_zero(b.coeff(j))) continue;
        out.coeff(i + j) += a.coeff(i) * b.coeff(j);
      }
    }
    return out;
  }

 private:
  void check_order(const Series& o) const {
    if (coeffs_.size() != o.coeffs_.size())
      throw std::invalid_argument("series order mismatch");
  }

  std::vector<C> coeffs_;
};

using ScalarSeries = Series<Rational>;
using FloatSeries = Series<double>;
using RationalMatrixSeries = Series<Matrix<Rational>>;
using FloatMatrixSeries = Series<Matrix<double>>;

template <typename C, typename S>
Series<C> scaled(Series<C> a, const S& factor) {
  for (long i = 0; i <= a.order(); ++i) a.coeff(i) = a.coeff(i) * factor;
  return a;
}

// Multiplicative inverse; the constant coefficient must be invertible.
template <typename C>
Series<C> series_invert(const Series<C>& a) {
  Series<C> out(a.order(), a.zero_coeff());
  const C head_inv = CoeffOps<C>::invert(a.coeff(0));
  out.coeff(0) = head_inv;
  for (long k = 1; k <= a.order(); ++k) {
    C acc = a.zero_coeff();
    for (long j = 1; j <= k; ++j) {
      if (CoeffOps<C>::is_zero(a.coeff(j))) continue;
      acc += a.coeff(j) * out.coeff(k - j);
    }
    out.coeff(k) = a.zero_coeff() - head_inv * acc;
  }
  return out;
}

// log via -sum_{n>=1} (1 - a)^n / n; the constant coefficient must be 1 (or
// the identity). Powers of (1 - a) gain valuation each round, so n stops at
// the truncation order.
template <typename C>
Series<C> series_log(const Series<C>& a) {
  if (!(a.coeff(0) == a.one_coeff()))
    throw std::invalid_argument("series log needs constant coefficient 1");
  Series<C> g(a.order(), a.zero_coeff());
  g -= a;
  g.coeff(0) += a.one_coeff();  // g = 1 - a, constant coefficient zero
  Series<C> out(a.order(), a.zero_coeff());
  Series<C> power = g;
  for (long n = 1; n <= a.order(); ++n) {
    if (power.is_zero()) break;
    for (long i = 0; i <= a.order(); ++i)
      out.coeff(i) -= CoeffOps<C>::div_int(power.coeff(i), n);
    if (n < a.order()) power = power * g;
  }
  return out;
}

// exp via sum a^n / n!; the constant coefficient must be zero.
template <typename C>
Series<C> series_exp(const Series<C>& a) {
  if (!CoeffOps<C>::is_zero(a.coeff(0)))
    throw std::invalid_argument("series exp needs constant coefficient 0");
  Series<C> out(a.order(), a.zero_coeff());
  out.coeff(0) = a.one_coeff();
  Series<C> term = out;  // a^n / n!, starting at n = 0
  for (long n = 1; n <= a.order(); ++n) {
    term = term * a;
    if (term.is_zero()) break;
    for (long i = 0; i <= a.order(); ++i)
      term.coeff(i) = CoeffOps<C>::div_int(term.coeff(i), n);
    out += term;
  }
  return out;
}

// Formal antiderivative with zero constant term. The result keeps the same
// truncation order, so the input's top coefficient is dropped.
template <typename C>
Series<C> series_integrate(const Series<C>& a) {
  Series<C> out(a.order(), a.zero_coeff());
  for (long k = 0; k < a.order(); ++k)
    out.coeff(k + 1) = CoeffOps<C>::div_int(a.coeff(k), k + 1);
  return out;
}

// Formal derivative; the top coefficient of the result is unknown at this
// truncation order and is left at zero.
template <typename C>
Series<C> series_derivative(const Series<C>& a) {
  Series<C> out(a.order(), a.zero_coeff());
  for (long k = 0; k < a.order(); ++k)
    out.coeff(k) = CoeffOps<C>::mul_int(a.coeff(k + 1), k + 1);
  return out;
}

// base^exponent = exp(exponent * log(base)) for scalar series with constant
// coefficient 1; exponent may be any rational (or float), e.g. -1/2.
template <typename K>
Series<K> binomial_power(const Series<K>& base, const K& exponent) {
  return series_exp(scaled(series_log(base), exponent));
}

inline FloatSeries to_float_series(const ScalarSeries& a) {
  FloatSeries out(a.order(), 0.0);
  for (long i = 0; i <= a.order(); ++i) out.coeff(i) = to_double(a.coeff(i));
  return out;
}

template <typename K>
Series<K> entry_series(const Series<Matrix<K>>& a, std::size_t i, std::size_t j) {
  Series<K> out(a.order(), CoeffOps<K>::zero_like(K()));
  for (long m = 0; m <= a.order(); ++m) out.coeff(m) = a.coeff(m)(i, j);
  return out;
}

template <typename K>
Series<K> trace_series(const Series<Matrix<K>>& a) {
  Series<K> out(a.order(), CoeffOps<K>::zero_like(K()));
  for (long m = 0; m <= a.order(); ++m) out.coeff(m) = a.coeff(m).trace();
  return out;
}

}  // namespace ihara
