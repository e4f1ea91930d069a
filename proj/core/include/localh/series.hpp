#pragma once

#include <vector>

#include "localh/polynomial.hpp"

namespace localh {

/// Power series in t with IntPoly-in-x coefficients, truncated after t^order.
/// Every operation discards terms of t-degree above the order.
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  /// Throws std::invalid_argument if coeffs.size() > order + 1.
  TruncSeries(int order, std::vector<IntPoly> coeffs);

  int order() const { return order_; }
  const IntPoly& operator[](int k) const;
  void set(int k, IntPoly p);

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  /// Cauchy product; orders must match.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  /// Coefficientwise multiplication by a polynomial in x.
  friend TruncSeries operator*(const IntPoly& c, const TruncSeries& s);

  /// Multiplication by t^k.
  TruncSeries shifted(int k) const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  void check_order(const TruncSeries& rhs) const;

  int order_;
  std::vector<IntPoly> coeffs_;
};

/// Formal derivative with respect to t. The t^order slot of the result is zero.
TruncSeries series_dt(const TruncSeries& s);

/// F(x,t) = sum_{n>=1} C_n(x) t^n truncated at the given order.
TruncSeries narayana_series(int order);

/// Checks F = x t F^2 + (1+x) t F + t coefficientwise through t^order.
bool verify_catalan_functional_eq(int order);

/// S_n(x) = sum_{r=2}^{n-3} (n-r-2) x C_{r-1}(x) C_{n-r-1}(x), by direct sum.
IntPoly s_sum(int n);

/// (n-4) C_{n-1}(x) - (n-4)(1+x) C_{n-2}(x), the closed form for 2 S_n(x).
IntPoly twice_s_closed_form(int n);

/// R_n(x) as the explicit sum (n-2)x C_{n-1} + (n-3)x C_{n-2} + S_n
/// - C_{n-2} + 2 C_{n-1}, for n >= 4.
IntPoly r_sum_form(int n);

/// 2 R_n(x) = 2(n-2)x C_{n-1} + n C_{n-1} + (n-2)(x-1) C_{n-2}, kept in
/// integers by doubling the half-integer coefficients.
IntPoly twice_r_closed_form(int n);

/// Checks sum_{n>=4} 2 S_n t^n = 2(1+x)t^2 F + 2t^2 - 3tF + (t^2 - t^3 - x t^3) dF/dt
/// through t^order. Coefficients below t^4 must vanish on the right.
bool verify_s_generating_function(int order);

}  // namespace localh
