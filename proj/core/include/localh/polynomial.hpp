#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace localh {

using Integer = boost::multiprecision::cpp_int;

/// Univariate polynomial in x with exact integer coefficients.
///
/// Coefficient i is the coefficient of x^i. The representation is kept
/// canonical: the leading stored coefficient is nonzero, and the zero
/// polynomial stores nothing and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Integer> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(Integer c);
  static IntPoly monomial(Integer c, int degree);
  /// (1 + x)^k
  static IntPoly one_plus_x_pow(int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero outside the stored range (including i < 0).
  Integer coeff(int i) const;
  std::span<const Integer> coefficients() const { return coeffs_; }

  /// Coefficient vector padded with zeros to length len (never truncates).
  std::vector<Integer> padded(std::size_t len) const;

  Integer evaluate(const Integer& x) const;

  /// x^n p(1/x); requires degree() <= n.
  IntPoly reversed(int n) const;

  /// Multiply by x^k, k >= 0.
  IntPoly shifted(int k) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// Plain text rendering in the style `4x + 14x^2 + 4x^3`; zero renders as `0`.
std::string to_string(const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// True iff coeff(i) == coeff(n - i) for 0 <= i <= n.
/// Throws std::invalid_argument if degree(p) > n.
bool is_symmetric(const IntPoly& p, int n);

/// Local gamma vector (xi_0, ..., xi_{floor(n/2)}) with respect to the
/// symmetry center n.
class GammaVector {
 public:
  /// All-zero vector of length floor(n/2) + 1.
  explicit GammaVector(int n);
  /// Throws std::invalid_argument unless xi.size() == floor(n/2) + 1.
  GammaVector(int n, std::vector<Integer> xi);

  int n() const { return n_; }
  std::span<const Integer> values() const { return xi_; }
  const Integer& operator[](int i) const { return xi_.at(static_cast<std::size_t>(i)); }
  std::size_t size() const { return xi_.size(); }

  /// sum_i xi_i x^i
  IntPoly as_poly() const;
  bool is_nonnegative() const;

  friend bool operator==(const GammaVector&, const GammaVector&) = default;

 private:
  int n_ = 0;
  std::vector<Integer> xi_;
};

/// Peels off xi_i x^i (1+x)^{n-2i} for i = 0..floor(n/2). The result may have
/// negative entries.
///
/// Throws std::invalid_argument if p is not symmetric with center n, and
/// ConsistencyError if the final remainder is nonzero.
GammaVector gamma_decompose(const IntPoly& p, int n);

/// sum_i xi_i x^i (1+x)^{n-2i}
IntPoly gamma_compose(const GammaVector& xi);

/// Binomial coefficient, zero when k < 0, n < 0 or k > n.
Integer binomial(int n, int k);

/// (1/(n+1)) C(2n, n)
Integer catalan(int n);

/// Narayana polynomial C_n(x) = sum_i 1/(i+1) C(n,i) C(n-1,i) x^i, n >= 1.
IntPoly narayana_poly(int n);

}  // namespace localh
