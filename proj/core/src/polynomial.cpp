#include "localh/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "localh/errors.hpp"

namespace localh {

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::monomial(Integer c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_plus_x_pow(int k) {
  if (k < 0) throw std::invalid_argument("negative power of (1+x)");
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) v[static_cast<std::size_t>(i)] = binomial(k, i);
  return IntPoly(std::move(v));
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<Integer> IntPoly::padded(std::size_t len) const {
  std::vector<Integer> out = coeffs_;
  if (out.size() < len) out.resize(len);
  return out;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::reversed(int n) const {
  if (degree() > n) throw std::invalid_argument("reversal center below degree");
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i)
    v[static_cast<std::size_t>(n - i)] = coeffs_[static_cast<std::size_t>(i)];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Integer c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

bool is_symmetric(const IntPoly& p, int n) {
  if (p.degree() > n)
    throw std::invalid_argument("is_symmetric: degree " + std::to_string(p.degree()) +
                                " exceeds center " + std::to_string(n));
  for (int i = 0; i <= n / 2; ++i)
    if (p.coeff(i) != p.coeff(n - i)) return false;
  return true;
}

GammaVector::GammaVector(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("gamma vector center must be nonnegative");
  xi_.resize(static_cast<std::size_t>(n / 2) + 1);
}

GammaVector::GammaVector(int n, std::vector<Integer> xi) : n_(n), xi_(std::move(xi)) {
  if (n < 0) throw std::invalid_argument("gamma vector center must be nonnegative");
  if (xi_.size() != static_cast<std::size_t>(n / 2) + 1)
    throw std::invalid_argument("gamma vector for center " + std::to_string(n) + " needs " +
                                std::to_string(n / 2 + 1) + " entries, got " +
                                std::to_string(xi_.size()));
}

IntPoly GammaVector::as_poly() const { return IntPoly(xi_); }

bool GammaVector::is_nonnegative() const {
  return std::all_of(xi_.begin(), xi_.end(), [](const Integer& v) { return v >= 0; });
}

GammaVector gamma_decompose(const IntPoly& p, int n) {
  if (!is_symmetric(p, n))
    throw std::invalid_argument("gamma_decompose: polynomial " + to_string(p) +
                                " is not symmetric about " + std::to_string(n));
  std::vector<Integer> xi(static_cast<std::size_t>(n / 2) + 1);
  IntPoly rest = p;
  // The basis element x^i (1+x)^{n-2i} has lowest term x^i with coefficient 1,
  // so after peeling 0..i-1 the x^i coefficient of the remainder is xi_i.
  for (int i = 0; i <= n / 2; ++i) {
    Integer c = rest.coeff(i);
    xi[static_cast<std::size_t>(i)] = c;
    if (c != 0) rest -= IntPoly::one_plus_x_pow(n - 2 * i).shifted(i) * c;
  }
  if (!rest.is_zero())
    throw ConsistencyError("gamma_decompose: nonzero remainder " + to_string(rest));
  return GammaVector(n, std::move(xi));
}

IntPoly gamma_compose(const GammaVector& xi) {
  IntPoly out;
  const int n = xi.n();
  for (int i = 0; i <= n / 2; ++i)
    if (xi[i] != 0) out += IntPoly::one_plus_x_pow(n - 2 * i).shifted(i) * xi[i];
  return out;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

IntPoly narayana_poly(int n) {
  if (n < 1) throw std::invalid_argument("narayana_poly: n must be at least 1");
  std::vector<Integer> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Integer num = binomial(n, i) * binomial(n - 1, i);
    if (num % (i + 1) != 0) throw ConsistencyError("narayana_poly: inexact division");
    v[static_cast<std::size_t>(i)] = num / (i + 1);
  }
  return IntPoly(std::move(v));
}

}  // namespace localh
