#include "localh/series.hpp"

#include <stdexcept>
#include <string>

namespace localh {

namespace {

const IntPoly kZero{};

IntPoly x_poly() { return IntPoly::monomial(1, 1); }

void require_n(int n, int min, const char* what) {
  if (n < min)
    throw std::invalid_argument(std::string(what) + ": n must be at least " + std::to_string(min));
}

}  // namespace

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(int order, std::vector<IntPoly> coeffs) : TruncSeries(order) {
  if (coeffs.size() > coeffs_.size())
    throw std::invalid_argument("more coefficients than the truncation order allows");
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

const IntPoly& TruncSeries::operator[](int k) const {
  if (k < 0 || k > order_) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void TruncSeries::set(int k, IntPoly p) {
  if (k < 0 || k > order_) throw std::out_of_range("series slot out of range");
  coeffs_[static_cast<std::size_t>(k)] = std::move(p);
}

void TruncSeries::check_order(const TruncSeries& rhs) const {
  if (rhs.order_ != order_)
    throw std::invalid_argument("series truncation orders differ: " + std::to_string(order_) +
                                " vs " + std::to_string(rhs.order_));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  check_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  check_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_order(b);
  TruncSeries out(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j)
      if (!b[j].is_zero()) out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return out;
}

TruncSeries operator*(const IntPoly& c, const TruncSeries& s) {
  TruncSeries out(s.order_);
  for (int k = 0; k <= s.order_; ++k) out.coeffs_[static_cast<std::size_t>(k)] = c * s[k];
  return out;
}

TruncSeries TruncSeries::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative series shift");
  TruncSeries out(order_);
  for (int i = 0; i + k <= order_; ++i) out.coeffs_[static_cast<std::size_t>(i + k)] = (*this)[i];
  return out;
}

TruncSeries series_dt(const TruncSeries& s) {
  TruncSeries out(s.order());
  for (int k = 1; k <= s.order(); ++k) out.set(k - 1, s[k] * Integer(k));
  return out;
}

TruncSeries narayana_series(int order) {
  TruncSeries f(order);
  for (int n = 1; n <= order; ++n) f.set(n, narayana_poly(n));
  return f;
}

bool verify_catalan_functional_eq(int order) {
  require_n(order, 1, "verify_catalan_functional_eq");
  const TruncSeries f = narayana_series(order);
  TruncSeries t(order);
  t.set(1, IntPoly::constant(1));
  const TruncSeries rhs =
      (x_poly() * (f * f)).shifted(1) + (IntPoly{1, 1} * f).shifted(1) + t;
  return rhs == f;
}

IntPoly s_sum(int n) {
  require_n(n, 4, "s_sum");
  IntPoly out;
  for (int r = 2; r <= n - 3; ++r)
    out += (narayana_poly(r - 1) * narayana_poly(n - r - 1)).shifted(1) * Integer(n - r - 2);
  return out;
}

IntPoly twice_s_closed_form(int n) {
  require_n(n, 4, "twice_s_closed_form");
  return narayana_poly(n - 1) * Integer(n - 4) -
         IntPoly{1, 1} * narayana_poly(n - 2) * Integer(n - 4);
}

IntPoly r_sum_form(int n) {
  require_n(n, 4, "r_sum_form");
  const IntPoly c1 = narayana_poly(n - 1);
  const IntPoly c2 = narayana_poly(n - 2);
  return c1.shifted(1) * Integer(n - 2) + c2.shifted(1) * Integer(n - 3) + s_sum(n) - c2 +
         c1 * Integer(2);
}

IntPoly twice_r_closed_form(int n) {
  require_n(n, 4, "twice_r_closed_form");
  const IntPoly c1 = narayana_poly(n - 1);
  const IntPoly c2 = narayana_poly(n - 2);
  return c1.shifted(1) * Integer(2 * (n - 2)) + c1 * Integer(n) +
         IntPoly{-1, 1} * c2 * Integer(n - 2);
}

bool verify_s_generating_function(int order) {
  require_n(order, 1, "verify_s_generating_function");
  const TruncSeries f = narayana_series(order);
  const TruncSeries df = series_dt(f);
  TruncSeries two_t2(order);
  if (order >= 2) two_t2.set(2, IntPoly::constant(2));
  const TruncSeries rhs = (IntPoly{2, 2} * f).shifted(2) + two_t2 - (IntPoly::constant(3) * f).shifted(1) +
                          df.shifted(2) - (IntPoly{1, 1} * df).shifted(3);
  for (int k = 0; k <= order; ++k) {
    const IntPoly expected = k >= 4 ? s_sum(k) * Integer(2) : IntPoly{};
    if (rhs[k] != expected) return false;
  }
  return true;
}

}  // namespace localh
