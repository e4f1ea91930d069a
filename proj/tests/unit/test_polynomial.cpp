#include <doctest.h>

#include <random>
#include <sstream>

#include "localh/errors.hpp"
#include "localh/polynomial.hpp"
#include "oracles.hpp"

using namespace localh;

TEST_CASE("arithmetic stays canonical") {
  const IntPoly one_x{1, 1};
  CHECK(one_x * one_x == IntPoly{1, 2, 1});
  const IntPoly p{0, 1, 1};
  const IntPoly zero = p + (-p);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero == IntPoly{});
  CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
  CHECK((p * Integer(0)).degree() == -1);
  CHECK(p * Integer(3) == IntPoly{0, 3, 3});
  CHECK(p - p == IntPoly{});
  CHECK(IntPoly::monomial(0, 4).is_zero());
  CHECK(IntPoly::one_plus_x_pow(3) == IntPoly{1, 3, 3, 1});
}

TEST_CASE("squaring the A2 h-polynomial") {
  const IntPoly c2 = narayana_poly(2);
  CHECK(c2 == IntPoly{1, 1});
  CHECK(c2 * c2 == IntPoly{1, 2, 1});
}

TEST_CASE("coefficient access and transforms") {
  const IntPoly p{0, 4, 14, 4};
  CHECK(p.coeff(-1) == 0);
  CHECK(p.coeff(2) == 14);
  CHECK(p.coeff(9) == 0);
  CHECK(p.padded(6).size() == 6);
  CHECK(p.evaluate(1) == 22);
  CHECK(p.evaluate(-1) == 6);
  CHECK(p.shifted(2) == IntPoly{0, 0, 0, 4, 14, 4});
  CHECK(IntPoly{1, 2}.reversed(3) == IntPoly{0, 0, 2, 1});
}

TEST_CASE("plain text rendering") {
  CHECK(to_string(IntPoly{0, 4, 14, 4}) == "4x + 14x^2 + 4x^3");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(to_string(IntPoly{1, -1, 0, 2}) == "1 - x + 2x^3");
  CHECK(to_string(IntPoly{-3}) == "-3");
  std::ostringstream os;
  os << IntPoly{0, 1};
  CHECK(os.str() == "x");
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(IntPoly{0, 1, 4, 1}, 4));
  CHECK(is_symmetric(IntPoly{1, 1}, 1));
  CHECK_FALSE(is_symmetric(IntPoly{1, 2}, 2));
  CHECK(is_symmetric(IntPoly{}, 3));
  CHECK_THROWS_AS(is_symmetric(IntPoly{1, 1, 1}, 1), std::invalid_argument);
}

TEST_CASE("gamma decomposition examples") {
  CHECK(gamma_decompose(IntPoly{0, 1, 4, 1}, 4) == GammaVector(4, {0, 1, 2}));
  CHECK(gamma_decompose(IntPoly{0, 4, 14, 4}, 4) == GammaVector(4, {0, 4, 6}));
  for (int n = 0; n <= 9; ++n) {
    std::vector<Integer> unit(static_cast<std::size_t>(n / 2) + 1, 0);
    unit[0] = 1;
    CHECK(gamma_decompose(IntPoly::one_plus_x_pow(n), n) == GammaVector(n, unit));
  }
  CHECK_THROWS_AS(gamma_decompose(IntPoly{1, 2}, 2), std::invalid_argument);
}

TEST_CASE("gamma composition examples") {
  CHECK(gamma_compose(GammaVector(4, {0, 1, 2})) == IntPoly{0, 1, 4, 1});
  CHECK(gamma_compose(GammaVector(5)) == IntPoly{});
  CHECK(gamma_compose(GammaVector(4, {0, 2, 2})) == IntPoly{0, 2, 6, 2});
  CHECK_THROWS_AS(GammaVector(4, {0, 1}), std::invalid_argument);
}

TEST_CASE("gamma decomposition may be negative") {
  const GammaVector xi = gamma_decompose(IntPoly{1, 1, 1}, 2);
  CHECK(xi == GammaVector(2, {1, -1}));
  CHECK_FALSE(xi.is_nonnegative());
}

TEST_CASE("property: compose inverts decompose on random symmetric polynomials") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> deg(0, 20);
  std::uniform_int_distribution<int> val(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = deg(rng);
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n / 2; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(n - i)] = val(rng);
    const IntPoly p(c);
    const GammaVector xi = gamma_decompose(p, n);
    CHECK(gamma_compose(xi) == p);
    const auto forward = oracle::gamma_forward(p, n);
    CHECK(std::vector<Integer>(xi.values().begin(), xi.values().end()) == forward);
  }
}

TEST_CASE("Narayana polynomials") {
  CHECK(narayana_poly(1) == IntPoly{1});
  CHECK(narayana_poly(3) == IntPoly{1, 3, 1});
  // Frozen from the brute-force rank count over NC(5).
  const auto t = oracle::nc_a_tally(5);
  std::vector<std::int64_t> by_rank(t.all.rbegin(), t.all.rend() - 1);
  CHECK(oracle::poly(by_rank) == IntPoly{1, 10, 20, 10, 1});
  CHECK(narayana_poly(5) == IntPoly{1, 10, 20, 10, 1});
  CHECK_THROWS_AS(narayana_poly(0), std::invalid_argument);
}

TEST_CASE("property: Narayana values and symmetry") {
  for (int n = 1; n <= 15; ++n) {
    const IntPoly c = narayana_poly(n);
    CHECK(c.evaluate(1) == catalan(n));
    CHECK(catalan(n) * (n + 1) == binomial(2 * n, n));
    for (int i = 0; i <= n - 1; ++i) CHECK(c.coeff(i) == c.coeff(n - 1 - i));
  }
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}
