// Acceptance criteria AC1-AC10. Prints one [PASS]/[FAIL] line per
// criterion and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "localh/cli.hpp"
#include "localh/local_h.hpp"
#include "localh/noncrossing.hpp"
#include "localh/permutation.hpp"
#include "localh/root_system.hpp"
#include "localh/series.hpp"

using namespace localh;

namespace {

using Failure = std::optional<std::string>;
using P = IntPoly;

constexpr double kAc1Seconds = 5.0;
constexpr double kAc3Seconds = 30.0;
constexpr double kAc4Seconds = 60.0;
constexpr double kAc7Seconds = 120.0;

struct TableRow {
  const char* type;
  IntPoly ell;
};

const std::vector<TableRow> kClassicalEll = {
    {"A2", P{0, 1}},
    {"A3", P{0, 1, 1}},
    {"A4", P{0, 1, 4, 1}},
    {"A5", P{0, 1, 8, 8, 1}},
    {"A6", P{0, 1, 13, 29, 13, 1}},
    {"A7", P{0, 1, 19, 73, 73, 19, 1}},
    {"A8", P{0, 1, 26, 151, 266, 151, 26, 1}},
    {"B2", P{0, 2}},
    {"B3", P{0, 3, 3}},
    {"B4", P{0, 4, 14, 4}},
    {"B5", P{0, 5, 35, 35, 5}},
    {"B6", P{0, 6, 69, 146, 69, 6}},
    {"B7", P{0, 7, 119, 427, 427, 119, 7}},
    {"D4", P{0, 2, 6, 2}},
    {"D5", P{0, 3, 18, 18, 3}},
    {"D6", P{0, 4, 40, 80, 40, 4}},
    {"D7", P{0, 5, 75, 250, 250, 75, 5}},
};

struct ExceptionalRow {
  CartanType type;
  IntPoly ell;
  IntPoly xi;
};

const std::vector<ExceptionalRow> kExceptional = {
    {CartanType::H(3), P{0, 8, 8}, P{0, 8}},
    {CartanType::H(4), P{0, 42, 124, 42}, P{0, 42, 40}},
    {CartanType::F4(), P{0, 10, 29, 10}, P{0, 10, 9}},
    {CartanType::E(6), P{0, 7, 63, 125, 63, 7}, P{0, 7, 35, 13}},
    {CartanType::E(7), P{0, 16, 204, 644, 644, 204, 16}, P{0, 16, 124, 112}},
    {CartanType::E(8), P{0, 44, 748, 3380, 5472, 3380, 748, 44}, P{0, 44, 484, 784, 120}},
};

const std::vector<IntPoly> kBaryXi = {
    P{0, 1},                    // n = 2
    P{0, 1},                    // n = 3
    P{0, 1, 5},                 // n = 4
    P{0, 1, 18},                // n = 5
    P{0, 1, 47, 61},            // n = 6
    P{0, 1, 108, 479},          // n = 7
    P{0, 1, 233, 2414, 1385},   // n = 8
    P{0, 1, 486, 9970, 19028},  // n = 9
};

IntPoly counts(const std::vector<std::int64_t>& v) { return IntPoly(std::vector<Integer>(v.begin(), v.end())); }

std::string show(const IntPoly& p) { return to_string(p); }

GammaVector gamma_of(const IntPoly& xi, int n) {
  return GammaVector(n, xi.padded(static_cast<std::size_t>(n / 2) + 1));
}

Failure ac1() {
  for (const auto& row : kClassicalEll) {
    std::ostringstream out, err;
    const int code = cli::run({"cluster", "--type", row.type, "--format", "json"}, out, err);
    if (code != 0) return std::string(row.type) + ": exit " + std::to_string(code) + " " + err.str();
    const auto rec = cli::parse_record(out.str());
    if (rec.payload["source"] != "computed-inclusion-exclusion") return std::string(row.type) + ": not computed";
    std::vector<Integer> c;
    for (const auto& v : rec.payload["ell"]) c.push_back(v.get<std::int64_t>());
    if (IntPoly(c) != row.ell) return std::string(row.type) + ": " + show(IntPoly(c)) + " vs " + show(row.ell);
  }
  for (const auto& row : kExceptional) {
    const auto r = local_h_cluster(row.type);
    if (r.ell != row.ell) return row.type.name() + ": ell not echoed";
    if (gamma_compose(gamma_of(row.xi, row.type.rank())) != row.ell) return row.type.name() + ": xi table inconsistent";
    if (r.xi.as_poly() != row.xi) return row.type.name() + ": xi not echoed";
  }
  for (int m = 3; m <= 12; ++m) {
    const auto r = local_h_cluster(CartanType::I2(m));
    if (r.ell != P{0, m - 2} || gamma_compose(r.xi) != r.ell) return "I2(" + std::to_string(m) + ")";
  }
  return std::nullopt;
}

Failure ac2() {
  auto check = [](const CartanType& t) -> Failure {
    const auto r = local_h_cluster(t);
    const GammaVector xi = gamma_decompose(r.ell, t.rank());
    for (int i = 0; i <= t.rank() / 2; ++i)
      if (xi_closed_form(t, i) != xi[i]) return t.name() + " i = " + std::to_string(i);
    return std::nullopt;
  };
  for (int n = 1; n <= 10; ++n)
    if (auto f = check(CartanType::A(n))) return f;
  for (int n = 2; n <= 10; ++n)
    if (auto f = check(CartanType::B(n))) return f;
  for (int n = 4; n <= 10; ++n)
    if (auto f = check(CartanType::D(n))) return f;
  for (int n = 2; n <= 7; ++n) {
    const auto b = count_nc_b(n);
    const auto a = count_nc_a(n);
    for (int i = 0; i <= n / 2; ++i) {
      if (xi_closed_form(CartanType::B(n), i) != b.no_zero_no_singleton[static_cast<std::size_t>(i)])
        return "NC^B brute count, n = " + std::to_string(n) + ", i = " + std::to_string(i);
      if (xi_closed_form(CartanType::A(n), i) != a.no_singleton[static_cast<std::size_t>(i)])
        return "NC^A brute count, n = " + std::to_string(n) + ", i = " + std::to_string(i);
    }
  }
  return std::nullopt;
}

Failure ac3() {
  for (int n = 1; n <= 8; ++n) {
    const auto c = count_nc_a(n);
    const auto r = local_h_cluster(CartanType::A(n));
    if (counts(c.singletons_nested) != r.ell) return "ell, n = " + std::to_string(n);
    if (counts(c.no_singleton) != r.xi.as_poly()) return "xi, n = " + std::to_string(n);
  }
  return std::nullopt;
}

Failure ac4() {
  for (int n = 2; n <= 6; ++n) {
    const auto c = count_nc_b(n);
    const auto r = local_h_cluster(CartanType::B(n));
    if (counts(c.no_zero_positive_singletons_nested) != r.ell) return "ell, n = " + std::to_string(n);
    if (counts(c.no_zero_no_singleton) != r.xi.as_poly()) return "xi, n = " + std::to_string(n);
    for (int k = 0; k <= n; ++k)
      if (c.no_zero_block[static_cast<std::size_t>(k)] != binomial(n, k) * binomial(n - 1, k - 1))
        return "pair count, n = " + std::to_string(n) + ", k = " + std::to_string(k);
  }
  return std::nullopt;
}

Failure ac5() {
  for (int n = 4; n <= 10; ++n)
    if (local_h_cluster(CartanType::D(n)).ell != narayana_poly(n - 1).shifted(1) * Integer(n - 2))
      return "n = " + std::to_string(n);
  return std::nullopt;
}

Failure ac6() {
  if (!verify_catalan_functional_eq(12)) return std::string("functional equation");
  for (int n = 4; n <= 12; ++n) {
    if (s_sum(n) * Integer(2) != twice_s_closed_form(n)) return "S_n, n = " + std::to_string(n);
    const IntPoly h = h_plus(CartanType::D(n));
    if (r_sum_form(n) != h || twice_r_closed_form(n) != h * Integer(2)) return "R_n, n = " + std::to_string(n);
  }
  return std::nullopt;
}

Failure ac7() {
  for (int n = 2; n <= 9; ++n) {
    const auto r = local_h_barycentric(n);
    const IntPoly& want = kBaryXi[static_cast<std::size_t>(n - 2)];
    if (gamma_decompose(r.ell, n).as_poly() != want) return "table, n = " + std::to_string(n);
    const auto c = bary_xi_counts(n);
    if (counts(c.by_runs) != want || counts(c.by_excedances) != want || counts(c.by_descents) != want)
      return "interpretations, n = " + std::to_string(n);
    if (want.evaluate(1) != count_no_short_run(n)) return "no-short-run count, n = " + std::to_string(n);
  }
  return std::nullopt;
}

Failure ac8() {
  for (int n = 1; n <= 8; ++n) {
    std::set<Perm> image, der_image, e_set;
    Failure fail;
    for_each_permutation(n, [&](const Perm& w) {
      const Perm u = foata_phi(w);
      image.insert(u);
      if (stats(w).fixed_points.empty()) der_image.insert(u);
      if (is_in_E(w)) e_set.insert(w);
      const auto du = stats(u).descents;
      const Perm where = u.inverse();
      for (int i = 1; i <= n; ++i)
        if ((w(i) < i) != std::binary_search(du.begin(), du.end(), where(i)) && !fail)
          fail = "property (c) at " + to_string(w);
    });
    if (fail) return fail;
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    if (image.size() != fact) return "phi not bijective, n = " + std::to_string(n);
    if (der_image != e_set) return "phi(D_n) != E_n, n = " + std::to_string(n);
    std::set<Perm> covered;
    for (const auto& w : e_set) {
      if (covered.count(w)) continue;
      int reps = 0, d = 0;
      IntPoly des;
      for (const auto& u : fss_orbit(w)) {
        covered.insert(u);
        const auto s = stats(u);
        des += IntPoly::monomial(1, static_cast<int>(s.descents.size()));
        if (s.double_descents.empty()) {
          ++reps;
          d = static_cast<int>(s.descents.size());
        }
      }
      if (reps != 1) return "orbit of " + to_string(w) + " has " + std::to_string(reps) + " representatives";
      if (des != IntPoly::one_plus_x_pow(n - 2 * d).shifted(d)) return "orbit polynomial of " + to_string(w);
    }
    if (covered != e_set) return "orbits leave E_n";
  }
  return std::nullopt;
}

Failure ac9() {
  std::vector<LocalHResult> pool;
  for (int n = 1; n <= 10; ++n) pool.push_back(local_h_cluster(CartanType::A(n)));
  for (int n = 2; n <= 10; ++n) pool.push_back(local_h_cluster(CartanType::B(n)));
  for (int n = 4; n <= 10; ++n) pool.push_back(local_h_cluster(CartanType::D(n)));
  for (const auto& t : exceptional_types()) pool.push_back(local_h_cluster(t));
  for (int n = 1; n <= 9; ++n) pool.push_back(local_h_barycentric(n));
  for (const auto& r : pool) {
    if (!is_symmetric(r.ell, r.n())) return "asymmetric ell " + show(r.ell);
    if (r.ell.coeff(0) != 0) return "ell_0 != 0 in " + show(r.ell);
    if (!r.xi.is_nonnegative()) return "negative xi " + show(r.xi.as_poly());
  }
  std::mt19937 rng(2011);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 50; ++k) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto j = local_h_join(a, b);
    if (j.ell != a.ell * b.ell || j.xi.as_poly() != a.xi.as_poly() * b.xi.as_poly())
      return "join of " + show(a.ell) + " and " + show(b.ell);
  }
  return std::nullopt;
}

Failure ac10() {
  const Perm phi = foata_phi(parse_cycles("(5 2 4)(6 1)(8)(9 7 3)"));
  if (to_string(phi) != "(5,2,4,6,1,8,9,7,3)") return "phi gives " + to_string(phi);
  const Perm w = parse_word("(7,3,1,5,6,9,8,2,4)");
  if (to_string(fss_move(w, 4)) != "(7,5,3,1,6,9,8,2,4)") return "psi_4 gives " + to_string(fss_move(w, 4));
  if (to_string(fss_move(w, 7)) != "(7,3,1,5,6,9,2,4,8)") return "psi_7 gives " + to_string(fss_move(w, 7));
  return std::nullopt;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Failure()> body;
  double limit_seconds;  // 0: no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "classical and exceptional local h tables", ac1, kAc1Seconds},
      {"AC2", "xi closed forms vs decomposition and brute counts", ac2, 0},
      {"AC3", "type A noncrossing oracle, n <= 8", ac3, kAc3Seconds},
      {"AC4", "type B noncrossing oracle, n <= 6", ac4, kAc4Seconds},
      {"AC5", "ell(D_n) = (n-2) x C_{n-1}(x), 4 <= n <= 10", ac5, 0},
      {"AC6", "series identities through order 12", ac6, 0},
      {"AC7", "barycentric gamma table and interpretations, n <= 9", ac7, kAc7Seconds},
      {"AC8", "Foata map and FSS orbits, n <= 8", ac8, 0},
      {"AC9", "symmetry, nonnegativity, join multiplicativity", ac9, 0},
      {"AC10", "reference Foata and FSS values", ac10, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure f;
    try {
      f = c.body();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!f && c.limit_seconds > 0 && secs >= c.limit_seconds)
      f = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    std::cout << (f ? "[FAIL] " : "[PASS] ") << c.id << " " << c.title << " (" << secs << " s)";
    if (f) std::cout << ": " << *f;
    std::cout << '\n';
    failed += f ? 1 : 0;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
