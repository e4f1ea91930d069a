#include "localh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "localh/errors.hpp"
#include "localh/local_h.hpp"
#include "localh/noncrossing.hpp"
#include "localh/permutation.hpp"
#include "localh/reference_tables.hpp"
#include "localh/root_system.hpp"
#include "localh/series.hpp"

namespace localh {

Suite parse_suite(std::string_view text) {
  if (text == "tables") return Suite::Tables;
  if (text == "oracles") return Suite::Oracles;
  if (text == "series") return Suite::Series;
  if (text == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

namespace {

using Failure = std::optional<std::string>;

std::string range(int lo, int hi) {
  if (hi < lo) return "empty";
  return "n = " + std::to_string(lo) + ".." + std::to_string(hi);
}

IntPoly from_counts(const std::vector<std::int64_t>& v) {
  return IntPoly(std::vector<Integer>(v.begin(), v.end()));
}

std::string mismatch(const std::string& what, const IntPoly& got, const IntPoly& want) {
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

class Runner {
 public:
  explicit Runner(int max_n) : max_n_(max_n) {}

  void check(std::string name, std::string anchor, std::string scope, const std::function<Failure()>& body) {
    CheckResult r{std::move(name), std::move(anchor), std::move(scope), false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Failure f = body();
      r.passed = !f.has_value();
      if (f) r.detail = *f;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  int cap(int limit) const { return std::min(max_n_, limit); }
  std::vector<CheckResult> take() { return std::move(results_); }

  // local_h_cluster results are reused across checks.
  const LocalHResult& cluster(const CartanType& t) {
    auto it = cache_.find(t);
    if (it == cache_.end()) it = cache_.emplace(t, local_h_cluster(t)).first;
    return it->second;
  }

 private:
  int max_n_;
  std::vector<CheckResult> results_;
  std::map<CartanType, LocalHResult> cache_;
};

std::vector<CartanType> classical_types(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(CartanType::A(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(CartanType::B(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back(CartanType::D(n));
  return out;
}

void tables_suite(Runner& run) {
  run.check("classical local h tables", "inclusion-exclusion over parabolic subsets reproduces the A/B/D tables",
            "rank <= " + std::to_string(run.cap(8)), [&]() -> Failure {
              for (const auto& row : classical_reference()) {
                if (row.type.rank() > run.cap(8)) continue;
                const auto& r = run.cluster(row.type);
                if (row.has_ell && r.ell != row.ell) return mismatch(row.type.name() + " ell", r.ell, row.ell);
                if (r.xi.as_poly() != row.xi) return mismatch(row.type.name() + " xi", r.xi.as_poly(), row.xi);
              }
              return std::nullopt;
            });

  run.check("exceptional tables", "embedded ell and xi agree under the gamma basis change", "E6-E8, F4, H3, H4, I2(3..12)",
            [&]() -> Failure {
              std::vector<int> ms;
              for (int m = 3; m <= 12; ++m) ms.push_back(m);
              for (const auto& t : exceptional_types(ms)) {
                const auto e = exceptional_entry(t);
                const auto r = local_h_cluster(t);
                if (r.xi.as_poly() != e->xi) return mismatch(t.name() + " xi", r.xi.as_poly(), e->xi);
                if (gamma_compose(r.xi) != e->ell) return t.name() + ": gamma_compose disagrees with ell";
              }
              return std::nullopt;
            });

  const int xi_hi = run.cap(10);
  run.check("xi closed forms", "product formulas for xi match gamma_decompose of the computed local h",
            "A1.." + std::to_string(xi_hi) + ", B2.., D4..", [&]() -> Failure {
              for (const auto& t : classical_types(xi_hi)) {
                const auto& r = run.cluster(t);
                for (int i = 0; i <= t.rank() / 2; ++i)
                  if (xi_closed_form(t, i) != r.xi[i])
                    return t.name() + ": xi_" + std::to_string(i) + " closed form " +
                           xi_closed_form(t, i).str() + " vs computed " + r.xi[i].str();
                if (local_h_closed_form(t).ell != r.ell) return t.name() + ": closed-form ell differs";
              }
              return std::nullopt;
            });

  run.check("D ell closed form", "ell_i(D_n) = (n-2)/i C(n-1,i-1) C(n-2,i-1)", range(4, xi_hi), [&]() -> Failure {
    for (int n = 4; n <= xi_hi; ++n) {
      const auto& r = run.cluster(CartanType::D(n));
      for (int i = 0; i <= n; ++i)
        if (ell_closed_form_D(n, i) != r.ell.coeff(i)) return "D" + std::to_string(n) + " at i = " + std::to_string(i);
    }
    return std::nullopt;
  });

  run.check("structural invariants", "symmetry, ell_0 = 0, nonnegative ell and xi, ell_1 counts interior vertices",
            "classical rank <= " + std::to_string(xi_hi) + " plus exceptional", [&]() -> Failure {
              std::vector<CartanType> all = classical_types(xi_hi);
              for (const auto& t : exceptional_types()) all.push_back(t);
              for (const auto& t : all) {
                const auto& r = run.cluster(t);
                if (!is_symmetric(r.ell, t.rank())) return t.name() + ": not symmetric";
                if (r.ell.coeff(0) != 0) return t.name() + ": ell_0 != 0";
                for (int i = 0; i <= t.rank(); ++i)
                  if (r.ell.coeff(i) < 0) return t.name() + ": negative ell";
                if (!r.xi.is_nonnegative()) return t.name() + ": negative xi";
                Integer interior = -1;
                if (t.family() == Family::A && t.rank() >= 2) interior = 1;
                if (t.family() == Family::B) interior = t.rank();
                if (t.family() == Family::D) interior = t.rank() - 2;
                if (interior >= 0 && r.ell.coeff(1) != interior)
                  return t.name() + ": ell_1 = " + r.ell.coeff(1).str() + ", expected " + interior.str();
              }
              return std::nullopt;
            });

  run.check("join multiplicativity", "ell and xi of a join are the products", "50 seeded random pairs", [&]() -> Failure {
    std::vector<CartanType> pool = classical_types(std::min(xi_hi, 7));
    for (const auto& t : exceptional_types({3, 5, 8})) pool.push_back(t);
    std::mt19937 rng(20120611);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 50; ++k) {
      const auto& a = run.cluster(pool[pick(rng)]);
      const auto& b = run.cluster(pool[pick(rng)]);
      const auto j = local_h_join(a, b);
      if (j.ell != a.ell * b.ell) return std::string("ell of join is not the product");
      if (gamma_decompose(j.ell, j.n()) != j.xi) return std::string("xi of join is not the product");
    }
    return std::nullopt;
  });

  const int bary_hi = run.cap(9);
  run.check("barycentric xi table", "derangement polynomial decomposes to the reference gamma table", range(1, bary_hi),
            [&]() -> Failure {
              for (int n = 1; n <= bary_hi; ++n) {
                const auto r = local_h_barycentric(n);
                const auto& want = barycentric_xi_reference()[static_cast<std::size_t>(n - 1)];
                if (r.xi.as_poly() != want) return mismatch("n = " + std::to_string(n), r.xi.as_poly(), want);
              }
              return std::nullopt;
            });
}

void oracles_suite(Runner& run) {
  const int a_hi = run.cap(10);
  run.check("NC^A sizes and rank generating function", "|NC^A(n)| = Catalan(n) and sum x^{n-|pi|} = C_n(x)",
            range(1, a_hi), [&]() -> Failure {
              for (int n = 1; n <= a_hi; ++n) {
                const auto c = count_nc_a(n);
                std::vector<std::int64_t> by_rank(c.all.rbegin(), c.all.rend() - 1);
                Integer total = 0;
                for (auto v : c.all) total += v;
                if (total != catalan(n)) return "n = " + std::to_string(n) + ": |NC^A| = " + total.str();
                if (from_counts(by_rank) != narayana_poly(n))
                  return mismatch("n = " + std::to_string(n), from_counts(by_rank), narayana_poly(n));
                if (h_plus(CartanType::A(n)) != narayana_poly(n)) return "h_plus(A" + std::to_string(n) + ") != C_n";
              }
              return std::nullopt;
            });

  const int a_pipe = run.cap(8);
  run.check("type A interpretations", "ell counts NC^A with all singletons nested; xi counts NC^A without singletons",
            range(1, a_pipe), [&]() -> Failure {
              for (int n = 1; n <= a_pipe; ++n) {
                const auto c = count_nc_a(n);
                const auto& r = run.cluster(CartanType::A(n));
                if (from_counts(c.singletons_nested) != r.ell)
                  return mismatch("ell A" + std::to_string(n), from_counts(c.singletons_nested), r.ell);
                if (from_counts(c.no_singleton) != r.xi.as_poly())
                  return mismatch("xi A" + std::to_string(n), from_counts(c.no_singleton), r.xi.as_poly());
              }
              return std::nullopt;
            });

  run.check("no-singleton NC^A formula", "#{no singleton, i blocks} = 1/(n-i+1) C(n,i) C(n-i-1,i-1)", range(1, a_hi),
            [&]() -> Failure {
              for (int n = 1; n <= a_hi; ++n) {
                const auto c = count_nc_a(n);
                for (int i = 1; i <= n / 2; ++i)
                  if (c.no_singleton[static_cast<std::size_t>(i)] != xi_closed_form(CartanType::A(n), i))
                    return "n = " + std::to_string(n) + ", i = " + std::to_string(i);
                for (int i = n / 2 + 1; i <= n; ++i)
                  if (c.no_singleton[static_cast<std::size_t>(i)] != 0) return "nonzero beyond n/2";
              }
              return std::nullopt;
            });

  run.check("nonnested singleton splitting", "{b} nonnested singleton <=> independent halves: count = Cat(b-1) Cat(n-b)",
            range(1, run.cap(9)), [&]() -> Failure {
              for (int n = 1; n <= run.cap(9); ++n) {
                std::vector<Integer> count(static_cast<std::size_t>(n) + 1);
                for (const auto& p : enumerate_nc_a(n))
                  for (int b = 1; b <= n; ++b)
                    if (p.is_singleton(b) && !is_nested_singleton(p, b)) ++count[static_cast<std::size_t>(b)];
                for (int b = 1; b <= n; ++b)
                  if (count[static_cast<std::size_t>(b)] != catalan(b - 1) * catalan(n - b))
                    return "n = " + std::to_string(n) + ", b = " + std::to_string(b);
              }
              return std::nullopt;
            });

  const int b_hi = run.cap(7);
  run.check("NC^B counts", "|NC^B(n)| = C(2n,n); no-zero-block count by pairs k = C(n,k) C(n-1,k-1)", range(1, b_hi),
            [&]() -> Failure {
              for (int n = 1; n <= b_hi; ++n) {
                const auto c = count_nc_b(n);
                Integer total = 0;
                for (auto v : c.all) total += v;
                if (total != binomial(2 * n, n)) return "n = " + std::to_string(n) + ": |NC^B| = " + total.str();
                for (int k = 0; k <= n; ++k)
                  if (c.no_zero_block[static_cast<std::size_t>(k)] != binomial(n, k) * binomial(n - 1, k - 1))
                    return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
                std::vector<std::int64_t> by_rank(c.no_zero_block.rbegin(), c.no_zero_block.rend());
                if (n >= 2 && from_counts(by_rank) != h_plus(CartanType::B(n)))
                  return mismatch("h_plus B" + std::to_string(n), from_counts(by_rank), h_plus(CartanType::B(n)));
              }
              return std::nullopt;
            });

  const int b_pipe = run.cap(6);
  run.check("type B interpretations", "ell counts NC^B_+ with positive singletons nested; xi counts NC^B_+ without singletons",
            range(2, b_pipe), [&]() -> Failure {
              for (int n = 2; n <= b_pipe; ++n) {
                const auto c = count_nc_b(n);
                const auto& r = run.cluster(CartanType::B(n));
                if (from_counts(c.no_zero_positive_singletons_nested) != r.ell)
                  return mismatch("ell B" + std::to_string(n), from_counts(c.no_zero_positive_singletons_nested), r.ell);
                if (from_counts(c.no_zero_no_singleton) != r.xi.as_poly())
                  return mismatch("xi B" + std::to_string(n), from_counts(c.no_zero_no_singleton), r.xi.as_poly());
                for (int i = 1; i <= n / 2; ++i)
                  if (c.no_zero_no_singleton[static_cast<std::size_t>(i)] != binomial(n, i) * binomial(n - i - 1, i - 1))
                    return "no-singleton formula fails at n = " + std::to_string(n) + ", i = " + std::to_string(i);
              }
              return std::nullopt;
            });

  run.check("type D via NC^A(n-1)", "ell_i(D_n) = (n-2) #{pi in NC^A(n-1): |pi| = i}", range(4, run.cap(10)),
            [&]() -> Failure {
              for (int n = 4; n <= run.cap(10); ++n) {
                const auto c = count_nc_a(n - 1);
                IntPoly want = from_counts(c.all) * Integer(n - 2);
                if (run.cluster(CartanType::D(n)).ell != want)
                  return mismatch("D" + std::to_string(n), run.cluster(CartanType::D(n)).ell, want);
              }
              return std::nullopt;
            });

  run.check("parabolic ranks", "component ranks of every parabolic subsystem sum to |J|", "classical rank <= " +
            std::to_string(run.cap(10)), [&]() -> Failure {
              for (const auto& t : classical_types(run.cap(10)))
                for (VertexMask m = 0; m < (VertexMask{1} << t.rank()); ++m)
                  if (parabolic_decompose(t, m).total_rank() != std::popcount(m)) return t.name() + " subset mismatch";
              return std::nullopt;
            });

  const int p_hi = run.cap(8);
  run.check("Foata map properties", "phi is a bijection, phi(D_n) = E_n, w(i) < i <=> i sits at a descent of phi(w)",
            range(1, p_hi), [&]() -> Failure {
              for (int n = 1; n <= p_hi; ++n) {
                std::set<Perm> image;
                std::set<Perm> derangement_image;
                std::set<Perm> e_set;
                Failure fail;
                for_each_permutation(n, [&](const Perm& w) {
                  const Perm u = foata_phi(w);
                  image.insert(u);
                  const auto s = stats(w);
                  if (s.fixed_points.empty()) derangement_image.insert(u);
                  if (is_in_E(w)) e_set.insert(w);
                  const auto su = stats(u);
                  const Perm pos = u.inverse();
                  int drops = 0;
                  for (int i = 1; i <= n; ++i) {
                    const bool drop = w(i) < i;
                    drops += drop ? 1 : 0;
                    const bool at_descent = std::binary_search(su.descents.begin(), su.descents.end(), pos(i));
                    if (drop != at_descent && !fail) fail = "pointwise descent property fails for " + to_string(w);
                  }
                  if (drops != static_cast<int>(su.descents.size()) && !fail) fail = "descent count differs for " + to_string(w);
                });
                if (fail) return fail;
                if (static_cast<int>(image.size()) != static_cast<int>(std::tgamma(n + 1) + 0.5)) return "phi not injective";
                if (derangement_image != e_set) return "phi(D_n) != E_n at n = " + std::to_string(n);
              }
              return std::nullopt;
            });

  run.check("FSS orbits", "orbits partition E_n, one no-double-descent element each, sum x^des = x^d (1+x)^{n-2d}",
            range(1, p_hi), [&]() -> Failure {
              for (int n = 1; n <= p_hi; ++n) {
                std::set<Perm> covered;
                std::size_t e_count = 0;
                Failure fail;
                for_each_permutation(n, [&](const Perm& w) {
                  if (!is_in_E(w)) return;
                  ++e_count;
                  if (fail || covered.count(w)) return;
                  const auto orbit = fss_orbit(w);
                  int reps = 0;
                  IntPoly des_poly;
                  int d = 0;
                  int k = 0;
                  for (const auto& u : orbit) {
                    covered.insert(u);
                    const auto s = stats(u);
                    des_poly += IntPoly::monomial(1, static_cast<int>(s.descents.size()));
                    if (s.double_descents.empty()) {
                      ++reps;
                      d = static_cast<int>(s.descents.size());
                      k = static_cast<int>(double_ascents(u).size());
                    }
                  }
                  if (reps != 1) fail = "orbit of " + to_string(w) + " has " + std::to_string(reps) + " representatives";
                  else if (orbit.size() != (std::size_t{1} << k)) fail = "orbit size is not 2^k for " + to_string(w);
                  else if (des_poly != IntPoly::one_plus_x_pow(n - 2 * d).shifted(d))
                    fail = "descent polynomial of orbit of " + to_string(w) + " is " + to_string(des_poly);
                });
                if (fail) return fail;
                if (covered.size() != e_count) return "orbits leave E_n";
              }
              return std::nullopt;
            });

  const int bary_hi = run.cap(9);
  run.check("barycentric interpretations", "runs, excedances and E_n-descent counts all equal the local gamma vector",
            range(1, bary_hi), [&]() -> Failure {
              for (int n = 1; n <= bary_hi; ++n) {
                const auto c = bary_xi_counts(n);
                const IntPoly xi = local_h_barycentric(n).xi.as_poly();
                if (from_counts(c.by_runs) != xi) return mismatch("runs n = " + std::to_string(n), from_counts(c.by_runs), xi);
                if (from_counts(c.by_excedances) != xi)
                  return mismatch("excedances n = " + std::to_string(n), from_counts(c.by_excedances), xi);
                if (from_counts(c.by_descents) != xi)
                  return mismatch("descents n = " + std::to_string(n), from_counts(c.by_descents), xi);
                if (xi.evaluate(1) != count_no_short_run(n)) return "sum of xi vs no-short-run count at n = " + std::to_string(n);
                const IntPoly ell = local_h_barycentric(n).ell;
                if (ell != ell.reversed(n)) return "derangement polynomial not symmetric at n = " + std::to_string(n);
              }
              return std::nullopt;
            });
}

void series_suite(Runner& run) {
  const int order = std::max(12, run.cap(kMaxVerifyN));
  run.check("Narayana functional equation", "F = x t F^2 + (1+x) t F + t", "order " + std::to_string(order),
            [&]() -> Failure {
              if (!verify_catalan_functional_eq(order)) return std::string("identity fails");
              return std::nullopt;
            });

  run.check("Narayana symmetry and Catalan values", "C_n symmetric about (n-1)/2 and C_n(1) = Catalan(n)", range(1, 15),
            [&]() -> Failure {
              for (int n = 1; n <= 15; ++n) {
                const IntPoly c = narayana_poly(n);
                if (!is_symmetric(c, n - 1)) return "C_" + std::to_string(n) + " not symmetric";
                if (c.evaluate(1) != catalan(n)) return "C_" + std::to_string(n) + "(1) != Catalan";
              }
              return std::nullopt;
            });

  run.check("S_n identity", "2 S_n = (n-4) C_{n-1} - (n-4)(1+x) C_{n-2}", range(4, order), [&]() -> Failure {
    for (int n = 4; n <= order; ++n)
      if (s_sum(n) * Integer(2) != twice_s_closed_form(n))
        return mismatch("n = " + std::to_string(n), s_sum(n) * Integer(2), twice_s_closed_form(n));
    if (!verify_s_generating_function(order)) return std::string("generating function for S_n fails");
    return std::nullopt;
  });

  run.check("R_n reconciliation", "h(D_n) = R_n in sum form and in closed form", range(4, order), [&]() -> Failure {
    for (int n = 4; n <= order; ++n) {
      const IntPoly h = h_plus(CartanType::D(n));
      if (r_sum_form(n) != h) return mismatch("sum form n = " + std::to_string(n), r_sum_form(n), h);
      if (twice_r_closed_form(n) != h * Integer(2))
        return mismatch("closed form n = " + std::to_string(n), twice_r_closed_form(n), h * Integer(2));
    }
    return std::nullopt;
  });

  const int d_hi = run.cap(10);
  run.check("D local h via Narayana", "ell(D_n) = (n-2) x C_{n-1}(x)", range(4, d_hi), [&]() -> Failure {
    for (int n = 4; n <= d_hi; ++n) {
      const IntPoly want = narayana_poly(n - 1).shifted(1) * Integer(n - 2);
      if (run.cluster(CartanType::D(n)).ell != want) return mismatch("D" + std::to_string(n), run.cluster(CartanType::D(n)).ell, want);
    }
    return std::nullopt;
  });

  run.check("gamma round trip", "gamma_compose(gamma_decompose(p)) = p for symmetric p", "200 seeded polynomials, n <= 20",
            [&]() -> Failure {
              std::mt19937 rng(7);
              std::uniform_int_distribution<int> deg(0, 20);
              std::uniform_int_distribution<int> val(-1000, 1000);
              for (int k = 0; k < 200; ++k) {
                const int n = deg(rng);
                std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
                for (int i = 0; i <= n / 2; ++i)
                  c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(n - i)] = val(rng);
                const IntPoly p(c);
                if (gamma_compose(gamma_decompose(p, n)) != p) return "round trip fails for " + to_string(p);
              }
              return std::nullopt;
            });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.max_n < 1) throw std::invalid_argument("verify: max-n must be at least 1");
  if (opts.max_n > kMaxVerifyN)
    throw BudgetExceeded("verify: max-n " + std::to_string(opts.max_n) + " exceeds the budget (" +
                         std::to_string(kMaxVerifyN) + ")");
  Runner run(opts.max_n);
  if (opts.suite == Suite::Tables || opts.suite == Suite::All) tables_suite(run);
  if (opts.suite == Suite::Oracles || opts.suite == Suite::All) oracles_suite(run);
  if (opts.suite == Suite::Series || opts.suite == Suite::All) series_suite(run);
  return run.take();
}

}  // namespace localh
