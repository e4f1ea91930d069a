#include "localh/local_h.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "localh/errors.hpp"
#include "localh/parallel.hpp"

namespace localh {

std::string_view to_string(Source s) {
  switch (s) {
    case Source::InclusionExclusion: return "computed-inclusion-exclusion";
    case Source::EmbeddedTable: return "embedded-table";
    case Source::ClosedForm: return "closed-form";
    case Source::Enumeration: return "enumeration";
    case Source::Join: return "join";
  }
  return "unknown";
}

LocalHResult LocalHResult::from_ell(IntPoly ell, int n, Source source) {
  GammaVector xi = gamma_decompose(ell, n);
  return LocalHResult{std::move(ell), std::move(xi), source};
}

namespace {

using SignedCounts = std::map<std::vector<CartanType>, std::int64_t>;

// Net signed multiplicity of each parabolic decomposition over masks in [lo, hi).
SignedCounts sweep_range(const CartanType& t, VertexMask lo, VertexMask hi) {
  SignedCounts counts;
  const int n = t.rank();
  for (VertexMask mask = lo; mask < hi; ++mask) {
    const int missing = n - std::popcount(mask);
    counts[parabolic_decompose(t, mask).components] += (missing % 2 == 0) ? 1 : -1;
  }
  return counts;
}

IntPoly inclusion_exclusion(const CartanType& t, int threads) {
  const int n = t.rank();
  const VertexMask total = VertexMask{1} << n;
  const VertexMask workers =
      std::clamp<VertexMask>(static_cast<VertexMask>(threads), 1, std::max<VertexMask>(1, total / 1024));

  std::vector<SignedCounts> partial(workers);
  if (workers == 1) {
    partial[0] = sweep_range(t, 0, total);
  } else {
    std::vector<std::jthread> pool;
    const VertexMask chunk = (total + workers - 1) / workers;
    for (VertexMask w = 0; w < workers; ++w) {
      const VertexMask lo = w * chunk;
      const VertexMask hi = std::min(total, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { partial[w] = sweep_range(t, lo, hi); });
    }
  }

  SignedCounts merged;
  for (const auto& p : partial)
    for (const auto& [key, c] : p) merged[key] += c;

  std::map<CartanType, IntPoly> memo;
  auto component_h = [&](const CartanType& c) -> const IntPoly& {
    auto it = memo.find(c);
    if (it == memo.end()) it = memo.emplace(c, h_plus(c)).first;
    return it->second;
  };

  IntPoly ell;
  for (const auto& [components, c] : merged) {
    if (c == 0) continue;
    IntPoly h = IntPoly::constant(1);
    for (const auto& comp : components) h *= component_h(comp);
    ell += h * Integer(c);
  }
  return ell;
}

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (den == 0 || num % den != 0) throw ConsistencyError(std::string(what) + ": inexact division");
  return num / den;
}

}  // namespace

LocalHResult local_h_cluster(const CartanType& t, const ClusterOptions& opts) {
  if (auto entry = exceptional_entry(t))
    return LocalHResult::from_ell(entry->ell, t.rank(), Source::EmbeddedTable);
  if (t.rank() > opts.max_rank)
    throw BudgetExceeded("rank " + std::to_string(t.rank()) + " of " + t.name() +
                         " exceeds the subset-sweep budget (max rank " +
                         std::to_string(opts.max_rank) + ")");
  const int threads = opts.threads > 0 ? opts.threads : default_thread_count();
  return LocalHResult::from_ell(inclusion_exclusion(t, threads), t.rank(), Source::InclusionExclusion);
}

LocalHResult local_h_join(const LocalHResult& a, const LocalHResult& b) {
  const int n = a.n() + b.n();
  IntPoly ell = a.ell * b.ell;
  const IntPoly xi_poly = a.xi.as_poly() * b.xi.as_poly();
  if (xi_poly.degree() > n / 2) throw ConsistencyError("local_h_join: gamma degree overflow");
  GammaVector xi(n, xi_poly.padded(static_cast<std::size_t>(n / 2) + 1));
  return LocalHResult{std::move(ell), std::move(xi), Source::Join};
}

LocalHResult local_h_barycentric(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("local_h_barycentric: n must be nonnegative");
  if (n > max_n)
    throw BudgetExceeded("derangement enumeration for n = " + std::to_string(n) +
                         " exceeds the budget (max n " + std::to_string(max_n) + ")");
  std::vector<std::int64_t> by_exc(static_cast<std::size_t>(n) + 1, 0);
  // Position i (1-based) takes an unused value v != i; v > i is an excedance.
  auto place = [&](auto&& self, int i, std::uint32_t used, int exc) -> void {
    if (i > n) {
      ++by_exc[static_cast<std::size_t>(exc)];
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (v == i || (used >> v) & 1U) continue;
      self(self, i + 1, used | (1U << v), exc + (v > i ? 1 : 0));
    }
  };
  place(place, 1, 0, 0);
  std::vector<Integer> coeffs(by_exc.begin(), by_exc.end());
  return LocalHResult::from_ell(IntPoly(std::move(coeffs)), n, Source::Enumeration);
}

Integer xi_closed_form(const CartanType& t, int i) {
  const int n = t.rank();
  if (i < 0 || i > n / 2)
    throw std::out_of_range("xi index " + std::to_string(i) + " outside [0, " +
                            std::to_string(n / 2) + "] for " + t.name());
  if (auto entry = exceptional_entry(t)) return entry->xi.coeff(i);
  if (i == 0) return 0;
  switch (t.family()) {
    case Family::A:
      return exact_div(binomial(n, i) * binomial(n - i - 1, i - 1), n - i + 1, "xi(A)");
    case Family::B:
      return binomial(n, i) * binomial(n - i - 1, i - 1);
    default:
      return exact_div(Integer(n - 2) * binomial(2 * i - 2, i - 1) * binomial(n - 2, 2 * i - 2), i,
                       "xi(D)");
  }
}

LocalHResult local_h_closed_form(const CartanType& t) {
  const int n = t.rank();
  std::vector<Integer> xi;
  for (int i = 0; i <= n / 2; ++i) xi.push_back(xi_closed_form(t, i));
  GammaVector g(n, std::move(xi));
  IntPoly ell = gamma_compose(g);
  return LocalHResult{std::move(ell), std::move(g),
                      t.is_classical() ? Source::ClosedForm : Source::EmbeddedTable};
}

Integer ell_closed_form_D(int n, int i) {
  if (n < 4 || i < 0 || i > n)
    throw std::out_of_range("ell_closed_form_D needs n >= 4 and 0 <= i <= n, got n = " +
                            std::to_string(n) + ", i = " + std::to_string(i));
  if (i == 0) return 0;
  return exact_div(Integer(n - 2) * binomial(n - 1, i - 1) * binomial(n - 2, i - 1), i, "ell(D)");
}

}  // namespace localh
