#include "localh/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "localh/errors.hpp"
#include "localh/polynomial.hpp"

namespace localh {

Perm::Perm(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  for (const auto& c : cycles)
    for (int v : c) n = std::max(n, v);
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles)
    for (std::size_t j = 0; j < c.size(); ++j) {
      const int from = c[j];
      if (from < 1) throw std::invalid_argument("cycle entries must be positive");
      auto& slot = w[static_cast<std::size_t>(from - 1)];
      if (slot != 0) throw std::invalid_argument("element " + std::to_string(from) + " appears twice in cycles");
      slot = c[(j + 1) % c.size()];
    }
  for (int i = 1; i <= n; ++i)
    if (w[static_cast<std::size_t>(i - 1)] == 0) w[static_cast<std::size_t>(i - 1)] = i;
  return Perm(std::move(w));
}

Perm Perm::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Perm(std::move(inv));
}

namespace {

std::vector<int> parse_ints(std::string_view text, bool commas) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc{}) throw std::invalid_argument("bad number in '" + std::string(text) + "'");
      out.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    } else if (std::isspace(static_cast<unsigned char>(c)) || (commas && c == ',')) {
      ++i;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in '" +
                                  std::string(text) + "'");
    }
  }
  return out;
}

}  // namespace

Perm parse_word(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) return Perm{};
  text = text.substr(first, last - first + 1);
  if (text.front() == '(' || text.front() == '[') {
    const char close = text.front() == '(' ? ')' : ']';
    if (text.back() != close) throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  return Perm(parse_ints(text, true));
}

Perm parse_cycles(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation '" + std::string(text) + "'");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle in '" + std::string(text) + "'");
    cycles.push_back(parse_ints(text.substr(i + 1, close - i - 1), false));
    if (cycles.back().empty()) throw std::invalid_argument("empty cycle");
    i = close + 1;
  }
  return Perm::from_cycles(cycles, n);
}

std::string to_string(const Perm& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= w.size(); ++i) os << (i > 1 ? "," : "") << w(i);
  os << ')';
  return os.str();
}

PermStats stats(const Perm& w) {
  const int n = w.size();
  const Perm inv = w.inverse();
  PermStats s;
  int run = 0;
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (i < n && w(i) > w(i + 1)) s.descents.push_back(i);
    if (w(i) > i) s.excedances.push_back(i);
    if (w(i) == i) s.fixed_points.push_back(i);
    if (i >= 2 && i <= n - 1 && w(i - 1) > w(i) && w(i) > w(i + 1)) s.double_descents.push_back(i);
    if (w(i) > i && i > inv(i)) s.double_excedances.push_back(i);
    if (w(i) > best) {
      s.lr_maxima.push_back(i);
      best = w(i);
    }
    ++run;
    if (i == n || w(i) > w(i + 1)) {
      s.run_lengths.push_back(run);
      run = 0;
    }
  }
  return s;
}

namespace {

// w_0 = 0, w_{n+1} = n+1.
int padded_value(const Perm& w, int i) {
  if (i == 0) return 0;
  if (i == w.size() + 1) return w.size() + 1;
  return w(i);
}

bool is_double_ascent(const Perm& w, int i) {
  return padded_value(w, i - 1) < w(i) && w(i) < padded_value(w, i + 1);
}

bool is_double_descent_padded(const Perm& w, int i) {
  return padded_value(w, i - 1) > w(i) && w(i) > padded_value(w, i + 1);
}

}  // namespace

std::vector<int> double_ascents(const Perm& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i)
    if (is_double_ascent(w, i)) out.push_back(i);
  return out;
}

Perm foata_phi(const Perm& w) {
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int c = start; !seen[static_cast<std::size_t>(c)]; c = w(c)) {
      seen[static_cast<std::size_t>(c)] = true;
      cyc.push_back(c);
    }
    std::rotate(cyc.begin(), std::max_element(cyc.begin(), cyc.end()), cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (const auto& c : cycles) word.insert(word.end(), c.begin(), c.end());
  return Perm(std::move(word));
}

bool is_in_E(const Perm& w) {
  const int n = w.size();
  int best = 0;
  for (int j = 1; j <= n; ++j) {
    if (w(j) <= best) continue;
    best = w(j);
    if (j == n || w(j) < w(j + 1)) return false;
  }
  return true;
}

std::vector<int> fss_indices(const Perm& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i)
    if (is_double_ascent(w, i) || is_double_descent_padded(w, i)) out.push_back(i);
  return out;
}

Perm fss_move(const Perm& w, int i) {
  const int n = w.size();
  if (!is_in_E(w)) throw std::invalid_argument("fss_move: " + to_string(w) + " is not in E_n");
  if (i < 1 || i > n) throw std::invalid_argument("fss_move: index out of range");
  std::vector<int> word(w.word().begin(), w.word().end());
  const int value = w(i);
  if (is_double_ascent(w, i)) {
    int j = 0;
    for (int k = i - 1; k >= 1; --k)
      if (w(k) > value && value > w(k + 1)) {
        j = k;
        break;
      }
    if (j == 0) throw ConsistencyError("fss_move: no landing slot left of a double ascent in E_n");
    word.erase(word.begin() + (i - 1));
    word.insert(word.begin() + j, value);
  } else if (is_double_descent_padded(w, i)) {
    int j = 0;
    for (int k = i + 1; k <= n; ++k)
      if (w(k) < value && value < padded_value(w, k + 1)) {
        j = k;
        break;
      }
    if (j == 0) throw ConsistencyError("fss_move: no landing slot right of a double descent");
    word.erase(word.begin() + (i - 1));
    word.insert(word.begin() + (j - 1), value);
  } else {
    throw std::invalid_argument("fss_move: index " + std::to_string(i) +
                                " is neither a double ascent nor a double descent of " + to_string(w));
  }
  return Perm(std::move(word));
}

std::vector<Perm> fss_orbit(const Perm& w) {
  if (!is_in_E(w)) throw std::invalid_argument("fss_orbit: " + to_string(w) + " is not in E_n");
  std::set<Perm> seen{w};
  std::deque<Perm> queue{w};
  while (!queue.empty()) {
    const Perm u = std::move(queue.front());
    queue.pop_front();
    for (int i : fss_indices(u)) {
      Perm v = fss_move(u, i);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return {seen.begin(), seen.end()};
}

void for_each_permutation(int n, const std::function<void(const Perm&)>& visit, int max_n) {
  if (n < 0) throw std::invalid_argument("permutation size must be nonnegative");
  if (n > max_n)
    throw BudgetExceeded("permutation enumeration for n = " + std::to_string(n) +
                         " exceeds the budget (max n " + std::to_string(max_n) + ")");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Perm(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

BaryXiCounts bary_xi_counts(int n, int max_n) {
  const auto len = static_cast<std::size_t>(n) + 1;
  std::vector<std::int64_t> runs(len), exc(len), des(len);
  for_each_permutation(
      n, [&](const Perm& w) {
        const PermStats s = stats(w);
        if (std::all_of(s.run_lengths.begin(), s.run_lengths.end(), [](int r) { return r >= 2; }))
          ++runs[static_cast<std::size_t>(s.runs())];
        if (s.fixed_points.empty() && s.double_excedances.empty())
          ++exc[s.excedances.size()];
        if (s.double_descents.empty() && is_in_E(w)) ++des[s.descents.size()];
      },
      max_n);
  auto cut = [&](std::vector<std::int64_t>& v) {
    for (std::size_t i = static_cast<std::size_t>(n / 2) + 1; i < v.size(); ++i)
      if (v[i] != 0)
        throw ConsistencyError("bary_xi_counts: count beyond n/2 at index " + std::to_string(i));
    v.resize(static_cast<std::size_t>(n / 2) + 1);
  };
  cut(runs);
  cut(exc);
  cut(des);
  return {std::move(runs), std::move(exc), std::move(des)};
}

std::int64_t count_no_short_run(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("count_no_short_run needs 0 <= n <= 20");
  if (n == 0) return 1;
  // Sum over admissible descent sets D (every gap between n+1 cut points is
  // >= 2) of the number of permutations with descent set exactly D, the
  // latter by inclusion-exclusion over multinomials alpha(T), T subset D.
  auto alpha = [&](std::uint32_t t) {
    Integer r = 1;
    int remaining = n;
    int prev = 0;
    for (int p = 1; p <= n; ++p) {
      if (p < n && !((t >> (p - 1)) & 1U)) continue;
      const int block = p - prev;
      r *= binomial(remaining, block);
      remaining -= block;
      prev = p;
    }
    return r;
  };
  Integer total = 0;
  for (std::uint32_t d = 0; d < (1U << (n - 1)); ++d) {
    int prev = 0;
    bool ok = true;
    for (int p = 1; p <= n; ++p) {
      if (p < n && !((d >> (p - 1)) & 1U)) continue;
      if (p - prev < 2) ok = false;
      prev = p;
    }
    if (!ok) continue;
    for (std::uint32_t t = d;; t = (t - 1) & d) {
      const int parity = std::popcount(d) - std::popcount(t);
      total += (parity % 2 == 0 ? 1 : -1) * alpha(t);
      if (t == 0) break;
    }
  }
  return static_cast<std::int64_t>(total);
}

}  // namespace localh
