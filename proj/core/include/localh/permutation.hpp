#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace localh {

/// A permutation w of {1..n} in one-line form; w(i) is 1-based.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless word is a permutation of 1..n.
  explicit Perm(std::vector<int> word);

  static Perm identity(int n);
  /// Cycles in the usual sense: (a b c) sends a -> b -> c -> a. Elements
  /// not mentioned are fixed; n defaults to the largest element mentioned.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles, int n = 0);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }
  Perm inverse() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> word_;
};

/// "(7,3,1,5,6,9,8,2,4)" or "7,3,1,5,6,9,8,2,4".
Perm parse_word(std::string_view text);
/// "(5 2 4)(6 1)(8)(9 7 3)"; n defaults to the largest element.
Perm parse_cycles(std::string_view text, int n = 0);
std::string to_string(const Perm& w);

struct PermStats {
  std::vector<int> descents;           // w(i) > w(i+1), 1 <= i <= n-1
  std::vector<int> excedances;         // w(i) > i
  std::vector<int> double_descents;    // w(i-1) > w(i) > w(i+1), 2 <= i <= n-1
  std::vector<int> double_excedances;  // w(i) > i > w^{-1}(i)
  std::vector<int> lr_maxima;          // w(j) > w(i) for all i < j
  std::vector<int> fixed_points;
  std::vector<int> run_lengths;        // maximal ascending runs, left to right

  int runs() const { return static_cast<int>(run_lengths.size()); }
};

PermStats stats(const Perm& w);

/// Double ascents with sentinels w(0) = 0, w(n+1) = n+1.
std::vector<int> double_ascents(const Perm& w);

/// Reads the standard cycle form (each cycle led by its largest element,
/// cycles by increasing leader) as a one-line word.
Perm foata_phi(const Perm& w);

/// Every left-to-right maximum is a descent.
bool is_in_E(const Perm& w);

/// Moves w_i across the nearest valley/peak as described by the FSS action.
/// Requires w in E_n and i a double ascent or double descent (sentinel
/// convention); throws std::invalid_argument otherwise.
Perm fss_move(const Perm& w, int i);

/// Indices where fss_move applies.
std::vector<int> fss_indices(const Perm& w);

/// Full equivalence class of w under the moves, sorted lexicographically.
std::vector<Perm> fss_orbit(const Perm& w);

inline constexpr int kMaxPermN = 9;

/// Lexicographic order over one-line words. BudgetExceeded if n > max_n.
void for_each_permutation(int n, const std::function<void(const Perm&)>& visit, int max_n = kMaxPermN);

/// The three gamma interpretations for the barycentric subdivision, each
/// indexed by i = 0..n/2:
///   by_runs:       permutations with i ascending runs, none of length one;
///   by_excedances: derangements with i excedances, no double excedance;
///   by_descents:   permutations in E_n with i descents and no double descent.
struct BaryXiCounts {
  std::vector<std::int64_t> by_runs;
  std::vector<std::int64_t> by_excedances;
  std::vector<std::int64_t> by_descents;
};

BaryXiCounts bary_xi_counts(int n, int max_n = kMaxPermN);

/// Number of permutations of {1..n} with no ascending run of length one,
/// summed over admissible descent sets rather than by enumeration; n <= 20.
std::int64_t count_no_short_run(int n);

}  // namespace localh
