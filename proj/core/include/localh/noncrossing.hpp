#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace localh {

/// A set partition of {1..n}, stored as its restricted growth string:
/// label(e) is the 0-based index of e's block, blocks numbered in order of
/// their minimum element.
class SetPartitionA {
 public:
  /// Throws std::invalid_argument unless labels is a restricted growth string.
  static SetPartitionA from_labels(std::vector<std::uint8_t> labels);
  /// Throws std::invalid_argument unless blocks partition {1..n}.
  static SetPartitionA from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int n() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return blocks_; }
  int label(int element) const { return labels_[static_cast<std::size_t>(element - 1)]; }
  std::span<const std::uint8_t> labels() const { return labels_; }

  /// Blocks sorted internally, ordered by minimum element.
  std::vector<std::vector<int>> blocks() const;
  bool is_singleton(int element) const;

  friend bool operator==(const SetPartitionA&, const SetPartitionA&) = default;

 private:
  friend void for_each_partition_a(int, const std::function<void(const SetPartitionA&)>&, int);
  SetPartitionA(std::vector<std::uint8_t> labels, int blocks) : labels_(std::move(labels)), blocks_(blocks) {}

  std::vector<std::uint8_t> labels_;
  int blocks_ = 0;
};

/// No a < b < c < d with a, c in one block and b, d in another.
bool is_noncrossing(const SetPartitionA& p);

/// {b} is nested iff some block has elements a < b < c.
/// Throws std::invalid_argument if {b} is not a block of p.
bool is_nested_singleton(const SetPartitionA& p, int b);

bool has_singleton(const SetPartitionA& p);
bool all_singletons_nested(const SetPartitionA& p);

inline constexpr int kMaxPartitionA = 12;
inline constexpr int kMaxPartitionB = 7;

/// Visits every set partition of {1..n} once, in restricted-growth-string
/// order. BudgetExceeded if n > max_n; n must be >= 1.
void for_each_partition_a(int n, const std::function<void(const SetPartitionA&)>& visit,
                          int max_n = kMaxPartitionA);
std::vector<SetPartitionA> enumerate_partitions_a(int n, int max_n = kMaxPartitionA);
std::vector<SetPartitionA> enumerate_nc_a(int n, int max_n = kMaxPartitionA);

/// Counters indexed by number of blocks, 0..n.
struct NcACounts {
  std::vector<std::int64_t> all;
  std::vector<std::int64_t> singletons_nested;
  std::vector<std::int64_t> no_singleton;
};

NcACounts count_nc_a(int n, int max_n = kMaxPartitionA);

/// A B_n-partition of {±1..±n}: negation-symmetric, at most one zero block.
///
/// Stored by signed labels of the positive elements: 0 means the zero block,
/// +k puts i in block k and -i in -k, -k puts i in -k. Pair labels are
/// canonical: the first positive element meeting pair k carries +k, and pairs
/// are numbered in order of first appearance.
class SetPartitionB {
 public:
  /// Throws std::invalid_argument if blocks do not form a B_n-partition.
  static SetPartitionB from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// Throws std::invalid_argument if labels are not canonical.
  static SetPartitionB from_signed_labels(std::vector<std::int8_t> labels);

  int n() const { return static_cast<int>(labels_.size()); }
  int pair_count() const { return pairs_; }
  bool has_zero_block() const;
  std::span<const std::int8_t> signed_labels() const { return labels_; }

  /// Block containing the signed element e: 0 for the zero block, ±k otherwise.
  int block_id(int element) const;

  /// Elements in diagram order (1..n, -1..-n); blocks ordered by first position.
  std::vector<std::vector<int>> blocks() const;
  std::optional<std::vector<int>> zero_block() const;

  /// True iff the block containing element is {element}.
  bool is_singleton(int element) const;

  friend bool operator==(const SetPartitionB&, const SetPartitionB&) = default;

 private:
  friend void for_each_nc_b(int, const std::function<void(const SetPartitionB&)>&, int);
  SetPartitionB(std::vector<std::int8_t> labels, int pairs) : labels_(std::move(labels)), pairs_(pairs) {}

  std::vector<std::int8_t> labels_;
  int pairs_ = 0;
};

/// 1-based position of a signed element in the line 1, 2, .., n, -1, .., -n.
int diagram_position(int n, int element);

/// No two arcs of the linear diagram cross (arcs join block-consecutive
/// elements in diagram order).
bool is_noncrossing(const SetPartitionB& p);

/// {b}, b > 0, is nested iff some block has elements on both sides of b in
/// diagram order. Throws std::invalid_argument unless {b} is a positive
/// singleton block.
bool is_nested_singleton(const SetPartitionB& p, int b);

/// Visits every noncrossing B_n-partition exactly once. Candidates are built
/// orbit-wise from signed labels, never by filtering partitions of 2n points.
void for_each_nc_b(int n, const std::function<void(const SetPartitionB&)>& visit,
                   int max_n = kMaxPartitionB);
std::vector<SetPartitionB> enumerate_nc_b(int n, int max_n = kMaxPartitionB);

/// Counters over NC^B(n) indexed by pair count k = 0..n.
struct NcBCounts {
  std::vector<std::int64_t> all;
  std::vector<std::int64_t> no_zero_block;
  std::vector<std::int64_t> no_zero_positive_singletons_nested;
  std::vector<std::int64_t> no_zero_no_singleton;
};

NcBCounts count_nc_b(int n, int max_n = kMaxPartitionB);

/// `[[1,5,6],[2,4],[3],[7],[8,9]]`
std::string to_string(const std::vector<std::vector<int>>& blocks);
std::string to_string(const SetPartitionA& p);
std::string to_string(const SetPartitionB& p);

}  // namespace localh
