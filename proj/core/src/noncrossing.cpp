#include "localh/noncrossing.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "localh/errors.hpp"

namespace localh {

namespace {

void check_budget(int n, int max_n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
  if (n > max_n)
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the enumeration budget (max n " + std::to_string(max_n) + ")");
}

// ids[p] is the block of the element at diagram position p (0-based). Arcs
// join consecutive positions of a block; two arcs (a,b), (c,d) cross iff
// a < c < b < d.
template <typename Id>
bool arcs_noncrossing(std::span<const Id> ids) {
  const std::size_t len = ids.size();
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  arcs.reserve(len);
  for (std::size_t p = 0; p < len; ++p)
    for (std::size_t q = p + 1; q < len; ++q)
      if (ids[q] == ids[p]) {
        arcs.emplace_back(p, q);
        break;
      }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      const auto [a, b] = arcs[i];
      const auto [c, d] = arcs[j];
      if (a < c && c < b && b < d) return false;
    }
  return true;
}

template <typename Id>
bool straddled(std::span<const Id> ids, std::size_t pos) {
  const Id own = ids[pos];
  for (std::size_t p = 0; p < pos; ++p) {
    if (ids[p] == own) continue;
    for (std::size_t q = pos + 1; q < ids.size(); ++q)
      if (ids[q] == ids[p]) return true;
  }
  return false;
}

std::vector<int> diagram_ids(const SetPartitionB& p) {
  const int n = p.n();
  std::vector<int> ids(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    ids[static_cast<std::size_t>(i - 1)] = p.block_id(i);
    ids[static_cast<std::size_t>(n + i - 1)] = p.block_id(-i);
  }
  return ids;
}

}  // namespace

// ---------------------------------------------------------------- type A

SetPartitionA SetPartitionA::from_labels(std::vector<std::uint8_t> labels) {
  if (labels.empty()) throw std::invalid_argument("set partition needs n >= 1");
  int next = 0;
  for (auto l : labels) {
    if (l > next) throw std::invalid_argument("labels are not a restricted growth string");
    if (l == next) ++next;
  }
  return SetPartitionA(std::move(labels), next);
}

SetPartitionA SetPartitionA::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw std::invalid_argument("set partition needs n >= 1");
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " out of range");
      if (owner[static_cast<std::size_t>(e - 1)] >= 0)
        throw std::invalid_argument("element " + std::to_string(e) + " appears twice");
      owner[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    }
  }
  std::map<int, std::uint8_t> relabel;
  std::vector<std::uint8_t> labels;
  for (int o : owner) {
    if (o < 0) throw std::invalid_argument("blocks do not cover {1.." + std::to_string(n) + "}");
    auto [it, inserted] = relabel.emplace(o, static_cast<std::uint8_t>(relabel.size()));
    labels.push_back(it->second);
  }
  return from_labels(std::move(labels));
}

std::vector<std::vector<int>> SetPartitionA::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
  for (int e = 1; e <= n(); ++e) out[label(e)].push_back(e);
  return out;
}

bool SetPartitionA::is_singleton(int element) const {
  const int l = label(element);
  return std::count(labels_.begin(), labels_.end(), l) == 1;
}

bool is_noncrossing(const SetPartitionA& p) { return arcs_noncrossing(p.labels()); }

bool is_nested_singleton(const SetPartitionA& p, int b) {
  if (b < 1 || b > p.n() || !p.is_singleton(b))
    throw std::invalid_argument("{" + std::to_string(b) + "} is not a singleton block");
  return straddled(p.labels(), static_cast<std::size_t>(b - 1));
}

bool has_singleton(const SetPartitionA& p) {
  for (int e = 1; e <= p.n(); ++e)
    if (p.is_singleton(e)) return true;
  return false;
}

bool all_singletons_nested(const SetPartitionA& p) {
  for (int e = 1; e <= p.n(); ++e)
    if (p.is_singleton(e) && !is_nested_singleton(p, e)) return false;
  return true;
}

void for_each_partition_a(int n, const std::function<void(const SetPartitionA&)>& visit, int max_n) {
  check_budget(n, max_n, "set partition enumeration");
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n), 0);
  // Lexicographic restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
  auto extend = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      visit(SetPartitionA(labels, blocks));
      return;
    }
    for (int l = 0; l <= blocks; ++l) {
      labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(l);
      self(self, i + 1, l == blocks ? blocks + 1 : blocks);
    }
  };
  labels[0] = 0;
  extend(extend, 1, 1);
}

std::vector<SetPartitionA> enumerate_partitions_a(int n, int max_n) {
  std::vector<SetPartitionA> out;
  for_each_partition_a(n, [&](const SetPartitionA& p) { out.push_back(p); }, max_n);
  return out;
}

std::vector<SetPartitionA> enumerate_nc_a(int n, int max_n) {
  std::vector<SetPartitionA> out;
  for_each_partition_a(
      n, [&](const SetPartitionA& p) {
        if (is_noncrossing(p)) out.push_back(p);
      },
      max_n);
  return out;
}

NcACounts count_nc_a(int n, int max_n) {
  const auto len = static_cast<std::size_t>(n) + 1;
  NcACounts c{std::vector<std::int64_t>(len), std::vector<std::int64_t>(len),
              std::vector<std::int64_t>(len)};
  for_each_partition_a(
      n, [&](const SetPartitionA& p) {
        if (!is_noncrossing(p)) return;
        const auto k = static_cast<std::size_t>(p.block_count());
        ++c.all[k];
        if (all_singletons_nested(p)) ++c.singletons_nested[k];
        if (!has_singleton(p)) ++c.no_singleton[k];
      },
      max_n);
  return c;
}

// ---------------------------------------------------------------- type B

int diagram_position(int n, int element) {
  if (element == 0 || std::abs(element) > n)
    throw std::invalid_argument("element " + std::to_string(element) + " is not in ±{1.." +
                                std::to_string(n) + "}");
  return element > 0 ? element : n - element;
}

SetPartitionB SetPartitionB::from_signed_labels(std::vector<std::int8_t> labels) {
  if (labels.empty()) throw std::invalid_argument("B_n-partition needs n >= 1");
  int pairs = 0;
  for (auto l : labels) {
    if (std::abs(l) > pairs + 1 || l == -(pairs + 1))
      throw std::invalid_argument("signed labels are not canonical");
    if (l == pairs + 1) ++pairs;
  }
  return SetPartitionB(std::move(labels), pairs);
}

SetPartitionB SetPartitionB::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw std::invalid_argument("B_n-partition needs n >= 1");
  std::vector<int> owner(static_cast<std::size_t>(2 * n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int e : blocks[b]) {
      auto& slot = owner[static_cast<std::size_t>(diagram_position(n, e) - 1)];
      if (slot >= 0) throw std::invalid_argument("element " + std::to_string(e) + " appears twice");
      slot = static_cast<int>(b);
    }
  }
  auto owner_of = [&](int e) { return owner[static_cast<std::size_t>(diagram_position(n, e) - 1)]; };
  for (int o : owner)
    if (o < 0) throw std::invalid_argument("blocks do not cover ±{1.." + std::to_string(n) + "}");

  // Negation must map blocks onto blocks.
  std::map<int, int> neg;
  for (int i = 1; i <= n; ++i)
    for (int e : {i, -i}) {
      auto [it, inserted] = neg.emplace(owner_of(e), owner_of(-e));
      if (it->second != owner_of(-e)) throw std::invalid_argument("partition is not negation-symmetric");
    }
  int zero = -1;
  for (const auto& [b, nb] : neg)
    if (b == nb) {
      if (zero >= 0) throw std::invalid_argument("more than one zero block");
      zero = b;
    }

  std::map<int, std::int8_t> pair_label;  // block index -> signed label
  std::vector<std::int8_t> labels;
  std::int8_t pairs = 0;
  for (int i = 1; i <= n; ++i) {
    const int b = owner_of(i);
    if (b == zero) {
      labels.push_back(0);
      continue;
    }
    auto it = pair_label.find(b);
    if (it == pair_label.end()) {
      ++pairs;
      pair_label[b] = pairs;
      pair_label[neg[b]] = static_cast<std::int8_t>(-pairs);
      it = pair_label.find(b);
    }
    labels.push_back(it->second);
  }
  return from_signed_labels(std::move(labels));
}

bool SetPartitionB::has_zero_block() const {
  return std::find(labels_.begin(), labels_.end(), 0) != labels_.end();
}

int SetPartitionB::block_id(int element) const {
  diagram_position(n(), element);
  return element > 0 ? labels_[static_cast<std::size_t>(element - 1)]
                     : -labels_[static_cast<std::size_t>(-element - 1)];
}

std::vector<std::vector<int>> SetPartitionB::blocks() const {
  std::vector<std::vector<int>> out;
  std::map<int, std::size_t> index;
  for (int pos = 1; pos <= 2 * n(); ++pos) {
    const int e = pos <= n() ? pos : -(pos - n());
    auto [it, inserted] = index.emplace(block_id(e), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(e);
  }
  return out;
}

std::optional<std::vector<int>> SetPartitionB::zero_block() const {
  if (!has_zero_block()) return std::nullopt;
  std::vector<int> z;
  for (int i = 1; i <= n(); ++i)
    if (labels_[static_cast<std::size_t>(i - 1)] == 0) z.push_back(i);
  for (int i = 1; i <= n(); ++i)
    if (labels_[static_cast<std::size_t>(i - 1)] == 0) z.push_back(-i);
  return z;
}

bool SetPartitionB::is_singleton(int element) const {
  const int id = block_id(element);
  if (id == 0) return false;
  int size = 0;
  for (auto l : labels_) size += (l == id || l == -id) ? 1 : 0;
  return size == 1;
}

bool is_noncrossing(const SetPartitionB& p) {
  const auto ids = diagram_ids(p);
  return arcs_noncrossing(std::span<const int>(ids));
}

bool is_nested_singleton(const SetPartitionB& p, int b) {
  if (b < 1 || b > p.n() || !p.is_singleton(b))
    throw std::invalid_argument("{" + std::to_string(b) + "} is not a positive singleton block");
  const auto ids = diagram_ids(p);
  return straddled(std::span<const int>(ids), static_cast<std::size_t>(b - 1));
}

void for_each_nc_b(int n, const std::function<void(const SetPartitionB&)>& visit, int max_n) {
  check_budget(n, max_n, "B_n-partition enumeration");
  std::vector<std::int8_t> labels(static_cast<std::size_t>(n), 0);
  // Element i joins the zero block, either side of an existing pair, or opens pair m+1.
  auto extend = [&](auto&& self, int i, int pairs) -> void {
    if (i == n) {
      SetPartitionB p(labels, pairs);
      if (is_noncrossing(p)) visit(p);
      return;
    }
    auto& slot = labels[static_cast<std::size_t>(i)];
    slot = 0;
    self(self, i + 1, pairs);
    for (int k = 1; k <= pairs; ++k) {
      slot = static_cast<std::int8_t>(k);
      self(self, i + 1, pairs);
      slot = static_cast<std::int8_t>(-k);
      self(self, i + 1, pairs);
    }
    slot = static_cast<std::int8_t>(pairs + 1);
    self(self, i + 1, pairs + 1);
  };
  extend(extend, 0, 0);
}

std::vector<SetPartitionB> enumerate_nc_b(int n, int max_n) {
  std::vector<SetPartitionB> out;
  for_each_nc_b(n, [&](const SetPartitionB& p) { out.push_back(p); }, max_n);
  return out;
}

NcBCounts count_nc_b(int n, int max_n) {
  const auto len = static_cast<std::size_t>(n) + 1;
  NcBCounts c{std::vector<std::int64_t>(len), std::vector<std::int64_t>(len),
              std::vector<std::int64_t>(len), std::vector<std::int64_t>(len)};
  for_each_nc_b(
      n, [&](const SetPartitionB& p) {
        const auto k = static_cast<std::size_t>(p.pair_count());
        ++c.all[k];
        if (p.has_zero_block()) return;
        ++c.no_zero_block[k];
        bool nested = true;
        bool singleton = false;
        for (int i = 1; i <= n; ++i) {
          if (!p.is_singleton(i)) continue;
          singleton = true;
          if (!is_nested_singleton(p, i)) nested = false;
        }
        if (nested) ++c.no_zero_positive_singletons_nested[k];
        if (!singleton) ++c.no_zero_no_singleton[k];
      },
      max_n);
  return c;
}

// ---------------------------------------------------------------- text

std::string to_string(const std::vector<std::vector<int>>& blocks) {
  std::ostringstream os;
  os << '[';
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << ',';
    os << '[';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) os << (i ? "," : "") << blocks[b][i];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string to_string(const SetPartitionA& p) { return to_string(p.blocks()); }
std::string to_string(const SetPartitionB& p) { return to_string(p.blocks()); }

}  // namespace localh
