#include <doctest.h>

#include <set>

#include "localh/errors.hpp"
#include "localh/local_h.hpp"
#include "localh/noncrossing.hpp"
#include "oracles.hpp"

using namespace localh;

namespace {

const std::vector<std::vector<int>> kSampleA = {{1, 5, 6}, {2, 4}, {3}, {7}, {8, 9}};
const std::vector<std::vector<int>> kSampleB = {{1, 2}, {3}, {4, -5, -6}, {5, 6, -4}, {7}, {-1, -2}, {-3}, {-7}};

}  // namespace

TEST_CASE("set partition enumeration") {
  CHECK(enumerate_partitions_a(1).size() == 1);
  CHECK(enumerate_partitions_a(1)[0].blocks() == std::vector<std::vector<int>>{{1}});
  CHECK(enumerate_partitions_a(3).size() == 5);
  CHECK(enumerate_partitions_a(4).size() == 15);
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& p : enumerate_partitions_a(6)) seen.insert(p.blocks());
  CHECK(seen.size() == 203);
  CHECK_THROWS_AS(enumerate_partitions_a(13), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_partitions_a(5, 4), BudgetExceeded);
}

TEST_CASE("type A predicates") {
  const auto fig = SetPartitionA::from_blocks(9, kSampleA);
  CHECK(is_noncrossing(fig));
  CHECK(to_string(fig) == "[[1,5,6],[2,4],[3],[7],[8,9]]");
  CHECK(is_nested_singleton(fig, 3));
  CHECK_FALSE(is_nested_singleton(fig, 7));
  CHECK_THROWS_AS(is_nested_singleton(fig, 1), std::invalid_argument);
  CHECK_FALSE(is_noncrossing(SetPartitionA::from_blocks(4, {{1, 3}, {2, 4}})));
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::vector<int>> singles;
    for (int i = 1; i <= n; ++i) singles.push_back({i});
    CHECK(is_noncrossing(SetPartitionA::from_blocks(n, singles)));
  }
  CHECK_FALSE(is_nested_singleton(SetPartitionA::from_blocks(3, {{1}, {2, 3}}), 1));
  CHECK(has_singleton(fig));
  CHECK_FALSE(all_singletons_nested(fig));
  CHECK_THROWS_AS(SetPartitionA::from_blocks(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartitionA::from_blocks(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartitionA::from_labels({0, 2}), std::invalid_argument);
  CHECK(SetPartitionA::from_labels({0, 1, 0}).blocks() == std::vector<std::vector<int>>{{1, 3}, {2}});
}

TEST_CASE("type A counts against the quadruple oracle") {
  for (int n = 1; n <= 8; ++n) {
    const auto c = count_nc_a(n);
    const auto t = oracle::nc_a_tally(n);
    CHECK(c.all == t.all);
    CHECK(c.singletons_nested == t.nested);
    CHECK(c.no_singleton == t.no_single);
  }
}

TEST_CASE("property: Catalan, Narayana and the no-singleton formula") {
  for (int n = 1; n <= 10; ++n) {
    const auto c = count_nc_a(n);
    Integer total = 0;
    for (auto v : c.all) total += v;
    CHECK(total == catalan(n));
    std::vector<std::int64_t> by_rank(c.all.rbegin(), c.all.rend() - 1);
    CHECK(oracle::poly(by_rank) == narayana_poly(n));
    for (int i = 1; i <= n / 2; ++i)
      CHECK(c.no_singleton[static_cast<std::size_t>(i)] * (n - i + 1) == binomial(n, i) * binomial(n - i - 1, i - 1));
  }
}

TEST_CASE("property: a nonnested singleton splits the partition") {
  for (int n = 1; n <= 9; ++n) {
    const auto all = enumerate_nc_a(n);
    for (int b = 1; b <= n; ++b) {
      Integer count = 0;
      for (const auto& p : all)
        if (p.is_singleton(b) && !is_nested_singleton(p, b)) ++count;
      CHECK(count == catalan(b - 1) * catalan(n - b));
    }
  }
}

TEST_CASE("type A counts match the cluster pipeline") {
  for (int n = 1; n <= 8; ++n) {
    const auto c = count_nc_a(n);
    const auto r = local_h_cluster(CartanType::A(n));
    CHECK(oracle::poly(c.singletons_nested) == r.ell);
    CHECK(oracle::poly(c.no_singleton) == r.xi.as_poly());
  }
}

TEST_CASE("type B construction") {
  const auto zero = SetPartitionB::from_blocks(1, {{1, -1}});
  CHECK(zero.has_zero_block());
  CHECK(zero.pair_count() == 0);
  const auto split = SetPartitionB::from_blocks(1, {{1}, {-1}});
  CHECK_FALSE(split.has_zero_block());
  CHECK(split.pair_count() == 1);
  const auto mixed = SetPartitionB::from_blocks(2, {{1}, {-1}, {2, -2}});
  CHECK(mixed.has_zero_block());
  CHECK(mixed.pair_count() == 1);
  CHECK(mixed.zero_block() == std::vector<int>{2, -2});
  CHECK(mixed.block_id(-2) == 0);
  CHECK(mixed.block_id(1) == -mixed.block_id(-1));
  CHECK(diagram_position(3, -1) == 4);
  CHECK(diagram_position(3, 3) == 3);
  CHECK_THROWS_AS(SetPartitionB::from_blocks(2, {{1, 2}, {-1}, {-2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartitionB::from_blocks(2, {{1, -1}, {2, -2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartitionB::from_signed_labels({-1}), std::invalid_argument);
}

TEST_CASE("type B sample partition") {
  const auto p = SetPartitionB::from_blocks(7, kSampleB);
  CHECK(is_noncrossing(p));
  CHECK_FALSE(p.has_zero_block());
  CHECK(p.pair_count() == 4);
  CHECK_FALSE(is_nested_singleton(p, 3));
  CHECK(is_nested_singleton(p, 7));
  CHECK_THROWS_AS(is_nested_singleton(p, 1), std::invalid_argument);
  const auto merged = SetPartitionB::from_blocks(7, {{1, 2}, {3}, {4, -5, -6, -7}, {5, 6, 7, -4}, {-1, -2}, {-3}});
  CHECK(is_noncrossing(merged));
  CHECK_FALSE(is_nested_singleton(SetPartitionB::from_blocks(2, {{1}, {-1}, {2, -2}}), 1));
  CHECK(is_noncrossing(SetPartitionB::from_blocks(2, {{1, -2}, {-1, 2}})));
  CHECK_FALSE(is_noncrossing(SetPartitionB::from_blocks(3, {{1, 3}, {-1, -3}, {2, -2}})));
}

TEST_CASE("type B enumeration") {
  const auto one = enumerate_nc_b(1);
  CHECK(one.size() == 2);
  CHECK(enumerate_nc_b(2).size() == 6);
  CHECK(count_nc_b(3).no_zero_block[2] == 6);
  CHECK_THROWS_AS(enumerate_nc_b(8), BudgetExceeded);
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : enumerate_nc_b(n)) seen.insert(p.blocks());
    CHECK(seen.size() == enumerate_nc_b(n).size());
  }
}

TEST_CASE("type B counts against the filtering oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto c = count_nc_b(n);
    const auto t = oracle::nc_b_tally(n);
    CHECK(c.all == t.all);
    CHECK(c.no_zero_block == t.no_zero);
    CHECK(c.no_zero_positive_singletons_nested == t.nested);
    CHECK(c.no_zero_no_singleton == t.no_single);
  }
}

TEST_CASE("property: type B closed forms") {
  for (int n = 1; n <= 7; ++n) {
    const auto c = count_nc_b(n);
    Integer total = 0;
    for (auto v : c.all) total += v;
    CHECK(total == binomial(2 * n, n));
    for (int k = 0; k <= n; ++k)
      CHECK(c.no_zero_block[static_cast<std::size_t>(k)] == binomial(n, k) * binomial(n - 1, k - 1));
    for (int i = 1; i <= n / 2; ++i)
      CHECK(c.no_zero_no_singleton[static_cast<std::size_t>(i)] == binomial(n, i) * binomial(n - i - 1, i - 1));
  }
}

TEST_CASE("type B counts match the cluster pipeline") {
  for (int n = 2; n <= 6; ++n) {
    const auto c = count_nc_b(n);
    const auto r = local_h_cluster(CartanType::B(n));
    CHECK(oracle::poly(c.no_zero_positive_singletons_nested) == r.ell);
    CHECK(oracle::poly(c.no_zero_no_singleton) == r.xi.as_poly());
  }
}
