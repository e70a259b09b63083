#include "supernomial/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace supernomial;

namespace {

// Number of partitions of n by Euler's pentagonal recurrence.
long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m)
        break;
      long sign = (k % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m)
        p[m] += sign * p[m - g2];
    }
  return p[n];
}

// All weakly decreasing sequences inside an rows x cols box.
std::vector<Partition> box_partitions(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> grow = [&](int max_part) {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) == rows)
      return;
    for (int v = 1; v <= max_part; ++v) {
      current.push_back(v);
      grow(v);
      current.pop_back();
    }
  };
  grow(cols);
  return out;
}

std::set<Cell> cell_set(const Partition& p) {
  std::set<Cell> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j)
      out.insert({i, j});
  return out;
}

} // namespace

TEST_SUITE("partition") {

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition({0}).empty());
  CHECK(Partition({2, 2, 1}).size() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate of a known shape") {
  CHECK(conjugate(Partition{6, 6, 4, 4, 4, 3}) == Partition{6, 6, 6, 5, 2, 2});
  CHECK(conjugate(Partition{2, 2, 1}) == Partition{3, 2});
  CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("conjugate is an involution up to size 12") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).size() == n);
    }
}

TEST_CASE("partitions_of counts match the pentagonal recurrence") {
  for (int n = 0; n <= 15; ++n)
    CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));
}

TEST_CASE("compositions with zeros") {
  CHECK(compositions(3, 2).size() == 4);
  CHECK(compositions(4, 3).size() == 15);  // binom(6, 2)
  CHECK(positive_compositions(4).size() == 8);
  for (const auto& c : positive_compositions(5))
    CHECK(std::all_of(c.begin(), c.end(), [](int v) { return v > 0; }));
}

TEST_CASE("horizontal strips agree with the cell-wise definition in a 6x6 box") {
  auto shapes = box_partitions(6, 6);
  for (const auto& outer : shapes)
    for (const auto& inner : shapes) {
      if (!contains(outer, inner))
        continue;
      auto outer_cells = cell_set(outer);
      auto inner_cells = cell_set(inner);
      std::map<int, int> per_column;
      int count = 0;
      for (const auto& c : outer_cells)
        if (!inner_cells.count(c)) {
          ++per_column[c.col];
          ++count;
        }
      bool column_ok = std::all_of(per_column.begin(), per_column.end(),
                                   [](const auto& kv) { return kv.second <= 1; });
      SkewShape skew(outer, inner);
      CHECK(is_horizontal_strip(skew, count) == column_ok);
      CHECK_FALSE(is_horizontal_strip(skew, count + 1));
    }
}

TEST_CASE("costat_n is the sum of binomials of conjugate parts") {
  for (const auto& mu : box_partitions(6, 6)) {
    long expected = 0;
    Partition columns = conjugate(mu);
    for (int c : columns.parts())
      expected += static_cast<long>(c) * (c - 1) / 2;
    CHECK(costat_n(mu) == expected);
  }
  CHECK(costat_n(Partition{2, 2, 1}) == 4);
}

TEST_CASE("subpartitions match a filter over all partitions") {
  for (const auto& bound : box_partitions(4, 4)) {
    for (int size = 0; size <= bound.size(); ++size) {
      auto got = enumerate_subpartitions(bound, size);
      std::set<Partition> unique(got.begin(), got.end());
      CHECK(unique.size() == got.size());
      std::set<Partition> expected;
      for (const auto& p : partitions_of(size))
        if (contains(bound, p))
          expected.insert(p);
      CHECK(unique == expected);
    }
  }
}

TEST_CASE("skew cells and diagonals") {
  SkewShape s(Partition{3, 2}, Partition{1});
  auto cells = s.cells();
  CHECK(cells.size() == 4);
  CHECK(std::find(cells.begin(), cells.end(), Cell{1, 1}) == cells.end());
  CHECK(Cell{2, 1}.diag() == -1);
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("2,2,1") == std::vector<int>{2, 2, 1});
  CHECK(parse_int_list("[3, 1]") == std::vector<int>{3, 1});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("2,x"), std::invalid_argument);
}

}
