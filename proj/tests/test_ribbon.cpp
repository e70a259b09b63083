#include "supernomial/ribbon.hpp"
#include "worked_examples.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace supernomial;

namespace {

RibbonTableau example_ribbon() { return examples::ribbon_tableau(); }

// mu/nu is a single L-ribbon: L cells, edge-connected, no 2x2 square.
bool is_ribbon(const Partition& mu, const Partition& nu, int L) {
  if (!contains(mu, nu) || mu.size() - nu.size() != L)
    return false;
  auto cells = SkewShape(mu, nu).cells();
  std::set<Cell> in(cells.begin(), cells.end());
  for (const auto& c : cells)
    if (in.count({c.row + 1, c.col}) && in.count({c.row, c.col + 1}) &&
        in.count({c.row + 1, c.col + 1}))
      return false;
  std::set<Cell> seen{cells.front()};
  std::vector<Cell> stack{cells.front()};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell d : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                   Cell{c.row, c.col - 1}})
      if (in.count(d) && seen.insert(d).second)
        stack.push_back(d);
  }
  return seen.size() == cells.size();
}

// Every partition reachable from mu by removing L-ribbons (mu included).
std::set<Partition> ribbon_descendants(const Partition& mu, int L) {
  std::set<Partition> out{mu};
  std::vector<Partition> frontier{mu};
  while (!frontier.empty()) {
    Partition p = frontier.back();
    frontier.pop_back();
    if (p.size() < L)
      continue;
    for (const auto& nu : partitions_of(p.size() - L))
      if (is_ribbon(p, nu, L) && out.insert(nu).second)
        frontier.push_back(nu);
  }
  return out;
}

bool empty_core(const Partition& mu, int L) {
  return ribbon_descendants(mu, L).count(Partition{}) > 0;
}

} // namespace

TEST_SUITE("ribbon") {

TEST_CASE("single ribbons") {
  Ribbon r = Ribbon::from_skew(Partition{3, 2, 1}, Partition{1});
  CHECK(r.cells.size() == 5);
  CHECK(r.height == 3);
  CHECK(r.spin() == 2);
  CHECK(r.origin == Cell{1, 3});
  CHECK_THROWS_AS(Ribbon::from_skew(Partition{2, 2}, Partition{}), std::invalid_argument);
  CHECK_THROWS_AS(Ribbon::from_skew(Partition{3, 2, 1}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("ribbon covers agree with the cell-wise definition") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& mu : partitions_of(n))
      for (int L = 1; L <= 4; ++L) {
        std::set<Partition> expected;
        if (n >= L)
          for (const auto& nu : partitions_of(n - L))
            if (is_ribbon(mu, nu, L))
              expected.insert(nu);
        std::set<Partition> got;
        for (const auto& cover : ribbon_covers(mu, L))
          got.insert(cover.inner);
        CHECK(got == expected);
      }
}

TEST_CASE("cores") {
  CHECK(core(Partition{2, 1, 1}, 2).empty());
  CHECK(core(Partition{3, 1, 1}, 2) == Partition{1});
  CHECK(is_core(Partition{2, 1}, 2));
  CHECK(core(Partition{6, 6, 4, 4, 4, 3}, 3).empty());
  for (int n = 0; n <= 10; ++n)
    for (const auto& mu : partitions_of(n))
      for (int L : {2, 3})
        CHECK(core(mu, L).empty() == empty_core(mu, L));
}

TEST_CASE("quotient of the worked shape") {
  CHECK(quot(Partition{6, 6, 4, 4, 4, 3}, 3) ==
        MultiPartition({Partition{1, 1}, Partition{2, 2}, Partition{2, 1}}));
  CHECK(quot(Partition{2, 1, 1}, 2) == MultiPartition({Partition{}, Partition{1, 1}}));
  CHECK(quot_inverse(MultiPartition({Partition{2}, Partition{2}, Partition{1}}), 3) ==
        Partition{5, 5, 5});
}

TEST_CASE("quotient rejects shapes with a nonempty core") {
  CHECK_THROWS_AS(quot(Partition{3, 1, 1}, 2), CoreError);
  CHECK_THROWS_AS(quot(Partition{2, 1}, 2), CoreError);
  try {
    quot(Partition{3, 1, 1}, 2);
  } catch (const CoreError& e) {
    CHECK(e.core() == Partition{1});
  }
  try {
    quot(Partition{2, 1}, 2);
  } catch (const CoreError& e) {
    CHECK(e.core() == Partition{2, 1});
  }
}

TEST_CASE("quotient is independent of the bead padding") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& mu : partitions_of(n))
      for (int L : {2, 3}) {
        if (!core(mu, L).empty())
          continue;
        int m = (mu.length() + L - 1) / L;
        CHECK(quot(mu, L, m) == quot(mu, L, m + 1));
        CHECK(quot(mu, L, m + 2) == quot(mu, L));
      }
}

TEST_CASE("quot_inverse and quot are mutually inverse") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& mu : partitions_of(n))
      for (int L : {2, 3, 4})
        if (core(mu, L).empty()) {
          MultiPartition q = quot(mu, L);
          CHECK(q.size() * L == n);
          CHECK(quot_inverse(q, L) == mu);
        }
  for (int L : {2, 3})
    for (int total = 0; total <= 4; ++total)
      for (const auto& sizes : compositions(total, L)) {
        std::vector<std::vector<Partition>> choices;
        for (int s : sizes)
          choices.push_back(partitions_of(s));
        std::vector<std::size_t> idx(L, 0);
        while (true) {
          std::vector<Partition> comps;
          for (int p = 0; p < L; ++p)
            comps.push_back(choices[p][idx[p]]);
          MultiPartition q(comps);
          CHECK(quot(quot_inverse(q, L), L) == q);
          int p = 0;
          while (p < L && ++idx[p] == choices[p].size())
            idx[p++] = 0;
          if (p == L)
            break;
        }
      }
}

TEST_CASE("ribbon order and horizontal strips correspond to multipartition ones") {
  for (int L : {2, 3})
    for (int n = 0; n <= 9; n += L)
      for (const auto& mu : partitions_of(n)) {
        if (!core(mu, L).empty())
          continue;
        auto below = ribbon_descendants(mu, L);
        for (int k = 0; k <= n; k += L)
          for (const auto& nu : partitions_of(k)) {
            if (!core(nu, L).empty())
              continue;
            bool le = below.count(nu) > 0;
            CHECK(le == quot(mu, L).contains(quot(nu, L)));
            if (!le)
              continue;
            bool ribbon_strip = horizontal_ribbon_strip_chain(SkewShape(mu, nu), L).has_value();
            bool multistrip = is_horizontal_multistrip(quot(mu, L), quot(nu, L), (n - k) / L);
            CHECK(ribbon_strip == multistrip);
          }
      }
}

TEST_CASE("worked 3-ribbon tableau") {
  RibbonTableau t = example_ribbon();
  CHECK(t.weight() == Composition{2, 2, 3, 2});
  CHECK(t.spin() == 14);
  CHECK(maxspin(t.shape(), 3) == 16);
  CHECK(cospin(t) == 1);
  // Letters as printed in the picture, read at one cell of each ribbon.
  for (const auto& [cell, letter] : examples::ribbon_letters())
    CHECK(examples::letter_at(t, cell) == letter);

  RibbonTableau st = standardize_ribbon(t);
  CHECK(st.weight() == Composition(9, 1));
  for (const auto& [cell, letter] : examples::ribbon_letters_standardized())
    CHECK(examples::letter_at(st, cell) == letter);
  CHECK(cospin(st) == cospin(t));
}

TEST_CASE("Stanton-White on the worked tableau") {
  RibbonTableau t = example_ribbon();
  MultiTableau q = stanton_white(t);
  CHECK(q == examples::ribbon_quotient());
  CHECK(inversions(q) == 1);
  CHECK(stanton_white(standardize_ribbon(t)) == standardize(q));
  CHECK(stanton_white_inverse(q) == t);
}

TEST_CASE("maxspin equals the largest spin over standard tableaux") {
  for (int L : {2, 3})
    for (int n = L; n <= 9; n += L)
      for (const auto& mu : partitions_of(n)) {
        if (!core(mu, L).empty())
          continue;
        int best = -1;
        for_each_ribbon_tableau(SkewShape(mu), Composition(n / L, 1), L,
                                [&](const RibbonTableau& t) { best = std::max(best, t.spin()); });
        CHECK(maxspin(SkewShape(mu), L) == best);
      }
  CHECK_THROWS(maxspin(SkewShape(Partition{2, 1}), 2));
}

TEST_CASE("cospin is an integer and matches the quotient inversions") {
  for (int L : {2, 3})
    for (int n = L; n <= 9; n += L)
      for (const auto& mu : partitions_of(n)) {
        if (!core(mu, L).empty())
          continue;
        SkewShape shape(mu);
        int top = maxspin(shape, L);
        for (const auto& weight : positive_compositions(n / L))
          for_each_ribbon_tableau(shape, weight, L, [&](const RibbonTableau& t) {
            CHECK((top - t.spin()) % 2 == 0);
            MultiTableau q = stanton_white(t);
            CHECK(cospin(t, top) == inversions(q));
            CHECK(stanton_white_inverse(q) == t);
          });
      }
}

TEST_CASE("skew ribbon tableaux") {
  SkewShape shape(Partition{3, 3}, Partition{1, 1});
  auto all = enumerate_ribbon_tableaux(shape, {1, 1}, 2);
  // Two stacked horizontal dominoes, or two vertical ones left to right.
  CHECK(all.size() == 2);
  for (const auto& t : all)
    CHECK(t.shape() == shape);
}

TEST_CASE("generating functions relate through maxspin") {
  SkewShape shape(Partition{5, 5, 5});
  QPolynomial spin = spin_gf(shape, {2, 2, 1}, 3);
  QPolynomial co = cospin_gf(shape, {2, 2, 1}, 3);
  CHECK(co == QPolynomial{1, 2, 4, 3, 1});
  CHECK(evaluate_at_one(spin) == evaluate_at_one(co));
}

}
