#pragma once

// Hand transcriptions of the worked examples: the rigged configurations
// reached after each letter of the two bijection examples (labels before the
// final inversion), and the final images.

#include "supernomial/bijection.hpp"
#include "supernomial/ribbon.hpp"

#include <vector>

namespace examples {

using namespace supernomial;

struct LabelledRow {
  int a, i;
  std::vector<int> labels;
  int vacancy;
};

struct Snapshot {
  std::vector<Partition> nu;       // nu(1)..nu(n-1)
  std::vector<LabelledRow> rows;   // rows not listed carry no labels
};

inline MultiTableau row_tableau() {
  return MultiTableau::from_fillings({{{2, 3}}, {{1, 1}}, {{1, 3, 4}}}, 4);
}

inline MultiTableau column_tableau() {
  return MultiTableau::from_fillings({{{3}, {4}}, {{2}}, {{1}, {3}, {4}}}, 4);
}

inline RibbonTableau ribbon_tableau() {
  return RibbonTableau(3, {Partition{}, Partition{3, 2, 1}, Partition{3, 3, 3, 1, 1, 1},
                           Partition{6, 6, 3, 2, 2, 2}, Partition{6, 6, 4, 4, 4, 3}});
}

inline MultiTableau ribbon_quotient() {
  return MultiTableau::from_fillings({{{1}, {2}}, {{2, 3}, {3, 4}}, {{1, 3}, {4}}});
}

inline std::vector<Filling> ribbon_quotient_standardized() {
  return {{{1}, {3}}, {{4, 6}, {5, 9}}, {{2, 7}, {8}}};
}

// (row, col) of one cell of each ribbon with the letter printed there.
struct PrintedLetter {
  Cell cell;
  int letter;
};

inline std::vector<PrintedLetter> ribbon_letters() {
  return {{{6, 3}, 4}, {{5, 2}, 3}, {{4, 1}, 2}, {{4, 4}, 4}, {{3, 3}, 2},
          {{2, 2}, 1}, {{2, 5}, 3}, {{1, 1}, 1}, {{1, 4}, 3}};
}

inline std::vector<PrintedLetter> ribbon_letters_standardized() {
  return {{{6, 3}, 8}, {{5, 2}, 5}, {{4, 1}, 3}, {{4, 4}, 9}, {{3, 3}, 4},
          {{2, 2}, 2}, {{2, 5}, 7}, {{1, 1}, 1}, {{1, 4}, 6}};
}

inline Snapshot row_image() {
  return {{Partition{2, 1}, Partition{3, 1}, Partition{3, 3}},
          {{1, 1, {1}, 1}, {1, 2, {0}, 0}, {2, 1, {0, 0}, 0}, {2, 2, {1}, 2},
           {3, 2, {0, 0, 0}, 0}}};
}

inline Snapshot column_image() {
  return {{Partition{1}, Partition{2}, Partition{3, 1}},
          {{1, 1, {1}, 1}, {2, 1, {1}, 1}, {3, 1, {0}, 0}}};
}

inline std::vector<int> row_letters() { return {1, 3, 4, 1, 1, 2, 3}; }
inline std::vector<int> column_letters() { return {1, 3, 4, 2, 3, 4}; }

inline std::vector<Snapshot> row_stages() {
  return {
      {{Partition{1}, Partition{1}, Partition{1}},
       {{1, 1, {0}, 0}, {2, 1, {0}, 0}, {3, 1, {0}, 0}}},
      {{Partition{1}, Partition{1}, Partition{1, 1}},
       {{1, 1, {0}, 0}, {2, 1, {0}, 0}, {3, 2, {0}, 0}}},
      {{Partition{1}, Partition{1}, Partition{1, 1}},
       {{1, 1, {0}, 0}, {2, 1, {0}, 0}, {3, 2, {0}, 0}}},
      {{Partition{2}, Partition{2}, Partition{2, 1}},
       {{1, 1, {0, 0}, 0}, {2, 1, {0, 0}, 0}, {3, 1, {0}, 0}, {3, 2, {0}, 0}}},
      {{Partition{2, 1}, Partition{2, 1}, Partition{2, 2}},
       {{1, 1, {0}, 0}, {1, 2, {0}, 0}, {2, 1, {0}, 0}, {2, 2, {1}, 1}, {3, 2, {0, 0}, 0}}},
      {{Partition{2, 1}, Partition{3, 1}, Partition{3, 2}},
       {{1, 1, {0}, 1},
        {1, 2, {0}, 0},
        {2, 1, {0, 0}, 0},
        {2, 2, {1}, 1},
        {3, 1, {0}, 0},
        {3, 2, {0, 0}, 0}}},
      {{Partition{2, 1}, Partition{3, 1}, Partition{3, 3}},
       {{1, 1, {0}, 1}, {1, 2, {0}, 0}, {2, 1, {0, 0}, 0}, {2, 2, {1}, 2}, {3, 2, {0, 0, 0}, 0}}},
  };
}

inline std::vector<Snapshot> column_stages() {
  return {
      {{Partition{1}, Partition{1}, Partition{1}},
       {{1, 1, {0}, 0}, {2, 1, {0}, 0}, {3, 1, {0}, 0}}},
      {{Partition{1}, Partition{1}, Partition{1, 1}}, {{1, 1, {0}, 0}, {3, 2, {0}, 0}}},
      {{Partition{1}, Partition{1}, Partition{1, 1}}, {{1, 1, {0}, 0}}},
      {{Partition{1}, Partition{2}, Partition{2, 1}},
       {{1, 1, {0}, 1}, {2, 1, {0}, 0}, {3, 1, {0}, 0}}},
      {{Partition{1}, Partition{2}, Partition{3, 1}},
       {{1, 1, {0}, 1}, {2, 1, {0}, 1}, {3, 1, {0, 0}, 0}}},
      {{Partition{1}, Partition{2}, Partition{3, 1}},
       {{1, 1, {0}, 1}, {2, 1, {0}, 1}, {3, 1, {0}, 0}}},
  };
}

// Labels expected on row i of nu(a), empty when the row is not listed.
inline std::vector<int> expected_labels(const Snapshot& s, int a, int i) {
  for (const auto& r : s.rows)
    if (r.a == a && r.i == i)
      return r.labels;
  return {};
}

inline bool matches(const RiggedState& state, const Snapshot& s) {
  const int n = state.alphabet();
  if (static_cast<int>(s.nu.size()) != n - 1)
    return false;
  for (int a = 1; a < n; ++a) {
    if (state.nu(a) != s.nu[a - 1])
      return false;
    for (int i = 1; i <= state.height(); ++i)
      if (state.labels(a, i) != expected_labels(s, a, i))
        return false;
  }
  for (const auto& r : s.rows)
    if (state.vacancy(r.a, r.i) != r.vacancy)
      return false;
  return true;
}

// Letter of the ribbon covering `cell`, 0 if none.
inline int letter_at(const RibbonTableau& t, Cell cell) {
  for (std::size_t k = 0; k < t.strips().size(); ++k)
    for (const auto& r : t.strips()[k])
      for (const auto& c : r.cells)
        if (c == cell)
          return static_cast<int>(k) + 1;
  return 0;
}

} // namespace examples
