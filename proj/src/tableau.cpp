#include "supernomial/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supernomial {

namespace {

Partition shape_of(const Filling& filling) {
  std::vector<int> rows;
  for (const auto& row : filling)
    rows.push_back(static_cast<int>(row.size()));
  return Partition(std::move(rows));
}

} // namespace

// ---------------------------------------------------------------------------
// YoungTableau

YoungTableau::YoungTableau(std::vector<Partition> chain) : chain_(std::move(chain)) {
  if (chain_.empty())
    throw std::invalid_argument("tableau chain must contain its inner shape");
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (!contains(chain_[i], chain_[i - 1]))
      throw std::invalid_argument("tableau chain is not increasing");
    SkewShape step(chain_[i], chain_[i - 1]);
    if (!is_horizontal_strip(step, step.size()))
      throw std::invalid_argument("tableau step " + chain_[i].str() + "/" +
                                  chain_[i - 1].str() + " is not a horizontal strip");
  }
}

Composition YoungTableau::weight() const {
  Composition w;
  for (std::size_t i = 1; i < chain_.size(); ++i)
    w.push_back(chain_[i].size() - chain_[i - 1].size());
  return w;
}

Filling YoungTableau::filling() const {
  const Partition& outer = shape();
  Filling out(outer.length());
  for (int r = 1; r <= outer.length(); ++r) {
    out[r - 1].assign(outer.row(r), 0);
    for (int c = 1; c <= outer.row(r); ++c)
      for (std::size_t i = 1; i < chain_.size(); ++i)
        if (chain_[i].row(r) >= c && chain_[i - 1].row(r) < c) {
          out[r - 1][c - 1] = static_cast<int>(i);
          break;
        }
  }
  return out;
}

// ---------------------------------------------------------------------------
// MultiPartition

bool precedes(const MultiCell& s, const MultiCell& t) {
  if (s.diag() != t.diag())
    return s.diag() < t.diag();
  return s.pos < t.pos;
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : parts_(std::move(components)) {}

MultiPartition MultiPartition::empty(int L) {
  return MultiPartition(std::vector<Partition>(L));
}

int MultiPartition::size() const {
  int total = 0;
  for (const auto& p : parts_)
    total += p.size();
  return total;
}

bool MultiPartition::contains(const MultiPartition& inner) const {
  if (inner.components() != components())
    return false;
  for (int p = 0; p < components(); ++p)
    if (!supernomial::contains(parts_[p], inner[p]))
      return false;
  return true;
}

bool MultiPartition::contains(const MultiCell& cell) const {
  return cell.pos >= 0 && cell.pos < components() && cell.row >= 1 && cell.col >= 1 &&
         parts_[cell.pos].row(cell.row) >= cell.col;
}

std::vector<MultiCell> MultiPartition::cells() const {
  std::vector<MultiCell> out;
  for (int p = 0; p < components(); ++p)
    for (int r = 1; r <= parts_[p].length(); ++r)
      for (int c = 1; c <= parts_[p].row(r); ++c)
        out.push_back({r, c, p});
  return out;
}

std::string MultiPartition::str() const {
  std::string out = "(";
  for (int p = 0; p < components(); ++p)
    out += (p ? "," : "") + parts_[p].str();
  return out + ")";
}

bool is_horizontal_multistrip(const MultiPartition& outer, const MultiPartition& inner,
                              int weight) {
  if (!outer.contains(inner))
    return false;
  int total = 0;
  for (int p = 0; p < outer.components(); ++p) {
    SkewShape step(outer[p], inner[p]);
    if (!is_horizontal_strip(step, step.size()))
      return false;
    total += step.size();
  }
  return total == weight;
}

// ---------------------------------------------------------------------------
// MultiTableau

MultiTableau::MultiTableau(std::vector<MultiPartition> chain) : chain_(std::move(chain)) {
  if (chain_.empty())
    throw std::invalid_argument("multitableau chain must contain its inner shape");
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (chain_[i].components() != chain_[0].components())
      throw std::invalid_argument("multitableau chain mixes component counts");
    if (!is_horizontal_multistrip(chain_[i], chain_[i - 1],
                                  chain_[i].size() - chain_[i - 1].size()))
      throw std::invalid_argument("multitableau step " + std::to_string(i) +
                                  " is not a horizontal multistrip");
  }
}

MultiTableau MultiTableau::from_fillings(const std::vector<Filling>& fillings,
                                         int alphabet) {
  int n = alphabet;
  for (const auto& filling : fillings) {
    Partition shape = shape_of(filling);  // throws on non-partition shapes
    for (std::size_t r = 0; r < filling.size(); ++r)
      for (std::size_t c = 0; c < filling[r].size(); ++c) {
        int letter = filling[r][c];
        if (letter < 1)
          throw std::invalid_argument("tableau letters must be positive");
        if (c > 0 && filling[r][c - 1] > letter)
          throw std::invalid_argument("tableau rows must weakly increase");
        if (r > 0 && filling[r - 1][c] >= letter)
          throw std::invalid_argument("tableau columns must strictly increase");
        if (alphabet > 0 && letter > alphabet)
          throw std::invalid_argument("tableau letter exceeds the alphabet");
        n = std::max(n, letter);
      }
    (void)shape;
  }
  std::vector<MultiPartition> chain;
  for (int i = 0; i <= n; ++i) {
    std::vector<Partition> comps;
    for (const auto& filling : fillings) {
      std::vector<int> rows;
      for (const auto& row : filling)
        rows.push_back(static_cast<int>(
            std::count_if(row.begin(), row.end(), [&](int v) { return v <= i; })));
      comps.emplace_back(std::move(rows));
    }
    chain.emplace_back(std::move(comps));
  }
  return MultiTableau(std::move(chain));
}

Composition MultiTableau::weight() const {
  Composition w;
  for (std::size_t i = 1; i < chain_.size(); ++i)
    w.push_back(chain_[i].size() - chain_[i - 1].size());
  return w;
}

bool MultiTableau::is_standard() const {
  for (int w : weight())
    if (w != 1)
      return false;
  return true;
}

YoungTableau MultiTableau::component(int p) const {
  std::vector<Partition> chain;
  for (const auto& step : chain_)
    chain.push_back(step[p]);
  return YoungTableau(std::move(chain));
}

std::vector<Filling> MultiTableau::fillings() const {
  std::vector<Filling> out;
  for (int p = 0; p < components(); ++p)
    out.push_back(component(p).filling());
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct MultiEnumerator {
  const MultiPartition& shape;
  const Composition& weight;
  const std::function<void(const MultiTableau&)>& visit;
  std::vector<MultiPartition> chain;

  void step(std::size_t i) {
    if (i == weight.size()) {
      if (chain.back() == shape)
        visit(MultiTableau(chain));
      return;
    }
    std::vector<Partition> next = chain.back().parts();
    strips(i, 0, weight[i], next);
  }

  void strips(std::size_t i, int p, int remaining, std::vector<Partition>& next) {
    const MultiPartition current = chain.back();
    if (p == shape.components()) {
      if (remaining == 0) {
        chain.emplace_back(next);
        step(i + 1);
        chain.pop_back();
      }
      return;
    }
    int capacity = 0;
    for (int q = p; q < shape.components(); ++q)
      capacity += shape[q].size() - current[q].size();
    if (capacity < remaining)
      return;
    int own = shape[p].size() - current[p].size();
    for (int s = std::min(remaining, own); s >= 0; --s) {
      for_each_horizontal_strip(current[p], shape[p], s, [&](const Partition& alpha) {
        Partition saved = next[p];
        next[p] = alpha;
        strips(i, p + 1, remaining - s, next);
        next[p] = saved;
      });
    }
  }
};

} // namespace

void for_each_multitableau(const MultiPartition& shape, const Composition& weight,
                           const std::function<void(const MultiTableau&)>& visit,
                           const MultiPartition& inner) {
  MultiPartition start =
      inner.components() == 0 ? MultiPartition::empty(shape.components()) : inner;
  if (!shape.contains(start))
    return;
  for (int w : weight)
    if (w < 0)
      throw std::invalid_argument("weight entries must be nonnegative");
  int total = std::accumulate(weight.begin(), weight.end(), 0);
  if (total != shape.size() - start.size())
    return;
  MultiEnumerator e{shape, weight, visit, {start}};
  e.step(0);
}

std::vector<MultiTableau> enumerate_multitableaux(const MultiPartition& shape,
                                                  const Composition& weight,
                                                  const MultiPartition& inner) {
  std::vector<MultiTableau> out;
  for_each_multitableau(shape, weight, [&](const MultiTableau& t) { out.push_back(t); },
                        inner);
  return out;
}

// ---------------------------------------------------------------------------
// Standardization and inversions

MultiTableau standardize(const MultiTableau& tableau) {
  const auto& chain = tableau.chain();
  std::vector<MultiPartition> refined{chain.front()};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    std::vector<MultiCell> added;
    for (const auto& cell : chain[i].cells())
      if (!chain[i - 1].contains(cell))
        added.push_back(cell);
    std::sort(added.begin(), added.end(), precedes);
    std::vector<Partition> current = refined.back().parts();
    for (const auto& cell : added) {
      std::vector<int> rows = current[cell.pos].parts();
      if (static_cast<int>(rows.size()) < cell.row)
        rows.resize(cell.row, 0);
      if (rows[cell.row - 1] != cell.col - 1)
        throw std::logic_error("standardization produced a non-partition");
      rows[cell.row - 1] = cell.col;
      current[cell.pos] = Partition(std::move(rows));
      refined.emplace_back(current);
    }
  }
  return MultiTableau(std::move(refined));
}

namespace {

// value[p][r-1][c-1] = T(s); 0 for inner cells.
std::vector<Filling> standard_values(const MultiTableau& standard) {
  return standard.fillings();
}

} // namespace

int tableau_value(const MultiTableau& standard, const MultiCell& cell) {
  if (!standard.shape().contains(cell) || standard.inner().contains(cell))
    throw std::out_of_range("cell is not in the shape of the tableau");
  const auto& chain = standard.chain();
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i].contains(cell))
      return static_cast<int>(i);
  throw std::logic_error("cell never added by the chain");
}

int inversions(const MultiTableau& tableau) {
  MultiTableau st = standardize(tableau);
  const MultiPartition& shape = st.shape();
  const MultiPartition& inner = st.inner();
  auto values = standard_values(st);
  auto value = [&](const MultiCell& s) { return values[s.pos][s.row - 1][s.col - 1]; };

  std::vector<MultiCell> cells;
  for (const auto& cell : shape.cells())
    if (!inner.contains(cell))
      cells.push_back(cell);

  int count = 0;
  for (const auto& s : cells)
    for (const auto& t : cells) {
      bool adjacent = (s.diag() == t.diag() && s.pos < t.pos) ||
                      (s.diag() == t.diag() - 1 && s.pos > t.pos);
      if (!adjacent || s.row > t.row)
        continue;
      if (!(value(t) < value(s)))
        continue;
      MultiCell above{t.row + 1, t.col, t.pos};
      // T(above) is unbounded when the cell above t lies outside the shape.
      bool bounded = shape.contains(above);
      if (bounded && !(value(s) < value(above)))
        continue;
      ++count;
    }
  return count;
}

QPolynomial inv_generating_function(const MultiPartition& shape,
                                    const Composition& weight) {
  QPolynomial total;
  for_each_multitableau(shape, weight, [&](const MultiTableau& t) {
    total += QPolynomial::monomial(inversions(t));
  });
  return total;
}

MultiPartition row_multipartition(const std::vector<int>& sizes) {
  std::vector<Partition> comps;
  for (int s : sizes)
    comps.push_back(s > 0 ? Partition{s} : Partition{});
  return MultiPartition(std::move(comps));
}

MultiPartition column_multipartition(const std::vector<int>& sizes) {
  std::vector<Partition> comps;
  for (int s : sizes)
    comps.emplace_back(std::vector<int>(std::max(s, 0), 1));
  return MultiPartition(std::move(comps));
}

} // namespace supernomial
