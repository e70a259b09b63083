#include "supernomial/ribbon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace supernomial {

namespace {

// Bead positions lambda_r + (count - r), r = 1..count, decreasing.
std::vector<int> beads(const Partition& lambda, int count) {
  std::vector<int> out(count);
  for (int r = 1; r <= count; ++r)
    out[r - 1] = lambda.row(r) + (count - r);
  return out;
}

Partition from_beads(std::vector<int> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<>());
  int count = static_cast<int>(positions.size());
  std::vector<int> parts(count);
  for (int r = 1; r <= count; ++r)
    parts[r - 1] = positions[r - 1] - (count - r);
  return Partition(std::move(parts));
}

int quotient_padding(const Partition& lambda, int L) {
  return (lambda.length() + L - 1) / L;
}

void require_positive(int L) {
  if (L < 1)
    throw std::invalid_argument("ribbon length must be positive");
}

} // namespace

Ribbon Ribbon::from_skew(const Partition& outer, const Partition& inner) {
  SkewShape skew(outer, inner);
  Ribbon r;
  r.cells = skew.cells();
  if (r.cells.empty())
    throw std::invalid_argument("empty ribbon");
  std::set<int> rows;
  r.origin = r.cells.front();
  for (const auto& c : r.cells) {
    rows.insert(c.row);
    if (c.col > r.origin.col || (c.col == r.origin.col && c.row < r.origin.row))
      r.origin = c;
  }
  r.height = static_cast<int>(rows.size());
  // Border strip: consecutive rows overlap in exactly one column.
  for (int row : rows) {
    if (row == *rows.begin())
      continue;
    if (!rows.count(row - 1) || inner.row(row - 1) + 1 != outer.row(row))
      throw std::invalid_argument(outer.str() + "/" + inner.str() + " is not a ribbon");
  }
  return r;
}

std::vector<RibbonCover> ribbon_covers(const Partition& mu, int L) {
  require_positive(L);
  int count = mu.length();
  std::vector<int> b = beads(mu, count);
  std::set<int> occupied(b.begin(), b.end());
  std::vector<RibbonCover> out;
  for (int r = 0; r < count; ++r) {
    int target = b[r] - L;
    if (target < 0 || occupied.count(target))
      continue;
    std::vector<int> moved = b;
    moved[r] = target;
    Partition nu = from_beads(moved);
    out.push_back({nu, Ribbon::from_skew(mu, nu)});
  }
  return out;
}

std::vector<Partition> ribbon_additions(const Partition& alpha, int L) {
  require_positive(L);
  int count = alpha.length() + L;
  std::vector<int> b = beads(alpha, count);
  std::set<int> occupied(b.begin(), b.end());
  std::vector<Partition> out;
  for (int r = 0; r < count; ++r) {
    if (occupied.count(b[r] + L))
      continue;
    std::vector<int> moved = b;
    moved[r] += L;
    out.push_back(from_beads(moved));
  }
  return out;
}

bool is_core(const Partition& lambda, int L) { return ribbon_covers(lambda, L).empty(); }

Partition core(const Partition& lambda, int L) {
  require_positive(L);
  int count = lambda.length();
  std::vector<int> per_residue(L, 0);
  for (int b : beads(lambda, count))
    ++per_residue[b % L];
  std::vector<int> packed;
  for (int i = 0; i < L; ++i)
    for (int k = 0; k < per_residue[i]; ++k)
      packed.push_back(i + k * L);
  return from_beads(packed);
}

CoreError::CoreError(const Partition& lambda, int L, Partition core)
    : std::invalid_argument(lambda.str() + " has nonempty " + std::to_string(L) + "-core " +
                            core.str()),
      core_(std::move(core)) {}

MultiPartition quot(const Partition& lambda, int L) {
  require_positive(L);
  return quot(lambda, L, quotient_padding(lambda, L));
}

MultiPartition quot(const Partition& lambda, int L, int m) {
  require_positive(L);
  if (m * L < lambda.length())
    throw std::invalid_argument("quotient padding too small for " + lambda.str());
  std::vector<std::vector<int>> by_residue(L);
  for (int b : beads(lambda, m * L))
    by_residue[b % L].push_back(b);
  std::vector<Partition> comps;
  for (int i = 0; i < L; ++i) {
    if (static_cast<int>(by_residue[i].size()) != m)
      throw CoreError(lambda, L, core(lambda, L));
    // by_residue[i] is already decreasing.
    std::vector<int> parts(m);
    for (int k = 1; k <= m; ++k)
      parts[k - 1] = (by_residue[i][k - 1] - i) / L - (m - k);
    comps.emplace_back(std::move(parts));
  }
  return MultiPartition(std::move(comps));
}

Partition quot_inverse(const MultiPartition& components, int L) {
  require_positive(L);
  if (components.components() != L)
    throw std::invalid_argument("quotient must have " + std::to_string(L) + " components");
  int m = 0;
  for (const auto& p : components.parts())
    m = std::max(m, p.length());
  std::vector<int> positions;
  for (int i = 0; i < L; ++i)
    for (int k = 1; k <= m; ++k)
      positions.push_back(L * (components[i].row(k) + m - k) + i);
  return from_beads(positions);
}

namespace {

// Ribbon additions from `current` inside `bound` whose origin sits on the
// base shape and lies strictly right of `last_col`.
void strip_search(const Partition& base, const Partition& bound, int L, int remaining,
                  int last_col, std::vector<Partition>& chain,
                  const std::function<void(const std::vector<Partition>&)>& found) {
  if (remaining == 0) {
    found(chain);
    return;
  }
  const Partition current = chain.back();
  for (const auto& next : ribbon_additions(current, L)) {
    if (!contains(bound, next))
      continue;
    Ribbon r = Ribbon::from_skew(next, current);
    if (r.origin.col <= last_col)
      continue;
    if (r.origin.row > 1 && base.row(r.origin.row - 1) < r.origin.col)
      continue;
    chain.push_back(next);
    strip_search(base, bound, L, remaining - 1, r.origin.col, chain, found);
    chain.pop_back();
  }
}

} // namespace

std::optional<std::vector<Partition>> horizontal_ribbon_strip_chain(const SkewShape& shape,
                                                                     int L) {
  require_positive(L);
  if (shape.size() % L != 0)
    return std::nullopt;
  std::optional<std::vector<Partition>> result;
  std::vector<Partition> chain{shape.inner()};
  strip_search(shape.inner(), shape.outer(), L, shape.size() / L, 0, chain,
               [&](const std::vector<Partition>& c) {
                 if (c.back() == shape.outer() && !result)
                   result = c;
               });
  return result;
}

void for_each_horizontal_ribbon_strip(const Partition& base, const Partition& bound, int L,
                                      int count,
                                      const std::function<void(const Partition&)>& visit) {
  require_positive(L);
  if (count < 0 || !contains(bound, base))
    return;
  std::vector<Partition> outers;
  std::set<Partition> seen;
  std::vector<Partition> chain{base};
  strip_search(base, bound, L, count, 0, chain, [&](const std::vector<Partition>& c) {
    if (seen.insert(c.back()).second)
      outers.push_back(c.back());
  });
  for (const auto& outer : outers)
    visit(outer);
}

// ---------------------------------------------------------------------------

RibbonTableau::RibbonTableau(int L, std::vector<Partition> chain)
    : L_(L), chain_(std::move(chain)) {
  require_positive(L_);
  if (chain_.empty())
    throw std::invalid_argument("ribbon tableau chain must contain its inner shape");
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (!contains(chain_[i], chain_[i - 1]))
      throw std::invalid_argument("ribbon tableau chain is not increasing");
    auto steps = horizontal_ribbon_strip_chain(SkewShape(chain_[i], chain_[i - 1]), L_);
    if (!steps)
      throw std::invalid_argument(chain_[i].str() + "/" + chain_[i - 1].str() +
                                  " is not a horizontal " + std::to_string(L_) +
                                  "-ribbon strip");
    std::vector<Ribbon> strip;
    for (std::size_t j = 1; j < steps->size(); ++j)
      strip.push_back(Ribbon::from_skew((*steps)[j], (*steps)[j - 1]));
    strips_.push_back(std::move(strip));
  }
}

Composition RibbonTableau::weight() const {
  Composition w;
  for (const auto& s : strips_)
    w.push_back(static_cast<int>(s.size()));
  return w;
}

int RibbonTableau::spin() const {
  int total = 0;
  for (const auto& s : strips_)
    for (const auto& r : s)
      total += r.spin();
  return total;
}

namespace {

void ribbon_tableaux_rec(const Partition& outer, const Composition& weight, int L,
                         std::size_t step, std::vector<Partition>& chain,
                         const std::function<void(const RibbonTableau&)>& visit) {
  if (step == weight.size()) {
    if (chain.back() == outer)
      visit(RibbonTableau(L, chain));
    return;
  }
  for_each_horizontal_ribbon_strip(chain.back(), outer, L, weight[step],
                                   [&](const Partition& next) {
                                     chain.push_back(next);
                                     ribbon_tableaux_rec(outer, weight, L, step + 1, chain,
                                                         visit);
                                     chain.pop_back();
                                   });
}

} // namespace

void for_each_ribbon_tableau(const SkewShape& shape, const Composition& weight, int L,
                             const std::function<void(const RibbonTableau&)>& visit) {
  require_positive(L);
  long total = 0;
  for (int w : weight) {
    if (w < 0)
      throw std::invalid_argument("weight entries must be nonnegative");
    total += w;
  }
  if (total * L != shape.size())
    return;
  std::vector<Partition> chain{shape.inner()};
  ribbon_tableaux_rec(shape.outer(), weight, L, 0, chain, visit);
}

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const SkewShape& shape,
                                                     const Composition& weight, int L) {
  std::vector<RibbonTableau> out;
  for_each_ribbon_tableau(shape, weight, L,
                          [&](const RibbonTableau& t) { out.push_back(t); });
  return out;
}

namespace {

constexpr int kUnreachable = -1;

int maxspin_rec(const Partition& current, const Partition& outer, int L,
                std::map<Partition, int>& memo) {
  if (current == outer)
    return 0;
  if (auto it = memo.find(current); it != memo.end())
    return it->second;
  int best = kUnreachable;
  for (const auto& next : ribbon_additions(current, L)) {
    if (!contains(outer, next))
      continue;
    int rest = maxspin_rec(next, outer, L, memo);
    if (rest == kUnreachable)
      continue;
    best = std::max(best, rest + Ribbon::from_skew(next, current).spin());
  }
  memo.emplace(current, best);
  return best;
}

} // namespace

int maxspin(const SkewShape& shape, int L) {
  require_positive(L);
  std::map<Partition, int> memo;
  int best = shape.size() % L == 0 ? maxspin_rec(shape.inner(), shape.outer(), L, memo)
                                   : kUnreachable;
  if (best == kUnreachable)
    throw std::invalid_argument(shape.outer().str() + "/" + shape.inner().str() +
                                " admits no " + std::to_string(L) + "-ribbon tableau");
  return best;
}

int cospin(const RibbonTableau& tableau) {
  return cospin(tableau, maxspin(tableau.shape(), tableau.ribbon_length()));
}

int cospin(const RibbonTableau& tableau, int max_spin) {
  int gap = max_spin - tableau.spin();
  if (gap < 0 || gap % 2 != 0)
    throw std::logic_error("maxspin - spin = " + std::to_string(gap) +
                           " is not a nonnegative even number");
  return gap / 2;
}

QPolynomial spin_gf(const SkewShape& shape, const Composition& weight, int L) {
  QPolynomial total;
  for_each_ribbon_tableau(shape, weight, L, [&](const RibbonTableau& t) {
    total += QPolynomial::monomial(t.spin());
  });
  return total;
}

QPolynomial cospin_gf(const SkewShape& shape, const Composition& weight, int L) {
  QPolynomial total;
  std::optional<int> max_spin;
  for_each_ribbon_tableau(shape, weight, L, [&](const RibbonTableau& t) {
    if (!max_spin)
      max_spin = maxspin(shape, L);
    total += QPolynomial::monomial(cospin(t, *max_spin));
  });
  return total;
}

RibbonTableau standardize_ribbon(const RibbonTableau& tableau) {
  const auto& chain = tableau.chain();
  std::vector<Partition> joined{chain.front()};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto steps = horizontal_ribbon_strip_chain(SkewShape(chain[i], chain[i - 1]),
                                               tableau.ribbon_length());
    joined.insert(joined.end(), steps->begin() + 1, steps->end());
  }
  return RibbonTableau(tableau.ribbon_length(), std::move(joined));
}

MultiTableau stanton_white(const RibbonTableau& tableau) {
  std::vector<MultiPartition> chain;
  for (const auto& p : tableau.chain())
    chain.push_back(quot(p, tableau.ribbon_length()));
  return MultiTableau(std::move(chain));
}

RibbonTableau stanton_white_inverse(const MultiTableau& tableau) {
  int L = tableau.components();
  std::vector<Partition> chain;
  for (const auto& mp : tableau.chain())
    chain.push_back(quot_inverse(mp, L));
  return RibbonTableau(L, std::move(chain));
}

} // namespace supernomial
