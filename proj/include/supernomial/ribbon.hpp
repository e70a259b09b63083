#pragma once

#include "supernomial/partition.hpp"
#include "supernomial/qpoly.hpp"
#include "supernomial/tableau.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace supernomial {

// L-ribbons: connected border strips of L cells. The origin is the lowest
// cell of the rightmost column, rows counted upward from 1.
struct Ribbon {
  std::vector<Cell> cells;
  Cell origin;
  int height = 0;
  int spin() const { return height - 1; }

  // Throws std::invalid_argument unless outer/inner is a single ribbon.
  static Ribbon from_skew(const Partition& outer, const Partition& inner);
};

struct RibbonCover {
  Partition inner;
  Ribbon ribbon;
};

// Every nu with mu/nu a single L-ribbon, ordered by the abacus bead moved
// (top row of the ribbon first).
std::vector<RibbonCover> ribbon_covers(const Partition& mu, int L);

// Partitions obtained from alpha by adding one L-ribbon.
std::vector<Partition> ribbon_additions(const Partition& alpha, int L);

bool is_core(const Partition& lambda, int L);
Partition core(const Partition& lambda, int L);

// Thrown when a quotient is requested for a partition with nonempty core.
class CoreError : public std::invalid_argument {
public:
  CoreError(const Partition& lambda, int L, Partition core);
  const Partition& core() const { return core_; }

private:
  Partition core_;
};

// L-quotient using mL beads for the smallest admissible m, or for a given m.
MultiPartition quot(const Partition& lambda, int L);
MultiPartition quot(const Partition& lambda, int L, int m);
Partition quot_inverse(const MultiPartition& components, int L);

// The saturated chain inner = c0 < c1 < ... < ck = outer of a horizontal
// L-ribbon strip, ribbon origins left to right; nullopt if none exists.
std::optional<std::vector<Partition>> horizontal_ribbon_strip_chain(const SkewShape& shape,
                                                                     int L);

// Every outer shape inside `bound` such that outer/base is a horizontal
// L-ribbon strip of `count` ribbons.
void for_each_horizontal_ribbon_strip(const Partition& base, const Partition& bound, int L,
                                      int count,
                                      const std::function<void(const Partition&)>& visit);

class RibbonTableau {
public:
  // Throws std::invalid_argument if a step is not a horizontal ribbon strip.
  RibbonTableau(int L, std::vector<Partition> chain);

  int ribbon_length() const { return L_; }
  const std::vector<Partition>& chain() const { return chain_; }
  SkewShape shape() const { return SkewShape(chain_.back(), chain_.front()); }
  Composition weight() const;
  // Ribbons of step i (1-based letter i at index i-1), origins left to right.
  const std::vector<std::vector<Ribbon>>& strips() const { return strips_; }
  int spin() const;

  friend bool operator==(const RibbonTableau& a, const RibbonTableau& b) {
    return a.L_ == b.L_ && a.chain_ == b.chain_;
  }

private:
  int L_;
  std::vector<Partition> chain_;
  std::vector<std::vector<Ribbon>> strips_;
};

void for_each_ribbon_tableau(const SkewShape& shape, const Composition& weight, int L,
                             const std::function<void(const RibbonTableau&)>& visit);
std::vector<RibbonTableau> enumerate_ribbon_tableaux(const SkewShape& shape,
                                                     const Composition& weight, int L);

// Largest spin of a saturated ribbon chain filling the shape. Throws
// std::invalid_argument when the shape cannot be tiled.
int maxspin(const SkewShape& shape, int L);
int cospin(const RibbonTableau& tableau);
int cospin(const RibbonTableau& tableau, int max_spin);

QPolynomial spin_gf(const SkewShape& shape, const Composition& weight, int L);
QPolynomial cospin_gf(const SkewShape& shape, const Composition& weight, int L);

RibbonTableau standardize_ribbon(const RibbonTableau& tableau);

MultiTableau stanton_white(const RibbonTableau& tableau);
RibbonTableau stanton_white_inverse(const MultiTableau& tableau);

} // namespace supernomial
