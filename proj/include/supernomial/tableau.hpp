#pragma once

#include "supernomial/partition.hpp"
#include "supernomial/qpoly.hpp"

#include <compare>
#include <functional>
#include <vector>

namespace supernomial {

/// Content vector; entries may be zero and need not be sorted.
using Composition = std::vector<int>;

/// Row-major filling of a diagram, row 1 first.
using Filling = std::vector<std::vector<int>>;

/// Semistandard tableau as a chain inner = chain[0] ⊂ ... ⊂ chain[r] = outer
/// of horizontal strips.
class YoungTableau {
public:
  explicit YoungTableau(std::vector<Partition> chain);
  const std::vector<Partition>& chain() const { return chain_; }
  const Partition& shape() const { return chain_.back(); }
  Composition weight() const;
  /// Letters of the skew cells; cells of the inner shape read as 0.
  Filling filling() const;

private:
  std::vector<Partition> chain_;
};

/// Cell (row, col) of component `pos` of a multipartition.
struct MultiCell {
  int row = 1;
  int col = 1;
  int pos = 0;
  int diag() const { return col - row; }
  friend bool operator==(const MultiCell&, const MultiCell&) = default;
  friend auto operator<=>(const MultiCell&, const MultiCell&) = default;
};

/// Strict order s ≺ t: smaller diagonal, or same diagonal and smaller pos.
bool precedes(const MultiCell& s, const MultiCell& t);

class MultiPartition {
public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);
  /// L empty components.
  static MultiPartition empty(int L);

  int components() const { return static_cast<int>(parts_.size()); }
  const Partition& operator[](int p) const { return parts_[p]; }
  const std::vector<Partition>& parts() const { return parts_; }
  int size() const;
  bool contains(const MultiPartition& inner) const;
  bool contains(const MultiCell& cell) const;
  std::vector<MultiCell> cells() const;
  std::string str() const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

private:
  std::vector<Partition> parts_;
};

/// outer/inner is a tuple of horizontal strips with `weight` cells in total.
bool is_horizontal_multistrip(const MultiPartition& outer, const MultiPartition& inner,
                              int weight);

/// L-multitableau stored as a chain of multipartitions; each step is a
/// horizontal multistrip. chain()[0] is the inner shape, chain().size()-1 is
/// the alphabet size n.
class MultiTableau {
public:
  /// Throws std::invalid_argument unless the chain is valid.
  explicit MultiTableau(std::vector<MultiPartition> chain);

  /// Straight-shape tableau from per-component fillings (row 1 first).
  /// `alphabet` of 0 means the largest letter used.
  static MultiTableau from_fillings(const std::vector<Filling>& fillings,
                                    int alphabet = 0);

  const std::vector<MultiPartition>& chain() const { return chain_; }
  const MultiPartition& shape() const { return chain_.back(); }
  const MultiPartition& inner() const { return chain_.front(); }
  int components() const { return shape().components(); }
  int alphabet() const { return static_cast<int>(chain_.size()) - 1; }
  Composition weight() const;
  bool is_standard() const;
  std::vector<Filling> fillings() const;
  YoungTableau component(int p) const;

  friend bool operator==(const MultiTableau&, const MultiTableau&) = default;
  friend auto operator<=>(const MultiTableau&, const MultiTableau&) = default;

private:
  std::vector<MultiPartition> chain_;
};

/// Every tableau of Tab^L(shape/inner, weight). Steps are chosen in
/// lexicographic order of the multistrip sequence: components in order,
/// larger strips in earlier components first.
void for_each_multitableau(const MultiPartition& shape, const Composition& weight,
                           const std::function<void(const MultiTableau&)>& visit,
                           const MultiPartition& inner = {});
std::vector<MultiTableau> enumerate_multitableaux(const MultiPartition& shape,
                                                  const Composition& weight,
                                                  const MultiPartition& inner = {});

/// Saturated refinement adding the cells of each multistrip in ≺ order.
MultiTableau standardize(const MultiTableau& tableau);

/// T(s) for a standard multitableau. Throws std::out_of_range when s is not
/// a cell of the skew shape.
int tableau_value(const MultiTableau& standard, const MultiCell& cell);

/// Number of inversions of the standardization.
int inversions(const MultiTableau& tableau);

/// Sum of q^inv(T) over Tab^L(shape, weight).
QPolynomial inv_generating_function(const MultiPartition& shape,
                                    const Composition& weight);

/// Multipartition of single rows (or single columns) with the given sizes.
MultiPartition row_multipartition(const std::vector<int>& sizes);
MultiPartition column_multipartition(const std::vector<int>& sizes);

} // namespace supernomial
