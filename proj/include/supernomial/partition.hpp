#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace supernomial {

/// Integer partition in canonical form: weakly decreasing, positive parts,
/// no trailing zeros. Rows are 1-indexed through row(); operator[] is the
/// 0-indexed view. Both read missing parts as 0.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Accepts trailing zeros and drops them; throws std::invalid_argument on
  /// negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  int operator[](int index) const {
    return index >= 0 && index < length() ? parts_[index] : 0;
  }
  int row(int i) const { return (*this)[i - 1]; }

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

struct Cell {
  int row = 1;
  int col = 1;
  int diag() const { return col - row; }
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cells of outer not in inner. Construction checks inner ⊂ outer.
class SkewShape {
public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& lambda);

bool contains(const Partition& outer, const Partition& inner);

/// True iff the skew shape has exactly p cells, at most one per column.
bool is_horizontal_strip(const SkewShape& shape, int p);

/// n(mu) = sum over i<j of min(mu_i, mu_j).
long costat_n(const Partition& mu);

/// Every partition nu ⊂ bound with |nu| = size, in lexicographically
/// decreasing order of parts.
void for_each_subpartition(const Partition& bound, int size,
                           const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_subpartitions(const Partition& bound, int size);

/// Every alpha with inner ⊂ alpha ⊂ bound such that alpha/inner is a
/// horizontal strip of `size` cells, lexicographically decreasing.
void for_each_horizontal_strip(const Partition& inner, const Partition& bound,
                               int size,
                               const std::function<void(const Partition&)>& visit);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);

/// All compositions of n into exactly k nonnegative parts, lexicographically
/// decreasing.
std::vector<std::vector<int>> compositions(int n, int k);

/// All compositions of n into positive parts, any number of parts.
std::vector<std::vector<int>> positive_compositions(int n);

/// Parses "2,2,1", "[2,2,1]" or "" into parts (no ordering check).
std::vector<int> parse_int_list(const std::string& text);

} // namespace supernomial
