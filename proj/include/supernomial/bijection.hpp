#pragma once

#include "supernomial/rigged.hpp"
#include "supernomial/tableau.hpp"

#include <string>
#include <vector>

namespace supernomial {

// Mutable working state of the bijections: nu(1)..nu(n) (nu(n) is the
// partially built mu^t) with label multisets on nu(1)..nu(n-1). Labels are
// kept weakly decreasing; rows beyond the last nonempty one carry no labels.
class RiggedState {
public:
  RiggedState(Mode mode, int n);
  // Copies the partitions and labels of a complete rigged configuration.
  explicit RiggedState(const RiggedConfiguration& rc);

  Mode mode() const { return mode_; }
  int alphabet() const { return n_; }
  // nu(a)_i for 0 <= a <= n and i >= 0 (row 0 and nu(0) read as 0).
  int part(int a, int i) const;
  Partition nu(int a) const;
  int vacancy(int a, int i) const;
  // Labels on row i of nu(a), 1 <= a < n.
  const std::vector<int>& labels(int a, int i) const;
  int height() const;  // number of nonempty rows of nu(n)

  void add_box(int a, int i);
  void remove_box(int a, int i);
  void insert_label(int a, int i, int label);
  bool has_label(int a, int i, int label) const;
  void erase_label(int a, int i, int label);
  // Replaces every label j by vacancy - j.
  void invert_labels();
  bool empty() const;

  // Phi-style contribution plus the inverted label sum, i.e. the statistic
  // the configuration would carry if the algorithm stopped here.
  long inverted_statistic() const;

  friend bool operator==(const RiggedState&, const RiggedState&) = default;

private:
  std::vector<int>& row_labels(int a, int i);

  Mode mode_;
  int n_;
  std::vector<std::vector<int>> parts_;               // parts_[a-1]
  std::vector<std::vector<std::vector<int>>> labels_;  // labels_[a-1][i-1]
};

struct TraceStage {
  int component = 0;
  int index = 0;  // position i of the letter within its row or column
  int letter = 0;
  RiggedState state;  // before the final label inversion
};

enum class Direction { forward, backward };

struct BijectionTrace {
  Mode mode;
  Direction direction;
  std::vector<TraceStage> stages;
};

// Letters of each single-row (symmetric) or single-column (antisymmetric)
// component, read left to right or bottom to top. Throws
// std::invalid_argument for components of the wrong shape.
std::vector<std::vector<int>> component_words(const MultiTableau& tableau, Mode mode);

RiggedConfiguration psi(const MultiTableau& tableau);
RiggedConfiguration psi_prime(const MultiTableau& tableau);
RiggedConfiguration psi(const MultiTableau& tableau, Mode mode);

// component_sizes gives |mu^k| in tableau order; their sorted values must be
// mu. Throws std::invalid_argument if rc has no preimage.
MultiTableau psi_inverse(const RiggedConfiguration& rc, const std::vector<int>& component_sizes);
MultiTableau psi_prime_inverse(const RiggedConfiguration& rc,
                               const std::vector<int>& component_sizes);

BijectionTrace psi_trace(const MultiTableau& tableau, Mode mode);
BijectionTrace psi_inverse_trace(const RiggedConfiguration& rc,
                                 const std::vector<int>& component_sizes);

struct DeltaStep {
  int component = 0;
  int index = 0;
  int letter = 0;
  long inversion_change = 0;  // observed on the partial multitableau
  long closed_form = 0;
  long statistic_change = 0;  // observed on the rigged state
};

struct DeltaReport {
  bool ok = true;
  std::string detail;  // first failure, empty when ok
  std::vector<DeltaStep> steps;
};

// Replays the forward map and compares, at each letter, the change in
// inversions of the partial multitableau with the closed form and with the
// change of the rigged statistic. Also checks the content/diagonal relation
// between the partial tableau and the configuration.
DeltaReport delta_check(const MultiTableau& tableau, Mode mode);

} // namespace supernomial
