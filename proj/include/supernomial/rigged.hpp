#pragma once

#include "supernomial/mode.hpp"
#include "supernomial/partition.hpp"
#include "supernomial/qpoly.hpp"
#include "supernomial/tableau.hpp"

#include <functional>
#include <string>
#include <vector>

namespace supernomial {

// A chain nu(0) = empty, nu(1), ..., nu(n-1), nu(n) = mu^t obeying the size
// constraints (symmetric) or horizontal-strip constraints (antisymmetric)
// for the content `lambda` over the alphabet 1..n.
class Configuration {
public:
  // lambda may be shorter than n (zero padded); longer only with trailing
  // zeros. nu holds nu(1)..nu(n-1). Throws std::invalid_argument if the chain
  // is not admissible.
  Configuration(Mode mode, Composition lambda, Partition mu, int n, std::vector<Partition> nu);

  Mode mode() const { return mode_; }
  const Composition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  int alphabet() const { return n_; }
  // Rows a rigging may occupy: 1..mu_1.
  int rows() const { return mu_.row(1); }
  // nu(a) for 0 <= a <= n.
  const Partition& nu(int a) const;
  // The interior partitions nu(1)..nu(n-1).
  std::vector<Partition> interior() const;

  // Both take 1 <= a <= n-1 and 1 <= i <= mu_1; out of range throws
  // std::out_of_range.
  int vacancy(int a, int i) const;
  int multiplicity(int a, int i) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

private:
  void check_index(int a, int i) const;

  Mode mode_;
  Composition lambda_;
  Partition mu_;
  int n_;
  std::vector<Partition> chain_;  // nu(0)..nu(n)
};

// Sum over a, i of nu(a)_{i+1} * vacancy(a, i). Symmetric mode only.
long phi(const Configuration& config);

// Lambda padded to n entries; throws if it has nonzero entries past n.
Composition pad_content(const Composition& lambda, int n);

void for_each_configuration(const Composition& lambda, const Partition& mu, int n, Mode mode,
                            const std::function<void(const Configuration&)>& visit);
std::vector<Configuration> enumerate_configurations(const Composition& lambda,
                                                    const Partition& mu, int n, Mode mode);

// A configuration plus quantum numbers: labels(a, i) is a weakly decreasing
// list of multiplicity(a, i) integers in [0, vacancy(a, i)].
class RiggedConfiguration {
public:
  using Labels = std::vector<std::vector<std::vector<int>>>;  // [a-1][i-1]

  // Labels are sorted on construction. Throws std::invalid_argument on
  // wrong counts or out-of-range labels.
  RiggedConfiguration(Configuration config, Labels labels);
  // All labels zero.
  explicit RiggedConfiguration(Configuration config);

  const Configuration& config() const { return config_; }
  Mode mode() const { return config_.mode(); }
  const Labels& labels() const { return labels_; }
  const std::vector<int>& labels(int a, int i) const { return labels_[a - 1][i - 1]; }
  long label_sum() const;

  friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;

private:
  Configuration config_;
  Labels labels_;
};

void for_each_rigging(const Configuration& config,
                      const std::function<void(const RiggedConfiguration&)>& visit);
std::vector<RiggedConfiguration> enumerate_riggings(const Configuration& config);

long statistic_sym(const RiggedConfiguration& rc);
long statistic_anti(const RiggedConfiguration& rc);
long statistic(const RiggedConfiguration& rc);  // by mode

// Summand of the explicit formula for one configuration: q^phi (symmetric
// only) times the product of q-binomials over (a, i).
QPolynomial formula_term(const Configuration& config);
// Sum of q^statistic over the riggings of one configuration.
QPolynomial rigging_gf(const Configuration& config);

QPolynomial supernomial_sym(const Composition& lambda, const Partition& mu, int n);
QPolynomial supernomial_anti(const Composition& lambda, const Partition& mu, int n);
QPolynomial supernomial(const Composition& lambda, const Partition& mu, int n, Mode mode);
QPolynomial supernomial_via_rc(const Composition& lambda, const Partition& mu, int n,
                               Mode mode);

} // namespace supernomial
