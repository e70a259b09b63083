#include "supernomial/rigged.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace supernomial {

Composition pad_content(const Composition& lambda, int n) {
  if (n < 1)
    throw std::invalid_argument("alphabet size must be at least 1");
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    if (lambda[a] < 0)
      throw std::invalid_argument("content entries must be nonnegative");
    if (static_cast<int>(a) >= n && lambda[a] != 0)
      throw std::invalid_argument("content has " + std::to_string(lambda.size()) +
                                  " entries but the alphabet has only " + std::to_string(n) +
                                  " letters");
  }
  Composition out(lambda.begin(), lambda.begin() + std::min<std::size_t>(lambda.size(), n));
  out.resize(n, 0);
  return out;
}

// ---------------------------------------------------------------------------

Configuration::Configuration(Mode mode, Composition lambda, Partition mu, int n,
                             std::vector<Partition> nu)
    : mode_(mode), lambda_(pad_content(lambda, n)), mu_(std::move(mu)), n_(n) {
  if (static_cast<int>(nu.size()) != n - 1)
    throw std::invalid_argument("configuration needs " + std::to_string(n - 1) +
                                " partitions, got " + std::to_string(nu.size()));
  chain_.reserve(n + 1);
  chain_.emplace_back();
  for (auto& p : nu)
    chain_.push_back(std::move(p));
  chain_.push_back(conjugate(mu_));

  int total = 0;
  for (int a = 1; a <= n; ++a) {
    total += lambda_[a - 1];
    const Partition& lower = chain_[a - 1];
    const Partition& upper = chain_[a];
    if (!contains(upper, lower))
      throw std::invalid_argument("configuration is not nested at step " + std::to_string(a));
    if (mode_ == Mode::symmetric) {
      if (upper.size() != total)
        throw std::invalid_argument("configuration partition " + std::to_string(a) +
                                    " must have size " + std::to_string(total));
    } else if (!is_horizontal_strip(SkewShape(upper, lower), lambda_[a - 1])) {
      throw std::invalid_argument("configuration step " + std::to_string(a) +
                                  " is not a horizontal " + std::to_string(lambda_[a - 1]) +
                                  "-strip");
    }
  }
}

const Partition& Configuration::nu(int a) const {
  if (a < 0 || a > n_)
    throw std::out_of_range("configuration index " + std::to_string(a) + " out of range");
  return chain_[a];
}

std::vector<Partition> Configuration::interior() const {
  return {chain_.begin() + 1, chain_.end() - 1};
}

void Configuration::check_index(int a, int i) const {
  if (a < 1 || a >= n_ || i < 1 || i > rows())
    throw std::out_of_range("configuration index (a=" + std::to_string(a) +
                            ", i=" + std::to_string(i) + ") out of range");
}

int Configuration::vacancy(int a, int i) const {
  check_index(a, i);
  return chain_[a + 1].row(i) - chain_[a].row(i);
}

int Configuration::multiplicity(int a, int i) const {
  check_index(a, i);
  const Partition& next_row_source = mode_ == Mode::symmetric ? chain_[a] : chain_[a + 1];
  return chain_[a].row(i) - next_row_source.row(i + 1);
}

long phi(const Configuration& config) {
  if (config.mode() != Mode::symmetric)
    throw std::invalid_argument("phi is defined for symmetric configurations only");
  long total = 0;
  for (int a = 1; a < config.alphabet(); ++a)
    for (int i = 1; i <= config.rows(); ++i)
      total += static_cast<long>(config.nu(a).row(i + 1)) * config.vacancy(a, i);
  return total;
}

// ---------------------------------------------------------------------------

namespace {

// Partitions inner with outer/inner a horizontal strip of `size` cells.
void strip_removals(const Partition& outer, int size,
                    const std::function<void(const Partition&)>& visit) {
  int rows = outer.length();
  std::vector<int> parts(rows);
  std::function<void(int, int)> rec = [&](int r, int remaining) {
    if (r == rows) {
      if (remaining == 0)
        visit(Partition(parts));
      return;
    }
    int slack = 0;
    for (int k = r; k < rows; ++k)
      slack += outer[k] - outer[k + 1];
    if (slack < remaining)
      return;
    int low = outer[r + 1];
    for (int part = outer[r]; part >= low; --part) {
      int taken = outer[r] - part;
      if (taken > remaining)
        break;
      parts[r] = part;
      rec(r + 1, remaining - taken);
    }
  };
  if (size >= 0)
    rec(0, size);
}

struct ConfigurationEnumerator {
  Mode mode;
  const Composition& lambda;
  const Partition& mu;
  int n;
  std::vector<int> prefix;  // prefix[a] = lambda_1 + ... + lambda_a
  const std::function<void(const Configuration&)>& visit;
  std::vector<Partition> stack;  // nu(n-1), nu(n-2), ... being built

  void run() {
    Partition top = conjugate(mu);
    descend(n - 1, top);
  }

  // Choose nu(a) below `upper` = nu(a+1).
  void descend(int a, const Partition& upper) {
    if (a == 0) {
      bool ok = mode == Mode::symmetric ? true
                                        : is_horizontal_strip(SkewShape(upper), lambda[0]);
      if (ok) {
        std::vector<Partition> nu(stack.rbegin(), stack.rend());
        visit(Configuration(mode, lambda, mu, n, std::move(nu)));
      }
      return;
    }
    auto next = [&](const Partition& p) {
      stack.push_back(p);
      descend(a - 1, p);
      stack.pop_back();
    };
    if (mode == Mode::symmetric)
      for_each_subpartition(upper, prefix[a], next);
    else
      strip_removals(upper, lambda[a], next);
  }
};

} // namespace

void for_each_configuration(const Composition& lambda, const Partition& mu, int n, Mode mode,
                            const std::function<void(const Configuration&)>& visit) {
  Composition content = pad_content(lambda, n);
  std::vector<int> prefix(n + 1, 0);
  for (int a = 1; a <= n; ++a)
    prefix[a] = prefix[a - 1] + content[a - 1];
  if (prefix[n] != mu.size())
    return;
  ConfigurationEnumerator e{mode, content, mu, n, prefix, visit, {}};
  e.run();
}

std::vector<Configuration> enumerate_configurations(const Composition& lambda,
                                                    const Partition& mu, int n, Mode mode) {
  std::vector<Configuration> out;
  for_each_configuration(lambda, mu, n, mode,
                         [&](const Configuration& c) { out.push_back(c); });
  return out;
}

// ---------------------------------------------------------------------------

RiggedConfiguration::RiggedConfiguration(Configuration config, Labels labels)
    : config_(std::move(config)), labels_(std::move(labels)) {
  int n = config_.alphabet();
  if (static_cast<int>(labels_.size()) != n - 1)
    throw std::invalid_argument("rigging must list labels for " + std::to_string(n - 1) +
                                " partitions");
  for (int a = 1; a < n; ++a) {
    auto& per_row = labels_[a - 1];
    if (static_cast<int>(per_row.size()) > config_.rows())
      throw std::invalid_argument("rigging of partition " + std::to_string(a) +
                                  " lists too many rows");
    per_row.resize(config_.rows());
    for (int i = 1; i <= config_.rows(); ++i) {
      auto& row = per_row[i - 1];
      int m = config_.multiplicity(a, i);
      int p = config_.vacancy(a, i);
      if (static_cast<int>(row.size()) != m)
        throw std::invalid_argument("row " + std::to_string(i) + " of partition " +
                                    std::to_string(a) + " needs " + std::to_string(m) +
                                    " labels, got " + std::to_string(row.size()));
      for (int j : row)
        if (j < 0 || j > p)
          throw std::invalid_argument("label " + std::to_string(j) + " outside [0," +
                                      std::to_string(p) + "] in row " + std::to_string(i) +
                                      " of partition " + std::to_string(a));
      std::sort(row.begin(), row.end(), std::greater<>());
    }
  }
}

namespace {

RiggedConfiguration::Labels zero_labels(const Configuration& config) {
  RiggedConfiguration::Labels labels(std::max(config.alphabet() - 1, 0));
  for (int a = 1; a < config.alphabet(); ++a)
    for (int i = 1; i <= config.rows(); ++i)
      labels[a - 1].emplace_back(config.multiplicity(a, i), 0);
  return labels;
}

} // namespace

RiggedConfiguration::RiggedConfiguration(Configuration config)
    : RiggedConfiguration(config, zero_labels(config)) {}

long RiggedConfiguration::label_sum() const {
  long total = 0;
  for (const auto& per_row : labels_)
    for (const auto& row : per_row)
      total += std::accumulate(row.begin(), row.end(), 0L);
  return total;
}

void for_each_rigging(const Configuration& config,
                      const std::function<void(const RiggedConfiguration&)>& visit) {
  struct Slot {
    int a, i, m, p;
  };
  std::vector<Slot> slots;
  for (int a = 1; a < config.alphabet(); ++a)
    for (int i = 1; i <= config.rows(); ++i)
      if (int m = config.multiplicity(a, i); m > 0)
        slots.push_back({a, i, m, config.vacancy(a, i)});

  RiggedConfiguration::Labels labels = zero_labels(config);
  std::function<void(std::size_t)> fill_slot;
  // Weakly decreasing lists of length m with entries in [0, cap].
  std::function<void(std::size_t, int, int)> fill_label = [&](std::size_t s, int k, int cap) {
    const Slot& slot = slots[s];
    if (k == slot.m) {
      fill_slot(s + 1);
      return;
    }
    for (int j = cap; j >= 0; --j) {
      labels[slot.a - 1][slot.i - 1][k] = j;
      fill_label(s, k + 1, j);
    }
  };
  fill_slot = [&](std::size_t s) {
    if (s == slots.size()) {
      visit(RiggedConfiguration(config, labels));
      return;
    }
    fill_label(s, 0, slots[s].p);
  };
  fill_slot(0);
}

std::vector<RiggedConfiguration> enumerate_riggings(const Configuration& config) {
  std::vector<RiggedConfiguration> out;
  for_each_rigging(config, [&](const RiggedConfiguration& rc) { out.push_back(rc); });
  return out;
}

long statistic_sym(const RiggedConfiguration& rc) {
  if (rc.mode() != Mode::symmetric)
    throw std::invalid_argument("statistic_sym needs a symmetric rigged configuration");
  return phi(rc.config()) + rc.label_sum();
}

long statistic_anti(const RiggedConfiguration& rc) {
  if (rc.mode() != Mode::antisymmetric)
    throw std::invalid_argument("statistic_anti needs an antisymmetric rigged configuration");
  return rc.label_sum();
}

long statistic(const RiggedConfiguration& rc) {
  return rc.mode() == Mode::symmetric ? statistic_sym(rc) : statistic_anti(rc);
}

QPolynomial formula_term(const Configuration& config) {
  QPolynomial term = QPolynomial::monomial(
      config.mode() == Mode::symmetric ? static_cast<int>(phi(config)) : 0);
  for (int a = 1; a < config.alphabet() && !term.is_zero(); ++a)
    for (int i = 1; i <= config.rows(); ++i)
      term *= qbinomial(config.multiplicity(a, i), config.vacancy(a, i));
  return term;
}

QPolynomial rigging_gf(const Configuration& config) {
  QPolynomial total;
  for_each_rigging(config, [&](const RiggedConfiguration& rc) {
    total += QPolynomial::monomial(static_cast<int>(statistic(rc)));
  });
  return total;
}

QPolynomial supernomial(const Composition& lambda, const Partition& mu, int n, Mode mode) {
  QPolynomial total;
  for_each_configuration(lambda, mu, n, mode,
                         [&](const Configuration& c) { total += formula_term(c); });
  return total;
}

QPolynomial supernomial_sym(const Composition& lambda, const Partition& mu, int n) {
  return supernomial(lambda, mu, n, Mode::symmetric);
}

QPolynomial supernomial_anti(const Composition& lambda, const Partition& mu, int n) {
  return supernomial(lambda, mu, n, Mode::antisymmetric);
}

QPolynomial supernomial_via_rc(const Composition& lambda, const Partition& mu, int n,
                               Mode mode) {
  QPolynomial total;
  for_each_configuration(lambda, mu, n, mode,
                         [&](const Configuration& c) { total += rigging_gf(c); });
  return total;
}

} // namespace supernomial
