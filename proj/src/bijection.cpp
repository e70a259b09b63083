#include "supernomial/bijection.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace supernomial {

RiggedState::RiggedState(Mode mode, int n)
    : mode_(mode), n_(n), parts_(std::max(n, 0)), labels_(std::max(n - 1, 0)) {
  if (n < 1)
    throw std::invalid_argument("alphabet size must be at least 1");
}

RiggedState::RiggedState(const RiggedConfiguration& rc)
    : RiggedState(rc.mode(), rc.config().alphabet()) {
  for (int a = 1; a <= n_; ++a)
    parts_[a - 1] = rc.config().nu(a).parts();
  for (int a = 1; a < n_; ++a)
    for (int i = 1; i <= rc.config().rows(); ++i)
      for (int j : rc.labels(a, i))
        insert_label(a, i, j);
}

int RiggedState::part(int a, int i) const {
  if (a <= 0 || i <= 0 || a > n_)
    return 0;
  const auto& p = parts_[a - 1];
  return i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

Partition RiggedState::nu(int a) const {
  if (a <= 0)
    return {};
  return Partition(parts_.at(a - 1));
}

int RiggedState::vacancy(int a, int i) const { return part(a + 1, i) - part(a, i); }

const std::vector<int>& RiggedState::labels(int a, int i) const {
  static const std::vector<int> none;
  if (a < 1 || a >= n_ || i < 1)
    return none;
  const auto& rows = labels_[a - 1];
  return i <= static_cast<int>(rows.size()) ? rows[i - 1] : none;
}

int RiggedState::height() const { return static_cast<int>(parts_.back().size()); }

std::vector<int>& RiggedState::row_labels(int a, int i) {
  if (a < 1 || a >= n_ || i < 1)
    throw std::logic_error("label row (" + std::to_string(a) + "," + std::to_string(i) +
                           ") out of range");
  auto& rows = labels_[a - 1];
  if (static_cast<int>(rows.size()) < i)
    rows.resize(i);
  return rows[i - 1];
}

void RiggedState::add_box(int a, int i) {
  auto& p = parts_.at(a - 1);
  if (i > static_cast<int>(p.size()) + 1)
    throw std::logic_error("cannot add a box to row " + std::to_string(i) + " of nu(" +
                           std::to_string(a) + ")");
  if (i == static_cast<int>(p.size()) + 1)
    p.push_back(0);
  if (i > 1 && p[i - 2] <= p[i - 1])
    throw std::logic_error("adding a box to row " + std::to_string(i) + " of nu(" +
                           std::to_string(a) + ") breaks the partition");
  ++p[i - 1];
}

void RiggedState::remove_box(int a, int i) {
  auto& p = parts_.at(a - 1);
  if (part(a, i) <= part(a, i + 1))
    throw std::invalid_argument("row " + std::to_string(i) + " of nu(" + std::to_string(a) +
                                ") has no removable box");
  --p[i - 1];
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

void RiggedState::insert_label(int a, int i, int label) {
  auto& row = row_labels(a, i);
  row.insert(std::upper_bound(row.begin(), row.end(), label, std::greater<>()), label);
}

bool RiggedState::has_label(int a, int i, int label) const {
  const auto& row = labels(a, i);
  return std::find(row.begin(), row.end(), label) != row.end();
}

void RiggedState::erase_label(int a, int i, int label) {
  auto& row = row_labels(a, i);
  auto it = std::find(row.begin(), row.end(), label);
  if (it == row.end())
    throw std::logic_error("no label " + std::to_string(label) + " in row " +
                           std::to_string(i) + " of nu(" + std::to_string(a) + ")");
  row.erase(it);
  auto& rows = labels_[a - 1];
  while (!rows.empty() && rows.back().empty())
    rows.pop_back();
}

void RiggedState::invert_labels() {
  for (int a = 1; a < n_; ++a) {
    auto& rows = labels_[a - 1];
    for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
      int p = vacancy(a, i);
      for (int& j : rows[i - 1])
        j = p - j;
      std::sort(rows[i - 1].begin(), rows[i - 1].end(), std::greater<>());
    }
  }
}

bool RiggedState::empty() const {
  for (const auto& p : parts_)
    if (!p.empty())
      return false;
  for (const auto& rows : labels_)
    for (const auto& row : rows)
      if (!row.empty())
        return false;
  return true;
}

long RiggedState::inverted_statistic() const {
  long total = 0;
  for (int a = 1; a < n_; ++a) {
    for (int i = 1; i <= height(); ++i) {
      if (mode_ == Mode::symmetric)
        total += static_cast<long>(part(a, i + 1)) * vacancy(a, i);
      for (int j : labels(a, i))
        total += vacancy(a, i) - j;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

int removal_start(Mode mode, int letter) {
  return mode == Mode::symmetric ? letter : std::max(letter - 1, 1);
}

// One letter of the forward map: letter t placed at position i.
void forward_step(RiggedState& s, int t, int i) {
  int n = s.alphabet();
  if (i > 1)
    for (int a = removal_start(s.mode(), t); a < n; ++a) {
      int singular = s.vacancy(a, i - 1);
      if (!s.has_label(a, i - 1, singular))
        throw std::logic_error("no singular label in row " + std::to_string(i - 1) +
                               " of nu(" + std::to_string(a) + ") for letter " +
                               std::to_string(t));
      s.erase_label(a, i - 1, singular);
    }
  for (int a = t; a <= n; ++a)
    s.add_box(a, i);
  for (int a = t; a < n; ++a)
    s.insert_label(a, i, s.vacancy(a, i));
}

// Undoes the letter at position i and returns it.
int backward_step(RiggedState& s, int i) {
  int n = s.alphabet();
  int a = n - 1;
  while (a >= 1 && s.has_label(a, i, s.vacancy(a, i)))
    --a;
  int t = a + 1;
  for (int b = t; b < n; ++b)
    s.erase_label(b, i, s.vacancy(b, i));
  for (int b = t; b <= n; ++b)
    s.remove_box(b, i);
  if (i > 1)
    for (int b = removal_start(s.mode(), t); b < n; ++b)
      s.insert_label(b, i - 1, s.vacancy(b, i - 1));
  return t;
}

Partition sorted_sizes(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return Partition(std::move(sizes));
}

RiggedConfiguration to_rigged(const RiggedState& s, const Composition& content,
                              const Partition& mu) {
  int n = s.alphabet();
  std::vector<Partition> nu;
  for (int a = 1; a < n; ++a)
    nu.push_back(s.nu(a));
  Configuration config(s.mode(), content, mu, n, std::move(nu));
  RiggedConfiguration::Labels labels(n - 1);
  for (int a = 1; a < n; ++a)
    for (int i = 1; i <= config.rows(); ++i)
      labels[a - 1].push_back(s.labels(a, i));
  return RiggedConfiguration(std::move(config), std::move(labels));
}

int effective_alphabet(const MultiTableau& tableau) { return std::max(tableau.alphabet(), 1); }

struct ForwardRun {
  RiggedState state;
  std::vector<TraceStage> stages;
};

ForwardRun run_forward(const MultiTableau& tableau, Mode mode, bool keep_stages) {
  auto words = component_words(tableau, mode);
  ForwardRun run{RiggedState(mode, effective_alphabet(tableau)), {}};
  for (int k = static_cast<int>(words.size()) - 1; k >= 0; --k)
    for (int i = 1; i <= static_cast<int>(words[k].size()); ++i) {
      int t = words[k][i - 1];
      forward_step(run.state, t, i);
      if (keep_stages)
        run.stages.push_back({k, i, t, run.state});
    }
  return run;
}

} // namespace

std::vector<std::vector<int>> component_words(const MultiTableau& tableau, Mode mode) {
  std::vector<std::vector<int>> words;
  for (const auto& filling : tableau.fillings()) {
    std::vector<int> word;
    if (mode == Mode::symmetric) {
      if (filling.size() > 1)
        throw std::invalid_argument("symmetric bijection needs single-row components");
      if (!filling.empty())
        word = filling.front();
    } else {
      for (const auto& row : filling) {
        if (row.size() != 1)
          throw std::invalid_argument("antisymmetric bijection needs single-column components");
        word.push_back(row.front());
      }
    }
    words.push_back(std::move(word));
  }
  return words;
}

RiggedConfiguration psi(const MultiTableau& tableau, Mode mode) {
  if (!tableau.inner().cells().empty())
    throw std::invalid_argument("bijection needs a straight-shape multitableau");
  ForwardRun run = run_forward(tableau, mode, false);
  run.state.invert_labels();
  std::vector<int> sizes;
  for (const auto& p : tableau.shape().parts())
    sizes.push_back(p.size());
  Composition content = tableau.weight();
  content.resize(run.state.alphabet(), 0);
  return to_rigged(run.state, content, sorted_sizes(sizes));
}

RiggedConfiguration psi(const MultiTableau& tableau) { return psi(tableau, Mode::symmetric); }

RiggedConfiguration psi_prime(const MultiTableau& tableau) {
  return psi(tableau, Mode::antisymmetric);
}

BijectionTrace psi_trace(const MultiTableau& tableau, Mode mode) {
  return {mode, Direction::forward, run_forward(tableau, mode, true).stages};
}

namespace {

struct BackwardRun {
  MultiTableau tableau;
  std::vector<TraceStage> stages;
};

BackwardRun run_backward(const RiggedConfiguration& rc, const std::vector<int>& sizes) {
  Mode mode = rc.mode();
  for (int s : sizes)
    if (s < 0)
      throw std::invalid_argument("component sizes must be nonnegative");
  if (sorted_sizes(sizes) != rc.config().mu())
    throw std::invalid_argument("component sizes do not sort to " + rc.config().mu().str());
  int n = rc.config().alphabet();
  RiggedState state(rc);
  state.invert_labels();

  std::vector<TraceStage> stages;
  std::vector<std::vector<int>> words(sizes.size());
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    words[k].assign(sizes[k], 0);
    int next = std::numeric_limits<int>::max();
    for (int i = sizes[k]; i >= 1; --i) {
      int t = backward_step(state, i);
      bool ordered = mode == Mode::symmetric ? t <= next : t < next;
      if (!ordered)
        throw std::invalid_argument("rigged configuration has no preimage: letter " +
                                    std::to_string(t) + " at position " + std::to_string(i) +
                                    " of component " + std::to_string(k) +
                                    " breaks monotonicity");
      words[k][i - 1] = next = t;
      stages.push_back({static_cast<int>(k), i, t, state});
    }
  }
  if (!state.empty())
    throw std::invalid_argument("rigged configuration has no preimage: state not exhausted");

  std::vector<Filling> fillings;
  for (const auto& word : words) {
    Filling f;
    if (mode == Mode::symmetric) {
      if (!word.empty())
        f.push_back(word);
    } else {
      for (int t : word)
        f.push_back({t});
    }
    fillings.push_back(std::move(f));
  }
  return {MultiTableau::from_fillings(fillings, n), std::move(stages)};
}

MultiTableau checked_inverse(const RiggedConfiguration& rc, const std::vector<int>& sizes,
                             Mode expected) {
  if (rc.mode() != expected)
    throw std::invalid_argument("rigged configuration is in " + to_string(rc.mode()) +
                                " mode, expected " + to_string(expected));
  MultiTableau tableau = run_backward(rc, sizes).tableau;
  if (psi(tableau, expected) != rc)
    throw std::invalid_argument("rigged configuration has no preimage under the bijection");
  return tableau;
}

} // namespace

MultiTableau psi_inverse(const RiggedConfiguration& rc, const std::vector<int>& component_sizes) {
  return checked_inverse(rc, component_sizes, Mode::symmetric);
}

MultiTableau psi_prime_inverse(const RiggedConfiguration& rc,
                               const std::vector<int>& component_sizes) {
  return checked_inverse(rc, component_sizes, Mode::antisymmetric);
}

BijectionTrace psi_inverse_trace(const RiggedConfiguration& rc,
                                 const std::vector<int>& component_sizes) {
  return {rc.mode(), Direction::backward, run_backward(rc, component_sizes).stages};
}

// ---------------------------------------------------------------------------

namespace {

MultiTableau partial_tableau(const std::vector<std::vector<int>>& words, int k, int i, int n,
                             Mode mode) {
  std::vector<Filling> fillings(words.size());
  for (int c = 0; c < static_cast<int>(words.size()); ++c) {
    int used = c > k ? static_cast<int>(words[c].size()) : (c == k ? i : 0);
    if (used == 0)
      continue;
    if (mode == Mode::symmetric)
      fillings[c].push_back({words[c].begin(), words[c].begin() + used});
    else
      for (int r = 0; r < used; ++r)
        fillings[c].push_back({words[c][r]});
  }
  return MultiTableau::from_fillings(fillings, n);
}

// nu(a)_i - nu(a-1)_i against the number of letters a on the matching diagonal.
std::string content_relation_failure(const RiggedState& s, const MultiTableau& partial,
                                     Mode mode) {
  int n = s.alphabet();
  auto fillings = partial.fillings();
  for (int a = 1; a <= n; ++a)
    for (int i = 1; i <= s.height() + 1; ++i) {
      int diag = mode == Mode::symmetric ? i - 1 : 1 - i;
      int count = 0;
      for (const auto& f : fillings)
        for (std::size_t r = 0; r < f.size(); ++r)
          for (std::size_t c = 0; c < f[r].size(); ++c)
            if (f[r][c] == a && static_cast<int>(c) - static_cast<int>(r) == diag)
              ++count;
      if (s.part(a, i) - s.part(a - 1, i) != count)
        return "content relation fails at a=" + std::to_string(a) + ", i=" +
               std::to_string(i);
    }
  return {};
}

} // namespace

DeltaReport delta_check(const MultiTableau& tableau, Mode mode) {
  auto words = component_words(tableau, mode);
  int n = effective_alphabet(tableau);
  RiggedState state(mode, n);
  DeltaReport report;
  long inv_before = 0;
  long stat_before = 0;
  for (int k = static_cast<int>(words.size()) - 1; k >= 0; --k)
    for (int i = 1; i <= static_cast<int>(words[k].size()); ++i) {
      int t = words[k][i - 1];
      forward_step(state, t, i);
      MultiTableau partial = partial_tableau(words, k, i, n, mode);
      long inv_after = inversions(partial);
      long stat_after = state.inverted_statistic();
      DeltaStep step{k, i, t, inv_after - inv_before, 0, stat_after - stat_before};
      if (mode == Mode::symmetric)
        step.closed_form = state.part(t - 1, i) + state.part(n, i - 1) - state.part(t, i - 1);
      else
        step.closed_form = state.part(t - 1, i) - state.part(t, i + 1);
      report.steps.push_back(step);
      inv_before = inv_after;
      stat_before = stat_after;

      if (!report.ok)
        continue;
      std::string where = "component " + std::to_string(k) + ", position " +
                          std::to_string(i) + ", letter " + std::to_string(t) + ": ";
      if (step.inversion_change != step.closed_form)
        report.detail = where + "inversion change " + std::to_string(step.inversion_change) +
                        " differs from closed form " + std::to_string(step.closed_form);
      else if (step.statistic_change != step.closed_form)
        report.detail = where + "statistic change " + std::to_string(step.statistic_change) +
                        " differs from closed form " + std::to_string(step.closed_form);
      else if (auto failure = content_relation_failure(state, partial, mode); !failure.empty())
        report.detail = where + failure;
      report.ok = report.detail.empty();
    }
  return report;
}

} // namespace supernomial
