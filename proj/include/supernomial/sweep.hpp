#pragma once

#include "supernomial/mode.hpp"
#include "supernomial/partition.hpp"
#include "supernomial/qpoly.hpp"
#include "supernomial/tableau.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace supernomial {

namespace checks {
inline const std::string formula_rc = "formula-rc";
inline const std::string rc_multitab = "rc-multitab";
inline const std::string bijection = "bijection";
inline const std::string multitab_ribbon = "multitab-ribbon";
inline const std::string oracle = "oracle";
const std::set<std::string>& all();
} // namespace checks

struct SweepSpec {
  int max_total_size = 5;
  int max_alphabet = 3;
  int max_components = 3;
  std::vector<Mode> modes{Mode::symmetric, Mode::antisymmetric};
  std::set<std::string> enabled = checks::all();
  bool parallel = true;

  // Throws std::invalid_argument for negative bounds or unknown checks.
  void validate() const;
};

// One (lambda, mu, n, mode) instance. lambda is the composition as
// enumerated; the formula-side polynomials use it sorted.
struct InstanceResult {
  Composition lambda;
  Partition mu;
  int n = 0;
  Mode mode = Mode::symmetric;
  std::map<std::string, QPolynomial> polynomials;
  // Properties recorded without affecting pass/fail.
  std::map<std::string, bool> observations;
  bool pass = true;
  std::string detail;  // first mismatch
};

struct VerificationReport {
  std::vector<InstanceResult> instances;
  int passed = 0;
  int failed = 0;
  // observation name -> (instances where it held, instances where it failed)
  std::map<std::string, std::pair<int, int>> observations;
  double seconds = 0;

  bool ok() const { return failed == 0; }
};

// Instances with 1 <= |mu| <= max_total_size, 1 <= n <= max_alphabet,
// length(mu) <= max_components, every composition lambda of |mu| into n
// parts, every requested mode. Order is deterministic.
std::vector<InstanceResult> sweep_instances(const SweepSpec& spec);

InstanceResult verify_instance(InstanceResult instance, const std::set<std::string>& enabled);

VerificationReport verify_sweep(const SweepSpec& spec);

// One JSON object per line, then a summary object. Timing is omitted so the
// text is reproducible.
std::string report_json_lines(const VerificationReport& report);
std::string report_summary(const VerificationReport& report);

} // namespace supernomial
