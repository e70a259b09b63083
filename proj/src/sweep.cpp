#include "supernomial/sweep.hpp"

#include "supernomial/bijection.hpp"
#include "supernomial/io.hpp"
#include "supernomial/oracle.hpp"
#include "supernomial/ribbon.hpp"
#include "supernomial/rigged.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <sstream>

namespace supernomial {

const std::set<std::string>& checks::all() {
  static const std::set<std::string> names{formula_rc, rc_multitab, bijection, multitab_ribbon,
                                           oracle};
  return names;
}

void SweepSpec::validate() const {
  if (max_total_size < 0 || max_alphabet < 0 || max_components < 0)
    throw std::invalid_argument("sweep bounds must be nonnegative");
  if (enabled.empty())
    throw std::invalid_argument("at least one check must be enabled");
  for (const auto& name : enabled)
    if (!checks::all().count(name))
      throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<InstanceResult> sweep_instances(const SweepSpec& spec) {
  spec.validate();
  std::vector<InstanceResult> out;
  for (int size = 1; size <= spec.max_total_size; ++size)
    for (const auto& mu : partitions_of(size)) {
      if (mu.length() > spec.max_components)
        continue;
      for (int n = 1; n <= spec.max_alphabet; ++n)
        for (const auto& lambda : compositions(size, n))
          for (Mode mode : spec.modes) {
            InstanceResult r;
            r.lambda = lambda;
            r.mu = mu;
            r.n = n;
            r.mode = mode;
            out.push_back(std::move(r));
          }
    }
  return out;
}

namespace {

MultiPartition component_shape(const std::vector<int>& sizes, Mode mode) {
  return mode == Mode::symmetric ? row_multipartition(sizes) : column_multipartition(sizes);
}

struct Mismatch {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition)
    throw Mismatch{detail};
}

void require_equal(const InstanceResult& r, const std::string& a, const std::string& b) {
  const QPolynomial& pa = r.polynomials.at(a);
  const QPolynomial& pb = r.polynomials.at(b);
  require(pa == pb, a + " " + pa.dense() + " != " + b + " " + pb.dense());
}

void check_bijection(InstanceResult& r, const MultiPartition& shape) {
  std::set<std::string> images;
  QPolynomial via_bijection;
  std::vector<int> sizes;
  for (const auto& p : shape.parts())
    sizes.push_back(p.size());
  for_each_multitableau(shape, r.lambda, [&](const MultiTableau& t) {
    MultiTableau full = MultiTableau::from_fillings(t.fillings(), r.n);
    RiggedConfiguration rc = psi(full, r.mode);
    long stat = statistic(rc);
    int inv = inversions(full);
    require(stat == inv, "statistic " + std::to_string(stat) + " != inversions " +
                             std::to_string(inv) + " for " + io::to_json(full).dump());
    MultiTableau back = r.mode == Mode::symmetric ? psi_inverse(rc, sizes)
                                                  : psi_prime_inverse(rc, sizes);
    require(back == full, "inverse does not recover " + io::to_json(full).dump());
    DeltaReport delta = delta_check(full, r.mode);
    require(delta.ok, "delta check: " + delta.detail);
    require(images.insert(io::to_json(rc).dump()).second,
            "two tableaux map to " + io::to_json(rc).dump());
    via_bijection += QPolynomial::monomial(static_cast<int>(stat));
  });
  std::size_t enumerated = 0;
  for_each_configuration(r.lambda, r.mu, r.n, r.mode, [&](const Configuration& c) {
    for_each_rigging(c, [&](const RiggedConfiguration& rc) {
      ++enumerated;
      require(images.count(io::to_json(rc).dump()) == 1,
              "rigged configuration not in the image: " + io::to_json(rc).dump());
    });
  });
  require(enumerated == images.size(), "image has " + std::to_string(images.size()) +
                                           " elements, expected " +
                                           std::to_string(enumerated));
  r.polynomials["bijection"] = via_bijection;
}

void check_ribbon(InstanceResult& r, const MultiPartition& shape) {
  int L = shape.components();
  Partition outer = quot_inverse(shape, L);
  SkewShape skew(outer);
  QPolynomial via_cospin;
  std::optional<int> max_spin;
  for_each_ribbon_tableau(skew, r.lambda, L, [&](const RibbonTableau& t) {
    if (!max_spin)
      max_spin = maxspin(skew, L);
    int co = cospin(t, *max_spin);
    int inv = inversions(stanton_white(t));
    require(co == inv, "cospin " + std::to_string(co) + " != inversions " +
                           std::to_string(inv) + " for " + io::to_json(t).dump());
    via_cospin += QPolynomial::monomial(co);
  });
  r.polynomials["ribbon"] = via_cospin;
}

void observe_component_order(InstanceResult& r, const QPolynomial& reference) {
  std::vector<int> sizes = r.mu.parts();
  std::sort(sizes.begin(), sizes.end());
  bool invariant = true;
  do {
    MultiPartition shape = component_shape(sizes, r.mode);
    if (inv_generating_function(shape, r.lambda) != reference)
      invariant = false;
  } while (invariant && std::next_permutation(sizes.begin(), sizes.end()));
  r.observations["inv_component_order_invariant"] = invariant;
}

} // namespace

InstanceResult verify_instance(InstanceResult r, const std::set<std::string>& enabled) {
  auto on = [&](const std::string& name) { return enabled.count(name) > 0; };
  Composition sorted = r.lambda;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  MultiPartition shape = component_shape(r.mu.parts(), r.mode);
  try {
    r.polynomials["formula"] = supernomial(sorted, r.mu, r.n, r.mode);
    if (on(checks::formula_rc)) {
      r.polynomials["rc"] = supernomial_via_rc(sorted, r.mu, r.n, r.mode);
      require_equal(r, "formula", "rc");
    }
    QPolynomial unsorted_formula = supernomial(r.lambda, r.mu, r.n, r.mode);
    r.observations["formula_content_symmetric"] = unsorted_formula == r.polynomials["formula"];

    bool need_multitab =
        on(checks::rc_multitab) || on(checks::bijection) || on(checks::multitab_ribbon);
    if (need_multitab)
      r.polynomials["multitab"] = inv_generating_function(shape, r.lambda);
    if (on(checks::rc_multitab)) {
      r.polynomials["rc_content_order"] = supernomial_via_rc(r.lambda, r.mu, r.n, r.mode);
      require_equal(r, "rc_content_order", "multitab");
      observe_component_order(r, r.polynomials["multitab"]);
    }
    if (on(checks::bijection)) {
      check_bijection(r, shape);
      require_equal(r, "bijection", "multitab");
    }
    if (on(checks::multitab_ribbon)) {
      check_ribbon(r, shape);
      require_equal(r, "ribbon", "multitab");
    }
    if (on(checks::oracle)) {
      BigInt paths = path_count_oracle(r.lambda, r.mu.parts(), r.n, r.mode);
      BigInt total = evaluate_at_one(r.polynomials["formula"]);
      require(paths == total, "oracle " + paths.get_str() + " != formula at q=1 " +
                                  total.get_str());
    }
  } catch (const Mismatch& m) {
    r.pass = false;
    r.detail = m.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

VerificationReport verify_sweep(const SweepSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.instances = sweep_instances(spec);
  const long count = static_cast<long>(report.instances.size());
  if (spec.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k)
      report.instances[k] = verify_instance(std::move(report.instances[k]), spec.enabled);
  } else {
    for (long k = 0; k < count; ++k)
      report.instances[k] = verify_instance(std::move(report.instances[k]), spec.enabled);
  }
  for (const auto& r : report.instances) {
    (r.pass ? report.passed : report.failed) += 1;
    for (const auto& [name, held] : r.observations) {
      auto& tally = report.observations[name];
      (held ? tally.first : tally.second) += 1;
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_json_lines(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.instances) {
    io::Json polys = io::Json::object();
    for (const auto& [name, p] : r.polynomials)
      polys[name] = io::to_json(p);
    io::Json line{{"lambda", r.lambda},
                  {"mu", io::to_json(r.mu)},
                  {"n", r.n},
                  {"mode", to_string(r.mode)},
                  {"pass", r.pass},
                  {"polynomials", polys},
                  {"observations", r.observations}};
    if (!r.pass)
      line["detail"] = r.detail;
    out << line.dump() << "\n";
  }
  io::Json observations = io::Json::object();
  for (const auto& [name, tally] : report.observations)
    observations[name] = {{"held", tally.first}, {"failed", tally.second}};
  io::Json summary{{"summary", true},
                   {"instances", report.instances.size()},
                   {"passed", report.passed},
                   {"failed", report.failed},
                   {"observations", observations}};
  out << summary.dump() << "\n";
  return out.str();
}

std::string report_summary(const VerificationReport& report) {
  std::ostringstream out;
  out << report.instances.size() << " instances, " << report.passed << " passed, "
      << report.failed << " failed\n";
  for (const auto& [name, tally] : report.observations)
    out << "  " << name << ": held in " << tally.first << ", failed in " << tally.second
        << "\n";
  for (const auto& r : report.instances)
    if (!r.pass) {
      io::Json lambda = r.lambda;
      out << "  FAIL lambda=" << lambda.dump() << " mu=" << r.mu.str() << " n=" << r.n
          << " mode=" << to_string(r.mode) << ": " << r.detail << "\n";
    }
  return out.str();
}

} // namespace supernomial
