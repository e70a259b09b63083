// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include "supernomial/bijection.hpp"
#include "supernomial/oracle.hpp"
#include "supernomial/ribbon.hpp"
#include "supernomial/rigged.hpp"
#include "worked_examples.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace supernomial;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks still run.
class Checker {
public:
  void expect(bool condition, const std::string& what) {
    ++checks_;
    if (!condition && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  long checks() const { return checks_; }
  Outcome outcome() const { return outcome_; }

private:
  Outcome outcome_;
  long checks_ = 0;
};

std::string str(const QPolynomial& p) { return p.dense(); }

void golden_symmetric(Checker& c) {
  const QPolynomial golden{1, 2, 4, 3, 1};
  Composition lambda{2, 2, 1};
  Partition mu{2, 2, 1};
  QPolynomial formula = supernomial_sym(lambda, mu, 3);
  QPolynomial rc = supernomial_via_rc(lambda, mu, 3, Mode::symmetric);
  MultiPartition rows = row_multipartition({2, 2, 1});
  QPolynomial multitab = inv_generating_function(rows, lambda);
  QPolynomial ribbon = cospin_gf(SkewShape(quot_inverse(rows, 3)), lambda, 3);
  c.expect(formula == golden, "formula " + str(formula));
  c.expect(rc == golden, "rigged configurations " + str(rc));
  c.expect(multitab == golden, "multitableaux " + str(multitab));
  c.expect(ribbon == golden, "ribbon tableaux " + str(ribbon));
}

void golden_antisymmetric(Checker& c) {
  const QPolynomial golden{2, 2, 1};
  Composition lambda{2, 2, 1};
  Partition mu{2, 2, 1};
  QPolynomial formula = supernomial_anti(lambda, mu, 3);
  QPolynomial rc = supernomial_via_rc(lambda, mu, 3, Mode::antisymmetric);
  QPolynomial multitab = inv_generating_function(column_multipartition({2, 2, 1}), lambda);
  c.expect(formula == golden, "formula " + str(formula));
  c.expect(rc == golden, "rigged configurations " + str(rc));
  c.expect(multitab == golden, "multitableaux " + str(multitab));
}

void golden_ribbon(Checker& c) {
  RibbonTableau t = examples::ribbon_tableau();
  for (const auto& [cell, letter] : examples::ribbon_letters())
    c.expect(examples::letter_at(t, cell) == letter, "ribbon letters differ from the picture");
  c.expect(t.spin() == 14, "spin " + std::to_string(t.spin()));
  int top = maxspin(t.shape(), 3);
  c.expect(top == 16, "maxspin " + std::to_string(top));
  c.expect(cospin(t, top) == 1, "cospin " + std::to_string(cospin(t, top)));
  c.expect(quot(t.shape().outer(), 3) ==
               MultiPartition({Partition{1, 1}, Partition{2, 2}, Partition{2, 1}}),
           "quotient shape " + quot(t.shape().outer(), 3).str());
  MultiTableau q = stanton_white(t);
  c.expect(q == examples::ribbon_quotient(), "Stanton-White image");
  RibbonTableau st = standardize_ribbon(t);
  for (const auto& [cell, letter] : examples::ribbon_letters_standardized())
    c.expect(examples::letter_at(st, cell) == letter, "ribbon standardization");
  c.expect(standardize(q).fillings() == examples::ribbon_quotient_standardized(),
           "multitableau standardization");
  c.expect(stanton_white(st) == standardize(q), "standardization commutes with quot");
  c.expect(inversions(q) == 1, "inversions " + std::to_string(inversions(q)));
}

void check_stages(Checker& c, const BijectionTrace& trace,
                  const std::vector<examples::Snapshot>& figure,
                  const std::vector<int>& letters) {
  c.expect(trace.stages.size() == figure.size(),
           "trace has " + std::to_string(trace.stages.size()) + " stages");
  for (std::size_t k = 0; k < std::min(trace.stages.size(), figure.size()); ++k) {
    c.expect(trace.stages[k].letter == letters[k], "letter of stage " + std::to_string(k + 1));
    c.expect(examples::matches(trace.stages[k].state, figure[k]),
             "stage " + std::to_string(k + 1) + " differs from the figure");
  }
}

void golden_psi(Checker& c) {
  MultiTableau t = examples::row_tableau();
  c.expect(inversions(t) == 3, "inv " + std::to_string(inversions(t)));
  RiggedConfiguration rc = psi(t);
  c.expect(examples::matches(RiggedState(rc), examples::row_image()), "image differs");
  c.expect(statistic_sym(rc) == 3, "statistic " + std::to_string(statistic_sym(rc)));
  check_stages(c, psi_trace(t, Mode::symmetric), examples::row_stages(),
               examples::row_letters());
  c.expect(psi_inverse(rc, {2, 2, 3}) == t, "inverse");
}

void golden_psi_prime(Checker& c) {
  MultiTableau t = examples::column_tableau();
  c.expect(inversions(t) == 2, "inv " + std::to_string(inversions(t)));
  RiggedConfiguration rc = psi_prime(t);
  c.expect(examples::matches(RiggedState(rc), examples::column_image()), "image differs");
  c.expect(statistic_anti(rc) == 2, "statistic " + std::to_string(statistic_anti(rc)));
  check_stages(c, psi_trace(t, Mode::antisymmetric), examples::column_stages(),
               examples::column_letters());
  c.expect(psi_prime_inverse(rc, {2, 1, 3}) == t, "inverse");
}

std::string describe(const MultiTableau& t) {
  std::ostringstream out;
  for (const auto& f : t.fillings()) {
    out << "(";
    for (const auto& row : f)
      for (int v : row)
        out << v;
    out << ")";
  }
  return out.str();
}

// Ordered component sizes: 1 to 3 components, entries >= 0, total 1..max.
std::vector<std::vector<int>> component_size_tuples(int max_total, int max_components) {
  std::vector<std::vector<int>> out;
  for (int total = 1; total <= max_total; ++total)
    for (int L = 1; L <= max_components; ++L)
      for (auto& sizes : compositions(total, L))
        out.push_back(sizes);
  return out;
}

void exhaustive_bijection(Checker& c) {
  for (Mode mode : {Mode::symmetric, Mode::antisymmetric})
    for (const auto& sizes : component_size_tuples(7, 3)) {
      std::vector<int> sorted = sizes;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      Partition mu(sorted);
      int total = mu.size();
      MultiPartition shape = mode == Mode::symmetric ? row_multipartition(sizes)
                                                     : column_multipartition(sizes);
      for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : compositions(total, n)) {
          std::set<RiggedConfiguration::Labels> unused;
          std::set<std::pair<std::vector<Partition>, RiggedConfiguration::Labels>> image;
          bool ok = true;
          for_each_multitableau(shape, lambda, [&](const MultiTableau& filled) {
            MultiTableau t = MultiTableau::from_fillings(filled.fillings(), n);
            RiggedConfiguration rc = psi(t, mode);
            ok &= statistic(rc) == inversions(t);
            ok &= image.insert({rc.config().interior(), rc.labels()}).second;
            MultiTableau back = mode == Mode::symmetric ? psi_inverse(rc, sizes)
                                                        : psi_prime_inverse(rc, sizes);
            ok &= back == t;
            ok &= delta_check(t, mode).ok;
            if (!ok)
              c.expect(false, to_string(mode) + " fails on " + describe(t));
          });
          std::size_t enumerated = 0;
          for_each_configuration(lambda, mu, n, mode, [&](const Configuration& conf) {
            for_each_rigging(conf, [&](const RiggedConfiguration& rc) {
              ++enumerated;
              c.expect(image.count({rc.config().interior(), rc.labels()}) == 1,
                       to_string(mode) + " misses a rigged configuration");
            });
          });
          c.expect(enumerated == image.size(), to_string(mode) + " image size mismatch");
        }
    }
}

void cospin_theorem(Checker& c) {
  for (int L : {2, 3})
    for (int n = 0; n <= 12; n += L)
      for (const auto& mu : partitions_of(n)) {
        if (!core(mu, L).empty())
          continue;
        SkewShape shape(mu);
        int top = n == 0 ? 0 : maxspin(shape, L);
        std::vector<Composition> weights =
            n == 0 ? std::vector<Composition>{{}} : positive_compositions(n / L);
        for (const auto& weight : weights)
          for_each_ribbon_tableau(shape, weight, L, [&](const RibbonTableau& t) {
            int inv = inversions(stanton_white(t));
            int co = cospin(t, top);
            c.expect(co == inv, "L=" + std::to_string(L) + " mu=" + mu.str() + ": cospin " +
                                    std::to_string(co) + " != inv " + std::to_string(inv));
          });
      }
}

void oracle_equivalence(Checker& c) {
  for (int size = 1; size <= 7; ++size)
    for (const auto& mu : partitions_of(size))
      for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : compositions(size, n))
          for (Mode mode : {Mode::symmetric, Mode::antisymmetric}) {
            BigInt formula = evaluate_at_one(supernomial::supernomial(lambda, mu, n, mode));
            BigInt paths = path_count_oracle(lambda, mu.parts(), n, mode);
            c.expect(formula == paths, to_string(mode) + " mu=" + mu.str() + ": " +
                                           formula.get_str() + " != " + paths.get_str());
          }
}

void qbinomial_properties(Checker& c) {
  for (int m = 0; m <= 8; ++m)
    for (int p = 0; p <= 8; ++p) {
      QPolynomial q = qbinomial(m, p);
      c.expect(q == box_partitions_gf(m, p), "box generating function at " +
                                                 std::to_string(m) + "," + std::to_string(p));
      c.expect(q == qbinomial(p, m), "symmetry");
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + p, m);
      c.expect(evaluate_at_one(q) == binom, "q = 1 value");
    }
  const QPolynomial golden{1, 2, 4, 3, 1};
  for (int d = golden.degree(); d <= golden.degree() + 4; ++d)
    c.expect(reverse_with_offset(reverse_with_offset(golden, d), d) == golden, "involution");
  Partition mu{2, 2, 1};
  int d = static_cast<int>(costat_n(mu));
  QPolynomial s = reverse_with_offset(golden, d);
  c.expect(reverse_with_offset(s, d) == golden, "S to S-tilde round trip");
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<void(Checker&)> run;
};

} // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "symmetric golden polynomial, four ways", 1, golden_symmetric},
      {2, "antisymmetric golden polynomial, three ways", 1, golden_antisymmetric},
      {3, "ribbon tableau golden values", 5, golden_ribbon},
      {4, "Psi golden example and trace", 0, golden_psi},
      {5, "Psi' golden example and trace", 0, golden_psi_prime},
      {6, "exhaustive bijectivity, size <= 7, n <= 4, L <= 3", 60, exhaustive_bijection},
      {7, "cospin = inv of the quotient, |mu| <= 12, L in {2,3}", 60, cospin_theorem},
      {8, "oracle equivalence at q = 1, size <= 7, n <= 4", 0, oracle_equivalence},
      {9, "q-binomial and reversal properties", 0, qbinomial_properties},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome outcome = checker.outcome();
    if (criterion.limit_seconds > 0 && seconds > criterion.limit_seconds && outcome.pass) {
      outcome.pass = false;
      outcome.detail = "over the time limit of " + std::to_string(criterion.limit_seconds) + " s";
    }
    failed += !outcome.pass;
    std::printf("%s criterion %d: %s (%ld checks, %.3f s)%s%s\n", outcome.pass ? "PASS" : "FAIL",
                criterion.number, criterion.name, checker.checks(), seconds,
                outcome.pass ? "" : " -- ", outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
