#include "supernomial/parallel.hpp"

#include "supernomial/ribbon.hpp"
#include "supernomial/rigged.hpp"

#include <omp.h>

#include <optional>

namespace supernomial::parallel {

namespace {

template <typename Item, typename Term>
QPolynomial parallel_sum(const std::vector<Item>& items, Term term) {
  std::vector<QPolynomial> partial(omp_get_max_threads());
  const long count = static_cast<long>(items.size());
#pragma omp parallel
  {
    QPolynomial& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic)
    for (long k = 0; k < count; ++k)
      mine += term(items[k]);
  }
  QPolynomial total;
  for (const auto& p : partial)
    total += p;
  return total;
}

} // namespace

int max_threads() { return omp_get_max_threads(); }

QPolynomial supernomial(const Composition& lambda, const Partition& mu, int n, Mode mode) {
  return parallel_sum(enumerate_configurations(lambda, mu, n, mode),
                      [](const Configuration& c) { return formula_term(c); });
}

QPolynomial supernomial_via_rc(const Composition& lambda, const Partition& mu, int n,
                               Mode mode) {
  return parallel_sum(enumerate_configurations(lambda, mu, n, mode),
                      [](const Configuration& c) { return rigging_gf(c); });
}

QPolynomial inv_generating_function(const MultiPartition& shape, const Composition& weight) {
  return parallel_sum(enumerate_multitableaux(shape, weight), [](const MultiTableau& t) {
    return QPolynomial::monomial(inversions(t));
  });
}

QPolynomial cospin_gf(const SkewShape& shape, const Composition& weight, int L) {
  auto tableaux = enumerate_ribbon_tableaux(shape, weight, L);
  if (tableaux.empty())
    return {};
  int max_spin = maxspin(shape, L);
  return parallel_sum(tableaux, [&](const RibbonTableau& t) {
    return QPolynomial::monomial(cospin(t, max_spin));
  });
}

} // namespace supernomial::parallel
