#pragma once

#include "supernomial/mode.hpp"
#include "supernomial/partition.hpp"
#include "supernomial/qpoly.hpp"
#include "supernomial/tableau.hpp"

namespace supernomial::parallel {

// OpenMP versions of the generating-function sums. Objects are enumerated
// serially, their contributions evaluated across threads and summed; results
// are identical to the serial functions.

QPolynomial supernomial(const Composition& lambda, const Partition& mu, int n, Mode mode);
QPolynomial supernomial_via_rc(const Composition& lambda, const Partition& mu, int n,
                               Mode mode);
QPolynomial inv_generating_function(const MultiPartition& shape, const Composition& weight);
QPolynomial cospin_gf(const SkewShape& shape, const Composition& weight, int L);

int max_threads();

} // namespace supernomial::parallel
