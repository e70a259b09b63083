#pragma once

#include "supernomial/mode.hpp"
#include "supernomial/qpoly.hpp"

#include <vector>

namespace supernomial {

// Coefficient of x^lambda in h_{mu_1} h_{mu_2} ... (symmetric) or
// e_{mu_1} e_{mu_2} ... (antisymmetric) in n variables, by dynamic
// programming over content vectors. Deliberately self-contained: it uses no
// tableau, ribbon or rigged-configuration code.
BigInt path_count_oracle(const std::vector<int>& lambda, const std::vector<int>& mu, int n,
                         Mode mode);

} // namespace supernomial
