// Times the serial kernels against their OpenMP counterparts and runs a
// verification sweep in both configurations.

#include "supernomial/parallel.hpp"
#include "supernomial/ribbon.hpp"
#include "supernomial/rigged.hpp"
#include "supernomial/sweep.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

namespace {

using namespace supernomial;

double seconds(const std::function<void()>& work) {
  auto start = std::chrono::steady_clock::now();
  work();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void compare(const std::string& name, const std::function<QPolynomial()>& serial,
             const std::function<QPolynomial()>& threaded) {
  QPolynomial a, b;
  double ts = seconds([&] { a = serial(); });
  double tp = seconds([&] { b = threaded(); });
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << ts << "s" << std::setw(10) << tp
            << "s" << (a == b ? "" : "   MISMATCH") << "\n";
}

} // namespace

int main() {
  std::cout << "threads: " << parallel::max_threads() << "\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(11)
            << "serial" << std::setw(11) << "parallel" << "\n";

  Composition lambda{3, 3, 2, 2};
  Partition mu{4, 3, 2, 1};
  compare("formula sym", [&] { return supernomial::supernomial(lambda, mu, 4, Mode::symmetric); },
          [&] { return parallel::supernomial(lambda, mu, 4, Mode::symmetric); });
  compare("rigged sym", [&] { return supernomial_via_rc(lambda, mu, 4, Mode::symmetric); },
          [&] { return parallel::supernomial_via_rc(lambda, mu, 4, Mode::symmetric); });
  compare("rigged anti",
          [&] { return supernomial_via_rc(lambda, mu, 4, Mode::antisymmetric); },
          [&] { return parallel::supernomial_via_rc(lambda, mu, 4, Mode::antisymmetric); });

  MultiPartition shape{{Partition{3}, Partition{2}, Partition{2}}};
  Composition weight{2, 2, 2, 1};
  compare("multitableau inversions", [&] { return inv_generating_function(shape, weight); },
          [&] { return parallel::inv_generating_function(shape, weight); });
  SkewShape ribbons(quot_inverse(shape, 3));
  compare("ribbon cospin", [&] { return cospin_gf(ribbons, weight, 3); },
          [&] { return parallel::cospin_gf(ribbons, weight, 3); });

  SweepSpec spec;
  spec.max_total_size = 5;
  spec.max_alphabet = 3;
  for (bool threaded : {false, true}) {
    spec.parallel = threaded;
    VerificationReport report = verify_sweep(spec);
    std::cout << "sweep " << (threaded ? "parallel" : "serial  ") << "  "
              << report.instances.size() << " instances, " << report.failed << " failed, "
              << std::fixed << std::setprecision(3) << report.seconds << "s\n";
  }
}
