// Prints chi_m for the first members of Sigma(m, m+1, 2m+1, 4m+3) and the
// mean Euler characteristic of each self connected sum.

#include <iostream>

#include "brieskorn.hpp"

int main() {
  using namespace brieskorn;
  for (int m = 4; m <= 12; ++m) {
    const ExponentTuple a = sigma_m_tuple(m);
    const MeanEulerReport r = mean_euler(a);
    const BigRational self[] = {*r.value, *r.value};
    std::cout << "m=" << m << "  " << a << "  chi_m=" << *r.value
              << "  chi_m(a # a)=" << connected_sum_chi(self, 3) << "\n";
  }
}
