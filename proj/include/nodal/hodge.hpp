#pragma once

#include <vector>

#include <gmpxx.h>

namespace nodal {

/// Elementary symmetric functions sigma_1..sigma_r of the degrees.
std::vector<mpz_class> elementary_symmetric(const std::vector<int>& degrees);

/// Whether the degrees sum to r + 4, the Calabi-Yau case the closed form
/// below is valid for.
bool is_calabi_yau_tuple(const std::vector<int>& degrees);

/// h^{1,2} of a smooth complete intersection threefold of the given degrees
/// in P^{r+3}. Throws NonIntegralResult if the closed form is not integral.
long smooth_h12(const std::vector<int>& degrees);

struct HodgeNumbers {
  long h11 = 0;
  long h12 = 0;
};

/// Hodge numbers of a small resolution of a nodal model with mu nodes and
/// defect delta. Throws NegativeHodgeNumber on inconsistent input.
HodgeNumbers resolution_hodge(long smooth_h12, long mu, long delta);

struct HodgeReport {
  std::vector<int> degrees;
  std::vector<mpz_class> sigma;
  long smooth_h12 = 0;
  long h11_resolution = 0;
  long h12_resolution = 0;
};

HodgeReport hodge_report(const std::vector<int>& degrees, long mu, long delta);

}  // namespace nodal
