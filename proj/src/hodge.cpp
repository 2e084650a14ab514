#include "nodal/hodge.hpp"

#include <string>

#include "nodal/error.hpp"

namespace nodal {

std::vector<mpz_class> elementary_symmetric(const std::vector<int>& degrees) {
  // e[k] after processing a prefix of the degrees.
  std::vector<mpz_class> e(degrees.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t k = i + 1; k > 0; --k) e[k] += e[k - 1] * degrees[i];
  return {e.begin() + 1, e.end()};
}

bool is_calabi_yau_tuple(const std::vector<int>& degrees) {
  long sum = 0;
  for (int d : degrees) sum += d;
  return !degrees.empty() && sum == static_cast<long>(degrees.size()) + 4;
}

long smooth_h12(const std::vector<int>& degrees) {
  if (degrees.empty()) throw Error(ErrorKind::InvalidArgument, "no degrees given");
  for (int d : degrees)
    if (d <= 0) throw Error(ErrorKind::InvalidArgument, "degrees must be positive");
  const long r = static_cast<long>(degrees.size());
  const auto sigma = elementary_symmetric(degrees);
  const mpq_class s1 = sigma[0];
  const mpq_class s2 = r >= 2 ? mpq_class(sigma[1]) : mpq_class(0);
  const mpq_class s3 = r >= 3 ? mpq_class(sigma[2]) : mpq_class(0);
  const mpq_class sr = sigma[static_cast<std::size_t>(r - 1)];
  const mpq_class n = r + 4;

  mpq_class bracket = mpq_class(11, 24) * s1 * s1 * s1 - mpq_class(5, 12) * n * s1 * s1 +
                            (n * (9 * r + 25) / 48 - mpq_class(11, 12) * s2) * s1 + mpq_class(5, 12) * n * s2 +
                            mpq_class(1, 2) * s3 - mpq_class((3 * r + 4) * (r + 4) * (r + 3), 48);
  bracket.canonicalize();
  mpq_class value = bracket * sr + 1;
  value.canonicalize();
  if (value.get_den() != 1) {
    throw Error(ErrorKind::NonIntegralResult, "smooth h12 evaluates to " + value.get_str());
  }
  return value.get_num().get_si();
}

HodgeNumbers resolution_hodge(long smooth, long mu, long delta) {
  if (delta < 0 || delta > mu) {
    throw Error(ErrorKind::NegativeHodgeNumber,
                "defect " + std::to_string(delta) + " outside [0, " + std::to_string(mu) + "]");
  }
  const long h12 = smooth - mu + delta;
  if (h12 < 0) throw Error(ErrorKind::NegativeHodgeNumber, "h12 = " + std::to_string(h12));
  return {1 + delta, h12};
}

HodgeReport hodge_report(const std::vector<int>& degrees, long mu, long delta) {
  HodgeReport rep;
  rep.degrees = degrees;
  rep.sigma = elementary_symmetric(degrees);
  rep.smooth_h12 = smooth_h12(degrees);
  const auto h = resolution_hodge(rep.smooth_h12, mu, delta);
  rep.h11_resolution = h.h11;
  rep.h12_resolution = h.h12;
  return rep;
}

}  // namespace nodal
