#pragma once

// Dense univariate polynomials over an exact field, stored low degree first.
// Used for extension-field arithmetic, minimal polynomials and root finding.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "nodal/error.hpp"
#include "nodal/prime_field.hpp"
#include "nodal/rng.hpp"

namespace nodal::upoly {

template <class F>
using Coeffs = std::vector<typename F::Element>;

template <class F>
void trim(const F& field, Coeffs<F>& a) {
  while (!a.empty() && field.is_zero(a.back())) a.pop_back();
}

/// Degree, with -1 for the zero polynomial.
template <class F>
int degree(const Coeffs<F>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class F>
Coeffs<F> add(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  Coeffs<F> r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = field.add(r[i], b[i]);
  trim(field, r);
  return r;
}

template <class F>
Coeffs<F> sub(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  Coeffs<F> r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = field.sub(r[i], b[i]);
  trim(field, r);
  return r;
}

template <class F>
Coeffs<F> scale(const F& field, const Coeffs<F>& a, const typename F::Element& c) {
  Coeffs<F> r;
  if (field.is_zero(c)) return r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(field.mul(x, c));
  trim(field, r);
  return r;
}

template <class F>
Coeffs<F> mul(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs<F> r(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
  }
  trim(field, r);
  return r;
}

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Coeffs<F>, Coeffs<F>> divmod(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "univariate division by zero polynomial");
  Coeffs<F> rem = a;
  trim(field, rem);
  if (rem.size() < b.size()) return {{}, rem};
  Coeffs<F> quo(rem.size() - b.size() + 1, field.zero());
  const auto lead_inv = field.inv(b.back());
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    const auto c = field.mul(rem[k], lead_inv);
    quo[k - (b.size() - 1)] = c;
    if (field.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t idx = k - (b.size() - 1) + j;
      rem[idx] = field.sub(rem[idx], field.mul(c, b[j]));
    }
  }
  rem.resize(b.size() - 1);
  trim(field, rem);
  trim(field, quo);
  return {quo, rem};
}

template <class F>
Coeffs<F> mod(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  return divmod(field, a, b).second;
}

template <class F>
Coeffs<F> monic(const F& field, const Coeffs<F>& a) {
  if (a.empty()) return a;
  return scale(field, a, field.inv(a.back()));
}

template <class F>
Coeffs<F> gcd(const F& field, Coeffs<F> a, Coeffs<F> b) {
  trim(field, a);
  trim(field, b);
  while (!b.empty()) {
    auto r = mod(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(field, a);
}

/// Inverse of a modulo m (gcd(a, m) must be 1).
template <class F>
Coeffs<F> inverse_mod(const F& field, const Coeffs<F>& a, const Coeffs<F>& m) {
  Coeffs<F> r0 = m, r1 = mod(field, a, m);
  Coeffs<F> t0, t1{field.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(field, r0, r1);
    auto t = sub(field, t0, mul(field, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.size() != 1) throw Error(ErrorKind::DivisionByZero, "element is not invertible modulo the polynomial");
  return mod(field, scale(field, t0, field.inv(r0[0])), m);
}

template <class F>
Coeffs<F> mulmod(const F& field, const Coeffs<F>& a, const Coeffs<F>& b, const Coeffs<F>& m) {
  return mod(field, mul(field, a, b), m);
}

template <class F>
Coeffs<F> powmod(const F& field, Coeffs<F> base, std::uint64_t exp, const Coeffs<F>& m) {
  Coeffs<F> result = mod(field, Coeffs<F>{field.one()}, m);
  base = mod(field, base, m);
  while (exp > 0) {
    if (exp & 1U) result = mulmod(field, result, base, m);
    exp >>= 1U;
    if (exp > 0) base = mulmod(field, base, base, m);
  }
  return result;
}

template <class F>
Coeffs<F> derivative(const F& field, const Coeffs<F>& a) {
  Coeffs<F> r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(field.mul(field.from_int(static_cast<std::int64_t>(i)), a[i]));
  trim(field, r);
  return r;
}

template <class F>
typename F::Element evaluate(const F& field, const Coeffs<F>& a, const typename F::Element& x) {
  auto acc = field.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = field.add(field.mul(acc, x), a[i]);
  return acc;
}

template <class F>
bool is_squarefree(const F& field, const Coeffs<F>& a) {
  if (a.size() <= 2) return true;
  const auto d = derivative(field, a);
  if (d.empty()) return false;
  return gcd(field, a, d).size() == 1;
}

// ---- Finite-field specific routines (F = PrimeField) ----

/// x^(p^k) mod f, by k successive Frobenius powerings of x.
inline Coeffs<PrimeField> frobenius_power_of_x(const PrimeField& field, const Coeffs<PrimeField>& f, unsigned k) {
  Coeffs<PrimeField> x = mod(field, Coeffs<PrimeField>{0, 1}, f);
  for (unsigned i = 0; i < k; ++i) x = powmod(field, x, field.characteristic(), f);
  return x;
}

/// Rabin-style irreducibility test for a monic polynomial of degree >= 1.
inline bool is_irreducible(const PrimeField& field, const Coeffs<PrimeField>& f) {
  const int n = degree<PrimeField>(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Coeffs<PrimeField> x{0, 1};
  Coeffs<PrimeField> h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(field, h, field.characteristic(), f);
    if (gcd(field, f, sub(field, h, x)).size() != 1) return false;
  }
  return true;
}

/// Distinct-degree factorization of a monic squarefree polynomial. Returns
/// (product of all irreducible factors of degree d, d) pairs.
inline std::vector<std::pair<Coeffs<PrimeField>, int>> distinct_degree_factorization(const PrimeField& field,
                                                                                    Coeffs<PrimeField> f) {
  std::vector<std::pair<Coeffs<PrimeField>, int>> out;
  const Coeffs<PrimeField> x{0, 1};
  Coeffs<PrimeField> h = mod(field, x, f);
  int d = 0;
  while (degree<PrimeField>(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod(field, h, field.characteristic(), f);
    auto g = gcd(field, f, sub(field, h, x));
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divmod(field, f, g).first;
      h = mod(field, h, f);
    }
  }
  if (degree<PrimeField>(f) >= 1) out.emplace_back(monic(field, f), degree<PrimeField>(f));
  return out;
}

/// Cantor-Zassenhaus splitting of a monic squarefree product of irreducibles
/// of common degree d. Requires odd characteristic.
inline std::vector<Coeffs<PrimeField>> equal_degree_factorization(const PrimeField& field, const Coeffs<PrimeField>& f,
                                                                   int d, Rng& rng) {
  const int n = degree<PrimeField>(f);
  if (n == d) return {f};
  if (field.characteristic() == 2) {
    throw Error(ErrorKind::BadCharacteristic, "equal-degree splitting is implemented for odd characteristic only");
  }
  while (true) {
    Coeffs<PrimeField> a(static_cast<std::size_t>(n));
    for (auto& c : a) c = field.random(rng);
    trim(field, a);
    if (degree<PrimeField>(a) < 1) continue;
    // b = a * a^p * ... * a^(p^(d-1)) is the norm down to F_p; then b^((p-1)/2).
    Coeffs<PrimeField> b = mod(field, a, f);
    Coeffs<PrimeField> conj = b;
    for (int i = 1; i < d; ++i) {
      conj = powmod(field, conj, field.characteristic(), f);
      b = mulmod(field, b, conj, f);
    }
    b = powmod(field, b, (field.characteristic() - 1) / 2, f);
    auto g = gcd(field, f, sub(field, b, Coeffs<PrimeField>{1}));
    const int dg = degree<PrimeField>(g);
    if (dg > 0 && dg < n) {
      auto left = equal_degree_factorization(field, g, d, rng);
      auto right = equal_degree_factorization(field, divmod(field, f, g).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// Monic irreducible factors of a squarefree polynomial, sorted by
/// (degree, coefficients) for determinism.
inline std::vector<Coeffs<PrimeField>> factor_squarefree(const PrimeField& field, const Coeffs<PrimeField>& f,
                                                          Rng& rng) {
  std::vector<Coeffs<PrimeField>> factors;
  for (auto& [product, d] : distinct_degree_factorization(field, monic(field, f))) {
    auto parts = equal_degree_factorization(field, product, d, rng);
    for (auto& q : parts) factors.push_back(monic(field, q));
  }
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return factors;
}

}  // namespace nodal::upoly
