#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "nodal/error.hpp"
#include "nodal/rng.hpp"

namespace nodal {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the fixed witness set is exact for all 64-bit n.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The prime field F_p, p < 2^63. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 63U) || !is_prime(p)) {
      throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not a prime below 2^63");
    }
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<Element>(r);
  }

  Element from_mpz(const mpz_class& v) const {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
    return static_cast<Element>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_)));
  }

  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return detail::mulmod(a, b, p_); }
  Element pow(Element a, std::uint64_t e) const { return detail::powmod(a, e, p_); }

  Element inv(Element a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
      const __int128 q = r / new_r;
      const __int128 tmp_t = t - q * new_t;
      t = new_t;
      new_t = tmp_t;
      const __int128 tmp_r = r - q * new_r;
      r = new_r;
      new_r = tmp_r;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element canonical(Element a) const { return a % p_; }

  Element random(Rng& rng) const { return rng.below(p_); }
  Element random_nonzero(Rng& rng) const { return 1 + rng.below(p_ - 1); }

  std::string format(Element a) const { return std::to_string(a); }
  std::string describe() const { return "Fp " + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

 private:
  std::uint64_t p_;
};

}  // namespace nodal
