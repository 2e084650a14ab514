#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "nodal/error.hpp"
#include "nodal/rng.hpp"

namespace nodal {

/// The rationals, backed by GMP. Elements are kept canonical (reduced, positive
/// denominator).
class RationalField {
 public:
  using Element = mpq_class;

  explicit RationalField(std::int64_t random_bound = 20) : random_bound_(random_bound) {}

  std::uint64_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in Q");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e > 0) {
      if (e & 1U) r *= a;
      e >>= 1U;
      if (e > 0) a *= a;
    }
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element canonical(Element a) const {
    a.canonicalize();
    return a;
  }

  /// Small integer in [-bound, bound].
  Element random(Rng& rng) const { return Element(static_cast<long>(rng.in_range(-random_bound_, random_bound_))); }
  Element random_nonzero(Rng& rng) const {
    Element e;
    do {
      e = random(rng);
    } while (sgn(e) == 0);
    return e;
  }

  std::int64_t random_bound() const { return random_bound_; }

  std::string format(const Element& a) const { return a.get_str(); }
  std::string describe() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
  friend bool operator!=(const RationalField&, const RationalField&) { return false; }

 private:
  std::int64_t random_bound_;
};

}  // namespace nodal
