#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodal/prime_field.hpp"
#include "nodal/upoly.hpp"

namespace nodal {

/// F_{p^m} = F_p[t] / (modulus) with a monic irreducible modulus of degree m.
/// Elements are coefficient vectors of length m (low degree first), always
/// reduced modulo the modulus.
class ExtensionField {
 public:
  using Element = std::vector<std::uint64_t>;

  ExtensionField(PrimeField base, std::vector<std::uint64_t> modulus)
      : base_(base), modulus_(std::move(modulus)) {
    upoly::trim(base_, modulus_);
    if (modulus_.size() < 2 || modulus_.back() != 1) {
      throw Error(ErrorKind::InvalidArgument, "extension modulus must be monic of degree >= 1");
    }
    if (!upoly::is_irreducible(base_, modulus_)) {
      throw Error(ErrorKind::InvalidArgument, "extension modulus is reducible over " + base_.describe());
    }
  }

  /// Deterministic choice of a random monic irreducible modulus of degree m.
  static ExtensionField from_seed(PrimeField base, int m, Rng& rng) {
    while (true) {
      std::vector<std::uint64_t> f(static_cast<std::size_t>(m) + 1);
      for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(i)] = base.random(rng);
      f.back() = 1;
      if (upoly::is_irreducible(base, f)) return ExtensionField(base, f);
    }
  }

  const PrimeField& base() const { return base_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  std::uint64_t characteristic() const { return base_.characteristic(); }

  Element zero() const { return Element(static_cast<std::size_t>(degree()), 0); }
  Element one() const { return embed(1); }
  Element embed(std::uint64_t c) const {
    Element e = zero();
    e[0] = base_.canonical(c);
    return e;
  }
  Element from_int(std::int64_t v) const { return embed(base_.from_int(v)); }
  Element from_mpz(const mpz_class& v) const { return embed(base_.from_mpz(v)); }
  /// The class of t, a root of the modulus.
  Element generator() const {
    if (degree() == 1) return embed(base_.neg(modulus_[0]));
    Element e = zero();
    e[1] = 1;
    return e;
  }
  /// Element with the given (possibly unreduced) coefficient vector.
  Element from_coeffs(const std::vector<std::uint64_t>& c) const {
    auto r = upoly::mod(base_, c, modulus_);
    return pad(r);
  }

  Element add(const Element& a, const Element& b) const {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Element neg(const Element& a) const {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  Element mul(const Element& a, const Element& b) const {
    const std::size_t m = a.size();
    if (m == 1) return Element{base_.mul(a[0], b[0])};
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    // Reduce using the monic modulus from the top down.
    for (std::size_t k = prod.size(); k-- > m;) {
      const auto c = prod[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j < m; ++j) prod[k - m + j] = base_.sub(prod[k - m + j], base_.mul(c, modulus_[j]));
    }
    prod.resize(m);
    return prod;
  }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in " + describe());
    std::vector<std::uint64_t> c = a;
    upoly::trim(base_, c);
    return pad(upoly::inverse_mod(base_, c, modulus_));
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    Element r = one();
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      e >>= 1U;
      if (e > 0) a = mul(a, a);
    }
    return r;
  }
  Element frobenius(const Element& a) const { return pow(a, characteristic()); }

  bool is_zero(const Element& a) const {
    for (auto c : a)
      if (c != 0) return false;
    return true;
  }
  bool is_one(const Element& a) const { return a == one(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element canonical(const Element& a) const { return from_coeffs(a); }

  Element random(Rng& rng) const {
    Element e = zero();
    for (auto& c : e) c = base_.random(rng);
    return e;
  }
  Element random_nonzero(Rng& rng) const {
    Element e;
    do {
      e = random(rng);
    } while (is_zero(e));
    return e;
  }

  std::string format(const Element& a) const {
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0 || a[i] != 1) out += std::to_string(a[i]);
      if (i > 0) {
        if (a[i] != 1) out += "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }
  std::string describe() const {
    std::string m;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (!m.empty()) m += ",";
      m += std::to_string(modulus_[i]);
    }
    return "Fq " + std::to_string(characteristic()) + "^" + std::to_string(degree()) + " [" + m + "]";
  }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const ExtensionField& a, const ExtensionField& b) { return !(a == b); }

 private:
  Element pad(std::vector<std::uint64_t> c) const {
    c.resize(static_cast<std::size_t>(degree()), 0);
    return c;
  }

  PrimeField base_;
  std::vector<std::uint64_t> modulus_;
};

}  // namespace nodal
