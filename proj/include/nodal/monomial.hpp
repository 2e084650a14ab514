#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nodal/error.hpp"

namespace nodal {

/// Upper bound on ring variables. Desk-scale systems use at most 10 plus a
/// few auxiliary variables for elimination.
inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 255;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  explicit Monomial(const std::vector<int>& exps) {
    exps_.fill(0);
    if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
      throw Error(ErrorKind::CapacityExceeded, "too many variables for a monomial");
    }
    for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
  }

  static Monomial variable(int i, int e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int degree() const { return degree_; }

  void set(int i, int e) {
    if (e < 0 || e > kMaxExponent) throw Error(ErrorKind::CapacityExceeded, "exponent out of range");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[static_cast<std::size_t>(i)] + e);
    exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }

  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      const int e = exps_[i] + o.exps_[i];
      if (e > kMaxExponent) throw Error(ErrorKind::CapacityExceeded, "exponent overflow in monomial product");
      r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
    return r;
  }

  /// Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      d += r.exps_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = std::min(exps_[i], o.exps_[i]);
      d += r.exps_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    return r;
  }

  /// Bit i set when variable i occurs.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] != 0) m |= (1U << static_cast<unsigned>(i));
    return m;
  }

  std::vector<int> exponents(int n_vars) const {
    std::vector<int> v(static_cast<std::size_t>(n_vars));
    for (int i = 0; i < n_vars; ++i) v[static_cast<std::size_t>(i)] = exps_[static_cast<std::size_t>(i)];
    return v;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. Block(k) compares the first k variables by grevlex, and
/// breaks ties with grevlex on the rest; it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block(int first_block_size) { return MonomialOrder(Kind::Block, first_block_size); }

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b, int n_vars) const {
    switch (kind_) {
      case Kind::Grevlex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (int i = n_vars - 1; i >= 0; --i)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      case Kind::Lex:
        for (int i = 0; i < n_vars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::Block: {
        const int c = grevlex_range(a, b, 0, block_);
        if (c != 0) return c;
        return grevlex_range(a, b, block_, n_vars);
      }
    }
    return 0;
  }

  bool is_degree_compatible() const { return kind_ == Kind::Grevlex; }

  std::string describe() const {
    switch (kind_) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  int block_;
};

}  // namespace nodal
