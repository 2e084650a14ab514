#pragma once

// Sparse multivariate polynomials over an exact field. A polynomial is a list
// of (monomial, nonzero coefficient) terms sorted in decreasing ring order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nodal/field.hpp"
#include "nodal/monomial.hpp"

namespace nodal {

template <class F>
class Ring {
 public:
  Ring(F field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), names_(std::move(names)), order_(order) {
    if (names_.empty() || names_.size() > static_cast<std::size_t>(kMaxVars)) {
      throw Error(ErrorKind::CapacityExceeded, "ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
    }
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  int n_vars() const { return static_cast<int>(names_.size()); }
  const MonomialOrder& order() const { return order_; }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, n_vars()); }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const {
    return std::make_shared<const Ring>(field_, names_, order);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(names), order);
}

/// Variable names x0, ..., x{n-1}.
inline std::vector<std::string> indexed_names(const std::string& prefix, int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

template <class F>
void check_same_ring(const Ring<F>& a, const Ring<F>& b) {
  if (&a == &b) return;
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, a.field().describe() + " vs " + b.field().describe());
  if (!(a == b)) throw Error(ErrorKind::RingMismatch, "operands live in different polynomial rings");
}

template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial mono;
    Element coeff;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(RingPtr<F> ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial constant(RingPtr<F> ring, Element c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
  }
  static Polynomial from_int(RingPtr<F> ring, std::int64_t c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<F> ring, int i) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(i), ring->field().one()});
    return p;
  }
  static Polynomial term(RingPtr<F> ring, const Monomial& m, Element c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  /// Terms already sorted decreasing, distinct and nonzero.
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coefficient() const { return terms_.front().coeff; }

  /// Total degree, -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field().zero();
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field().neg(t.coeff)});
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_same_ring(*ring_, *o.ring_);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
    if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
    std::unordered_map<Monomial, Element, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    const F& f = field();
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        auto prod = f.mul(a.coeff, b.coeff);
        auto [it, inserted] = acc.try_emplace(a.mono * b.mono, prod);
        if (!inserted) it->second = f.add(it->second, prod);
      }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!f.is_zero(c)) terms.push_back({m, std::move(c)});
    Polynomial r(ring_);
    r.terms_ = std::move(terms);
    r.sort_terms();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Element& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, c)});
    return r;
  }

  /// c * m * this. Term order is preserved by monomial multiplication.
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = from_int(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(field().inv(leading_coefficient()));
  }

  /// Homogeneous component of degree d.
  Polynomial homogeneous_part(int d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
  }

  /// Same terms re-sorted for another ring with identical field and variables.
  Polynomial in_ring(RingPtr<F> other) const {
    if (other->field() != field() || other->n_vars() != ring_->n_vars()) {
      throw Error(ErrorKind::RingMismatch, "in_ring requires matching field and variable count");
    }
    Polynomial r(std::move(other));
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    const F& f = a.field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !f.equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void sort_terms() {
    const Ring<F>& ring = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  }

  void normalize() {
    sort_terms();
    const F& f = field();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = f.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_same_ring(*ring_, *o.ring_);
    const F& f = field();
    const Ring<F>& ring = *ring_;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) {
        c = -1;
      } else if (j == o.terms_.size()) {
        c = 1;
      } else {
        c = ring.compare(terms_[i].mono, o.terms_[j].mono);
      }
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? f.neg(t.coeff) : t.coeff});
      } else {
        auto s = subtract ? f.sub(terms_[i].coeff, o.terms_[j].coeff) : f.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!f.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to variable i.
template <class F>
Polynomial<F> partial_derivative(const Polynomial<F>& f, int i) {
  const auto& field = f.field();
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : f.terms()) {
    const int e = t.mono[i];
    if (e == 0) continue;
    auto c = field.mul(t.coeff, field.from_int(e));
    if (field.is_zero(c)) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    terms.push_back({m, c});
  }
  return Polynomial<F>(f.ring(), std::move(terms));
}

/// Evaluates f, whose coefficients live in F, at a point over a target field T
/// using embed: F::Element -> T::Element.
template <class F, class T, class Embed>
typename T::Element evaluate_in(const Polynomial<F>& f, const T& target, const std::vector<typename T::Element>& point,
                                Embed embed) {
  const int n = f.ring()->n_vars();
  if (static_cast<int>(point.size()) != n) throw Error(ErrorKind::InvalidArgument, "point has wrong length");
  std::vector<std::vector<typename T::Element>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) powers[static_cast<std::size_t>(i)].push_back(target.one());
  auto power = [&](int i, int e) -> const typename T::Element& {
    auto& pw = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(pw.size()) <= e) pw.push_back(target.mul(pw.back(), point[static_cast<std::size_t>(i)]));
    return pw[static_cast<std::size_t>(e)];
  };
  auto acc = target.zero();
  for (const auto& t : f.terms()) {
    auto v = embed(t.coeff);
    for (int i = 0; i < n; ++i) {
      const int e = t.mono[i];
      if (e != 0) v = target.mul(v, power(i, e));
    }
    acc = target.add(acc, v);
  }
  return acc;
}

template <class F>
typename F::Element evaluate(const Polynomial<F>& f, const std::vector<typename F::Element>& point) {
  return evaluate_in(f, f.field(), point, [](const auto& c) { return c; });
}

/// All monomials of degree k in n variables, sorted decreasing in the order.
inline std::vector<Monomial> monomial_basis(int n_vars, int k, const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::vector<Monomial> out;
  if (k < 0 || n_vars < 1) return out;
  std::vector<int> exps(static_cast<std::size_t>(n_vars), 0);
  // Enumerate compositions of k into n_vars parts.
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == n_vars - 1) {
      exps[static_cast<std::size_t>(i)] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(i)] = e;
      rec(i + 1, remaining - e);
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, n_vars) > 0; });
  return out;
}

/// Binomial coefficient as a 64-bit integer.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Substitutes images[i] for variable i. The images live in a common target
/// ring over the same field.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::vector<Polynomial<F>>& images) {
  if (images.size() != static_cast<std::size_t>(f.ring()->n_vars())) {
    throw Error(ErrorKind::InvalidArgument, "substitution needs one image per variable");
  }
  const RingPtr<F>& target = images.front().ring();
  std::vector<std::vector<Polynomial<F>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(Polynomial<F>::from_int(target, 1));
  auto power = [&](std::size_t i, int e) -> const Polynomial<F>& {
    auto& pw = powers[i];
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[static_cast<std::size_t>(e)];
  };
  std::unordered_map<Monomial, typename F::Element, MonomialHash> acc;
  const F& field = f.field();
  for (const auto& t : f.terms()) {
    Polynomial<F> v = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int e = t.mono[static_cast<int>(i)];
      if (e != 0) v = v * power(i, e);
    }
    for (const auto& term : v.terms()) {
      auto [it, inserted] = acc.try_emplace(term.mono, term.coeff);
      if (!inserted) it->second = field.add(it->second, term.coeff);
    }
  }
  std::vector<typename Polynomial<F>::Term> terms;
  for (auto& [m, c] : acc)
    if (!field.is_zero(c)) terms.push_back({m, c});
  return Polynomial<F>(target, std::move(terms));
}

/// Moves f into a ring with the same field, mapping variable i to
/// var_map[i] in the target ring.
template <class F>
Polynomial<F> map_variables(const Polynomial<F>& f, const RingPtr<F>& target, const std::vector<int>& var_map) {
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(f.size());
  const int n = f.ring()->n_vars();
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < n; ++i) {
      if (t.mono[i] == 0) continue;
      const int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0) throw Error(ErrorKind::InvalidArgument, "variable dropped by map_variables occurs in polynomial");
      m.set(j, m[j] + t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<F>(target, std::move(terms));
}

/// Sets variable `var` to the constant c, keeping the ring.
template <class F>
Polynomial<F> specialize(const Polynomial<F>& f, int var, const typename F::Element& c) {
  const F& field = f.field();
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    const int e = m[var];
    m.set(var, 0);
    terms.push_back({m, field.mul(t.coeff, field.pow(c, static_cast<std::uint64_t>(e)))});
  }
  return Polynomial<F>(f.ring(), std::move(terms));
}

/// Homogenizes f with respect to a form `h` of degree 1 in the same ring:
/// returns sum_t c_t m_t h^(D - deg m_t), D = deg f.
template <class F>
Polynomial<F> homogenize_with(const Polynomial<F>& f, const Polynomial<F>& h) {
  const int d = f.degree();
  if (d < 0) return f;
  std::vector<Polynomial<F>> h_powers{Polynomial<F>::from_int(f.ring(), 1)};
  for (int i = 1; i <= d; ++i) h_powers.push_back(h_powers.back() * h);
  Polynomial<F> out(f.ring());
  std::map<int, std::vector<typename Polynomial<F>::Term>> by_degree;
  for (const auto& t : f.terms()) by_degree[t.mono.degree()].push_back(t);
  for (auto& [deg, terms] : by_degree) {
    Polynomial<F> part(f.ring(), std::move(terms));
    out += part * h_powers[static_cast<std::size_t>(d - deg)];
  }
  return out;
}

namespace detail {

template <class F>
std::string format_coefficient(const F& field, const typename F::Element& c, bool& negative) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    const auto p = field.characteristic();
    if (c > p / 2) {
      negative = true;
      return std::to_string(p - c);
    }
    negative = false;
    return std::to_string(c);
  } else if constexpr (std::is_same_v<F, RationalField>) {
    negative = sgn(c) < 0;
    return negative ? field.format(-c) : field.format(c);
  } else {
    negative = false;
    return "(" + field.format(c) + ")";
  }
}

}  // namespace detail

template <class F>
std::string to_string(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const auto& names = f.ring()->names();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = false;
    std::string c = detail::format_coefficient(f.field(), t.coeff, negative);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < f.ring()->n_vars(); ++i) {
      const int e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

}  // namespace nodal
