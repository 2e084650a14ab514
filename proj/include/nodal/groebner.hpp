#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria and sugar
// selection, plus the ideal operations built on it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "nodal/matrix.hpp"
#include "nodal/polynomial.hpp"

namespace nodal {

template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators, bool require_homogeneous = false)
      : ring_(std::move(ring)) {
    for (auto& g : generators) {
      check_same_ring(*ring_, *g.ring());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    homogeneous_ = std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_homogeneous(); });
    if (require_homogeneous && !homogeneous_) {
      throw Error(ErrorKind::InvalidArgument, "ideal declared homogeneous has an inhomogeneous generator");
    }
  }

  static Ideal unit(RingPtr<F> ring) {
    auto one = Polynomial<F>::from_int(ring, 1);
    return Ideal(std::move(ring), {one});
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  bool is_homogeneous() const { return homogeneous_; }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  bool homogeneous_ = true;
};

/// Degree cap applied to every basis computation that does not set its own;
/// the command-line --max-degree-cap adjusts it.
inline int& default_max_degree() {
  static int cap = 60;
  return cap;
}

struct GbOptions {
  std::size_t max_elements = 5000;
  int max_degree = default_max_degree();
  /// For ideals homogeneous with respect to `weights`, compute only the part
  /// of the basis up to this weighted degree.
  std::optional<int> truncate_degree;
  /// Per-variable grading weights used with truncate_degree; empty means all 1.
  std::vector<int> weights;
};

namespace gb_detail {

template <class F>
using Terms = std::vector<typename Polynomial<F>::Term>;

inline int weighted_degree(const Monomial& m, const std::vector<int>& weights, int n) {
  if (weights.empty()) return m.degree();
  int d = 0;
  for (int i = 0; i < n; ++i) d += weights[static_cast<std::size_t>(i)] * m[i];
  return d;
}

/// Reducer table: monic polynomials with cached leading data.
template <class F>
struct ReducerSet {
  std::vector<const Polynomial<F>*> polys;
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> masks;

  void add(const Polynomial<F>* p) {
    polys.push_back(p);
    leads.push_back(p->leading_monomial());
    masks.push_back(p->leading_monomial().support_mask());
  }

  int find_divisor(const Monomial& m) const {
    const std::uint32_t mm = m.support_mask();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if ((masks[i] & ~mm) != 0) continue;
      if (leads[i].divides(m)) return static_cast<int>(i);
    }
    return -1;
  }
};

/// Full reduction of p modulo monic reducers. Returns the remainder.
template <class F>
Polynomial<F> reduce(const Polynomial<F>& p, const ReducerSet<F>& reducers, bool tail = true) {
  const F& field = p.field();
  const Ring<F>& ring = *p.ring();
  Terms<F> cur = p.terms();
  Terms<F> next;
  Terms<F> result;
  std::size_t head = 0;
  while (head < cur.size()) {
    const auto& t = cur[head];
    const int idx = reducers.find_divisor(t.mono);
    if (idx < 0) {
      if (!tail) {
        result.insert(result.end(), cur.begin() + static_cast<std::ptrdiff_t>(head), cur.end());
        break;
      }
      result.push_back(t);
      ++head;
      continue;
    }
    const Polynomial<F>& g = *reducers.polys[static_cast<std::size_t>(idx)];
    const Monomial q = t.mono / g.leading_monomial();
    const auto c = field.neg(t.coeff);  // reducers are monic
    const auto& gt = g.terms();
    next.clear();
    next.reserve(cur.size() - head + gt.size());
    std::size_t i = head + 1, j = 1;
    while (i < cur.size() || j < gt.size()) {
      if (j == gt.size()) {
        next.push_back(std::move(cur[i++]));
        continue;
      }
      Monomial gm = gt[j].mono * q;
      int cmp = i == cur.size() ? -1 : ring.compare(cur[i].mono, gm);
      if (cmp > 0) {
        next.push_back(std::move(cur[i++]));
      } else if (cmp < 0) {
        next.push_back({gm, field.mul(c, gt[j].coeff)});
        ++j;
      } else {
        auto s = field.add(cur[i].coeff, field.mul(c, gt[j].coeff));
        if (!field.is_zero(s)) next.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    std::swap(cur, next);
    head = 0;
  }
  return Polynomial<F>::from_sorted(p.ring(), std::move(result));
}

}  // namespace gb_detail

template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elements, bool truncated)
      : ring_(std::move(ring)), elements_(std::move(elements)), truncated_(truncated) {
    for (const auto& e : elements_) reducers_.add(&e);
  }

  GroebnerBasis(const GroebnerBasis& o) : ring_(o.ring_), elements_(o.elements_), truncated_(o.truncated_) {
    for (const auto& e : elements_) reducers_.add(&e);
  }
  GroebnerBasis& operator=(const GroebnerBasis& o) {
    if (this != &o) {
      ring_ = o.ring_;
      elements_ = o.elements_;
      truncated_ = o.truncated_;
      reducers_ = {};
      for (const auto& e : elements_) reducers_.add(&e);
    }
    return *this;
  }
  GroebnerBasis(GroebnerBasis&&) noexcept = default;
  GroebnerBasis& operator=(GroebnerBasis&&) noexcept = default;

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  bool truncated() const { return truncated_; }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : elements_) out.push_back(e.leading_monomial());
    return out;
  }

  /// Remainder of f on division by the basis. f may use any order on the
  /// same variables and field.
  Polynomial<F> normal_form(const Polynomial<F>& f) const {
    if (f.field() != ring_->field()) throw Error(ErrorKind::FieldMismatch, "normal form across fields");
    if (f.ring()->names() != ring_->names()) throw Error(ErrorKind::RingMismatch, "normal form across rings");
    return gb_detail::reduce(f.in_ring(ring_), reducers_);
  }

  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

  Ideal<F> ideal() const { return Ideal<F>(ring_, elements_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> elements_;
  bool truncated_ = false;
  gb_detail::ReducerSet<F> reducers_;
};

namespace gb_detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

template <class F>
class Buchberger {
 public:
  Buchberger(RingPtr<F> ring, GbOptions options) : ring_(std::move(ring)), opts_(std::move(options)) {}

  GroebnerBasis<F> run(const std::vector<Polynomial<F>>& input) {
    const int n = ring_->n_vars();
    std::vector<Polynomial<F>> gens;
    for (const auto& g : input) {
      auto h = g.in_ring(ring_);
      if (h.is_zero()) continue;
      if (opts_.truncate_degree && wdeg(h) > *opts_.truncate_degree) continue;
      gens.push_back(std::move(h));
    }
    std::sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (const auto& g : gens) {
      auto h = reduce(g, active_reducers());
      if (!h.is_zero()) add(h.monic(), sugar_of(g));
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ring_->compare(a.lcm, b.lcm) < 0;
      });
      Pair pair = *it;
      *it = pairs_.back();
      pairs_.pop_back();
      auto s = spoly(pair);
      auto h = reduce(s, active_reducers());
      if (!h.is_zero()) add(h.monic(), pair.sugar);
    }
    (void)n;
    return finish();
  }

 private:
  int wdeg(const Polynomial<F>& p) const {
    int d = 0;
    for (const auto& t : p.terms()) d = std::max(d, weighted_degree(t.mono, opts_.weights, ring_->n_vars()));
    return d;
  }
  int sugar_of(const Polynomial<F>& p) const { return p.degree(); }

  const ReducerSet<F>& active_reducers() {
    if (reducers_dirty_) {
      reducers_ = {};
      for (std::size_t k = 0; k < basis_.size(); ++k)
        if (active_[k]) reducers_.add(&basis_[k]);
      reducers_dirty_ = false;
    }
    return reducers_;
  }

  Polynomial<F> spoly(const Pair& pr) const {
    const auto& f = basis_[pr.i];
    const auto& g = basis_[pr.j];
    auto a = f.mul_term(pr.lcm / f.leading_monomial(), ring_->field().one());
    auto b = g.mul_term(pr.lcm / g.leading_monomial(), ring_->field().one());
    return a - b;
  }

  void add(Polynomial<F> h, int sugar) {
    if (h.leading_monomial().degree() > opts_.max_degree) {
      throw Error(ErrorKind::CapacityExceeded, "Groebner basis degree bound " + std::to_string(opts_.max_degree) + " exceeded");
    }
    const std::size_t hi = basis_.size();
    if (hi >= opts_.max_elements) {
      throw Error(ErrorKind::CapacityExceeded,
                  "Groebner basis element bound " + std::to_string(opts_.max_elements) + " exceeded");
    }
    basis_.push_back(std::move(h));
    sugars_.push_back(sugar);
    active_.push_back(true);
    const Monomial lh = basis_[hi].leading_monomial();

    // New pairs (g, h) for active g; criterion M/F then the coprime criterion.
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial lg = basis_[g].leading_monomial();
      const Monomial l = lg.lcm(lh);
      const int s = std::max(sugars_[g] + (l.degree() - lg.degree()), sugar + (l.degree() - lh.degree()));
      fresh.push_back({g, hi, l, s});
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) keep[a] = false;
      }
    }
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      const Monomial lg = basis_[fresh[a].i].leading_monomial();
      if (lg.coprime(lh)) continue;
      if (opts_.truncate_degree && weighted_degree(fresh[a].lcm, opts_.weights, ring_->n_vars()) > *opts_.truncate_degree) {
        continue;
      }
      accepted.push_back(fresh[a]);
    }
    // Criterion B on old pairs.
    std::vector<Pair> remaining;
    remaining.reserve(pairs_.size() + accepted.size());
    for (const auto& pr : pairs_) {
      if (lh.divides(pr.lcm)) {
        const Monomial li = basis_[pr.i].leading_monomial().lcm(lh);
        const Monomial lj = basis_[pr.j].leading_monomial().lcm(lh);
        if (li != pr.lcm && lj != pr.lcm) continue;
      }
      remaining.push_back(pr);
    }
    remaining.insert(remaining.end(), accepted.begin(), accepted.end());
    pairs_ = std::move(remaining);

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
    }
    reducers_dirty_ = true;
  }

  GroebnerBasis<F> finish() {
    // Minimal basis from the active elements, then tail interreduction.
    std::vector<Polynomial<F>> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) minimal.push_back(basis_[k]);
    std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      ReducerSet<F> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.add(&minimal[m]);
      // Keep the leading term; reduce the tail only.
      const auto& p = minimal[k];
      Terms<F> tail(p.terms().begin() + 1, p.terms().end());
      auto rest = reduce(Polynomial<F>::from_sorted(ring_, std::move(tail)), others);
      Terms<F> terms{p.leading()};
      terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
      reduced.push_back(Polynomial<F>::from_sorted(ring_, std::move(terms)));
    }
    return GroebnerBasis<F>(ring_, std::move(reduced), opts_.truncate_degree.has_value());
  }

  RingPtr<F> ring_;
  GbOptions opts_;
  std::vector<Polynomial<F>> basis_;
  std::vector<int> sugars_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  ReducerSet<F> reducers_;
  bool reducers_dirty_ = true;
};

}  // namespace gb_detail

/// Reduced Groebner basis of I with respect to `order`.
template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                                GbOptions options = {}) {
  auto ring = ideal.ring()->order() == order ? ideal.ring() : ideal.ring()->with_order(order);
  return gb_detail::Buchberger<F>(ring, std::move(options)).run(ideal.generators());
}

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& ideal, GbOptions options) {
  return groebner_basis(ideal, ideal.ring()->order(), std::move(options));
}

/// S-polynomial of two basis elements (for criterion spot checks).
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const auto& field = f.field();
  auto a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coefficient()));
  auto b = g.mul_term(l / g.leading_monomial(), field.inv(g.leading_coefficient()));
  return a - b;
}

/// Multivariate division by a single nonzero g: returns (q, r) with f = q g + r.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divide(const Polynomial<F>& f, const Polynomial<F>& g) {
  check_same_ring(*f.ring(), *g.ring());
  const auto& field = f.field();
  Polynomial<F> q(f.ring()), r(f.ring()), p = f;
  const auto lc_inv = field.inv(g.leading_coefficient());
  while (!p.is_zero()) {
    const auto& lt = p.leading();
    if (g.leading_monomial().divides(lt.mono)) {
      auto t = Polynomial<F>::term(f.ring(), lt.mono / g.leading_monomial(), field.mul(lt.coeff, lc_inv));
      q += t;
      p -= t * g;
    } else {
      r += Polynomial<F>::term(f.ring(), lt.mono, lt.coeff);
      p -= Polynomial<F>::term(f.ring(), lt.mono, lt.coeff);
    }
  }
  return {q, r};
}

/// I intersected with k[keep], via a block order eliminating the other variables.
template <class F>
Ideal<F> elimination_ideal(const Ideal<F>& ideal, const std::vector<int>& keep, GbOptions options = {}) {
  const auto& ring = ideal.ring();
  const int n = ring->n_vars();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int k : keep) kept[static_cast<std::size_t>(k)] = true;
  std::vector<int> to_new(static_cast<std::size_t>(n)), to_old;
  std::vector<std::string> names;
  int eliminated = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < n; ++i) {
      if (kept[static_cast<std::size_t>(i)] == (pass == 1)) {
        to_new[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
        to_old.push_back(i);
        names.push_back(ring->names()[static_cast<std::size_t>(i)]);
        if (pass == 0) ++eliminated;
      }
    }
  }
  auto elim_ring = make_ring(ring->field(), names, MonomialOrder::block(eliminated));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, elim_ring, to_new));
  auto gb = groebner_basis(Ideal<F>(elim_ring, gens), MonomialOrder::block(eliminated), std::move(options));
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.elements()) {
    bool free_of_eliminated = true;
    for (const auto& t : g.terms()) {
      for (int v = 0; v < eliminated && free_of_eliminated; ++v)
        if (t.mono[v] != 0) free_of_eliminated = false;
    }
    if (free_of_eliminated) out.push_back(map_variables(g, ring, to_old));
  }
  return Ideal<F>(ring, out);
}

/// I intersected with J via t I + (1 - t) J and elimination of t. With
/// truncate_degree set (homogeneous I, J), only generators up to that degree
/// are produced, which determines every graded piece up to it.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b, std::optional<int> truncate_degree = std::nullopt) {
  check_same_ring(*a.ring(), *b.ring());
  const auto& ring = a.ring();
  const int n = ring->n_vars();
  if (n + 1 > kMaxVars) throw Error(ErrorKind::CapacityExceeded, "no room for the auxiliary variable");
  std::vector<std::string> names{"_t"};
  for (const auto& s : ring->names()) names.push_back(s);
  auto aux = make_ring(ring->field(), names, MonomialOrder::block(1));
  std::vector<int> shift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = i + 1;
  auto t = Polynomial<F>::variable(aux, 0);
  auto one_minus_t = Polynomial<F>::from_int(aux, 1) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * map_variables(f, aux, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * map_variables(g, aux, shift));
  GbOptions opts;
  if (truncate_degree) {
    opts.truncate_degree = truncate_degree;
    opts.weights.assign(static_cast<std::size_t>(n + 1), 1);
    opts.weights[0] = 0;
  }
  auto gb = groebner_basis(Ideal<F>(aux, gens), MonomialOrder::block(1), opts);
  std::vector<int> back(static_cast<std::size_t>(n + 1));
  back[0] = -1;
  for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i + 1)] = i;
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.elements()) {
    bool has_t = false;
    for (const auto& term : g.terms())
      if (term.mono[0] != 0) has_t = true;
    if (!has_t) out.push_back(map_variables(g, ring, back));
  }
  return Ideal<F>(ring, out);
}

/// I : g, from (I intersect (g)) / g.
template <class F>
Ideal<F> colon(const Ideal<F>& ideal, const Polynomial<F>& g) {
  auto inter = ideal_intersection(ideal, Ideal<F>(ideal.ring(), {g}));
  std::vector<Polynomial<F>> out;
  for (const auto& h : inter.generators()) {
    auto [q, r] = divide(h, g);
    if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "internal: intersection element not divisible");
    out.push_back(q);
  }
  return Ideal<F>(ideal.ring(), out);
}

/// I : J as the intersection of I : g over the generators g of J.
template <class F>
Ideal<F> colon(const Ideal<F>& ideal, const Ideal<F>& j) {
  std::optional<Ideal<F>> acc;
  for (const auto& g : j.generators()) {
    auto c = colon(ideal, g);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  if (!acc) return Ideal<F>::unit(ideal.ring());
  return *acc;
}

/// I : J^infinity, iterating colon ideals until two consecutive reduced
/// bases agree.
template <class F>
Ideal<F> saturation(const Ideal<F>& ideal, const Ideal<F>& j) {
  if (j.generators().empty()) throw Error(ErrorKind::InvalidArgument, "saturation by the zero ideal");
  auto order = MonomialOrder::grevlex();
  auto current = groebner_basis(ideal, order);
  while (true) {
    auto next = groebner_basis(colon(current.ideal(), j), order);
    if (next == current) {
      std::vector<Polynomial<F>> gens;
      for (const auto& e : next.elements()) gens.push_back(e.in_ring(ideal.ring()));
      return Ideal<F>(ideal.ring(), gens);
    }
    current = std::move(next);
  }
}

/// Standard monomials of a zero-dimensional basis, or nullopt when some
/// variable has no pure power among the leading monomials.
template <class F>
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis<F>& gb) {
  const int n = gb.ring()->n_vars();
  const auto leads = gb.leading_monomials();
  for (int v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& m : leads) {
      if (m[v] > 0 && m.degree() == m[v]) found = true;
    }
    if (!found) return std::nullopt;
  }
  auto divisible = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier;
  if (!divisible(Monomial())) {
    frontier.push_back(Monomial());
    seen.insert(Monomial());
  }
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    out.push_back(m);
    for (int v = 0; v < n; ++v) {
      Monomial next = m * Monomial::variable(v);
      if (seen.count(next) || divisible(next)) continue;
      seen.insert(next);
      frontier.push_back(next);
    }
  }
  const Ring<F>& ring = *gb.ring();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  return out;
}

/// Dimension of k[x]/I for a zero-dimensional affine ideal.
template <class F>
std::size_t quotient_dimension(const GroebnerBasis<F>& gb) {
  auto basis = standard_monomials(gb);
  if (!basis) throw Error(ErrorKind::NotZeroDimensional, "some variable has no pure power in the leading-term ideal");
  return basis->size();
}

template <class F>
std::size_t quotient_dimension(const Ideal<F>& ideal) {
  return quotient_dimension(groebner_basis(ideal, MonomialOrder::grevlex()));
}

}  // namespace nodal
