#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "nodal/substitution.hpp"
#include "nodal/zero_dim.hpp"

namespace nodal {

template <class F>
class CompleteIntersection {
 public:
  CompleteIntersection(RingPtr<F> ring, std::vector<Polynomial<F>> equations)
      : ring_(std::move(ring)), equations_(std::move(equations)) {
    if (equations_.empty()) throw Error(ErrorKind::InvalidArgument, "a complete intersection needs at least one equation");
    if (ring_->n_vars() != r() + 4) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(r()) + " equations need " + std::to_string(r() + 4) +
                                                  " variables, got " + std::to_string(ring_->n_vars()));
    }
    for (std::size_t i = 0; i < equations_.size(); ++i) {
      const auto& f = equations_[i];
      check_same_ring(*ring_, *f.ring());
      if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "equation " + std::to_string(i + 1) + " is not a nonconstant form");
      }
      degrees_.push_back(f.degree());
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Polynomial<F>>& equations() const { return equations_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int r() const { return static_cast<int>(equations_.size()); }
  int n_vars() const { return ring_->n_vars(); }
  int d() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }
  int k_star() const { return 2 * d() - 2 * r() - 3; }

  /// The system f(Mx) after a linear change of coordinates.
  CompleteIntersection transformed(const DenseMatrix<F>& m) const {
    std::vector<Polynomial<F>> eqs;
    for (const auto& f : equations_) eqs.push_back(linear_substitution(f, m));
    return CompleteIntersection(ring_, eqs);
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> equations_;
  std::vector<int> degrees_;
};

template <class F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

/// Jacobian matrix of a list of polynomials, one row per polynomial.
template <class F>
PolyMatrix<F> jacobian(const std::vector<Polynomial<F>>& eqs, int n_vars) {
  PolyMatrix<F> jac;
  for (const auto& f : eqs) {
    std::vector<Polynomial<F>> row;
    for (int v = 0; v < n_vars; ++v) row.push_back(partial_derivative(f, v));
    jac.push_back(std::move(row));
  }
  return jac;
}

/// Determinant of the square submatrix on the given rows and columns, by
/// Laplace expansion along the first row.
template <class F>
Polynomial<F> minor_determinant(const PolyMatrix<F>& m, const std::vector<int>& rows, const std::vector<int>& cols,
                                const RingPtr<F>& ring) {
  if (rows.empty()) return Polynomial<F>::from_int(ring, 1);
  if (rows.size() == 1) return m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[0])];
  Polynomial<F> det(ring);
  const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& entry = m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[j])];
    if (entry.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    auto term = entry * minor_determinant(m, sub_rows, sub_cols, ring);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Equations plus all maximal minors of their Jacobian.
template <class F>
Ideal<F> singular_ideal_of(const std::vector<Polynomial<F>>& eqs, const RingPtr<F>& ring) {
  const int n = ring->n_vars();
  const int k = static_cast<int>(eqs.size());
  std::vector<Polynomial<F>> gens = eqs;
  const auto jac = jacobian(eqs, n);
  std::vector<int> rows(static_cast<std::size_t>(k));
  std::iota(rows.begin(), rows.end(), 0);
  for (const auto& cols : subsets(n, k)) {
    auto m = minor_determinant(jac, rows, cols, ring);
    if (!m.is_zero()) gens.push_back(std::move(m));
  }
  return Ideal<F>(ring, gens, true);
}

template <class F>
Ideal<F> singular_scheme_ideal(const CompleteIntersection<F>& ci) {
  return singular_ideal_of(ci.equations(), ci.ring());
}

/// Affine chart {l = 1} of projective space for a linear form l with
/// nonzero coefficient at `pivot`. Affine coordinates are the remaining
/// variables.
template <class F>
class Chart {
 public:
  using Element = typename F::Element;

  Chart(RingPtr<F> ring, std::vector<Element> form) : ring_(std::move(ring)), form_(std::move(form)) {
    const F& field = ring_->field();
    pivot_ = -1;
    for (int i = ring_->n_vars() - 1; i >= 0; --i) {
      if (!field.is_zero(form_[static_cast<std::size_t>(i)])) {
        pivot_ = i;
        break;
      }
    }
    if (pivot_ < 0) throw Error(ErrorKind::InvalidArgument, "chart form is zero");
    std::vector<std::string> names;
    for (int i = 0; i < ring_->n_vars(); ++i) {
      if (i == pivot_) continue;
      to_affine_.push_back(static_cast<int>(names.size()));
      names.push_back(ring_->names()[static_cast<std::size_t>(i)]);
    }
    to_affine_.insert(to_affine_.begin() + pivot_, -1);
    affine_ = make_ring(field, names);
    // Image of x_pivot: (1 - sum_{i != pivot} a_i y_i) / a_pivot.
    const auto inv = field.inv(form_[static_cast<std::size_t>(pivot_)]);
    Polynomial<F> piv = Polynomial<F>::constant(affine_, inv);
    for (int i = 0; i < ring_->n_vars(); ++i) {
      if (i == pivot_) continue;
      piv -= Polynomial<F>::variable(affine_, to_affine_[static_cast<std::size_t>(i)])
                 .scale(field.mul(form_[static_cast<std::size_t>(i)], inv));
    }
    for (int i = 0; i < ring_->n_vars(); ++i) {
      images_.push_back(i == pivot_ ? piv : Polynomial<F>::variable(affine_, to_affine_[static_cast<std::size_t>(i)]));
    }
  }

  static Chart random(RingPtr<F> ring, Rng& rng) {
    std::vector<Element> form;
    for (int i = 0; i < ring->n_vars(); ++i) form.push_back(ring->field().random_nonzero(rng));
    return Chart(std::move(ring), std::move(form));
  }

  const RingPtr<F>& affine_ring() const { return affine_; }
  const std::vector<Element>& form() const { return form_; }
  int pivot() const { return pivot_; }

  Polynomial<F> linear_form() const {
    std::vector<typename Polynomial<F>::Term> terms;
    for (int i = 0; i < ring_->n_vars(); ++i) terms.push_back({Monomial::variable(i), form_[static_cast<std::size_t>(i)]});
    return Polynomial<F>(ring_, std::move(terms));
  }

  Polynomial<F> dehomogenize(const Polynomial<F>& f) const { return substitute(f, images_); }

  /// Homogenization of an affine polynomial with respect to the chart form.
  Polynomial<F> homogenize(const Polynomial<F>& g) const {
    std::vector<int> back;
    for (int i = 0; i < ring_->n_vars(); ++i)
      if (i != pivot_) back.push_back(i);
    return homogenize_with(map_variables(g, ring_, back), linear_form());
  }

  /// Projective representative with l(P) = 1 of an affine point.
  template <class K>
  std::vector<typename K::Element> lift(const K& k, const std::vector<typename K::Element>& affine_point,
                                        std::function<typename K::Element(const Element&)> embed) const {
    std::vector<typename K::Element> out;
    auto acc = k.one();
    for (int i = 0; i < ring_->n_vars(); ++i) {
      if (i == pivot_) continue;
      acc = k.sub(acc, k.mul(embed(form_[static_cast<std::size_t>(i)]),
                             affine_point[static_cast<std::size_t>(to_affine_[static_cast<std::size_t>(i)])]));
    }
    const auto piv = k.div(acc, embed(form_[static_cast<std::size_t>(pivot_)]));
    for (int i = 0; i < ring_->n_vars(); ++i) {
      out.push_back(i == pivot_ ? piv : affine_point[static_cast<std::size_t>(to_affine_[static_cast<std::size_t>(i)])]);
    }
    return out;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Element> form_;
  int pivot_;
  std::vector<int> to_affine_;
  RingPtr<F> affine_;
  std::vector<Polynomial<F>> images_;
};

/// Embedding of base-field coefficients into an orbit's residue field.
template <class F>
auto residue_embedding(const typename ResidueFieldOf<F>::type& k) {
  return [&k](const typename F::Element& c) -> typename ResidueFieldOf<F>::type::Element {
    if constexpr (std::is_same_v<F, PrimeField>) {
      return k.embed(c);
    } else {
      return c;
    }
  };
}

template <class F>
struct ChartedScheme {
  Chart<F> chart;
  GroebnerBasis<F> affine_gb;
  std::size_t degree;
};

/// V(I) is empty iff every standard chart x_j = 1 gives the unit ideal.
/// Coordinate charts keep generators sparse, which matters over Q.
template <class F>
bool empty_on_coordinate_charts(const std::vector<Polynomial<F>>& homogeneous, const RingPtr<F>& ring) {
  const F& field = ring->field();
  for (int j = 0; j < ring->n_vars(); ++j) {
    std::vector<typename F::Element> form(static_cast<std::size_t>(ring->n_vars()), field.zero());
    form[static_cast<std::size_t>(j)] = field.one();
    const Chart<F> chart(ring, std::move(form));
    std::vector<Polynomial<F>> gens;
    for (const auto& g : homogeneous) gens.push_back(chart.dehomogenize(g));
    if (!groebner_basis(Ideal<F>(chart.affine_ring(), gens)).is_unit()) return false;
  }
  return true;
}

/// Zero-dimensional projective scheme V(I) read off an affine chart chosen
/// so that two independent random charts agree on the degree; nullopt when
/// V(I) is empty.
template <class F>
std::optional<ChartedScheme<F>> chart_scheme(const Ideal<F>& homogeneous, Rng& rng, int attempts = 10) {
  const auto& ring = homogeneous.ring();
  auto affine_gb = [&](const Chart<F>& chart) {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : homogeneous.generators()) gens.push_back(chart.dehomogenize(g));
    return groebner_basis(Ideal<F>(chart.affine_ring(), gens), MonomialOrder::grevlex());
  };
  if constexpr (std::is_same_v<F, RationalField>) {
    if (empty_on_coordinate_charts(homogeneous.generators(), ring)) return std::nullopt;
  }
  for (int attempt = 0; attempt < attempts; ++attempt) {
    auto c1 = Chart<F>::random(ring, rng);
    auto gb1 = affine_gb(c1);
    auto c2 = Chart<F>::random(ring, rng);
    auto gb2 = affine_gb(c2);
    if (gb1.is_unit() && gb2.is_unit()) return std::nullopt;
    if (gb1.is_unit() != gb2.is_unit()) continue;
    const auto d1 = quotient_dimension(gb1);
    const auto d2 = quotient_dimension(gb2);
    if (d1 == d2) return ChartedScheme<F>{std::move(c1), std::move(gb1), d1};
  }
  throw Error(ErrorKind::ChartRetryExhausted, "no pair of random charts agreed on the scheme degree");
}

struct PrefixReport {
  int prefix;
  bool smooth;
  friend bool operator==(const PrefixReport&, const PrefixReport&) = default;
};

/// Smoothness of V(F_1, ..., F_i) for every i < r.
template <class F>
std::vector<PrefixReport> verify_chain_smoothness(const CompleteIntersection<F>& ci, Rng& rng) {
  std::vector<PrefixReport> out;
  for (int i = 1; i < ci.r(); ++i) {
    std::vector<Polynomial<F>> eqs(ci.equations().begin(), ci.equations().begin() + i);
    auto ideal = singular_ideal_of(eqs, ci.ring());
    if constexpr (std::is_same_v<F, RationalField>) {
      out.push_back({i, empty_on_coordinate_charts(ideal.generators(), ci.ring())});
      continue;
    }
    auto chart = Chart<F>::random(ci.ring(), rng);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : ideal.generators()) gens.push_back(chart.dehomogenize(g));
    const bool smooth = groebner_basis(Ideal<F>(chart.affine_ring(), gens)).is_unit();
    out.push_back({i, smooth});
  }
  return out;
}

/// Generic change of generators that keeps the ideal: F'_i is a random
/// scalar combination of the equations of degree d_i plus random forms times
/// the equations of lower degree. The scalar blocks are invertible.
template <class F>
CompleteIntersection<F> recombine_generators(const CompleteIntersection<F>& ci, Rng& rng) {
  const F& field = ci.field();
  const auto& eqs = ci.equations();
  const auto& deg = ci.degrees();
  const std::size_t r = eqs.size();
  std::vector<Polynomial<F>> out(r, Polynomial<F>(ci.ring()));
  std::vector<bool> done(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> block;
    for (std::size_t j = 0; j < r; ++j)
      if (deg[j] == deg[i]) block.push_back(j);
    const auto a = random_invertible(field, block.size(), rng);
    for (std::size_t bi = 0; bi < block.size(); ++bi) {
      Polynomial<F> f(ci.ring());
      for (std::size_t bj = 0; bj < block.size(); ++bj) f += eqs[block[bj]].scale(a(bi, bj));
      for (std::size_t j = 0; j < r; ++j) {
        if (deg[j] >= deg[i]) continue;
        std::vector<typename Polynomial<F>::Term> terms;
        for (const auto& m : monomial_basis(ci.n_vars(), deg[i] - deg[j])) terms.push_back({m, field.random(rng)});
        f += Polynomial<F>(ci.ring(), std::move(terms)) * eqs[j];
      }
      out[block[bi]] = std::move(f);
      done[block[bi]] = true;
    }
  }
  return CompleteIntersection<F>(ci.ring(), std::move(out));
}

template <class F>
struct SmoothChain {
  CompleteIntersection<F> system;
  /// Prefix smoothness of the equations as given.
  std::vector<PrefixReport> literal;
  bool recombined = false;
};

inline bool all_smooth(const std::vector<PrefixReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const PrefixReport& p) { return p.smooth; });
}

/// Equations generating the same ideal whose prefixes cut out smooth
/// varieties: the given ones if they qualify, else a generic recombination.
/// Throws HypothesisViolation when no attempt qualifies.
template <class F>
SmoothChain<F> establish_smooth_chain(const CompleteIntersection<F>& ci, Rng& rng, int attempts = 5) {
  SmoothChain<F> chain{ci, verify_chain_smoothness(ci, rng), false};
  if (all_smooth(chain.literal)) return chain;
  for (int a = 0; a < attempts; ++a) {
    auto candidate = recombine_generators(ci, rng);
    if (all_smooth(verify_chain_smoothness(candidate, rng))) {
      chain.system = std::move(candidate);
      chain.recombined = true;
      return chain;
    }
  }
  std::string bad;
  for (const auto& p : chain.literal)
    if (!p.smooth) bad += (bad.empty() ? "" : ", ") + std::to_string(p.prefix);
  throw Error(ErrorKind::HypothesisViolation, "intermediate complete intersections are singular (prefixes " + bad + ")");
}

template <class F>
struct NodeSet {
  std::size_t mu = 0;
  std::size_t scheme_degree = 0;
  bool verified_odp = false;
  /// Whether coordinates were extracted.
  bool has_points = false;
  /// Galois orbits of projective representatives normalized by l(P) = 1.
  std::vector<PointOrbit<F>> orbits;
  /// Homogeneous ideal of the nodes.
  Ideal<F> j_sigma;
  Chart<F> chart;
  GroebnerBasis<F> affine_gb;
};

enum class NodeMethod { Points, CountOnly };

/// Singular points of a complete intersection. Throws EmptySingularLocus
/// when X is smooth and LikelyNonNodalSingularities when the singular scheme
/// is not reduced.
template <class F>
NodeSet<F> compute_nodes(const CompleteIntersection<F>& ci, Rng& rng, NodeMethod method = NodeMethod::Points) {
  auto sing = singular_scheme_ideal(ci);
  auto charted = chart_scheme(sing, rng);
  if (!charted) throw Error(ErrorKind::EmptySingularLocus, "the singular locus is empty");
  std::vector<Polynomial<F>> j_gens;
  for (const auto& g : charted->affine_gb.elements()) j_gens.push_back(charted->chart.homogenize(g));
  NodeSet<F> nodes{0, charted->degree, false, false, {}, Ideal<F>(ci.ring(), j_gens, true), charted->chart,
                   charted->affine_gb};
  ZeroDimSolution<F> sol;
  try {
    sol = solve_zero_dimensional(charted->affine_gb, rng);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotRadical) {
      throw Error(ErrorKind::LikelyNonNodalSingularities, "singular scheme is not reduced: " + std::string(e.what()));
    }
    throw;
  }
  nodes.mu = sol.quotient_dim;
  if (method == NodeMethod::Points && sol.points_available) {
    nodes.has_points = true;
    for (auto& orbit : sol.orbits) {
      const auto& k = orbit.field;
      PointOrbit<F> lifted{k, charted->chart.lift(k, orbit.coords, residue_embedding<F>(k))};
      nodes.orbits.push_back(std::move(lifted));
    }
  }
  return nodes;
}

struct OdpDetail {
  int jacobian_rank = 0;
  int quadratic_rank = 0;
  bool ok = false;
};

struct OdpReport {
  bool reduced = false;
  std::vector<OdpDetail> per_orbit;
  bool all_ok() const {
    if (!reduced) return false;
    for (const auto& d : per_orbit)
      if (!d.ok) return false;
    return true;
  }
};

/// Node test at a single point P (over a residue field K): rank of the
/// Jacobian is r - 1, and the quadratic part of the local equation on the
/// smooth germ V(F_S) has rank 4.
template <class F, class K>
OdpDetail odp_check_at(const CompleteIntersection<F>& ci, const K& k, const std::vector<typename K::Element>& point,
                       const std::function<typename K::Element(const typename F::Element&)>& embed) {
  const int n = ci.n_vars();
  const int r = ci.r();
  OdpDetail detail;
  int a = -1;
  for (int i = 0; i < n && a < 0; ++i)
    if (!k.is_zero(point[static_cast<std::size_t>(i)])) a = i;
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "zero vector is not a projective point");
  const auto scale = k.inv(point[static_cast<std::size_t>(a)]);
  std::vector<typename K::Element> p;
  for (const auto& c : point) p.push_back(k.mul(c, scale));
  auto eval = [&](const Polynomial<F>& f) { return evaluate_in(f, k, p, embed); };

  std::vector<int> local;
  for (int i = 0; i < n; ++i)
    if (i != a) local.push_back(i);
  const std::size_t m = local.size();
  DenseMatrix<K> grad(k, static_cast<std::size_t>(r), m);
  std::vector<DenseMatrix<K>> hess;
  for (int t = 0; t < r; ++t) {
    const auto& f = ci.equations()[static_cast<std::size_t>(t)];
    DenseMatrix<K> h(k, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      auto di = partial_derivative(f, local[i]);
      grad(static_cast<std::size_t>(t), i) = eval(di);
      for (std::size_t j = i; j < m; ++j) {
        h(i, j) = eval(partial_derivative(di, local[j]));
        h(j, i) = h(i, j);
      }
    }
    hess.push_back(std::move(h));
  }
  detail.jacobian_rank = static_cast<int>(rank(grad));
  if (detail.jacobian_rank != r - 1) return detail;

  // Rows S with independent gradients, the dependent row t, columns D.
  std::vector<std::size_t> s_rows;
  std::size_t t_row = 0;
  {
    RowEchelon<K> ech(k, m);
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
      if (ech.insert(grad.row(i))) {
        s_rows.push_back(i);
      } else {
        t_row = i;
      }
    }
  }
  const std::size_t s = s_rows.size();
  DenseMatrix<K> gs(k, s, m);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < m; ++j) gs(i, j) = grad(s_rows[i], j);
  const auto red = rref(gs);
  std::vector<bool> in_d(m, false);
  for (auto c : red.pivot_columns) in_d[c] = true;
  std::vector<std::size_t> d_cols, u_cols;
  for (std::size_t j = 0; j < m; ++j) (in_d[j] ? d_cols : u_cols).push_back(j);

  DenseMatrix<K> gsd(k, s, s), gsu(k, s, u_cols.size());
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) gsd(i, j) = gs(i, d_cols[j]);
    for (std::size_t j = 0; j < u_cols.size(); ++j) gsu(i, j) = gs(i, u_cols[j]);
  }
  DenseMatrix<K> tangent(k, m, u_cols.size());
  std::vector<typename K::Element> c(s, k.zero());
  if (s > 0) {
    const auto gsd_inv = inverse(gsd);
    const auto dep = gsd_inv * gsu;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < u_cols.size(); ++j) tangent(d_cols[i], j) = k.neg(dep(i, j));
    // c = g_{t,D} G_SD^{-1}.
    for (std::size_t j = 0; j < s; ++j) {
      auto acc = k.zero();
      for (std::size_t i = 0; i < s; ++i) acc = k.add(acc, k.mul(grad(t_row, d_cols[i]), gsd_inv(i, j)));
      c[j] = acc;
    }
  }
  for (std::size_t j = 0; j < u_cols.size(); ++j) tangent(u_cols[j], j) = k.one();
  DenseMatrix<K> h = hess[t_row];
  for (std::size_t i = 0; i < s; ++i) {
    const auto& hs = hess[s_rows[i]];
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) h(x, y) = k.sub(h(x, y), k.mul(c[i], hs(x, y)));
  }
  const auto q = tangent.transpose() * h * tangent;
  detail.quadratic_rank = static_cast<int>(rank(q));
  detail.ok = detail.quadratic_rank == 4;
  return detail;
}

template <class F>
OdpReport verify_odp(const CompleteIntersection<F>& ci, const NodeSet<F>& nodes) {
  if (!nodes.has_points) throw Error(ErrorKind::InvalidArgument, "node verification needs coordinates");
  OdpReport report;
  std::size_t count = 0;
  for (const auto& orbit : nodes.orbits) {
    count += static_cast<std::size_t>(orbit.size());
    report.per_orbit.push_back(odp_check_at<F>(ci, orbit.field, orbit.coords, residue_embedding<F>(orbit.field)));
  }
  report.reduced = count == nodes.scheme_degree;
  return report;
}

}  // namespace nodal
