#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nodal/nodal_locus.hpp"

namespace nodal {

/// Rows indexed by the omitted equation i, columns by (r-1)-subsets K of the
/// variables; entry (i, K) is the minor of the Jacobian on the other rows and
/// the columns K.
template <class F>
struct MinorMatrix {
  std::vector<std::vector<Polynomial<F>>> entries;
  std::vector<std::vector<int>> column_sets;
  std::vector<int> row_degrees;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return column_sets.size(); }
};

template <class F>
MinorMatrix<F> wedge_minor_matrix(const CompleteIntersection<F>& ci) {
  const int r = ci.r();
  const int n = ci.n_vars();
  MinorMatrix<F> m;
  m.column_sets = subsets(n, r - 1);
  const auto jac = jacobian(ci.equations(), n);
  for (int i = 0; i < r; ++i) {
    std::vector<int> rows;
    for (int j = 0; j < r; ++j)
      if (j != i) rows.push_back(j);
    std::vector<Polynomial<F>> row;
    for (const auto& cols : m.column_sets) row.push_back(minor_determinant(jac, rows, cols, ci.ring()));
    m.entries.push_back(std::move(row));
    m.row_degrees.push_back(ci.d() - ci.degrees()[static_cast<std::size_t>(i)] - (r - 1));
  }
  return m;
}

enum class Strategy { Row, Column };

inline std::string strategy_name(Strategy s) { return s == Strategy::Row ? "row" : "column"; }

/// Combination strategy that reproduces the expected intermediate
/// dimensions most often; see the README.
inline constexpr Strategy kDefaultStrategy = Strategy::Column;

template <class F>
struct DefectIdeal {
  Strategy strategy;
  /// Scalar weights: one per column (column strategy) or per row (row strategy).
  std::vector<typename F::Element> coefficients;
  /// Row strategy with unequal row degrees: the form weighting each row.
  std::vector<Polynomial<F>> row_weights;
  std::vector<Polynomial<F>> generators;
  int attempts = 0;
  std::string certificate;
};

/// Random form of degree k with coefficients from rng.
template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, int k, Rng& rng) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& m : monomial_basis(ring->n_vars(), k)) terms.push_back({m, ring->field().random(rng)});
  return Polynomial<F>(ring, std::move(terms));
}

namespace defect_detail {

template <class F>
DefectIdeal<F> combine(const MinorMatrix<F>& m, Strategy strategy, const RingPtr<F>& ring, Rng& rng) {
  const F& field = ring->field();
  DefectIdeal<F> out{strategy, {}, {}, {}, 0, {}};
  if (strategy == Strategy::Column) {
    for (std::size_t k = 0; k < m.cols(); ++k) out.coefficients.push_back(field.random(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Polynomial<F> v(ring);
      for (std::size_t k = 0; k < m.cols(); ++k) v += m.entries[i][k].scale(out.coefficients[k]);
      out.generators.push_back(std::move(v));
    }
  } else {
    const int top = *std::max_element(m.row_degrees.begin(), m.row_degrees.end());
    std::vector<Polynomial<F>> weights;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const int gap = top - m.row_degrees[i];
      if (gap == 0) {
        out.coefficients.push_back(field.random(rng));
        weights.push_back(Polynomial<F>::constant(ring, out.coefficients.back()));
      } else {
        weights.push_back(random_form(ring, gap, rng));
        out.row_weights.push_back(weights.back());
      }
    }
    for (std::size_t k = 0; k < m.cols(); ++k) {
      Polynomial<F> v(ring);
      for (std::size_t i = 0; i < m.rows(); ++i) v += weights[i] * m.entries[i][k];
      out.generators.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace defect_detail

/// Whether some generator is nonzero at every node. With coordinates this
/// is checked orbit by orbit; otherwise through the affine chart: the chart
/// ideal of the nodes plus the generators must be the unit ideal.
template <class F>
bool nonvanishing_at_nodes(const std::vector<Polynomial<F>>& gens, const NodeSet<F>& nodes) {
  if (nodes.has_points) {
    for (const auto& orbit : nodes.orbits) {
      const auto embed = residue_embedding<F>(orbit.field);
      bool some_nonzero = false;
      for (const auto& g : gens) {
        if (!orbit.field.is_zero(evaluate_in(g, orbit.field, orbit.coords, embed))) {
          some_nonzero = true;
          break;
        }
      }
      if (!some_nonzero) return false;
    }
    return true;
  }
  std::vector<Polynomial<F>> affine = nodes.affine_gb.elements();
  for (const auto& g : gens) affine.push_back(nodes.chart.dehomogenize(g));
  return groebner_basis(Ideal<F>(nodes.chart.affine_ring(), affine)).is_unit();
}

/// Random combination of the minor matrix whose entries do not vanish
/// simultaneously at any node; up to `attempts` draws.
template <class F>
DefectIdeal<F> sample_combination(const CompleteIntersection<F>& ci, const MinorMatrix<F>& m, Strategy strategy,
                                  const NodeSet<F>& nodes, Rng& rng, int attempts = 25) {
  for (int a = 1; a <= attempts; ++a) {
    auto ideal = defect_detail::combine(m, strategy, ci.ring(), rng);
    std::vector<Polynomial<F>> nonzero;
    for (const auto& g : ideal.generators)
      if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) continue;
    if (nodes.mu == 0 || nonvanishing_at_nodes(nonzero, nodes)) {
      ideal.generators = std::move(nonzero);
      ideal.attempts = a;
      ideal.certificate = nodes.mu == 0      ? "no nodes"
                          : nodes.has_points ? "nonzero value at every node orbit"
                                             : "chart ideal of the nodes plus I is the unit ideal";
      return ideal;
    }
  }
  throw Error(ErrorKind::CombinationSamplingFailed,
              "no combination avoiding all nodes in " + std::to_string(attempts) + " draws");
}

/// Rows of the multiplication matrix: g * m for each generator g and each
/// monomial m of degree k - deg g, in the degree-k monomial basis.
template <class F>
class GradedPiece {
 public:
  GradedPiece(const RingPtr<F>& ring, int k) : ring_(ring), k_(k), basis_(monomial_basis(ring->n_vars(), k)) {
    if (basis_.size() > 5000) {
      throw Error(ErrorKind::CapacityExceeded, "degree-" + std::to_string(k) + " piece has " +
                                                   std::to_string(basis_.size()) + " monomials");
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  const std::vector<Monomial>& monomials() const { return basis_; }
  int degree() const { return k_; }

  std::vector<typename F::Element> coordinates(const Polynomial<F>& f) const {
    std::vector<typename F::Element> v(basis_.size(), ring_->field().zero());
    for (const auto& t : f.terms()) {
      auto it = index_.find(t.mono);
      if (it == index_.end()) {
        throw Error(ErrorKind::InvalidArgument, "term " + to_string(Polynomial<F>::term(f.ring(), t.mono, t.coeff)) +
                                                    " is not of degree " + std::to_string(k_));
      }
      v[it->second] = t.coeff;
    }
    return v;
  }

  /// Row echelon form of the span of gens in degree k.
  RowEchelon<F> span(const std::vector<Polynomial<F>>& gens) const {
    RowEchelon<F> ech(ring_->field(), basis_.size());
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "graded pieces need homogeneous generators");
      const int shift = k_ - g.degree();
      if (shift < 0) continue;
      for (const auto& m : monomial_basis(ring_->n_vars(), shift)) {
        if (ech.rank() == basis_.size()) return ech;
        ech.insert(coordinates(g.mul_term(m, ring_->field().one())));
      }
    }
    return ech;
  }

 private:
  RingPtr<F> ring_;
  int k_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

template <class F>
std::size_t graded_piece_dimension(const std::vector<Polynomial<F>>& gens, int k, const RingPtr<F>& ring) {
  if (k < 0) return 0;
  for (const auto& g : gens) {
    if (!g.is_zero() && g.degree() > k) {
      throw Error(ErrorKind::InvalidArgument, "generator of degree " + std::to_string(g.degree()) + " above " +
                                                  std::to_string(k));
    }
  }
  return GradedPiece<F>(ring, k).span(gens).rank();
}

enum class Method { Ideal, Points, Both };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::Ideal: return "ideal";
    case Method::Points: return "points";
    case Method::Both: return "both";
  }
  return "?";
}

/// Rank of the evaluation of a degree-k space (given by coordinate rows in
/// the monomial basis) at the nodes. Each orbit contributes the F_p
/// coordinates of its representative's values, which has the same rank as
/// evaluating at all conjugate points.
template <class F>
std::size_t evaluation_rank(const std::vector<std::vector<typename F::Element>>& basis, const GradedPiece<F>& piece,
                            const NodeSet<F>& nodes, const F& field) {
  if (basis.empty()) return 0;
  std::vector<std::vector<typename F::Element>> rows;
  for (const auto& orbit : nodes.orbits) {
    const auto& k = orbit.field;
    // Values of all degree-k monomials at the representative.
    std::vector<typename ResidueFieldOf<F>::type::Element> mono_values;
    for (const auto& m : piece.monomials()) {
      auto v = k.one();
      for (int i = 0; i < static_cast<int>(orbit.coords.size()); ++i)
        if (m[i] != 0) v = k.mul(v, k.pow(orbit.coords[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(m[i])));
      mono_values.push_back(std::move(v));
    }
    const std::size_t e = static_cast<std::size_t>(orbit.size());
    std::vector<std::vector<typename F::Element>> block(e, std::vector<typename F::Element>(basis.size(), field.zero()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto acc = k.zero();
      for (std::size_t c = 0; c < basis[b].size(); ++c) {
        if (field.is_zero(basis[b][c])) continue;
        acc = k.add(acc, k.mul(residue_embedding<F>(k)(basis[b][c]), mono_values[c]));
      }
      if constexpr (std::is_same_v<F, PrimeField>) {
        for (std::size_t j = 0; j < e; ++j) block[j][b] = acc[j];
      } else {
        block[0][b] = acc;
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  return rank(DenseMatrix<F>::from_rows(field, rows));
}

template <class F>
struct DefectReport {
  std::size_t mu = 0;
  int k_star = 0;
  std::size_t dim_i = 0;
  std::size_t dim_ij = 0;
  std::size_t delta = 0;
  Strategy strategy = kDefaultStrategy;
  Method method = Method::Both;
  std::optional<std::size_t> dim_ij_ideal;
  std::optional<std::size_t> dim_ij_points;
  DefectIdeal<F> ideal;
};

/// dim (I intersect J)_k by the requested method(s).
template <class F>
std::pair<std::optional<std::size_t>, std::optional<std::size_t>> intersection_dimension(
    const std::vector<Polynomial<F>>& gens, const NodeSet<F>& nodes, int k, Method method, const RingPtr<F>& ring) {
  std::optional<std::size_t> by_ideal, by_points;
  const GradedPiece<F> piece(ring, k);
  if (method != Method::Points) {
    auto inter = ideal_intersection(Ideal<F>(ring, gens), nodes.j_sigma, k);
    std::vector<Polynomial<F>> low;
    for (const auto& g : inter.generators())
      if (g.degree() <= k) low.push_back(g);
    by_ideal = piece.span(low).rank();
  }
  if (method != Method::Ideal) {
    if (!nodes.has_points) throw Error(ErrorKind::InvalidArgument, "the points method needs node coordinates");
    const auto span = piece.span(gens);
    by_points = span.rank() - evaluation_rank(span.reduced_rows(), piece, nodes, ring->field());
  }
  if (by_ideal && by_points && *by_ideal != *by_points) {
    throw Error(ErrorKind::MethodDisagreement, "ideal method gives " + std::to_string(*by_ideal) +
                                                   ", points method gives " + std::to_string(*by_points));
  }
  return {by_ideal, by_points};
}

/// delta = mu - (dim I_k - dim (I cap J)_k) for k = 2d - 2r - 3.
template <class F>
DefectReport<F> compute_defect(const CompleteIntersection<F>& ci, const NodeSet<F>& nodes, Strategy strategy,
                               Method method, Rng& rng) {
  DefectReport<F> rep;
  rep.mu = nodes.mu;
  rep.k_star = ci.k_star();
  rep.strategy = strategy;
  rep.method = method;
  const auto minors = wedge_minor_matrix(ci);
  rep.ideal = sample_combination(ci, minors, strategy, nodes, rng);
  if (rep.k_star < 0) {
    rep.delta = rep.mu;
    return rep;
  }
  rep.dim_i = graded_piece_dimension(rep.ideal.generators, rep.k_star, ci.ring());
  if (nodes.mu == 0) {
    rep.dim_ij = rep.dim_i;
  } else {
    auto [a, b] = intersection_dimension(rep.ideal.generators, nodes, rep.k_star, method, ci.ring());
    rep.dim_ij_ideal = a;
    rep.dim_ij_points = b;
    rep.dim_ij = a ? *a : *b;
  }
  const std::size_t imposed = rep.dim_i - rep.dim_ij;
  if (imposed > rep.mu) {
    throw Error(ErrorKind::MethodDisagreement, "nodes impose more conditions than there are nodes");
  }
  rep.delta = rep.mu - imposed;
  return rep;
}

}  // namespace nodal
