#pragma once

#include <vector>

#include "nodal/matrix.hpp"
#include "nodal/polynomial.hpp"

namespace nodal {

/// Linear forms sum_j M(i, j) x_j, one per row.
template <class F>
std::vector<Polynomial<F>> linear_forms(const RingPtr<F>& ring, const DenseMatrix<F>& m) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t j = 0; j < m.cols(); ++j) terms.push_back({Monomial::variable(static_cast<int>(j)), m(i, j)});
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

/// f(Mx): variable i is replaced by the i-th row of M applied to x.
template <class F>
Polynomial<F> linear_substitution(const Polynomial<F>& f, const DenseMatrix<F>& m) {
  const auto n = static_cast<std::size_t>(f.ring()->n_vars());
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::InvalidArgument, "substitution matrix has wrong size");
  if (!is_invertible(m)) throw Error(ErrorKind::SingularMatrix, "substitution matrix is singular");
  return substitute(f, linear_forms(f.ring(), m));
}

/// Image of a point under x -> M^{-1} x, so that linear_substitution(f, M)
/// vanishes at the image whenever f vanishes at the point.
template <class F>
std::vector<typename F::Element> pull_back_point(const DenseMatrix<F>& m, const std::vector<typename F::Element>& p) {
  return inverse(m).apply(p);
}

/// Random invertible n x n matrix.
template <class F>
DenseMatrix<F> random_invertible(const F& field, std::size_t n, Rng& rng) {
  while (true) {
    DenseMatrix<F> m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = field.random(rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace nodal
