#pragma once

// Points of a zero-dimensional radical affine ideal via the shape lemma: a
// generic linear form u generates the quotient algebra, its minimal
// polynomial h has one root per point, and every coordinate is a polynomial
// in u modulo h.

#include <vector>

#include "nodal/groebner.hpp"
#include "nodal/upoly.hpp"

namespace nodal {

template <class F>
struct ResidueFieldOf;
template <>
struct ResidueFieldOf<PrimeField> {
  using type = ExtensionField;
};
template <>
struct ResidueFieldOf<RationalField> {
  using type = RationalField;
};

/// One Galois orbit of points: a representative with coordinates in the
/// residue field F_p[t]/(h) of the orbit (or a rational point over Q).
template <class F>
struct PointOrbit {
  using K = typename ResidueFieldOf<F>::type;
  K field;
  std::vector<typename K::Element> coords;

  int size() const {
    if constexpr (std::is_same_v<K, ExtensionField>) {
      return field.degree();
    } else {
      return 1;
    }
  }
};

template <class F>
struct ZeroDimSolution {
  std::size_t quotient_dim = 0;
  /// False over Q when the minimal polynomial does not split into small
  /// rational roots; orbits is then empty.
  bool points_available = true;
  upoly::Coeffs<F> minimal_polynomial;
  std::vector<PointOrbit<F>> orbits;

  std::size_t point_count() const {
    std::size_t n = 0;
    for (const auto& o : orbits) n += static_cast<std::size_t>(o.size());
    return n;
  }
};

/// Matrices of multiplication by each variable on k[x]/I in the basis of
/// standard monomials; column j holds the normal form of x_i * basis[j].
template <class F>
std::vector<DenseMatrix<F>> multiplication_matrices(const GroebnerBasis<F>& gb, const std::vector<Monomial>& basis) {
  const auto& ring = gb.ring();
  const F& field = ring->field();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<DenseMatrix<F>> out;
  for (int v = 0; v < ring->n_vars(); ++v) {
    DenseMatrix<F> m(field, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Monomial prod = basis[j] * Monomial::variable(v);
      auto it = index.find(prod);
      if (it != index.end()) {
        m(it->second, j) = field.one();
        continue;
      }
      auto nf = gb.normal_form(Polynomial<F>::term(ring, prod, field.one()));
      for (const auto& t : nf.terms()) m(index.at(t.mono), j) = t.coeff;
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace zero_dim_detail {

inline constexpr std::uint64_t kReconstructionPrime = 2305843009213693951ULL;  // 2^61 - 1
inline constexpr long kRationalRootBound = 1000000;

/// Rational number n/d with |n|, |d| <= bound congruent to r mod p.
inline std::optional<mpq_class> rational_reconstruction(std::uint64_t r, std::uint64_t p, long bound) {
  mpz_class r0 = static_cast<unsigned long>(p), r1 = static_cast<unsigned long>(r);
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpq_class x(r1, t1);
  x.canonicalize();
  return x;
}

/// All roots of h in Q, provided h splits into distinct linear factors with
/// small rational roots.
inline std::optional<std::vector<mpq_class>> small_rational_roots(const RationalField& q,
                                                                   const upoly::Coeffs<RationalField>& h, Rng& rng) {
  const PrimeField fp(kReconstructionPrime);
  upoly::Coeffs<PrimeField> hp;
  for (const auto& c : h) {
    if (c.get_den() % static_cast<unsigned long>(kReconstructionPrime) == 0) return std::nullopt;
    hp.push_back(fp.div(fp.from_mpz(c.get_num()), fp.from_mpz(c.get_den())));
  }
  upoly::trim(fp, hp);
  if (upoly::degree<PrimeField>(hp) != upoly::degree<RationalField>(h) || !upoly::is_squarefree(fp, hp)) {
    return std::nullopt;
  }
  std::vector<mpq_class> roots;
  for (const auto& factor : upoly::factor_squarefree(fp, hp, rng)) {
    if (upoly::degree<PrimeField>(factor) != 1) return std::nullopt;
    auto root = rational_reconstruction(fp.neg(factor[0]), kReconstructionPrime, kRationalRootBound);
    if (!root || !q.is_zero(upoly::evaluate(q, h, *root))) return std::nullopt;
    roots.push_back(*root);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace zero_dim_detail

/// Points of a zero-dimensional radical ideal given by its Groebner basis.
/// Throws NotRadical when the minimal polynomial of a generic form is not
/// squarefree, SolverRetryExhausted when no separating form is found.
template <class F>
ZeroDimSolution<F> solve_zero_dimensional(const GroebnerBasis<F>& gb, Rng& rng, int attempts = 10) {
  const auto& ring = gb.ring();
  const F& field = ring->field();
  const int n = ring->n_vars();
  ZeroDimSolution<F> sol;
  if (gb.is_unit()) {
    sol.quotient_dim = 0;
    return sol;
  }
  auto basis = standard_monomials(gb);
  if (!basis) throw Error(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  const std::size_t mu = basis->size();
  sol.quotient_dim = mu;
  const auto mats = multiplication_matrices(gb, *basis);
  std::size_t one_index = 0;
  for (std::size_t i = 0; i < mu; ++i)
    if ((*basis)[i].is_one()) one_index = i;

  // Coordinates of each variable's normal form.
  std::vector<std::vector<typename F::Element>> var_vectors;
  for (int v = 0; v < n; ++v) {
    std::vector<typename F::Element> e(mu, field.zero());
    e[one_index] = field.one();
    var_vectors.push_back(mats[static_cast<std::size_t>(v)].apply(e));
  }

  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<typename F::Element> a(static_cast<std::size_t>(n));
    for (auto& c : a) c = field.random(rng);
    DenseMatrix<F> mu_mat(field, mu, mu);
    for (int v = 0; v < n; ++v) {
      const auto& mv = mats[static_cast<std::size_t>(v)];
      for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j)
          mu_mat(i, j) = field.add(mu_mat(i, j), field.mul(a[static_cast<std::size_t>(v)], mv(i, j)));
    }
    // Krylov sequence 1, u, u^2, ... until the first dependency.
    std::vector<std::vector<typename F::Element>> krylov;
    std::vector<typename F::Element> cur(mu, field.zero());
    cur[one_index] = field.one();
    RowEchelon<F> ech(field, mu);
    while (ech.insert(cur)) {
      krylov.push_back(cur);
      cur = mu_mat.apply(cur);
    }
    const std::size_t d = krylov.size();
    DenseMatrix<F> kmat(field, mu, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < mu; ++i) kmat(i, j) = krylov[j][i];
    auto rel = solve(kmat, cur);
    upoly::Coeffs<F> h(d + 1, field.zero());
    for (std::size_t i = 0; i < d; ++i) h[i] = field.neg((*rel)[i]);
    h[d] = field.one();
    if (!upoly::is_squarefree(field, h)) {
      throw Error(ErrorKind::NotRadical, "minimal polynomial of a generic linear form is not squarefree");
    }
    if (d < mu) continue;

    // x_v = c_v(u) modulo h.
    std::vector<upoly::Coeffs<F>> shape;
    for (int v = 0; v < n; ++v) {
      auto c = solve(kmat, var_vectors[static_cast<std::size_t>(v)]);
      upoly::Coeffs<F> cv = *c;
      upoly::trim(field, cv);
      shape.push_back(std::move(cv));
    }
    sol.minimal_polynomial = h;

    if constexpr (std::is_same_v<F, PrimeField>) {
      for (const auto& factor : upoly::factor_squarefree(field, h, rng)) {
        PointOrbit<F> orbit{ExtensionField(field, factor), {}};
        const auto theta = orbit.field.generator();
        for (const auto& cv : shape) {
          auto val = orbit.field.zero();
          for (std::size_t k = cv.size(); k-- > 0;) val = orbit.field.add(orbit.field.mul(val, theta), orbit.field.embed(cv[k]));
          orbit.coords.push_back(std::move(val));
        }
        sol.orbits.push_back(std::move(orbit));
      }
    } else {
      auto roots = zero_dim_detail::small_rational_roots(field, h, rng);
      if (!roots) {
        sol.points_available = false;
        return sol;
      }
      for (const auto& root : *roots) {
        PointOrbit<F> orbit{field, {}};
        for (const auto& cv : shape) orbit.coords.push_back(upoly::evaluate(field, cv, root));
        sol.orbits.push_back(std::move(orbit));
      }
    }
    for (const auto& orbit : sol.orbits) {
      for (const auto& g : gb.elements()) {
        auto val = evaluate_in(g, orbit.field, orbit.coords, [&](const auto& c) {
          if constexpr (std::is_same_v<F, PrimeField>) {
            return orbit.field.embed(c);
          } else {
            return c;
          }
        });
        if (!orbit.field.is_zero(val)) throw Error(ErrorKind::NotRadical, "extracted point fails a generator");
      }
    }
    return sol;
  }
  throw Error(ErrorKind::SolverRetryExhausted,
              "no separating linear form found in " + std::to_string(attempts) + " attempts");
}

template <class F>
ZeroDimSolution<F> solve_zero_dimensional(const Ideal<F>& ideal, Rng& rng, int attempts = 10) {
  return solve_zero_dimensional(groebner_basis(ideal, MonomialOrder::grevlex()), rng, attempts);
}

}  // namespace nodal
