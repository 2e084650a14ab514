#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nodal/matrix.hpp"
#include "nodal/rng.hpp"

using namespace nodal;

namespace {

template <class F>
DenseMatrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, Rng& rng) {
  DenseMatrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.random(rng);
  return m;
}

template <class F>
DenseMatrix<F> random_invertible_matrix(const F& f, std::size_t n, Rng& rng) {
  while (true) {
    auto m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

// Independent rank oracle: elimination that pivots on the last nonzero entry
// of each column and processes columns right to left.
template <class F>
std::size_t rank_reverse_pivoting(DenseMatrix<F> m) {
  const F& f = m.field();
  std::size_t r = 0;
  std::vector<bool> used(m.rows(), false);
  for (std::size_t cc = m.cols(); cc-- > 0;) {
    std::size_t p = m.rows();
    for (std::size_t i = m.rows(); i-- > 0;)
      if (!used[i] && !f.is_zero(m(i, cc))) {
        p = i;
        break;
      }
    if (p == m.rows()) continue;
    used[p] = true;
    ++r;
    const auto inv = f.inv(m(p, cc));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (used[i] || f.is_zero(m(i, cc))) continue;
      const auto factor = f.mul(m(i, cc), inv);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(p, j)));
    }
  }
  return r;
}

}  // namespace

TEST_CASE("rref basics") {
  RationalField q;
  auto id = DenseMatrix<RationalField>::identity(q, 2);
  CHECK(rref(id).rank == 2);
  auto m = DenseMatrix<RationalField>::from_ints(q, {{1, 2}, {2, 4}});
  auto res = rref(m);
  CHECK(res.rank == 1);
  CHECK(res.pivot_columns == std::vector<std::size_t>{0});
  CHECK(res.reduced(0, 1) == 2);
  CHECK(res.reduced(1, 0) == 0);
}

TEST_CASE("rank of a product through a 30-dimensional space") {
  PrimeField f(10007);
  Rng rng(30);
  auto a = random_matrix(f, 50, 30, rng), b = random_matrix(f, 30, 80, rng);
  auto m = a * b;
  const auto res = rref(m);
  CHECK(res.rank == 30);
  CHECK(res.rank <= std::min(m.rows(), m.cols()));
  CHECK(rank_reverse_pivoting(m) == 30);
  CHECK(rank(m) == 30);
  CHECK(rank(m.transpose()) == 30);
  // Reduced row echelon shape.
  for (std::size_t r = 0; r < res.rank; ++r) {
    const auto pc = res.pivot_columns[r];
    CHECK(f.is_one(res.reduced(r, pc)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r) CHECK(f.is_zero(res.reduced(i, pc)));
    for (std::size_t j = 0; j < pc; ++j) CHECK(f.is_zero(res.reduced(r, j)));
  }
  for (std::size_t r = res.rank; r < m.rows(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) CHECK(f.is_zero(res.reduced(r, j)));
}

TEST_CASE("kernel bases") {
  RationalField q;
  CHECK(kernel_basis(DenseMatrix<RationalField>::identity(q, 3)).empty());
  auto k = kernel_basis(DenseMatrix<RationalField>::from_ints(q, {{1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<mpq_class>{1, 1});

  PrimeField f(10007);
  Rng rng(31);
  auto m = random_matrix(f, 20, 12, rng) * random_matrix(f, 12, 35, rng);
  auto basis = kernel_basis(m);
  CHECK(basis.size() == 35 - rank(m));
  for (const auto& v : basis) {
    for (auto x : m.apply(v)) CHECK(x == 0);
  }
  CHECK(rank(DenseMatrix<PrimeField>::from_rows(f, basis)) == basis.size());
}

TEST_CASE("linear solving") {
  RationalField q;
  auto id = DenseMatrix<RationalField>::identity(q, 3);
  std::vector<mpq_class> b{1, mpq_class(2, 3), -5};
  CHECK(solve(id, b) == b);
  auto sing = DenseMatrix<RationalField>::from_ints(q, {{1, 1}, {1, 1}});
  CHECK(!solve(sing, {mpq_class(0), mpq_class(1)}).has_value());

  PrimeField f(10007);
  Rng rng(32);
  for (int t = 0; t < 10; ++t) {
    auto m = random_matrix(f, 15, 20, rng);
    std::vector<std::uint64_t> x(20);
    for (auto& v : x) v = f.random(rng);
    auto rhs = m.apply(x);
    auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == rhs);
  }
}

TEST_CASE("inverse and singular matrices") {
  PrimeField f(7919);
  Rng rng(33);
  auto m = random_invertible_matrix(f, 6, rng);
  CHECK(m * inverse(m) == DenseMatrix<PrimeField>::identity(f, 6));
  DenseMatrix<PrimeField> z(f, 3, 3);
  try {
    inverse(z);
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
}

TEST_CASE("rank invariance under permutations and invertible factors") {
  PrimeField f(10007);
  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    const std::size_t r = 5 + rng.below(10);
    auto m = random_matrix(f, 18, r, rng) * random_matrix(f, r, 22, rng);
    const auto base = rank(m);
    CHECK(base == r);
    CHECK(rank(random_invertible_matrix(f, 18, rng) * m * random_invertible_matrix(f, 22, rng)) == base);
    std::vector<std::size_t> perm(18);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(rng.next()));
    DenseMatrix<PrimeField> pm(f, 18, 22);
    for (std::size_t i = 0; i < 18; ++i)
      for (std::size_t j = 0; j < 22; ++j) pm(i, j) = m(perm[i], (j * 5) % 22);
    CHECK(rank(pm) == base);
    CHECK(rank(m.transpose()) == base);
  }
}

TEST_CASE("fraction-free elimination agrees with naive elimination over Q") {
  RationalField q(9);
  Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    const std::size_t rows = 3 + rng.below(6), cols = 3 + rng.below(6), inner = 1 + rng.below(6);
    auto a = random_matrix(q, rows, inner, rng), b = random_matrix(q, inner, cols, rng);
    auto m = a * b;
    // Non-integral entries exercise the denominator clearing.
    for (std::size_t j = 0; j < cols; ++j) m(0, j) /= 7;
    CHECK(bareiss_rank(m) == rref(m).rank);
  }
}

TEST_CASE("incremental echelon matches rref and enforces the size cap") {
  PrimeField f(10007);
  Rng rng(36);
  auto m = random_matrix(f, 12, 4, rng) * random_matrix(f, 4, 10, rng);
  RowEchelon<PrimeField> ech(f, 10);
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  CHECK(ech.rank() == 4);
  auto res = rref(m);
  auto rows = ech.reduced_rows();
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(rows[i] == res.reduced.row(i));
  CHECK_THROWS_AS(RowEchelon<PrimeField>(f, 6000), Error);
}
