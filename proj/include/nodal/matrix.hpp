#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nodal/field.hpp"

namespace nodal {

/// Largest dimension of a dense matrix the kernels accept.
inline constexpr std::size_t kMaxMatrixDimension = 5000;

template <class F>
class DenseMatrix {
 public:
  using Element = typename F::Element;

  DenseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static DenseMatrix identity(F field, std::size_t n) {
    DenseMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  static DenseMatrix from_rows(F field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(std::move(field), rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static DenseMatrix from_ints(F field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<Element>> conv;
    for (const auto& r : rows) {
      std::vector<Element> row;
      for (auto v : r) row.push_back(field.from_int(v));
      conv.push_back(std::move(row));
    }
    return from_rows(std::move(field), conv);
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Element> row(std::size_t i) const {
    return std::vector<Element>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  DenseMatrix transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::InvalidArgument, "matrix dimension mismatch");
    DenseMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
      }
    return r;
  }

  std::vector<Element> apply(const std::vector<Element>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class F>
struct RrefResult {
  DenseMatrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
template <class F>
RrefResult<F> rref(DenseMatrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, row);
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!f.is_zero(m(row, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult<F>{std::move(m), row, std::move(pivots)};
}

/// Incremental row echelon basis: rows are reduced against stored pivots as
/// they arrive, so tall matrices never need to be materialized.
template <class F>
class RowEchelon {
 public:
  using Element = typename F::Element;

  RowEchelon(F field, std::size_t cols) : field_(std::move(field)), cols_(cols), pivot_row_(cols, npos) {
    if (cols > kMaxMatrixDimension) {
      throw Error(ErrorKind::CapacityExceeded,
                  "matrix with " + std::to_string(cols) + " columns exceeds capacity " + std::to_string(kMaxMatrixDimension));
    }
  }

  /// Reduces v in place against the basis; returns true if it was new (and
  /// then stores it).
  bool insert(std::vector<Element> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < cols_ && field_.is_zero(v[lead])) ++lead;
    if (lead == cols_) return false;
    const auto inv = field_.inv(v[lead]);
    for (std::size_t j = lead; j < cols_; ++j) v[j] = field_.mul(v[j], inv);
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  /// Subtracts multiples of stored rows at their pivot columns.
  void reduce(std::vector<Element>& v) const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_zero(v[j]) || pivot_row_[j] == npos) continue;
      const auto& r = rows_[pivot_row_[j]];
      const auto c = v[j];
      for (std::size_t k = j; k < cols_; ++k) {
        if (!field_.is_zero(r[k])) v[k] = field_.sub(v[k], field_.mul(c, r[k]));
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::vector<Element>>& rows() const { return rows_; }

  /// Fully reduced basis rows sorted by pivot column.
  std::vector<std::vector<Element>> reduced_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return leads_[a] < leads_[b]; });
    std::vector<std::vector<Element>> out;
    for (auto idx : order) out.push_back(rows_[idx]);
    // Back-substitute from the bottom so each pivot column is clean.
    for (std::size_t i = out.size(); i-- > 0;) {
      const std::size_t lead = leads_[order[i]];
      for (std::size_t k = 0; k < i; ++k) {
        const auto c = out[k][lead];
        if (field_.is_zero(c)) continue;
        for (std::size_t j = lead; j < cols_; ++j) out[k][j] = field_.sub(out[k][j], field_.mul(c, out[i][j]));
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  F field_;
  std::size_t cols_;
  std::vector<std::vector<Element>> rows_;
  std::vector<std::size_t> leads_;
  std::vector<std::size_t> pivot_row_;
};

template <class F>
std::size_t rank(const DenseMatrix<F>& m) {
  if (m.cols() == 0) return 0;
  RowEchelon<F> echelon(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows() && echelon.rank() < m.cols(); ++i) echelon.insert(m.row(i));
  return echelon.rank();
}

/// Basis of {v : M v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Element>> kernel_basis(const DenseMatrix<F>& m) {
  const auto res = rref(m);
  const F& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < res.rank; ++r) v[res.pivot_columns[r]] = f.neg(res.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution of M x = b, or nullopt when an inconsistent row appears.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const DenseMatrix<F>& m, const std::vector<typename F::Element>& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side length mismatch");
  const F& f = m.field();
  DenseMatrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto res = rref(std::move(aug));
  if (!res.pivot_columns.empty() && res.pivot_columns.back() == m.cols()) return std::nullopt;
  std::vector<typename F::Element> x(m.cols(), f.zero());
  for (std::size_t r = 0; r < res.rank; ++r) x[res.pivot_columns[r]] = res.reduced(r, m.cols());
  return x;
}

template <class F>
bool is_invertible(const DenseMatrix<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class F>
DenseMatrix<F> inverse(const DenseMatrix<F>& m) {
  if (!is_invertible(m)) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  const std::size_t n = m.rows();
  DenseMatrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const auto res = rref(std::move(aug));
  DenseMatrix<F> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.reduced(i, n + j);
  return inv;
}

/// Fraction-free (Bareiss) elimination over Q: rows are cleared to integers
/// and every division is exact. Returns the rank.
inline std::size_t bareiss_rank(const DenseMatrix<RationalField>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace nodal
