#pragma once

#include <optional>
#include <vector>

#include "homsplit/scalar.hpp"

namespace homsplit {

/// Reduced row-echelon form of a matrix over an exact field.
template <typename Field>
struct Echelon {
  Matrix<Field> rref;       // nonzero rows only
  std::vector<int> pivots;  // pivot column of each row, increasing
};

template <typename Field>
Echelon<Field> echelon(Matrix<Field> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Field inv = Field(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Field f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {Matrix<Field>(m.topRows(r)), std::move(pivots)};
}

template <typename Field>
int rank(const Matrix<Field>& m) {
  return static_cast<int>(echelon(m).pivots.size());
}

/// Basis of {x : m x = 0}, one column per free variable.
template <typename Field>
Matrix<Field> nullspace(const Matrix<Field>& m) {
  const auto e = echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<Field> basis = Matrix<Field>::Zero(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = Field(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], f) = -e.rref(r, free[f]);
  }
  return basis;
}

/// One solution of a x = b, if the system is consistent.
template <typename Field>
std::optional<Vector<Field>> solve(const Matrix<Field>& a, const Vector<Field>& b) {
  Matrix<Field> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = echelon(aug);
  Vector<Field> x = Vector<Field>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.rref(r, a.cols());
  }
  return x;
}

template <typename Field>
std::optional<Matrix<Field>> inverse(const Matrix<Field>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  Matrix<Field> aug(n, 2 * n);
  aug << m, Matrix<Field>::Identity(n, n);
  const auto e = echelon(aug);
  if (e.pivots.size() < static_cast<std::size_t>(n) || e.pivots[n - 1] != n - 1) return std::nullopt;
  return Matrix<Field>(e.rref.rightCols(n));
}

/// Determinant by cofactor expansion along the first row. Works over any
/// commutative ring scalar, including Polynomial; meant for small sizes.
template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Scalar term = m(0, j) * determinant(minor);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

/// Coefficients [1, c_1, ..., c_n] of det(t I - m) by Faddeev-LeVerrier.
template <typename Field>
std::vector<Field> characteristic_polynomial(const Matrix<Field>& m) {
  const Eigen::Index n = m.rows();
  std::vector<Field> coeffs{Field(1)};
  Matrix<Field> mk = Matrix<Field>::Zero(n, n);
  const Matrix<Field> id = Matrix<Field>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + coeffs.back() * id;
    const Matrix<Field> amk = m * mk;
    Field trace(0);
    for (Eigen::Index i = 0; i < n; ++i) trace += amk(i, i);
    coeffs.push_back(-trace / Field(static_cast<long>(k)));
  }
  return coeffs;
}

/// Subspace of Q^n stored as its reduced row-echelon basis.
class Subspace {
public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace span(int ambient_dim, const std::vector<RatVector>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  /// 0-based coordinates not used as pivots; they index a complement basis.
  std::vector<int> complement() const;

  /// v minus its component along the pivots; zero iff v is in the subspace.
  RatVector reduce(const RatVector& v) const;
  bool contains(const RatVector& v) const { return is_zero_vector(reduce(v)); }
  /// Coordinates of the class of v in the complement basis.
  RatVector project(const RatVector& v) const;
  /// Matrix of the quotient map Q^n -> Q^n / W in complement coordinates.
  RatMatrix projection_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  int ambient_;
  RatMatrix basis_;
  std::vector<int> pivots_;
};

} // namespace homsplit
