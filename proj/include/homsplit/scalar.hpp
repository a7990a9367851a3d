#pragma once

#include <Eigen/Core>

#include "homsplit/polynomial.hpp"
#include "homsplit/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<homsplit::Rational> : GenericNumTraits<homsplit::Rational> {
  using Real = homsplit::Rational;
  using NonInteger = homsplit::Rational;
  using Literal = homsplit::Rational;
  using Nested = homsplit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<homsplit::Polynomial> : GenericNumTraits<homsplit::Polynomial> {
  using Real = homsplit::Polynomial;
  using NonInteger = homsplit::Polynomial;
  using Literal = homsplit::Polynomial;
  using Nested = homsplit::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace homsplit {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using PolyMatrix = Matrix<Polynomial>;
using PolyVector = Vector<Polynomial>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

template <typename Scalar>
bool is_zero_vector(const Vector<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// e_index in dimension dim, 1-based like the basis labels e_1, e_2, ...
template <typename Scalar>
Vector<Scalar> basis_vector(int dim, int index) {
  Vector<Scalar> v = Vector<Scalar>::Zero(dim);
  v(index - 1) = Scalar(1);
  return v;
}

inline Polynomial to_polynomial(const Rational& r) { return Polynomial(r); }
inline Polynomial to_polynomial(const Polynomial& p) { return p; }

template <typename Scalar>
PolyMatrix to_poly_matrix(const Matrix<Scalar>& m) {
  return m.unaryExpr([](const Scalar& s) { return to_polynomial(s); });
}

/// Exact conversion of a parameter-free polynomial matrix; throws if any
/// entry still carries a parameter.
RatMatrix to_rational_matrix(const PolyMatrix& m);
RatVector to_rational_vector(const PolyVector& v);

} // namespace homsplit
