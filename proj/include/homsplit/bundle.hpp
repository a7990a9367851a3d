#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "homsplit/report.hpp"
#include "homsplit/tensor.hpp"

namespace homsplit {

enum class Kind { associative, dendriform, diassociative, triassociative, quadri_dendriform, six_dendriform };

std::string_view kind_name(Kind kind);
Kind parse_kind(std::string_view name);
/// The exact set of operation names an algebra of this kind carries.
const std::vector<std::string>& required_ops(Kind kind);

/// Operation names used in bundles and files.
namespace opname {
inline constexpr const char* mu = "mu";
inline constexpr const char* prec = "prec";
inline constexpr const char* succ = "succ";
inline constexpr const char* dashv = "dashv";
inline constexpr const char* vdash = "vdash";
inline constexpr const char* perp = "perp";
inline constexpr const char* prec_vdash = "prec_vdash";
inline constexpr const char* prec_dashv = "prec_dashv";
inline constexpr const char* succ_vdash = "succ_vdash";
inline constexpr const char* succ_dashv = "succ_dashv";
inline constexpr const char* prec_perp = "prec_perp";
inline constexpr const char* succ_perp = "succ_perp";
// module actions
inline constexpr const char* prec_l = "prec_l";
inline constexpr const char* succ_l = "succ_l";
inline constexpr const char* prec_r = "prec_r";
inline constexpr const char* succ_r = "succ_r";
} // namespace opname

/// A based Hom-algebra of some kind: named structure-constant tensors plus
/// the twist map alpha. Stores whatever it is given; validate_bundle reports
/// structural problems.
template <typename Scalar>
struct BasicAlgebra {
  Kind kind = Kind::associative;
  int dim = 0;
  std::map<std::string, BilinearOp<Scalar>> ops;
  Matrix<Scalar> twist;
  std::vector<std::string> parameters;

  const BilinearOp<Scalar>& op(const std::string& name) const;
  BilinearOp<Scalar>& op(const std::string& name) { return ops.at(name); }

  friend bool operator==(const BasicAlgebra& a, const BasicAlgebra& b) {
    return a.kind == b.kind && a.dim == b.dim && a.ops == b.ops && a.twist == b.twist &&
           a.parameters == b.parameters;
  }
};

/// Representation (M, prec_l, succ_l, prec_r, succ_r, beta) of a dendriform
/// algebra. Left actions have shape D x M -> M, right actions M x D -> M.
template <typename Scalar>
struct BasicRepresentation {
  BasicAlgebra<Scalar> base;
  int module_dim = 0;
  std::map<std::string, BilinearOp<Scalar>> actions;
  Matrix<Scalar> module_twist;
};

/// Action of a dendriform algebra D on another dendriform algebra D'.
template <typename Scalar>
struct BasicAction {
  BasicAlgebra<Scalar> acting;
  BasicAlgebra<Scalar> acted;
  std::map<std::string, BilinearOp<Scalar>> actions;

  BasicRepresentation<Scalar> representation() const {
    return {acting, acted.dim, actions, acted.twist};
  }
};

using AlgebraBundle = BasicAlgebra<Polynomial>;
using RepresentationBundle = BasicRepresentation<Polynomial>;
using ActionBundle = BasicAction<Polynomial>;
using LinearMap = PolyMatrix;

template <typename Scalar>
const BilinearOp<Scalar>& BasicAlgebra<Scalar>::op(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) throw std::invalid_argument("bundle has no operation '" + name + "'");
  return it->second;
}

/// Structural checks only (op names vs kind, shapes, index ranges, declared
/// parameters). Never checks axioms.
Report validate_bundle(const AlgebraBundle& b);
Report validate_representation(const RepresentationBundle& r);
Report validate_action(const ActionBundle& a);

/// Specializes every entry; bound parameters leave the declared list.
/// Throws std::invalid_argument when binding an undeclared parameter.
AlgebraBundle bundle_specialize(const AlgebraBundle& b, const std::map<std::string, Rational>& bindings);
RepresentationBundle bundle_specialize(const RepresentationBundle& r,
                                       const std::map<std::string, Rational>& bindings);
ActionBundle bundle_specialize(const ActionBundle& a, const std::map<std::string, Rational>& bindings);

bool is_parameter_free(const AlgebraBundle& b);
std::set<std::string> used_parameters(const AlgebraBundle& b);

/// Exact rational copy of a parameter-free bundle; throws otherwise.
BasicAlgebra<Rational> to_rational(const AlgebraBundle& b);
BasicRepresentation<Rational> to_rational(const RepresentationBundle& r);
BasicAction<Rational> to_rational(const ActionBundle& a);

template <typename Scalar>
BasicAlgebra<Polynomial> to_polynomial(const BasicAlgebra<Scalar>& b) {
  BasicAlgebra<Polynomial> out{b.kind, b.dim, {}, to_poly_matrix(b.twist), b.parameters};
  for (const auto& [name, op] : b.ops)
    out.ops.emplace(name, op.transform([](const Scalar& s) { return to_polynomial(s); }));
  return out;
}

/// All required ops present and zero.
template <typename Scalar = Polynomial>
BasicAlgebra<Scalar> zero_algebra(Kind kind, int dim, Matrix<Scalar> twist = {}) {
  BasicAlgebra<Scalar> b;
  b.kind = kind;
  b.dim = dim;
  for (const auto& name : required_ops(kind)) b.ops.emplace(name, BilinearOp<Scalar>(dim));
  b.twist = twist.size() == 0 ? Matrix<Scalar>(Matrix<Scalar>::Identity(dim, dim)) : std::move(twist);
  return b;
}

/// D acting on itself: prec_l = prec_r = prec, succ_l = succ_r = succ, beta = alpha.
template <typename Scalar>
BasicRepresentation<Scalar> adjoint_representation(const BasicAlgebra<Scalar>& d) {
  BasicRepresentation<Scalar> r;
  r.base = d;
  r.module_dim = d.dim;
  r.actions.emplace(opname::prec_l, d.op(opname::prec));
  r.actions.emplace(opname::prec_r, d.op(opname::prec));
  r.actions.emplace(opname::succ_l, d.op(opname::succ));
  r.actions.emplace(opname::succ_r, d.op(opname::succ));
  r.module_twist = d.twist;
  return r;
}

/// The adjoint action of a dendriform algebra on itself.
template <typename Scalar>
BasicAction<Scalar> adjoint_action(const BasicAlgebra<Scalar>& d) {
  auto rep = adjoint_representation(d);
  return {d, d, rep.actions};
}

} // namespace homsplit
