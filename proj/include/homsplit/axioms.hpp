#pragma once

#include <string>
#include <vector>

#include "homsplit/bundle.hpp"
#include "homsplit/identity.hpp"

namespace homsplit {

/// Two readings of the fifteenth six-dendriform identity. `literal` keeps the
/// printed mix of succ_dashv and prec_dashv; `symmetric` uses succ_dashv on
/// all three members of the chain.
enum class Sq15Mode { literal, symmetric };

std::string_view sq15_name(Sq15Mode mode);
Sq15Mode parse_sq15(std::string_view name);

/// Template sets. Every set refers to space 0 for the algebra; module and
/// acted-algebra identities use space 1.
namespace templates {

std::vector<IdentityTemplate> dendriform(const std::string& prec = "prec", const std::string& succ = "succ",
                                         const std::string& prefix = "dend.");
std::vector<IdentityTemplate> associative(const std::string& mu = "mu", const std::string& prefix = "assoc.");
std::vector<IdentityTemplate> diassociative(const std::string& prefix = "dias.");
/// Chained equalities split as first = second (.a) and first = third (.b).
std::vector<IdentityTemplate> quadri(const std::string& prefix = "quadri.");
std::vector<IdentityTemplate> triassociative();
std::vector<IdentityTemplate> six(Sq15Mode mode = Sq15Mode::literal);
/// The second = third members of every split chain, for cross-checks.
std::vector<IdentityTemplate> quadri_third_pairs();
std::vector<IdentityTemplate> six_third_pairs(Sq15Mode mode = Sq15Mode::literal);

/// Base ops prec, succ on space 0; actions prec_l, succ_l, prec_r, succ_r
/// with module space 1.
std::vector<IdentityTemplate> representation(const std::string& prefix = "rep.");
/// Acted algebra ops acted.prec, acted.succ on space 1.
std::vector<IdentityTemplate> action_equations();
std::vector<IdentityTemplate> multiplicative(const std::vector<std::string>& ops);

std::vector<IdentityTemplate> for_kind(Kind kind, Sq15Mode mode = Sq15Mode::literal);

} // namespace templates

/// Context with one space (index 0) carrying the algebra's ops under their
/// bundle names.
template <typename Scalar>
EvalContext<Scalar> algebra_context(const BasicAlgebra<Scalar>& b) {
  EvalContext<Scalar> ctx;
  ctx.add_space(b.dim, b.twist);
  for (const auto& [name, op] : b.ops) ctx.add_op(name, op, 0, 0, 0);
  return ctx;
}

/// Base algebra on space 0, module on space 1.
template <typename Scalar>
EvalContext<Scalar> representation_context(const BasicRepresentation<Scalar>& r) {
  auto ctx = algebra_context(r.base);
  ctx.add_space(r.module_dim, r.module_twist);
  for (const auto& [name, op] : r.actions) {
    if (name.ends_with("_l")) ctx.add_op(name, op, 0, 1, 1);
    else ctx.add_op(name, op, 1, 0, 1);
  }
  return ctx;
}

template <typename Scalar>
EvalContext<Scalar> action_context(const BasicAction<Scalar>& a) {
  auto ctx = representation_context(a.representation());
  for (const auto& [name, op] : a.acted.ops) ctx.add_op("acted." + name, op, 1, 1, 1);
  return ctx;
}

/// Per-kind checkers. Each throws std::invalid_argument on a wrong kind.
template <typename Scalar> Report check_dendriform(const BasicAlgebra<Scalar>& b);
template <typename Scalar> Report check_associative(const BasicAlgebra<Scalar>& b);
template <typename Scalar> Report check_diassociative(const BasicAlgebra<Scalar>& b);
template <typename Scalar> Report check_quadri(const BasicAlgebra<Scalar>& b);
template <typename Scalar> Report check_triassociative(const BasicAlgebra<Scalar>& b);
template <typename Scalar> Report check_six(const BasicAlgebra<Scalar>& b, Sq15Mode mode = Sq15Mode::literal);
/// Dispatches on b.kind.
template <typename Scalar> Report check_algebra(const BasicAlgebra<Scalar>& b, Sq15Mode mode = Sq15Mode::literal);
template <typename Scalar> bool algebra_holds(const BasicAlgebra<Scalar>& b, Sq15Mode mode = Sq15Mode::literal);

template <typename Scalar> Report check_representation(const BasicRepresentation<Scalar>& r);
template <typename Scalar> Report check_action(const BasicAction<Scalar>& a);
/// alpha(x o y) = alpha(x) o alpha(y) for every op.
template <typename Scalar> Report check_multiplicative(const BasicAlgebra<Scalar>& b);

/// T: A -> B intertwines the operations and the twists. Kinds must agree,
/// except that a quadri- or six-dendriform source may map to a dendriform
/// target, each prec_* op going to prec and each succ_* op to succ.
template <typename Scalar>
Report check_homomorphism(const Matrix<Scalar>& t, const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b);

/// Source op -> target op pairs used by check_homomorphism.
std::vector<std::pair<std::string, std::string>> homomorphism_correspondence(Kind from, Kind to);

/// Restriction of a six-dendriform bundle to its quadri part or to its
/// (prec_perp, succ_perp) dendriform pair.
template <typename Scalar> BasicAlgebra<Scalar> six_quadri_part(const BasicAlgebra<Scalar>& b);
template <typename Scalar> BasicAlgebra<Scalar> six_perp_part(const BasicAlgebra<Scalar>& b);

} // namespace homsplit
