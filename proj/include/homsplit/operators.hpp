#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homsplit/axioms.hpp"
#include "homsplit/linalg.hpp"

namespace homsplit {

enum class OperatorKind {
  averaging_assoc,
  rota_baxter,
  relative_averaging,
  homomorphic_relative_averaging,
  averaging_quadri
};

std::string_view operator_kind_name(OperatorKind kind);
OperatorKind parse_operator_kind(std::string_view name);
/// Algebra kind an operator of this kind acts on when given a plain algebra.
Kind operator_target_kind(OperatorKind kind);

/// Whether the twist-commutation condition belongs to the kind.
bool requires_twist_commutation(OperatorKind kind, bool strict_twist);

/// A context plus the identities an operator must satisfy. The operator is
/// the map named "T" in the context.
template <typename Scalar>
struct OperatorProblem {
  EvalContext<Scalar> ctx;
  std::vector<IdentityTemplate> identities;
};

/// Operators on a plain algebra: averaging_assoc (associative),
/// rota_baxter (diassociative), averaging_quadri (quadri-dendriform), and
/// relative_averaging / homomorphic_relative_averaging on a dendriform
/// algebra, taken with respect to its adjoint representation / action.
template <typename Scalar>
OperatorProblem<Scalar> operator_problem(OperatorKind kind, const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& op,
                                         bool strict_twist = false);
/// relative_averaging with respect to a representation; T: V -> D.
template <typename Scalar>
OperatorProblem<Scalar> operator_problem(const BasicRepresentation<Scalar>& r, const Matrix<Scalar>& t);

template <typename Scalar>
Report verify_operator(OperatorKind kind, const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& op,
                       bool strict_twist = false);

template <typename Scalar>
Report verify_averaging_assoc(const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& h, bool strict_twist = false);
template <typename Scalar>
Report verify_rota_baxter(const BasicAlgebra<Scalar>& d, const Matrix<Scalar>& r);
template <typename Scalar>
Report verify_relative_averaging(const BasicRepresentation<Scalar>& r, const Matrix<Scalar>& t);
/// Relative averaging for the action's representation plus T being a
/// dendriform homomorphism from the acted algebra to the acting one.
template <typename Scalar>
Report verify_homomorphic_relative_averaging(const BasicAction<Scalar>& a, const Matrix<Scalar>& t);
template <typename Scalar>
Report verify_averaging_quadri(const BasicAlgebra<Scalar>& q, const Matrix<Scalar>& h);

enum class GraphDirection {
  /// Gr(T) = {(Tu, u)} inside D (+) V, T: V -> D, D first.
  module_to_base,
  /// Gamma = {(x, xi x)} inside A (+) B, xi: A -> B, A first.
  first_to_second
};

/// Closure of the graph of `map` under every container op and the twist.
template <typename Scalar>
Report graph_is_subalgebra(const BasicAlgebra<Scalar>& container, const Matrix<Scalar>& map, GraphDirection dir);

/// Symbolic matrix whose (r, c) entry is the parameter prefix + r + c
/// (1-based), e.g. h12.
PolyMatrix unknown_matrix(int rows, int cols, const std::string& prefix = "h");

/// The polynomial system in the unknown entries whose common zeros are the
/// operators of `kind` on `a`. Each equation is scaled to leading
/// coefficient 1, duplicates dropped, sorted. Throws std::invalid_argument
/// when an unknown name collides with a parameter of `a`.
std::vector<Polynomial> emit_operator_system(OperatorKind kind, const AlgebraBundle& a,
                                             const std::string& prefix = "h", bool strict_twist = false);

struct GridOptions {
  std::vector<Rational> values;
  /// Refuse searches with more candidates than this.
  std::size_t max_candidates = 20'000'000;
  bool strict_twist = false;
};

/// Values k/d for k in [lo, hi] and d in denominators, deduplicated, sorted.
std::vector<Rational> grid_values(int lo, int hi, const std::vector<int>& denominators = {1});

/// Linear-first grid search: solves the twist-commutation constraint exactly
/// when the kind carries it, enumerates the free coordinates over the grid
/// and keeps the operators passing every identity. Results are sorted
/// lexicographically on row-major entries. Requires dim <= 3 and a
/// parameter-free algebra.
std::vector<RatMatrix> solve_operators_grid(OperatorKind kind, const AlgebraBundle& a, const GridOptions& opts);

/// Row-major lexicographic order on rational matrices of equal shape.
bool matrix_less(const RatMatrix& a, const RatMatrix& b);

/// Finds values of the family's own parameters making it equal to `m`.
/// Only families whose entries are affine in their parameters are supported
/// (nullopt with `supported = false` otherwise).
struct FamilyMatch {
  bool supported = true;
  std::optional<std::map<std::string, Rational>> values;
};
FamilyMatch family_membership(const PolyMatrix& family, const std::vector<std::string>& family_params,
                              const RatMatrix& m);

/// Replaces every power i^k of the named parameter by its value under
/// i^2 = -1.
Polynomial reduce_imaginary_unit(const Polynomial& p, const std::string& name = "i");
Report reduce_imaginary_unit(const Report& r, const std::string& name = "i");

} // namespace homsplit
