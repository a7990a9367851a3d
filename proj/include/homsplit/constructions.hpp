#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "homsplit/axioms.hpp"
#include "homsplit/linalg.hpp"
#include "homsplit/operators.hpp"

namespace homsplit {

/// Thrown when a construction refuses an input whose precondition fails.
class PreconditionError : public std::runtime_error {
public:
  PreconditionError(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

private:
  Report report_;
};

struct BuildOptions {
  /// Build even when the precondition check fails.
  bool force = false;
  Sq15Mode sq15 = Sq15Mode::literal;
};

/// Sum-splittings: vdash = prec_vdash + succ_vdash, dashv = prec_dashv + succ_dashv
/// (and perp = prec_perp + succ_perp for six-dendriform input).
template <typename Scalar> BasicAlgebra<Scalar> quadri_to_diassociative(const BasicAlgebra<Scalar>& q);
template <typename Scalar> BasicAlgebra<Scalar> six_to_triassociative(const BasicAlgebra<Scalar>& s);

/// Block-diagonal ops and twist on A (+) B; kinds must agree.
template <typename Scalar> BasicAlgebra<Scalar> direct_sum(const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b);
template <typename Scalar> BasicAlgebra<Scalar> direct_sum_quadri(const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b);

/// Quadri-dendriform algebra on D (+) V from a representation, D first.
template <typename Scalar>
BasicAlgebra<Scalar> hemi_semidirect(const BasicRepresentation<Scalar>& r, const BuildOptions& opts = {});
/// Dendriform algebra on D (+) D' from an action, D first.
template <typename Scalar>
BasicAlgebra<Scalar> semidirect_dendriform(const BasicAction<Scalar>& a, const BuildOptions& opts = {});

/// a dashv b = mu(a, H b), a vdash b = mu(H a, b).
template <typename Scalar>
BasicAlgebra<Scalar> averaging_induced_diassociative(const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& h,
                                                     const BuildOptions& opts = {});
/// x o' y = R(x) o y + x o R(y) for o in {dashv, vdash}.
template <typename Scalar>
BasicAlgebra<Scalar> rota_baxter_induced(const BasicAlgebra<Scalar>& d, const Matrix<Scalar>& r,
                                         const BuildOptions& opts = {});
/// Quadri-dendriform structure on V: u prec_vdash v = T(u) prec_l v, etc.
template <typename Scalar>
BasicAlgebra<Scalar> relative_averaging_induced_quadri(const BasicRepresentation<Scalar>& r, const Matrix<Scalar>& t,
                                                       const BuildOptions& opts = {});
/// Six-dendriform structure on D': the quadri part as above plus the acted
/// algebra as the perp pair.
template <typename Scalar>
BasicAlgebra<Scalar> homomorphic_averaging_induced_six(const BasicAction<Scalar>& a, const Matrix<Scalar>& t,
                                                       const BuildOptions& opts = {});

/// Span of the differences e_i prec_dashv e_j - e_i prec_vdash e_j and
/// e_i succ_dashv e_j - e_i succ_vdash e_j.
Subspace ideal_ID(const BasicAlgebra<Rational>& q);

struct Quotient {
  Subspace ideal{0};
  /// Closure, twist stability and representative agreement failures.
  Report report;
  /// Present iff the report passes (or the build was forced).
  std::optional<BasicAlgebra<Rational>> algebra;
  /// D -> D / I_D in complement coordinates.
  RatMatrix projection;
  /// Complement basis coordinates (0-based) spanning D / I_D.
  std::vector<int> complement;
};

/// D / I_D with products taken from the vdash representatives. Accepts a
/// quadri- or six-dendriform algebra (the latter through its quadri part).
Quotient quotient_dendriform(const BasicAlgebra<Rational>& q, bool force = false);

/// Representation of D / I_D on D: class(c) prec_l y = c prec_vdash y,
/// y prec_r class(c) = y prec_dashv c, with c the complement lift.
BasicRepresentation<Rational> embedding_representation(const BasicAlgebra<Rational>& q, const Quotient& quotient);
/// Six-dendriform input: the same actions on the (prec_perp, succ_perp)
/// algebra, as an action of D / I_D.
BasicAction<Rational> embedding_action(const BasicAlgebra<Rational>& s, const Quotient& quotient);

} // namespace homsplit
