#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homsplit/axioms.hpp"
#include "homsplit/linalg.hpp"

namespace homsplit {

/// Isomorphism invariants of a parameter-free algebra.
struct Fingerprint {
  std::map<std::string, int> op_span_dims;  // dim span{e_i o e_j} per op
  int total_span_dim = 0;                   // dim of the span over all ops
  int twist_rank = 0;
  std::vector<Rational> twist_charpoly;     // [1, c1, ..., cn] of det(tI - alpha)
  int annihilator_dim = 0;                  // x with x o y = y o x = 0 for all ops, y

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  /// Name of the first differing field, empty if equal.
  friend std::string first_difference(const Fingerprint& a, const Fingerprint& b);
};

Fingerprint fingerprint(const BasicAlgebra<Rational>& b);
Fingerprint fingerprint(const AlgebraBundle& b);

/// Transport of structure along an invertible S: ops become
/// S o(S^-1 x, S^-1 y), the twist S alpha S^-1. Throws if S is singular.
template <typename Scalar>
BasicAlgebra<Scalar> push_forward(const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& s);

/// Homomorphism conditions plus invertibility of T. A singular T adds an
/// entry "iso.singular" with residual 1.
template <typename Scalar>
Report verify_isomorphism(const Matrix<Scalar>& t, const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b);

struct IsoSearchResult {
  enum class Verdict { isomorphic, distinct, unknown } verdict = Verdict::unknown;
  std::optional<RatMatrix> map;   // set when isomorphic
  std::string differing_field;    // set when fingerprints differ
  std::size_t candidates = 0;     // invertible candidates tested
};

/// Fingerprints first; then every matrix with entries from the grid that
/// satisfies the linear twist condition T alpha = alpha' T, in canonical
/// order, returning the first passing verify_isomorphism. "unknown" only
/// means nothing was found within the grid. Requires dim <= 3.
IsoSearchResult brute_force_iso_search(const AlgebraBundle& a, const AlgebraBundle& b,
                                       const std::vector<Rational>& grid,
                                       std::size_t max_candidates = 50'000'000);

} // namespace homsplit
