#include "homsplit/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "homsplit/operators.hpp"

namespace homsplit {

std::string first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.op_span_dims != b.op_span_dims) return "op_span_dims";
  if (a.total_span_dim != b.total_span_dim) return "total_span_dim";
  if (a.twist_rank != b.twist_rank) return "twist_rank";
  if (a.twist_charpoly != b.twist_charpoly) return "twist_charpoly";
  if (a.annihilator_dim != b.annihilator_dim) return "annihilator_dim";
  return {};
}

Fingerprint fingerprint(const BasicAlgebra<Rational>& b) {
  Fingerprint f;
  const int n = b.dim;
  std::vector<RatVector> all;
  for (const auto& [name, op] : b.ops) {
    std::vector<RatVector> products;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) products.push_back(op.product(i, j));
    f.op_span_dims[name] = Subspace::span(n, products).dim();
    all.insert(all.end(), products.begin(), products.end());
  }
  f.total_span_dim = Subspace::span(n, all).dim();
  f.twist_rank = rank(b.twist);
  f.twist_charpoly = characteristic_polynomial(b.twist);

  // x annihilates iff sum_i x_i c(i, j, k) = 0 and sum_i x_i c(j, i, k) = 0
  std::vector<RatVector> rows;
  for (const auto& [name, op] : b.ops)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        RatVector left(n), right(n);
        for (int i = 1; i <= n; ++i) {
          left(i - 1) = op.get(i, j, k);
          right(i - 1) = op.get(j, i, k);
        }
        rows.push_back(left);
        rows.push_back(right);
      }
  f.annihilator_dim = n - Subspace::span(n, rows).dim();
  return f;
}

Fingerprint fingerprint(const AlgebraBundle& b) {
  if (!is_parameter_free(b)) throw std::invalid_argument("fingerprint needs a parameter-free algebra");
  return fingerprint(to_rational(b));
}

namespace {

template <typename Scalar>
Matrix<Scalar> invert(const Matrix<Scalar>& s);

template <>
RatMatrix invert(const RatMatrix& s) {
  auto inv = inverse(s);
  if (!inv) throw std::invalid_argument("change of basis is singular");
  return *inv;
}

template <>
PolyMatrix invert(const PolyMatrix& s) {
  return to_poly_matrix(invert(to_rational_matrix(s)));
}

} // namespace

template <typename Scalar>
BasicAlgebra<Scalar> push_forward(const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& s) {
  if (s.rows() != a.dim || s.cols() != a.dim) throw std::invalid_argument("change of basis shape mismatch");
  const Matrix<Scalar> inv = invert(s);
  BasicAlgebra<Scalar> out = a;
  for (auto& [name, op] : out.ops) op = compose(a.op(name), inv, inv, s);
  out.twist = s * a.twist * inv;
  return out;
}

template <typename Scalar>
Report verify_isomorphism(const Matrix<Scalar>& t, const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b) {
  if (a.kind != b.kind) throw std::invalid_argument("isomorphism between algebras of different kinds");
  Report r = check_homomorphism(t, a, b);
  if (t.rows() != t.cols()) {
    r.add("iso.singular", {}, Polynomial(1), "map is not square");
  } else {
    const Scalar det = determinant(t);
    if (is_zero(det)) r.add("iso.singular", {}, Polynomial(1), "determinant vanishes");
  }
  r.sort();
  return r;
}

IsoSearchResult brute_force_iso_search(const AlgebraBundle& a, const AlgebraBundle& b,
                                       const std::vector<Rational>& grid, std::size_t max_candidates) {
  if (a.dim > 3 || b.dim > 3) throw std::invalid_argument("isomorphism search is limited to dimension 3");
  if (a.kind != b.kind) throw std::invalid_argument("isomorphism between algebras of different kinds");
  IsoSearchResult result;
  const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (a.dim != b.dim) {
    result.verdict = IsoSearchResult::Verdict::distinct;
    result.differing_field = "dimension";
    return result;
  }
  if (!(fa == fb)) {
    result.verdict = IsoSearchResult::Verdict::distinct;
    result.differing_field = first_difference(fa, fb);
    return result;
  }
  const auto ra = to_rational(a), rb = to_rational(b);
  const int n = a.dim, nn = n * n;

  // T alpha = alpha' T is linear in the entries of T
  RatMatrix c = RatMatrix::Zero(nn, nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c(i * n + j, i * n + k) += ra.twist(k, j);
        c(i * n + j, k * n + j) -= rb.twist(i, k);
      }
  const RatMatrix basis = nullspace(c);
  const auto free = static_cast<std::size_t>(basis.cols());
  double count = 1;
  for (std::size_t f = 0; f < free; ++f) count *= static_cast<double>(grid.size());
  if (count > static_cast<double>(max_candidates)) throw std::invalid_argument("isomorphism search space too large");
  if (free == 0 || grid.empty()) return result;

  // Candidates are generated in lexicographic order of the free coordinates,
  // which is the canonical order; the first hit is the minimum.
  std::vector<Rational> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> idx(free, 0);
  while (true) {
    RatVector v = RatVector::Zero(nn);
    for (std::size_t f = 0; f < free; ++f)
      if (!grid[idx[f]].is_zero()) v += grid[idx[f]] * basis.col(static_cast<Eigen::Index>(f));
    bool on_grid = true;
    for (int e = 0; e < nn && on_grid; ++e) on_grid = std::binary_search(sorted.begin(), sorted.end(), v(e));
    RatMatrix t(n, n);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) t(r, col) = v(r * n + col);
    if (on_grid && !determinant(t).is_zero()) {
      ++result.candidates;
      if (check_homomorphism(t, ra, rb).pass()) {
        result.verdict = IsoSearchResult::Verdict::isomorphic;
        result.map = t;
        return result;
      }
    }
    std::size_t pos = free;
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++idx[pos] < grid.size()) carry = false;
      else idx[pos] = 0;
    }
    if (carry) break;
  }
  return result;
}

template BasicAlgebra<Rational> push_forward<Rational>(const BasicAlgebra<Rational>&, const RatMatrix&);
template BasicAlgebra<Polynomial> push_forward<Polynomial>(const BasicAlgebra<Polynomial>&, const PolyMatrix&);
template Report verify_isomorphism<Rational>(const RatMatrix&, const BasicAlgebra<Rational>&,
                                             const BasicAlgebra<Rational>&);
template Report verify_isomorphism<Polynomial>(const PolyMatrix&, const BasicAlgebra<Polynomial>&,
                                               const BasicAlgebra<Polynomial>&);

} // namespace homsplit
