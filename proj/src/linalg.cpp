#include "homsplit/linalg.hpp"

#include <stdexcept>

namespace homsplit {

RatMatrix to_rational_matrix(const PolyMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto c = m(i, j).constant();
      if (!c) throw std::invalid_argument("entry '" + m(i, j).str() + "' is not parameter-free");
      out(i, j) = *c;
    }
  return out;
}

RatVector to_rational_vector(const PolyVector& v) {
  return to_rational_matrix(PolyMatrix(v)).col(0);
}

Subspace Subspace::span(int ambient_dim, const std::vector<RatVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RatMatrix rows(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw std::invalid_argument("vector size does not match subspace");
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  auto e = echelon(rows);
  s.basis_ = std::move(e.rref);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<int> Subspace::complement() const {
  std::vector<bool> used(ambient_, false);
  for (int p : pivots_) used[p] = true;
  std::vector<int> out;
  for (int j = 0; j < ambient_; ++j)
    if (!used[j]) out.push_back(j);
  return out;
}

RatVector Subspace::reduce(const RatVector& v) const {
  RatVector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = r(pivots_[i]);
    if (f.is_zero()) continue;
    r -= f * basis_.row(static_cast<Eigen::Index>(i)).transpose();
  }
  return r;
}

RatVector Subspace::project(const RatVector& v) const {
  const RatVector r = reduce(v);
  const auto comp = complement();
  RatVector out(static_cast<Eigen::Index>(comp.size()));
  for (std::size_t i = 0; i < comp.size(); ++i) out(static_cast<Eigen::Index>(i)) = r(comp[i]);
  return out;
}

RatMatrix Subspace::projection_matrix() const {
  const auto comp = complement();
  RatMatrix p(static_cast<Eigen::Index>(comp.size()), ambient_);
  for (int j = 0; j < ambient_; ++j) p.col(j) = project(basis_vector<Rational>(ambient_, j + 1));
  return p;
}

} // namespace homsplit
