#pragma once

#include <map>
#include <stdexcept>
#include <tuple>

#include "homsplit/scalar.hpp"

namespace homsplit {

/// Structure-constant tensor of a bilinear map L x R -> O on based spaces:
/// e_i o e_j = sum_k c(i, j, k) e_k, indices 1-based. Zero entries are not
/// stored. Algebra operations have all three dimensions equal; the mixed
/// shapes carry module actions.
template <typename Scalar>
class BilinearOp {
public:
  using Key = std::tuple<int, int, int>;

  BilinearOp() = default;
  explicit BilinearOp(int dim) : BilinearOp(dim, dim, dim) {}
  BilinearOp(int left_dim, int right_dim, int out_dim)
      : left_(left_dim), right_(right_dim), out_(out_dim) {}

  int left_dim() const { return left_; }
  int right_dim() const { return right_; }
  int out_dim() const { return out_; }
  bool is_square() const { return left_ == right_ && right_ == out_; }

  const std::map<Key, Scalar>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Scalar get(int i, int j, int k) const {
    auto it = entries_.find({i, j, k});
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  /// Overwrites c(i, j, k); storing zero erases the entry.
  void set(int i, int j, int k, Scalar value) {
    check_index(i, j, k);
    if (is_zero(value)) entries_.erase({i, j, k});
    else entries_[{i, j, k}] = std::move(value);
  }

  void add(int i, int j, int k, const Scalar& value) {
    if (is_zero(value)) return;
    set(i, j, k, get(i, j, k) + value);
  }

  /// Bilinear extension: sum_{i,j} x_i y_j (e_i o e_j).
  Vector<Scalar> apply(const Vector<Scalar>& x, const Vector<Scalar>& y) const {
    if (x.size() != left_ || y.size() != right_) throw std::invalid_argument("op_apply: dimension mismatch");
    Vector<Scalar> out = Vector<Scalar>::Zero(out_);
    for (const auto& [key, c] : entries_) {
      const auto [i, j, k] = key;
      const Scalar& xi = x(i - 1);
      if (is_zero(xi)) continue;
      const Scalar& yj = y(j - 1);
      if (is_zero(yj)) continue;
      out(k - 1) += xi * yj * c;
    }
    return out;
  }

  /// e_i o e_j as a coordinate vector.
  Vector<Scalar> product(int i, int j) const {
    Vector<Scalar> out = Vector<Scalar>::Zero(out_);
    for (int k = 1; k <= out_; ++k) out(k - 1) = get(i, j, k);
    return out;
  }

  template <typename F>
  auto transform(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    BilinearOp<Out> r(left_, right_, out_);
    for (const auto& [key, c] : entries_) {
      const auto [i, j, k] = key;
      r.set(i, j, k, f(c));
    }
    return r;
  }

  BilinearOp& operator+=(const BilinearOp& o) {
    if (o.left_ != left_ || o.right_ != right_ || o.out_ != out_)
      throw std::invalid_argument("tensor sum: shape mismatch");
    for (const auto& [key, c] : o.entries_) {
      const auto [i, j, k] = key;
      add(i, j, k, c);
    }
    return *this;
  }
  friend BilinearOp operator+(BilinearOp a, const BilinearOp& b) { return a += b; }

  friend bool operator==(const BilinearOp& a, const BilinearOp& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.out_ == b.out_ && a.entries_ == b.entries_;
  }

private:
  void check_index(int i, int j, int k) const {
    if (i < 1 || i > left_ || j < 1 || j > right_ || k < 1 || k > out_)
      throw std::out_of_range("structure constant index out of range");
  }

  int left_ = 0;
  int right_ = 0;
  int out_ = 0;
  std::map<Key, Scalar> entries_;
};

template <typename Scalar>
Vector<Scalar> op_apply(const BilinearOp<Scalar>& op, const Vector<Scalar>& x, const Vector<Scalar>& y) {
  return op.apply(x, y);
}

template <typename Scalar>
Vector<Scalar> map_apply(const Matrix<Scalar>& m, const Vector<Scalar>& x) {
  if (m.cols() != x.size()) throw std::invalid_argument("map_apply: dimension mismatch");
  return m * x;
}

/// (x, y) -> out_map * op(left_map x, right_map y), as a new tensor. An empty
/// (0x0) matrix argument stands for the identity.
template <typename Scalar>
BilinearOp<Scalar> compose(const BilinearOp<Scalar>& op, const Matrix<Scalar>& left_map,
                           const Matrix<Scalar>& right_map, const Matrix<Scalar>& out_map = {}) {
  const bool lid = left_map.size() == 0;
  const bool rid = right_map.size() == 0;
  const bool oid = out_map.size() == 0;
  const int ldim = lid ? op.left_dim() : static_cast<int>(left_map.cols());
  const int rdim = rid ? op.right_dim() : static_cast<int>(right_map.cols());
  const int odim = oid ? op.out_dim() : static_cast<int>(out_map.rows());
  if ((!lid && left_map.rows() != op.left_dim()) || (!rid && right_map.rows() != op.right_dim()) ||
      (!oid && out_map.cols() != op.out_dim()))
    throw std::invalid_argument("compose: dimension mismatch");
  BilinearOp<Scalar> r(ldim, rdim, odim);
  for (int i = 1; i <= ldim; ++i) {
    const Vector<Scalar> x = lid ? basis_vector<Scalar>(ldim, i) : Vector<Scalar>(left_map.col(i - 1));
    for (int j = 1; j <= rdim; ++j) {
      const Vector<Scalar> y = rid ? basis_vector<Scalar>(rdim, j) : Vector<Scalar>(right_map.col(j - 1));
      Vector<Scalar> v = op.apply(x, y);
      if (!oid) v = out_map * v;
      for (int k = 1; k <= odim; ++k) r.set(i, j, k, v(k - 1));
    }
  }
  return r;
}

/// Places a tensor into a larger one by shifting each index block.
template <typename Scalar>
void embed(BilinearOp<Scalar>& target, const BilinearOp<Scalar>& block, int left_offset, int right_offset,
           int out_offset) {
  for (const auto& [key, c] : block.entries()) {
    const auto [i, j, k] = key;
    target.add(i + left_offset, j + right_offset, k + out_offset, c);
  }
}

template <typename Scalar>
Matrix<Scalar> direct_sum(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

} // namespace homsplit
