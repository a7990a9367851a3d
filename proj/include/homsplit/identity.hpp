#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "homsplit/report.hpp"
#include "homsplit/tensor.hpp"

namespace homsplit {

/// Expression trees for defining identities. Placeholders are numbered
/// slots (x = 0, y = 1, z = 2, ...); each slot ranges over the basis of the
/// space the template assigns to it.
namespace expr {

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  enum class Type { slot, twist, map, op, sum };
  Type type;
  int slot = -1;
  std::string name;  // op or map name
  Expr a, b;
};

inline Expr slot(int index) { return std::make_shared<const Node>(Node{Node::Type::slot, index, {}, {}, {}}); }
/// Twist (alpha, beta, ...) of whatever space the argument lives in.
inline Expr tw(Expr e) { return std::make_shared<const Node>(Node{Node::Type::twist, -1, {}, std::move(e), {}}); }
inline Expr apply_map(std::string name, Expr e) {
  return std::make_shared<const Node>(Node{Node::Type::map, -1, std::move(name), std::move(e), {}});
}
inline Expr operator+(Expr a, Expr b) {
  return std::make_shared<const Node>(Node{Node::Type::sum, -1, {}, std::move(a), std::move(b)});
}

/// Callable spelling of a named binary operation: Bin{"prec"}(x, y).
struct Bin {
  std::string name;
  Expr operator()(Expr a, Expr b) const {
    return std::make_shared<const Node>(Node{Node::Type::op, -1, name, std::move(a), std::move(b)});
  }
};

/// Callable spelling of a named linear map: Lin{"T"}(x).
struct Lin {
  std::string name;
  Expr operator()(Expr e) const { return apply_map(name, std::move(e)); }
};

} // namespace expr

struct IdentityTemplate {
  std::string id;
  std::vector<int> slot_spaces;  // space index of each slot; arity = size
  expr::Expr lhs;
  expr::Expr rhs;
};

/// Everything a template can refer to: spaces with their twists, named
/// bilinear operations with signatures, and named linear maps.
template <typename Scalar>
struct EvalContext {
  struct Op {
    BilinearOp<Scalar> tensor;
    int left, right, out;
  };
  struct Map {
    Matrix<Scalar> matrix;
    int from, to;
  };

  std::vector<int> dims;
  std::vector<Matrix<Scalar>> twists;
  std::map<std::string, Op> ops;
  std::map<std::string, Map> maps;

  int add_space(int dim, Matrix<Scalar> twist) {
    dims.push_back(dim);
    twists.push_back(std::move(twist));
    return static_cast<int>(dims.size()) - 1;
  }
  void add_op(const std::string& name, BilinearOp<Scalar> t, int left, int right, int out) {
    if (t.left_dim() != dims.at(left) || t.right_dim() != dims.at(right) || t.out_dim() != dims.at(out))
      throw std::invalid_argument("operation '" + name + "' does not match its signature");
    ops.insert_or_assign(name, Op{std::move(t), left, right, out});
  }
  void add_map(const std::string& name, Matrix<Scalar> m, int from, int to) {
    if (m.cols() != dims.at(from) || m.rows() != dims.at(to))
      throw std::invalid_argument("map '" + name + "' does not match its signature");
    maps.insert_or_assign(name, Map{std::move(m), from, to});
  }
};

namespace detail {

template <typename Scalar>
int infer_space(const EvalContext<Scalar>& ctx, const IdentityTemplate& t, const expr::Expr& e) {
  using T = expr::Node::Type;
  switch (e->type) {
  case T::slot:
    return t.slot_spaces.at(e->slot);
  case T::twist:
    return infer_space(ctx, t, e->a);
  case T::map: {
    auto it = ctx.maps.find(e->name);
    if (it == ctx.maps.end()) throw std::invalid_argument(t.id + ": unknown map '" + e->name + "'");
    if (infer_space(ctx, t, e->a) != it->second.from) throw std::invalid_argument(t.id + ": map domain mismatch");
    return it->second.to;
  }
  case T::op: {
    auto it = ctx.ops.find(e->name);
    if (it == ctx.ops.end()) throw std::invalid_argument(t.id + ": unknown operation '" + e->name + "'");
    if (infer_space(ctx, t, e->a) != it->second.left || infer_space(ctx, t, e->b) != it->second.right)
      throw std::invalid_argument(t.id + ": operand space mismatch for '" + e->name + "'");
    return it->second.out;
  }
  case T::sum: {
    const int s = infer_space(ctx, t, e->a);
    if (s != infer_space(ctx, t, e->b)) throw std::invalid_argument(t.id + ": sum of different spaces");
    return s;
  }
  }
  throw std::logic_error("bad expression node");
}

template <typename Scalar>
Vector<Scalar> evaluate(const EvalContext<Scalar>& ctx, const IdentityTemplate& t, const expr::Expr& e,
                        const std::vector<int>& basis) {
  using T = expr::Node::Type;
  switch (e->type) {
  case T::slot: {
    const int space = t.slot_spaces[e->slot];
    return basis_vector<Scalar>(ctx.dims[space], basis[e->slot]);
  }
  case T::twist: {
    if (e->a->type == T::slot) {
      const int space = t.slot_spaces[e->a->slot];
      return ctx.twists[space].col(basis[e->a->slot] - 1);
    }
    const int space = infer_space(ctx, t, e->a);
    return ctx.twists[space] * evaluate(ctx, t, e->a, basis);
  }
  case T::map: {
    const auto& m = ctx.maps.at(e->name).matrix;
    if (e->a->type == T::slot) return m.col(basis[e->a->slot] - 1);
    return m * evaluate(ctx, t, e->a, basis);
  }
  case T::op:
    return ctx.ops.at(e->name).tensor.apply(evaluate(ctx, t, e->a, basis), evaluate(ctx, t, e->b, basis));
  case T::sum:
    return evaluate(ctx, t, e->a, basis) + evaluate(ctx, t, e->b, basis);
  }
  throw std::logic_error("bad expression node");
}

} // namespace detail

/// Visits every nonzero residual coordinate of every template over all basis
/// tuples, in deterministic order. The visitor returns false to stop early.
/// Returns false iff stopped early.
template <typename Scalar, typename Visitor>
bool visit_residuals(const EvalContext<Scalar>& ctx, const std::vector<IdentityTemplate>& templates,
                     Visitor&& visit) {
  for (const auto& t : templates) {
    const int ls = detail::infer_space(ctx, t, t.lhs);
    const int rs = detail::infer_space(ctx, t, t.rhs);
    if (ls != rs) throw std::invalid_argument(t.id + ": sides live in different spaces");
    const std::size_t arity = t.slot_spaces.size();
    std::vector<int> basis(arity, 1);
    bool done = arity == 0;
    for (std::size_t s = 0; s < arity; ++s)
      if (ctx.dims[t.slot_spaces[s]] == 0) done = true;
    while (!done) {
      const Vector<Scalar> r = detail::evaluate(ctx, t, t.lhs, basis) - detail::evaluate(ctx, t, t.rhs, basis);
      for (Eigen::Index k = 0; k < r.size(); ++k) {
        if (is_zero(r(k))) continue;
        std::vector<int> witness = basis;
        witness.push_back(static_cast<int>(k) + 1);
        if (!visit(t, witness, r(k))) return false;
      }
      // odometer, last slot fastest
      std::size_t pos = arity;
      while (pos > 0) {
        --pos;
        if (++basis[pos] <= ctx.dims[t.slot_spaces[pos]]) break;
        basis[pos] = 1;
        if (pos == 0) done = true;
      }
    }
  }
  return true;
}

/// Full evaluation into a sorted Report.
template <typename Scalar>
Report evaluate_templates(const EvalContext<Scalar>& ctx, const std::vector<IdentityTemplate>& templates) {
  Report report;
  visit_residuals(ctx, templates, [&](const IdentityTemplate& t, const std::vector<int>& w, const Scalar& r) {
    report.add(t.id, w, to_polynomial(r));
    return true;
  });
  report.sort();
  return report;
}

/// True iff every template holds; stops at the first failure.
template <typename Scalar>
bool templates_hold(const EvalContext<Scalar>& ctx, const std::vector<IdentityTemplate>& templates) {
  return visit_residuals(ctx, templates, [](const auto&, const auto&, const auto&) { return false; });
}

} // namespace homsplit
