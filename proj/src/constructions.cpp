#include "homsplit/constructions.hpp"

#include <algorithm>

namespace homsplit {

namespace {

template <typename Scalar>
void require_kind(const BasicAlgebra<Scalar>& b, Kind kind, const char* what) {
  if (b.kind != kind)
    throw std::invalid_argument(std::string(what) + " needs a " + std::string(kind_name(kind)) + " algebra, got " +
                                std::string(kind_name(b.kind)));
}

void enforce(const Report& r, const BuildOptions& opts, const std::string& what) {
  if (!r.pass() && !opts.force) throw PreconditionError(what + ": precondition fails", r);
}

template <typename Scalar>
BasicAlgebra<Scalar> shell(Kind kind, int dim, Matrix<Scalar> twist, std::vector<std::string> params) {
  auto b = zero_algebra<Scalar>(kind, dim, std::move(twist));
  b.parameters = std::move(params);
  return b;
}

std::vector<std::string> merge_params(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  auto out = a;
  for (const auto& p : b)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

} // namespace

template <typename Scalar>
BasicAlgebra<Scalar> quadri_to_diassociative(const BasicAlgebra<Scalar>& q) {
  require_kind(q, Kind::quadri_dendriform, "quadri_to_diassociative");
  auto d = shell<Scalar>(Kind::diassociative, q.dim, q.twist, q.parameters);
  d.op(opname::vdash) = q.op(opname::prec_vdash) + q.op(opname::succ_vdash);
  d.op(opname::dashv) = q.op(opname::prec_dashv) + q.op(opname::succ_dashv);
  return d;
}

template <typename Scalar>
BasicAlgebra<Scalar> six_to_triassociative(const BasicAlgebra<Scalar>& s) {
  require_kind(s, Kind::six_dendriform, "six_to_triassociative");
  auto t = shell<Scalar>(Kind::triassociative, s.dim, s.twist, s.parameters);
  t.op(opname::perp) = s.op(opname::prec_perp) + s.op(opname::succ_perp);
  t.op(opname::vdash) = s.op(opname::prec_vdash) + s.op(opname::succ_vdash);
  t.op(opname::dashv) = s.op(opname::prec_dashv) + s.op(opname::succ_dashv);
  return t;
}

template <typename Scalar>
BasicAlgebra<Scalar> direct_sum(const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b) {
  if (a.kind != b.kind) throw std::invalid_argument("direct sum of algebras of different kinds");
  const int n = a.dim;
  auto s = shell<Scalar>(a.kind, a.dim + b.dim, direct_sum(a.twist, b.twist), merge_params(a.parameters, b.parameters));
  for (const auto& name : required_ops(a.kind)) {
    embed(s.op(name), a.op(name), 0, 0, 0);
    embed(s.op(name), b.op(name), n, n, n);
  }
  return s;
}

template <typename Scalar>
BasicAlgebra<Scalar> direct_sum_quadri(const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b) {
  require_kind(a, Kind::quadri_dendriform, "direct_sum_quadri");
  require_kind(b, Kind::quadri_dendriform, "direct_sum_quadri");
  return direct_sum(a, b);
}

template <typename Scalar>
BasicAlgebra<Scalar> hemi_semidirect(const BasicRepresentation<Scalar>& r, const BuildOptions& opts) {
  enforce(check_representation(r), opts, "hemi_semidirect");
  const int n = r.base.dim;
  auto q = shell<Scalar>(Kind::quadri_dendriform, n + r.module_dim, direct_sum(r.base.twist, r.module_twist),
                         r.base.parameters);
  const auto& prec = r.base.op(opname::prec);
  const auto& succ = r.base.op(opname::succ);
  embed(q.op(opname::prec_vdash), prec, 0, 0, 0);
  embed(q.op(opname::prec_vdash), r.actions.at(opname::prec_l), 0, n, n);
  embed(q.op(opname::prec_dashv), prec, 0, 0, 0);
  embed(q.op(opname::prec_dashv), r.actions.at(opname::prec_r), n, 0, n);
  embed(q.op(opname::succ_vdash), succ, 0, 0, 0);
  embed(q.op(opname::succ_vdash), r.actions.at(opname::succ_l), 0, n, n);
  embed(q.op(opname::succ_dashv), succ, 0, 0, 0);
  embed(q.op(opname::succ_dashv), r.actions.at(opname::succ_r), n, 0, n);
  return q;
}

template <typename Scalar>
BasicAlgebra<Scalar> semidirect_dendriform(const BasicAction<Scalar>& a, const BuildOptions& opts) {
  enforce(check_action(a), opts, "semidirect_dendriform");
  const int n = a.acting.dim;
  auto d = shell<Scalar>(Kind::dendriform, n + a.acted.dim, direct_sum(a.acting.twist, a.acted.twist),
                         merge_params(a.acting.parameters, a.acted.parameters));
  for (const auto& [o, l, r] : {std::tuple{opname::prec, opname::prec_l, opname::prec_r},
                                std::tuple{opname::succ, opname::succ_l, opname::succ_r}}) {
    auto& target = d.op(o);
    embed(target, a.acting.op(o), 0, 0, 0);
    embed(target, a.actions.at(l), 0, n, n);
    embed(target, a.actions.at(r), n, 0, n);
    embed(target, a.acted.op(o), n, n, n);
  }
  return d;
}

template <typename Scalar>
BasicAlgebra<Scalar> averaging_induced_diassociative(const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& h,
                                                     const BuildOptions& opts) {
  require_kind(a, Kind::associative, "averaging_induced_diassociative");
  enforce(verify_averaging_assoc(a, h), opts, "averaging_induced_diassociative");
  auto d = shell<Scalar>(Kind::diassociative, a.dim, a.twist, a.parameters);
  const Matrix<Scalar> id;
  d.op(opname::dashv) = compose(a.op(opname::mu), id, h);
  d.op(opname::vdash) = compose(a.op(opname::mu), h, id);
  return d;
}

template <typename Scalar>
BasicAlgebra<Scalar> rota_baxter_induced(const BasicAlgebra<Scalar>& d, const Matrix<Scalar>& r,
                                         const BuildOptions& opts) {
  require_kind(d, Kind::diassociative, "rota_baxter_induced");
  enforce(verify_rota_baxter(d, r), opts, "rota_baxter_induced");
  auto out = shell<Scalar>(Kind::diassociative, d.dim, d.twist, d.parameters);
  const Matrix<Scalar> id;
  for (const char* name : {opname::dashv, opname::vdash})
    out.op(name) = compose(d.op(name), r, id) + compose(d.op(name), id, r);
  return out;
}

template <typename Scalar>
BasicAlgebra<Scalar> relative_averaging_induced_quadri(const BasicRepresentation<Scalar>& r, const Matrix<Scalar>& t,
                                                       const BuildOptions& opts) {
  enforce(verify_relative_averaging(r, t), opts, "relative_averaging_induced_quadri");
  auto q = shell<Scalar>(Kind::quadri_dendriform, r.module_dim, r.module_twist, r.base.parameters);
  const Matrix<Scalar> id;
  q.op(opname::prec_vdash) = compose(r.actions.at(opname::prec_l), t, id);
  q.op(opname::succ_vdash) = compose(r.actions.at(opname::succ_l), t, id);
  q.op(opname::prec_dashv) = compose(r.actions.at(opname::prec_r), id, t);
  q.op(opname::succ_dashv) = compose(r.actions.at(opname::succ_r), id, t);
  return q;
}

template <typename Scalar>
BasicAlgebra<Scalar> homomorphic_averaging_induced_six(const BasicAction<Scalar>& a, const Matrix<Scalar>& t,
                                                       const BuildOptions& opts) {
  enforce(verify_homomorphic_relative_averaging(a, t), opts, "homomorphic_averaging_induced_six");
  BuildOptions inner = opts;
  inner.force = true;
  const auto q = relative_averaging_induced_quadri(a.representation(), t, inner);
  auto s = shell<Scalar>(Kind::six_dendriform, a.acted.dim, a.acted.twist,
                         merge_params(a.acting.parameters, a.acted.parameters));
  for (const auto& [name, op] : q.ops) s.op(name) = op;
  s.op(opname::prec_perp) = a.acted.op(opname::prec);
  s.op(opname::succ_perp) = a.acted.op(opname::succ);
  return s;
}

Subspace ideal_ID(const BasicAlgebra<Rational>& q) {
  if (q.kind != Kind::quadri_dendriform && q.kind != Kind::six_dendriform)
    throw std::invalid_argument("ideal_ID needs a quadri- or six-dendriform algebra");
  std::vector<RatVector> diffs;
  for (int i = 1; i <= q.dim; ++i)
    for (int j = 1; j <= q.dim; ++j) {
      diffs.push_back(q.op(opname::prec_dashv).product(i, j) - q.op(opname::prec_vdash).product(i, j));
      diffs.push_back(q.op(opname::succ_dashv).product(i, j) - q.op(opname::succ_vdash).product(i, j));
    }
  return Subspace::span(q.dim, diffs);
}

Quotient quotient_dendriform(const BasicAlgebra<Rational>& q, bool force) {
  Quotient out;
  out.ideal = ideal_ID(q);
  const auto& ideal = out.ideal;
  const int n = q.dim;
  const auto quadri_ops = required_ops(Kind::quadri_dendriform);

  auto record = [&](const std::string& id, std::vector<int> witness, const RatVector& v) {
    const RatVector r = ideal.reduce(v);
    for (Eigen::Index k = 0; k < r.size(); ++k) {
      if (r(k).is_zero()) continue;
      auto w = witness;
      w.push_back(static_cast<int>(k) + 1);
      out.report.add(id, std::move(w), Polynomial(r(k)));
    }
  };

  // two-sided closure of every op and twist stability, on the ideal basis
  const RatMatrix& basis = ideal.basis();
  for (Eigen::Index b = 0; b < basis.rows(); ++b) {
    const RatVector w = basis.row(b).transpose();
    const int bi = static_cast<int>(b) + 1;
    for (const auto& name : quadri_ops) {
      const auto& op = q.op(name);
      for (int j = 1; j <= n; ++j) {
        record("quotient.closure_right." + name, {j, bi}, op.apply(basis_vector<Rational>(n, j), w));
        record("quotient.closure_left." + name, {bi, j}, op.apply(w, basis_vector<Rational>(n, j)));
      }
    }
    record("quotient.twist_stable", {bi}, q.twist * w);
  }
  // vdash and dashv representatives agree modulo the ideal
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      record("quotient.agree.prec", {i, j},
             q.op(opname::prec_vdash).product(i, j) - q.op(opname::prec_dashv).product(i, j));
      record("quotient.agree.succ", {i, j},
             q.op(opname::succ_vdash).product(i, j) - q.op(opname::succ_dashv).product(i, j));
    }
  out.report.sort();

  out.projection = ideal.projection_matrix();
  out.complement = ideal.complement();
  if (!out.report.pass() && !force) return out;

  const int m = static_cast<int>(out.complement.size());
  RatMatrix lift = RatMatrix::Zero(n, m);
  for (int c = 0; c < m; ++c) lift(out.complement[c], c) = Rational(1);
  BasicAlgebra<Rational> d = zero_algebra<Rational>(Kind::dendriform, m, RatMatrix(out.projection * q.twist * lift));
  d.op(opname::prec) = compose(q.op(opname::prec_vdash), lift, lift, out.projection);
  d.op(opname::succ) = compose(q.op(opname::succ_vdash), lift, lift, out.projection);
  out.algebra = std::move(d);
  return out;
}

namespace {

std::map<std::string, BilinearOp<Rational>> embedding_actions(const BasicAlgebra<Rational>& q, const Quotient& quo) {
  const int n = q.dim;
  const int m = static_cast<int>(quo.complement.size());
  RatMatrix lift = RatMatrix::Zero(n, m);
  for (int c = 0; c < m; ++c) lift(quo.complement[c], c) = Rational(1);
  const RatMatrix id;
  return {
      {opname::prec_l, compose(q.op(opname::prec_vdash), lift, id)},
      {opname::succ_l, compose(q.op(opname::succ_vdash), lift, id)},
      {opname::prec_r, compose(q.op(opname::prec_dashv), id, lift)},
      {opname::succ_r, compose(q.op(opname::succ_dashv), id, lift)},
  };
}

} // namespace

BasicRepresentation<Rational> embedding_representation(const BasicAlgebra<Rational>& q, const Quotient& quotient) {
  if (!quotient.algebra) throw std::invalid_argument("embedding_representation: quotient was not built");
  return {*quotient.algebra, q.dim, embedding_actions(q, quotient), q.twist};
}

BasicAction<Rational> embedding_action(const BasicAlgebra<Rational>& s, const Quotient& quotient) {
  if (s.kind != Kind::six_dendriform) throw std::invalid_argument("embedding_action needs a six-dendriform algebra");
  if (!quotient.algebra) throw std::invalid_argument("embedding_action: quotient was not built");
  return {*quotient.algebra, six_perp_part(s), embedding_actions(s, quotient)};
}

#define HOMSPLIT_INSTANTIATE(S)                                                                                  \
  template BasicAlgebra<S> quadri_to_diassociative<S>(const BasicAlgebra<S>&);                                   \
  template BasicAlgebra<S> six_to_triassociative<S>(const BasicAlgebra<S>&);                                     \
  template BasicAlgebra<S> direct_sum<S>(const BasicAlgebra<S>&, const BasicAlgebra<S>&);                        \
  template BasicAlgebra<S> direct_sum_quadri<S>(const BasicAlgebra<S>&, const BasicAlgebra<S>&);                 \
  template BasicAlgebra<S> hemi_semidirect<S>(const BasicRepresentation<S>&, const BuildOptions&);               \
  template BasicAlgebra<S> semidirect_dendriform<S>(const BasicAction<S>&, const BuildOptions&);                 \
  template BasicAlgebra<S> averaging_induced_diassociative<S>(const BasicAlgebra<S>&, const Matrix<S>&,          \
                                                              const BuildOptions&);                              \
  template BasicAlgebra<S> rota_baxter_induced<S>(const BasicAlgebra<S>&, const Matrix<S>&, const BuildOptions&); \
  template BasicAlgebra<S> relative_averaging_induced_quadri<S>(const BasicRepresentation<S>&, const Matrix<S>&, \
                                                                const BuildOptions&);                            \
  template BasicAlgebra<S> homomorphic_averaging_induced_six<S>(const BasicAction<S>&, const Matrix<S>&,         \
                                                                const BuildOptions&);

HOMSPLIT_INSTANTIATE(Rational)
HOMSPLIT_INSTANTIATE(Polynomial)

} // namespace homsplit
