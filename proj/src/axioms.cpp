#include "homsplit/axioms.hpp"

#include <stdexcept>

namespace homsplit {

using namespace expr;

std::string_view sq15_name(Sq15Mode mode) { return mode == Sq15Mode::literal ? "literal" : "symmetric"; }

Sq15Mode parse_sq15(std::string_view name) {
  if (name == "literal") return Sq15Mode::literal;
  if (name == "symmetric") return Sq15Mode::symmetric;
  throw std::invalid_argument("sq15 mode must be 'literal' or 'symmetric'");
}

namespace templates {

namespace {

const Expr X = slot(0);
const Expr Y = slot(1);
const Expr Z = slot(2);

IdentityTemplate make(std::string id, Expr lhs, Expr rhs, std::vector<int> spaces = {0, 0, 0}) {
  return {std::move(id), std::move(spaces), std::move(lhs), std::move(rhs)};
}

/// first = second as `.a`, first = third as `.b`.
void chain(std::vector<IdentityTemplate>& out, const std::string& id, Expr first, Expr second, Expr third) {
  out.push_back(make(id + ".a", first, std::move(second)));
  out.push_back(make(id + ".b", std::move(first), std::move(third)));
}

void chain_rest(std::vector<IdentityTemplate>& out, const std::string& id, Expr, Expr second, Expr third) {
  out.push_back(make(id + ".c", std::move(second), std::move(third)));
}

const Bin pv{opname::prec_vdash}, pd{opname::prec_dashv}, sv{opname::succ_vdash}, sd{opname::succ_dashv};
const Bin pp{opname::prec_perp}, sp{opname::succ_perp};

using ChainFn = void (*)(std::vector<IdentityTemplate>&, const std::string&, Expr, Expr, Expr);

void quadri_chains(std::vector<IdentityTemplate>& out, const std::string& p, ChainFn split) {
  split(out, p + "Hq1", pv(pv(X, Y), tw(Z)), pv(pd(X, Y), tw(Z)), pv(tw(X), pv(Y, Z) + sv(Y, Z)));
  split(out, p + "Hq2", pv(sv(X, Y), tw(Z)), pv(sd(X, Y), tw(Z)), sv(tw(X), pv(Y, Z)));
  split(out, p + "Hq3", sv(tw(X), sv(Y, Z)), sv(pv(X, Y) + sv(X, Y), tw(Z)), sv(pd(X, Y) + sd(X, Y), tw(Z)));
  split(out, p + "Hq4", sv(tw(X), sv(Y, Z)), sv(pd(X, Y) + sv(X, Y), tw(Z)), sv(pv(X, Y) + sd(X, Y), tw(Z)));
}

void quadri_tail_chains(std::vector<IdentityTemplate>& out, const std::string& p, ChainFn split) {
  split(out, p + "Hq8", pd(pd(X, Y), tw(Z)), pd(tw(X), pv(Y, Z) + sv(Y, Z)), pd(tw(X), pd(Y, Z) + sd(Y, Z)));
  split(out, p + "Hq9", pd(pd(X, Y), tw(Z)), pd(tw(X), pv(Y, Z) + sd(Y, Z)), pd(tw(X), pd(Y, Z) + sv(Y, Z)));
  split(out, p + "Hq10", pd(sd(X, Y), tw(Z)), sd(tw(X), pv(Y, Z)), sd(tw(X), pd(Y, Z)));
  split(out, p + "Hq11", sd(tw(X), sv(Y, Z)), sd(tw(X), sd(Y, Z)), sd(pd(X, Y) + sd(X, Y), tw(Z)));
}

void six_chains(std::vector<IdentityTemplate>& out, Sq15Mode mode, ChainFn split) {
  const std::string p = "six.";
  split(out, p + "sq10", pv(pp(X, Y), tw(Z)), pv(pv(X, Y), tw(Z)), pv(pd(X, Y), tw(Z)));
  split(out, p + "sq11", pv(sp(X, Y), tw(Z)), pv(sv(X, Y), tw(Z)), pv(sd(X, Y), tw(Z)));
  split(out, p + "sq12", sv(pp(X, Y), tw(Z)), sv(pv(X, Y), tw(Z)), sv(pd(X, Y), tw(Z)));
  split(out, p + "sq13", sv(sp(X, Y), tw(Z)), sv(sv(X, Y), tw(Z)), sv(sd(X, Y), tw(Z)));
  split(out, p + "sq14", pd(tw(X), pp(Y, Z)), pd(tw(X), pv(Y, Z)), pd(tw(X), pd(Y, Z)));
  if (mode == Sq15Mode::literal)
    split(out, p + "sq15", sd(tw(X), pp(Y, Z)), pd(tw(X), pv(Y, Z)), pd(tw(X), pd(Y, Z)));
  else
    split(out, p + "sq15", sd(tw(X), pp(Y, Z)), sd(tw(X), pv(Y, Z)), sd(tw(X), pd(Y, Z)));
  split(out, p + "sq16", sd(tw(X), sp(Y, Z)), sd(tw(X), sv(Y, Z)), sd(tw(X), sd(Y, Z)));
  split(out, p + "sq17", pd(tw(X), sp(Y, Z)), pd(tw(X), sv(Y, Z)), pd(tw(X), sd(Y, Z)));
}

} // namespace

std::vector<IdentityTemplate> dendriform(const std::string& prec, const std::string& succ, const std::string& prefix) {
  const Bin P{prec}, S{succ};
  return {
      make(prefix + "1", P(tw(X), P(Y, Z) + S(Y, Z)), P(P(X, Y), tw(Z))),
      make(prefix + "2", S(tw(X), P(Y, Z)), P(S(X, Y), tw(Z))),
      make(prefix + "3", S(tw(X), S(Y, Z)), S(P(X, Y) + S(X, Y), tw(Z))),
  };
}

std::vector<IdentityTemplate> associative(const std::string& mu, const std::string& prefix) {
  const Bin M{mu};
  return {make(prefix + "1", M(tw(X), M(Y, Z)), M(M(X, Y), tw(Z)))};
}

std::vector<IdentityTemplate> diassociative(const std::string& prefix) {
  const Bin L{opname::dashv}, R{opname::vdash};
  return {
      make(prefix + "1", L(L(X, Y), tw(Z)), L(tw(X), L(Y, Z))),
      make(prefix + "2", L(L(X, Y), tw(Z)), L(tw(X), R(Y, Z))),
      make(prefix + "3", L(R(X, Y), tw(Z)), R(tw(X), L(Y, Z))),
      make(prefix + "4", R(L(X, Y), tw(Z)), R(tw(X), R(Y, Z))),
      make(prefix + "5", R(R(X, Y), tw(Z)), R(tw(X), R(Y, Z))),
  };
}

std::vector<IdentityTemplate> quadri(const std::string& p) {
  std::vector<IdentityTemplate> out;
  quadri_chains(out, p, chain);
  out.push_back(make(p + "Hq5", pd(pv(X, Y), tw(Z)), pv(tw(X), pd(Y, Z) + sd(Y, Z))));
  out.push_back(make(p + "Hq6", pd(sv(X, Y), tw(Z)), sv(tw(X), pd(Y, Z))));
  out.push_back(make(p + "Hq7", sv(tw(X), sd(Y, Z)), sd(pv(X, Y) + sv(X, Y), tw(Z))));
  quadri_tail_chains(out, p, chain);
  return out;
}

std::vector<IdentityTemplate> quadri_third_pairs() {
  std::vector<IdentityTemplate> out;
  quadri_chains(out, "quadri.", chain_rest);
  quadri_tail_chains(out, "quadri.", chain_rest);
  return out;
}

std::vector<IdentityTemplate> triassociative() {
  auto out = diassociative("tri.dias.");
  for (auto& t : associative(opname::perp, "tri.assoc.")) out.push_back(std::move(t));
  const Bin L{opname::dashv}, R{opname::vdash}, P{opname::perp};
  out.push_back(make("tri.mixed.1", L(L(X, Y), tw(Z)), L(tw(X), P(Y, Z))));
  out.push_back(make("tri.mixed.2", P(R(X, Y), tw(Z)), R(tw(X), P(Y, Z))));
  out.push_back(make("tri.mixed.3", L(P(X, Y), tw(Z)), P(tw(X), L(Y, Z))));
  out.push_back(make("tri.mixed.4", R(P(X, Y), tw(Z)), R(tw(X), R(Y, Z))));
  out.push_back(make("tri.mixed.5", P(L(X, Y), tw(Z)), P(tw(X), R(Y, Z))));
  return out;
}

std::vector<IdentityTemplate> six(Sq15Mode mode) {
  auto out = dendriform(opname::prec_perp, opname::succ_perp, "six.perp.");
  for (auto& t : quadri("six.quadri.")) out.push_back(std::move(t));
  const std::string p = "six.";
  out.push_back(make(p + "sq1", pp(pv(X, Y), tw(Z)), pv(tw(X), pp(Y, Z) + sp(Y, Z))));
  out.push_back(make(p + "sq2", pp(sv(X, Y), tw(Z)), sv(tw(X), pp(Y, Z))));
  out.push_back(make(p + "sq3", sv(tw(X), sp(Y, Z)), sp(pv(X, Y) + sv(X, Y), tw(Z))));
  out.push_back(make(p + "sq4", pp(pd(X, Y), tw(Z)), pp(tw(X), pv(Y, Z) + sv(Y, Z))));
  out.push_back(make(p + "sq5", pp(sd(X, Y), tw(Z)), sp(tw(X), pv(Y, Z))));
  out.push_back(make(p + "sq6", sp(tw(X), sv(Y, Z)), sp(pd(X, Y) + sd(X, Y), tw(Z))));
  out.push_back(make(p + "sq7", pd(pp(X, Y), tw(Z)), pp(tw(X), pd(Y, Z) + sd(Y, Z))));
  out.push_back(make(p + "sq8", pd(sp(X, Y), tw(Z)), sp(tw(X), pd(Y, Z))));
  out.push_back(make(p + "sq9", sp(tw(X), sd(Y, Z)), sd(pp(X, Y) + sp(X, Y), tw(Z))));
  six_chains(out, mode, chain);
  return out;
}

std::vector<IdentityTemplate> six_third_pairs(Sq15Mode mode) {
  std::vector<IdentityTemplate> out;
  six_chains(out, mode, chain_rest);
  return out;
}

std::vector<IdentityTemplate> representation(const std::string& p) {
  const Bin P{opname::prec}, S{opname::succ};
  const Bin Pl{opname::prec_l}, Sl{opname::succ_l}, Pr{opname::prec_r}, Sr{opname::succ_r};
  // left: (x, y, m); right: (m, x, y); mixed: (x, m, y)
  const std::vector<int> left{0, 0, 1}, right{1, 0, 0}, mixed{0, 1, 0};
  const Expr x = X, y = Y, m = Z;
  const Expr rm = X, rx = Y, ry = Z;
  const Expr mx = X, mm = Y, my = Z;
  return {
      make(p + "left.1", Pl(P(x, y), tw(m)), Pl(tw(x), Pl(y, m) + Sl(y, m)), left),
      make(p + "left.2", Pl(S(x, y), tw(m)), Sl(tw(x), Pl(y, m)), left),
      make(p + "left.3", Sl(tw(x), Sl(y, m)), Sl(P(x, y) + S(x, y), tw(m)), left),
      make(p + "right.1", Pr(tw(rm), P(rx, ry) + S(rx, ry)), Pr(Pr(rm, rx), tw(ry)), right),
      make(p + "right.2", Sr(tw(rm), P(rx, ry)), Pr(Sr(rm, rx), tw(ry)), right),
      make(p + "right.3", Sr(Pr(rm, rx) + Sr(rm, rx), tw(ry)), Sr(tw(rm), S(rx, ry)), right),
      make(p + "mixed.1", Pr(Pl(mx, mm), tw(my)), Pl(tw(mx), Pr(mm, my) + Sr(mm, my)), mixed),
      make(p + "mixed.2", Pr(Sl(mx, mm), tw(my)), Sl(tw(mx), Pr(mm, my)), mixed),
      make(p + "mixed.3", Sr(Pl(mx, mm) + Sl(mx, mm), tw(my)), Sl(tw(mx), Sr(mm, my)), mixed),
  };
}

std::vector<IdentityTemplate> action_equations() {
  const Bin Pl{opname::prec_l}, Sl{opname::succ_l}, Pr{opname::prec_r}, Sr{opname::succ_r};
  const Bin Pa{"acted.prec"}, Sa{"acted.succ"};
  const std::vector<int> s1{0, 1, 1}, s2{1, 0, 1}, s3{1, 1, 0};
  // (x, v, w), (u, y, w), (u, v, z)
  return {
      make("action.1", Pa(Pl(X, Y), tw(Z)), Pl(tw(X), Pa(Y, Z) + Sa(Y, Z)), s1),
      make("action.2", Pa(Sl(X, Y), tw(Z)), Sl(tw(X), Pa(Y, Z)), s1),
      make("action.3", Sl(tw(X), Sa(Y, Z)), Sa(Pl(X, Y) + Sl(X, Y), tw(Z)), s1),
      make("action.4", Pa(Pr(X, Y), tw(Z)), Pa(tw(X), Pl(Y, Z) + Sl(Y, Z)), s2),
      make("action.5", Pa(Sr(X, Y), tw(Z)), Sa(tw(X), Pl(Y, Z)), s2),
      make("action.6", Sa(tw(X), Sl(Y, Z)), Sa(Pr(X, Y) + Sr(X, Y), tw(Z)), s2),
      make("action.7", Pr(Pa(X, Y), tw(Z)), Pa(tw(X), Pr(Y, Z) + Sr(Y, Z)), s3),
      make("action.8", Pr(Sa(X, Y), tw(Z)), Sa(tw(X), Pr(Y, Z)), s3),
      make("action.9", Sa(tw(X), Sr(Y, Z)), Sr(Pa(X, Y) + Sa(X, Y), tw(Z)), s3),
  };
}

std::vector<IdentityTemplate> multiplicative(const std::vector<std::string>& ops) {
  std::vector<IdentityTemplate> out;
  for (const auto& name : ops) {
    const Bin O{name};
    out.push_back(make("mult." + name, tw(O(X, Y)), O(tw(X), tw(Y)), {0, 0}));
  }
  return out;
}

std::vector<IdentityTemplate> for_kind(Kind kind, Sq15Mode mode) {
  switch (kind) {
  case Kind::associative: return associative();
  case Kind::dendriform: return dendriform();
  case Kind::diassociative: return diassociative();
  case Kind::triassociative: return triassociative();
  case Kind::quadri_dendriform: return quadri();
  case Kind::six_dendriform: return six(mode);
  }
  throw std::invalid_argument("unknown kind");
}

} // namespace templates

namespace {

template <typename Scalar>
void require_kind(const BasicAlgebra<Scalar>& b, Kind kind) {
  if (b.kind != kind)
    throw std::invalid_argument("expected a " + std::string(kind_name(kind)) + " algebra, got " +
                                std::string(kind_name(b.kind)));
}

template <typename Scalar>
Report run(const BasicAlgebra<Scalar>& b, Kind kind, Sq15Mode mode = Sq15Mode::literal) {
  require_kind(b, kind);
  return evaluate_templates(algebra_context(b), templates::for_kind(kind, mode));
}

} // namespace

template <typename Scalar>
Report check_dendriform(const BasicAlgebra<Scalar>& b) { return run(b, Kind::dendriform); }
template <typename Scalar>
Report check_associative(const BasicAlgebra<Scalar>& b) { return run(b, Kind::associative); }
template <typename Scalar>
Report check_diassociative(const BasicAlgebra<Scalar>& b) { return run(b, Kind::diassociative); }
template <typename Scalar>
Report check_quadri(const BasicAlgebra<Scalar>& b) { return run(b, Kind::quadri_dendriform); }
template <typename Scalar>
Report check_triassociative(const BasicAlgebra<Scalar>& b) { return run(b, Kind::triassociative); }
template <typename Scalar>
Report check_six(const BasicAlgebra<Scalar>& b, Sq15Mode mode) { return run(b, Kind::six_dendriform, mode); }

template <typename Scalar>
Report check_algebra(const BasicAlgebra<Scalar>& b, Sq15Mode mode) {
  return run(b, b.kind, mode);
}

template <typename Scalar>
bool algebra_holds(const BasicAlgebra<Scalar>& b, Sq15Mode mode) {
  return templates_hold(algebra_context(b), templates::for_kind(b.kind, mode));
}

template <typename Scalar>
Report check_representation(const BasicRepresentation<Scalar>& r) {
  require_kind(r.base, Kind::dendriform);
  return evaluate_templates(representation_context(r), templates::representation());
}

template <typename Scalar>
Report check_action(const BasicAction<Scalar>& a) {
  require_kind(a.acting, Kind::dendriform);
  require_kind(a.acted, Kind::dendriform);
  auto set = templates::representation("action.rep.");
  for (auto& t : templates::action_equations()) set.push_back(std::move(t));
  Report r = evaluate_templates(action_context(a), set);
  return r;
}

template <typename Scalar>
Report check_multiplicative(const BasicAlgebra<Scalar>& b) {
  std::vector<std::string> names;
  for (const auto& [name, op] : b.ops) names.push_back(name);
  return evaluate_templates(algebra_context(b), templates::multiplicative(names));
}

std::vector<std::pair<std::string, std::string>> homomorphism_correspondence(Kind from, Kind to) {
  std::vector<std::pair<std::string, std::string>> out;
  if (from == to) {
    for (const auto& name : required_ops(from)) out.emplace_back(name, name);
    return out;
  }
  if (to == Kind::dendriform && (from == Kind::quadri_dendriform || from == Kind::six_dendriform)) {
    for (const auto& name : required_ops(from))
      out.emplace_back(name, name.starts_with("prec") ? opname::prec : opname::succ);
    return out;
  }
  throw std::invalid_argument("no homomorphism notion from " + std::string(kind_name(from)) + " to " +
                              std::string(kind_name(to)));
}

template <typename Scalar>
Report check_homomorphism(const Matrix<Scalar>& t, const BasicAlgebra<Scalar>& a, const BasicAlgebra<Scalar>& b) {
  if (t.rows() != b.dim || t.cols() != a.dim) throw std::invalid_argument("homomorphism: map shape mismatch");
  EvalContext<Scalar> ctx;
  ctx.add_space(a.dim, a.twist);
  ctx.add_space(b.dim, b.twist);
  ctx.add_map("T", t, 0, 1);
  const Lin T{"T"};
  std::vector<IdentityTemplate> set;
  for (const auto& [src, dst] : homomorphism_correspondence(a.kind, b.kind)) {
    ctx.add_op("A." + src, a.op(src), 0, 0, 0);
    ctx.add_op("B." + dst, b.op(dst), 1, 1, 1);
    set.push_back({"hom." + src, {0, 0}, T(Bin{"A." + src}(slot(0), slot(1))),
                   Bin{"B." + dst}(T(slot(0)), T(slot(1)))});
  }
  set.push_back({"hom.twist", {0}, T(tw(slot(0))), tw(T(slot(0)))});
  return evaluate_templates(ctx, set);
}

template <typename Scalar>
BasicAlgebra<Scalar> six_quadri_part(const BasicAlgebra<Scalar>& b) {
  require_kind(b, Kind::six_dendriform);
  BasicAlgebra<Scalar> q{Kind::quadri_dendriform, b.dim, {}, b.twist, b.parameters};
  for (const auto& name : required_ops(Kind::quadri_dendriform)) q.ops.emplace(name, b.op(name));
  return q;
}

template <typename Scalar>
BasicAlgebra<Scalar> six_perp_part(const BasicAlgebra<Scalar>& b) {
  require_kind(b, Kind::six_dendriform);
  BasicAlgebra<Scalar> d{Kind::dendriform, b.dim, {}, b.twist, b.parameters};
  d.ops.emplace(opname::prec, b.op(opname::prec_perp));
  d.ops.emplace(opname::succ, b.op(opname::succ_perp));
  return d;
}

#define HOMSPLIT_INSTANTIATE(S)                                                                   \
  template Report check_dendriform<S>(const BasicAlgebra<S>&);                                    \
  template Report check_associative<S>(const BasicAlgebra<S>&);                                   \
  template Report check_diassociative<S>(const BasicAlgebra<S>&);                                 \
  template Report check_quadri<S>(const BasicAlgebra<S>&);                                        \
  template Report check_triassociative<S>(const BasicAlgebra<S>&);                                \
  template Report check_six<S>(const BasicAlgebra<S>&, Sq15Mode);                                 \
  template Report check_algebra<S>(const BasicAlgebra<S>&, Sq15Mode);                             \
  template bool algebra_holds<S>(const BasicAlgebra<S>&, Sq15Mode);                               \
  template Report check_representation<S>(const BasicRepresentation<S>&);                         \
  template Report check_action<S>(const BasicAction<S>&);                                         \
  template Report check_multiplicative<S>(const BasicAlgebra<S>&);                                \
  template Report check_homomorphism<S>(const Matrix<S>&, const BasicAlgebra<S>&, const BasicAlgebra<S>&); \
  template BasicAlgebra<S> six_quadri_part<S>(const BasicAlgebra<S>&);                            \
  template BasicAlgebra<S> six_perp_part<S>(const BasicAlgebra<S>&);

HOMSPLIT_INSTANTIATE(Rational)
HOMSPLIT_INSTANTIATE(Polynomial)

} // namespace homsplit
