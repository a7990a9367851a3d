#include "homsplit/bundle.hpp"

#include <algorithm>
#include <set>

namespace homsplit {

namespace {

struct KindInfo {
  Kind kind;
  std::string_view name;
  std::vector<std::string> ops;
};

const std::vector<KindInfo>& kind_table() {
  using namespace opname;
  static const std::vector<KindInfo> table = {
      {Kind::associative, "associative", {mu}},
      {Kind::dendriform, "dendriform", {prec, succ}},
      {Kind::diassociative, "diassociative", {dashv, vdash}},
      {Kind::triassociative, "triassociative", {dashv, perp, vdash}},
      {Kind::quadri_dendriform, "quadri_dendriform", {prec_dashv, prec_vdash, succ_dashv, succ_vdash}},
      {Kind::six_dendriform,
       "six_dendriform",
       {prec_dashv, prec_perp, prec_vdash, succ_dashv, succ_perp, succ_vdash}},
  };
  return table;
}

void check_parameters(const Polynomial& p, const std::set<std::string>& declared, const std::string& where,
                      std::set<std::string>& reported, Report& report) {
  for (const auto& name : p.parameters()) {
    if (declared.count(name) || reported.count(name)) continue;
    reported.insert(name);
    report.add("structure.undeclared_parameter", {}, {}, "parameter '" + name + "' used in " + where);
  }
}

void check_tensor(const std::string& name, const BilinearOp<Polynomial>& op, int left, int right, int out,
                  const std::set<std::string>& declared, std::set<std::string>& reported, Report& report) {
  for (const auto& [key, c] : op.entries()) {
    const auto [i, j, k] = key;
    if (i > left || j > right || k > out)
      report.add("structure.index_range", {i, j, k}, {}, "entry of '" + name + "' outside the declared dimensions");
    check_parameters(c, declared, name, reported, report);
  }
  if (op.left_dim() > left || op.right_dim() > right || op.out_dim() > out ||
      op.left_dim() < left || op.right_dim() < right || op.out_dim() < out) {
    if (std::none_of(op.entries().begin(), op.entries().end(), [&](const auto& e) {
          const auto [i, j, k] = e.first;
          return i > left || j > right || k > out;
        }))
      report.add("structure.shape", {op.left_dim(), op.right_dim(), op.out_dim()}, {},
                 "tensor '" + name + "' has the wrong shape");
  }
}

void check_matrix(const std::string& name, const PolyMatrix& m, int rows, int cols,
                  const std::set<std::string>& declared, std::set<std::string>& reported, Report& report) {
  if (m.rows() != rows || m.cols() != cols) {
    report.add("structure.shape", {static_cast<int>(m.rows()), static_cast<int>(m.cols())}, {},
               "matrix '" + name + "' has the wrong shape");
    return;
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) check_parameters(m(i, j), declared, name, reported, report);
}

void validate_algebra_into(const AlgebraBundle& b, const std::set<std::string>& declared,
                           std::set<std::string>& reported, Report& report, const std::string& prefix) {
  const auto& required = required_ops(b.kind);
  for (const auto& [name, op] : b.ops) {
    if (std::find(required.begin(), required.end(), name) == required.end()) {
      report.add("structure.unexpected_op", {}, {},
                 "unexpected op for kind " + std::string(kind_name(b.kind)) + ": " + prefix + name);
      continue;
    }
    check_tensor(prefix + name, op, b.dim, b.dim, b.dim, declared, reported, report);
  }
  for (const auto& name : required)
    if (!b.ops.count(name)) report.add("structure.missing_op", {}, {}, "missing op " + prefix + name);
  check_matrix(prefix + "alpha", b.twist, b.dim, b.dim, declared, reported, report);
}

std::set<std::string> declared_set(const AlgebraBundle& b, Report& report) {
  std::set<std::string> declared;
  for (const auto& p : b.parameters) {
    if (!is_valid_parameter_name(p)) report.add("structure.parameter_name", {}, {}, "invalid parameter name '" + p + "'");
    if (!declared.insert(p).second) report.add("structure.parameter_name", {}, {}, "duplicate parameter '" + p + "'");
  }
  return declared;
}

void check_actions(const std::map<std::string, BilinearOp<Polynomial>>& actions, int base_dim, int module_dim,
                   const std::set<std::string>& declared, std::set<std::string>& reported, Report& report) {
  using namespace opname;
  for (const char* name : {prec_l, succ_l, prec_r, succ_r}) {
    auto it = actions.find(name);
    if (it == actions.end()) {
      report.add("structure.missing_op", {}, {}, std::string("missing action ") + name);
      continue;
    }
    const bool left = std::string_view(name).ends_with("_l");
    if (left) check_tensor(name, it->second, base_dim, module_dim, module_dim, declared, reported, report);
    else check_tensor(name, it->second, module_dim, base_dim, module_dim, declared, reported, report);
  }
  for (const auto& [name, op] : actions)
    if (name != prec_l && name != succ_l && name != prec_r && name != succ_r)
      report.add("structure.unexpected_op", {}, {}, "unexpected action " + name);
}

} // namespace

std::string_view kind_name(Kind kind) {
  for (const auto& k : kind_table())
    if (k.kind == kind) return k.name;
  return "unknown";
}

Kind parse_kind(std::string_view name) {
  for (const auto& k : kind_table())
    if (k.name == name) return k.kind;
  // accepted short spellings
  if (name == "quadri") return Kind::quadri_dendriform;
  if (name == "six") return Kind::six_dendriform;
  throw std::invalid_argument("unknown algebra kind '" + std::string(name) + "'");
}

const std::vector<std::string>& required_ops(Kind kind) {
  for (const auto& k : kind_table())
    if (k.kind == kind) return k.ops;
  throw std::invalid_argument("unknown kind");
}

Report validate_bundle(const AlgebraBundle& b) {
  Report report;
  if (b.dim < 1) report.add("structure.dimension", {b.dim}, {}, "dimension must be positive");
  const auto declared = declared_set(b, report);
  std::set<std::string> reported;
  validate_algebra_into(b, declared, reported, report, "");
  report.sort();
  return report;
}

Report validate_representation(const RepresentationBundle& r) {
  Report report;
  if (r.base.kind != Kind::dendriform)
    report.add("structure.kind", {}, {}, "representation base must be dendriform");
  const auto declared = declared_set(r.base, report);
  std::set<std::string> reported;
  validate_algebra_into(r.base, declared, reported, report, "");
  if (r.module_dim < 1) report.add("structure.dimension", {r.module_dim}, {}, "module dimension must be positive");
  check_actions(r.actions, r.base.dim, r.module_dim, declared, reported, report);
  check_matrix("beta", r.module_twist, r.module_dim, r.module_dim, declared, reported, report);
  report.sort();
  return report;
}

Report validate_action(const ActionBundle& a) {
  Report report;
  if (a.acting.kind != Kind::dendriform || a.acted.kind != Kind::dendriform)
    report.add("structure.kind", {}, {}, "both algebras of an action must be dendriform");
  AlgebraBundle merged = a.acting;
  std::set<std::string> declared = declared_set(a.acting, report);
  for (const auto& p : a.acted.parameters) declared.insert(p);
  std::set<std::string> reported;
  validate_algebra_into(a.acting, declared, reported, report, "");
  validate_algebra_into(a.acted, declared, reported, report, "acted.");
  check_actions(a.actions, a.acting.dim, a.acted.dim, declared, reported, report);
  report.sort();
  return report;
}

namespace {

PolyMatrix specialize_matrix(const PolyMatrix& m, const std::map<std::string, Rational>& bindings) {
  return m.unaryExpr([&](const Polynomial& p) { return p.specialize(bindings); });
}

std::map<std::string, BilinearOp<Polynomial>> specialize_ops(const std::map<std::string, BilinearOp<Polynomial>>& ops,
                                                             const std::map<std::string, Rational>& bindings) {
  std::map<std::string, BilinearOp<Polynomial>> out;
  for (const auto& [name, op] : ops)
    out.emplace(name, op.transform([&](const Polynomial& p) { return p.specialize(bindings); }));
  return out;
}

std::vector<std::string> remaining(const std::vector<std::string>& declared,
                                   const std::map<std::string, Rational>& bindings) {
  std::vector<std::string> out;
  for (const auto& p : declared)
    if (!bindings.count(p)) out.push_back(p);
  return out;
}

void require_declared(const std::vector<std::string>& declared, const std::map<std::string, Rational>& bindings) {
  for (const auto& [name, value] : bindings)
    if (std::find(declared.begin(), declared.end(), name) == declared.end())
      throw std::invalid_argument("binding undeclared parameter '" + name + "'");
}

template <typename F>
auto convert_ops(const std::map<std::string, BilinearOp<Polynomial>>& ops, F&& f) {
  std::map<std::string, BilinearOp<Rational>> out;
  for (const auto& [name, op] : ops) out.emplace(name, op.transform(f));
  return out;
}

Rational exact(const Polynomial& p) {
  auto c = p.constant();
  if (!c) throw std::invalid_argument("entry '" + p.str() + "' is not parameter-free");
  return *c;
}

} // namespace

AlgebraBundle bundle_specialize(const AlgebraBundle& b, const std::map<std::string, Rational>& bindings) {
  require_declared(b.parameters, bindings);
  return {b.kind, b.dim, specialize_ops(b.ops, bindings), specialize_matrix(b.twist, bindings),
          remaining(b.parameters, bindings)};
}

RepresentationBundle bundle_specialize(const RepresentationBundle& r, const std::map<std::string, Rational>& bindings) {
  return {bundle_specialize(r.base, bindings), r.module_dim, specialize_ops(r.actions, bindings),
          specialize_matrix(r.module_twist, bindings)};
}

ActionBundle bundle_specialize(const ActionBundle& a, const std::map<std::string, Rational>& bindings) {
  std::map<std::string, Rational> acting_b, acted_b;
  for (const auto& [name, v] : bindings) {
    const bool in_acting = std::find(a.acting.parameters.begin(), a.acting.parameters.end(), name) != a.acting.parameters.end();
    const bool in_acted = std::find(a.acted.parameters.begin(), a.acted.parameters.end(), name) != a.acted.parameters.end();
    if (!in_acting && !in_acted) throw std::invalid_argument("binding undeclared parameter '" + name + "'");
    if (in_acting) acting_b.emplace(name, v);
    if (in_acted) acted_b.emplace(name, v);
  }
  return {bundle_specialize(a.acting, acting_b), bundle_specialize(a.acted, acted_b),
          specialize_ops(a.actions, bindings)};
}

std::set<std::string> used_parameters(const AlgebraBundle& b) {
  std::set<std::string> names;
  for (const auto& [name, op] : b.ops)
    for (const auto& [key, c] : op.entries())
      for (const auto& p : c.parameters()) names.insert(p);
  for (Eigen::Index i = 0; i < b.twist.rows(); ++i)
    for (Eigen::Index j = 0; j < b.twist.cols(); ++j)
      for (const auto& p : b.twist(i, j).parameters()) names.insert(p);
  return names;
}

bool is_parameter_free(const AlgebraBundle& b) { return used_parameters(b).empty(); }

BasicAlgebra<Rational> to_rational(const AlgebraBundle& b) {
  return {b.kind, b.dim, convert_ops(b.ops, exact), to_rational_matrix(b.twist), b.parameters};
}

BasicRepresentation<Rational> to_rational(const RepresentationBundle& r) {
  return {to_rational(r.base), r.module_dim, convert_ops(r.actions, exact), to_rational_matrix(r.module_twist)};
}

BasicAction<Rational> to_rational(const ActionBundle& a) {
  return {to_rational(a.acting), to_rational(a.acted), convert_ops(a.actions, exact)};
}

} // namespace homsplit
