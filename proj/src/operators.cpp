#include "homsplit/operators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homsplit {

using namespace expr;

std::string_view operator_kind_name(OperatorKind kind) {
  switch (kind) {
  case OperatorKind::averaging_assoc: return "averaging_assoc";
  case OperatorKind::rota_baxter: return "rota_baxter";
  case OperatorKind::relative_averaging: return "relative_averaging";
  case OperatorKind::homomorphic_relative_averaging: return "homomorphic_relative_averaging";
  case OperatorKind::averaging_quadri: return "averaging_quadri";
  }
  return "unknown";
}

OperatorKind parse_operator_kind(std::string_view name) {
  for (auto k : {OperatorKind::averaging_assoc, OperatorKind::rota_baxter, OperatorKind::relative_averaging,
                 OperatorKind::homomorphic_relative_averaging, OperatorKind::averaging_quadri})
    if (operator_kind_name(k) == name) return k;
  throw std::invalid_argument("unknown operator kind '" + std::string(name) + "'");
}

Kind operator_target_kind(OperatorKind kind) {
  switch (kind) {
  case OperatorKind::averaging_assoc: return Kind::associative;
  case OperatorKind::rota_baxter: return Kind::diassociative;
  case OperatorKind::relative_averaging:
  case OperatorKind::homomorphic_relative_averaging: return Kind::dendriform;
  case OperatorKind::averaging_quadri: return Kind::quadri_dendriform;
  }
  throw std::invalid_argument("unknown operator kind");
}

bool requires_twist_commutation(OperatorKind kind, bool strict_twist) {
  return kind != OperatorKind::averaging_assoc || strict_twist;
}

namespace {

const Lin T{"T"};
const Expr U = slot(0);
const Expr V = slot(1);

IdentityTemplate twist_identity(const std::string& id, int space) {
  return {id, {space}, T(tw(slot(0))), tw(T(slot(0)))};
}

template <typename Scalar>
void require_kind(const BasicAlgebra<Scalar>& a, Kind kind, OperatorKind op) {
  if (a.kind != kind)
    throw std::invalid_argument(std::string(operator_kind_name(op)) + " operators act on " +
                                std::string(kind_name(kind)) + " algebras, got " + std::string(kind_name(a.kind)));
}

template <typename Scalar>
void require_square(const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& m) {
  if (m.rows() != a.dim || m.cols() != a.dim) throw std::invalid_argument("operator matrix shape mismatch");
}

template <typename Scalar>
OperatorProblem<Scalar> action_problem(const BasicAction<Scalar>& a, const Matrix<Scalar>& t) {
  auto p = operator_problem(a.representation(), t);
  for (const auto& [name, op] : a.acted.ops) p.ctx.add_op("acted." + name, op, 1, 1, 1);
  for (const char* name : {opname::prec, opname::succ})
    p.identities.push_back({std::string("hom.") + name, {1, 1}, T(Bin{std::string("acted.") + name}(U, V)),
                            Bin{name}(T(U), T(V))});
  return p;
}

} // namespace

template <typename Scalar>
OperatorProblem<Scalar> operator_problem(const BasicRepresentation<Scalar>& r, const Matrix<Scalar>& t) {
  if (t.rows() != r.base.dim || t.cols() != r.module_dim)
    throw std::invalid_argument("relative averaging operator must map the module to the algebra");
  OperatorProblem<Scalar> p{representation_context(r), {}};
  p.ctx.add_map("T", t, 1, 0);
  for (const auto& [o, l, rr] : {std::tuple{opname::prec, opname::prec_l, opname::prec_r},
                                 std::tuple{opname::succ, opname::succ_l, opname::succ_r}}) {
    const Bin O{o}, L{l}, R{rr};
    const std::string id = std::string("ravg.") + o;
    p.identities.push_back({id + ".a", {1, 1}, O(T(U), T(V)), T(L(T(U), V))});
    p.identities.push_back({id + ".b", {1, 1}, O(T(U), T(V)), T(R(U, T(V)))});
  }
  p.identities.push_back(twist_identity("ravg.twist", 1));
  return p;
}

template <typename Scalar>
OperatorProblem<Scalar> operator_problem(OperatorKind kind, const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& h,
                                         bool strict_twist) {
  require_kind(a, operator_target_kind(kind), kind);
  require_square(a, h);
  if (kind == OperatorKind::relative_averaging) return operator_problem(adjoint_representation(a), h);
  if (kind == OperatorKind::homomorphic_relative_averaging) return action_problem(adjoint_action(a), h);

  OperatorProblem<Scalar> p{algebra_context(a), {}};
  p.ctx.add_map("T", h, 0, 0);
  auto& ids = p.identities;
  switch (kind) {
  case OperatorKind::averaging_assoc: {
    const Bin M{opname::mu};
    ids.push_back({"avg.1", {0, 0}, M(T(U), T(V)), T(M(U, T(V)))});
    ids.push_back({"avg.2", {0, 0}, M(T(U), T(V)), T(M(T(U), V))});
    if (strict_twist) ids.push_back(twist_identity("avg.twist", 0));
    break;
  }
  case OperatorKind::rota_baxter:
    ids.push_back(twist_identity("rb.twist", 0));
    for (const char* name : {opname::dashv, opname::vdash}) {
      const Bin O{name};
      ids.push_back({std::string("rb.") + name, {0, 0}, O(T(U), T(V)), T(O(T(U), V) + O(U, T(V)))});
    }
    break;
  case OperatorKind::averaging_quadri:
    ids.push_back(twist_identity("qavg.twist", 0));
    for (const auto& name : required_ops(Kind::quadri_dendriform)) {
      const Bin O{name};
      ids.push_back({"qavg." + name + ".a", {0, 0}, O(T(U), T(V)), T(O(T(U), V))});
      ids.push_back({"qavg." + name + ".b", {0, 0}, O(T(U), T(V)), T(O(U, T(V)))});
    }
    break;
  default:
    break;
  }
  return p;
}

template <typename Scalar>
Report verify_operator(OperatorKind kind, const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& op, bool strict_twist) {
  const auto p = operator_problem(kind, a, op, strict_twist);
  return evaluate_templates(p.ctx, p.identities);
}

template <typename Scalar>
Report verify_averaging_assoc(const BasicAlgebra<Scalar>& a, const Matrix<Scalar>& h, bool strict_twist) {
  return verify_operator(OperatorKind::averaging_assoc, a, h, strict_twist);
}

template <typename Scalar>
Report verify_rota_baxter(const BasicAlgebra<Scalar>& d, const Matrix<Scalar>& r) {
  return verify_operator(OperatorKind::rota_baxter, d, r);
}

template <typename Scalar>
Report verify_relative_averaging(const BasicRepresentation<Scalar>& r, const Matrix<Scalar>& t) {
  const auto p = operator_problem(r, t);
  return evaluate_templates(p.ctx, p.identities);
}

template <typename Scalar>
Report verify_homomorphic_relative_averaging(const BasicAction<Scalar>& a, const Matrix<Scalar>& t) {
  const auto p = action_problem(a, t);
  return evaluate_templates(p.ctx, p.identities);
}

template <typename Scalar>
Report verify_averaging_quadri(const BasicAlgebra<Scalar>& q, const Matrix<Scalar>& h) {
  return verify_operator(OperatorKind::averaging_quadri, q, h);
}

template <typename Scalar>
Report graph_is_subalgebra(const BasicAlgebra<Scalar>& container, const Matrix<Scalar>& map, GraphDirection dir) {
  const bool module = dir == GraphDirection::module_to_base;
  const int first = static_cast<int>(module ? map.rows() : map.cols());
  const int second = static_cast<int>(module ? map.cols() : map.rows());
  if (container.dim != first + second) throw std::invalid_argument("graph: container dimension mismatch");
  const int gdim = module ? second : first;

  // graph basis vectors and the defect map vanishing exactly on the graph
  std::vector<Vector<Scalar>> graph;
  for (int j = 1; j <= gdim; ++j) {
    Vector<Scalar> g(container.dim);
    if (module) g << map.col(j - 1), basis_vector<Scalar>(second, j);
    else g << basis_vector<Scalar>(first, j), map.col(j - 1);
    graph.push_back(std::move(g));
  }
  const auto defect = [&](const Vector<Scalar>& w) -> Vector<Scalar> {
    if (module) return w.head(first) - map * w.tail(second);
    return w.tail(second) - map * w.head(first);
  };

  Report report;
  const auto record = [&](const std::string& id, std::vector<int> witness, const Vector<Scalar>& d) {
    for (Eigen::Index k = 0; k < d.size(); ++k) {
      if (is_zero(d(k))) continue;
      auto w = witness;
      w.push_back(static_cast<int>(k) + 1);
      report.add(id, std::move(w), to_polynomial(d(k)));
    }
  };
  for (const auto& [name, op] : container.ops)
    for (int j = 1; j <= gdim; ++j)
      for (int k = 1; k <= gdim; ++k) record("graph." + name, {j, k}, defect(op.apply(graph[j - 1], graph[k - 1])));
  for (int j = 1; j <= gdim; ++j) record("graph.twist", {j}, defect(container.twist * graph[j - 1]));
  report.sort();
  return report;
}

PolyMatrix unknown_matrix(int rows, int cols, const std::string& prefix) {
  PolyMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Polynomial::variable(prefix + std::to_string(r + 1) + std::to_string(c + 1));
  return m;
}

std::vector<Polynomial> emit_operator_system(OperatorKind kind, const AlgebraBundle& a, const std::string& prefix,
                                             bool strict_twist) {
  const PolyMatrix h = unknown_matrix(a.dim, a.dim, prefix);
  std::set<std::string> taken(a.parameters.begin(), a.parameters.end());
  for (const auto& p : used_parameters(a)) taken.insert(p);
  for (Eigen::Index i = 0; i < h.size(); ++i)
    for (const auto& name : h(i).parameters())
      if (taken.count(name)) throw std::invalid_argument("unknown '" + name + "' collides with an algebra parameter");

  const auto p = operator_problem(kind, a, h, strict_twist);
  std::vector<Polynomial> eqs;
  visit_residuals(p.ctx, p.identities, [&](const auto&, const auto&, const Polynomial& r) {
    eqs.push_back(Rational(1) / r.terms().front().coeff * r);
    return true;
  });
  std::sort(eqs.begin(), eqs.end(), [](const Polynomial& x, const Polynomial& y) { return compare(x, y) < 0; });
  eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
  return eqs;
}

std::vector<Rational> grid_values(int lo, int hi, const std::vector<int>& denominators) {
  std::set<Rational> values;
  for (int d : denominators) {
    if (d <= 0) throw std::invalid_argument("grid denominators must be positive");
    for (int k = lo; k <= hi; ++k) values.insert(Rational(k, d));
  }
  return {values.begin(), values.end()};
}

bool matrix_less(const RatMatrix& a, const RatMatrix& b) {
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const auto cmp = a(r, c) <=> b(r, c);
      if (cmp != 0) return cmp < 0;
    }
  return false;
}

std::vector<RatMatrix> solve_operators_grid(OperatorKind kind, const AlgebraBundle& a, const GridOptions& opts) {
  if (a.dim > 3) throw std::invalid_argument("grid search is limited to dimension 3");
  if (!is_parameter_free(a)) throw std::invalid_argument("grid search needs a parameter-free algebra");
  if (opts.values.empty()) throw std::invalid_argument("empty grid");
  const auto ra = to_rational(a);
  const int n = a.dim;
  const int nn = n * n;

  // solution space of the linear constraint, one column per free entry
  RatMatrix basis;
  if (requires_twist_commutation(kind, opts.strict_twist)) {
    RatMatrix c = RatMatrix::Zero(nn, nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          c(i * n + j, i * n + k) += ra.twist(k, j);
          c(i * n + j, k * n + j) -= ra.twist(i, k);
        }
    basis = nullspace(c);
  } else {
    basis = RatMatrix::Identity(nn, nn);
  }
  const auto free = static_cast<std::size_t>(basis.cols());
  double count = 1;
  for (std::size_t f = 0; f < free; ++f) count *= static_cast<double>(opts.values.size());
  if (count > static_cast<double>(opts.max_candidates))
    throw std::invalid_argument("grid search space too large (" + std::to_string(static_cast<long long>(count)) +
                                " candidates)");

  auto problem = operator_problem(kind, ra, RatMatrix(RatMatrix::Zero(n, n)), opts.strict_twist);
  auto& slot_matrix = problem.ctx.maps.at("T").matrix;
  // dependent entries must lie on the grid as well
  std::vector<Rational> sorted = opts.values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<RatMatrix> found;
  std::vector<std::size_t> idx(free, 0);
  while (true) {
    RatVector v = RatVector::Zero(nn);
    for (std::size_t f = 0; f < free; ++f)
      if (!opts.values[idx[f]].is_zero()) v += opts.values[idx[f]] * basis.col(static_cast<Eigen::Index>(f));
    bool on_grid = true;
    for (int e = 0; e < nn && on_grid; ++e) on_grid = std::binary_search(sorted.begin(), sorted.end(), v(e));
    if (on_grid) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) slot_matrix(r, c) = v(r * n + c);
      if (templates_hold(problem.ctx, problem.identities)) found.push_back(slot_matrix);
    }
    std::size_t pos = free;
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++idx[pos] < opts.values.size()) carry = false;
      else idx[pos] = 0;
    }
    if (carry) break;
  }
  std::sort(found.begin(), found.end(), matrix_less);
  return found;
}

FamilyMatch family_membership(const PolyMatrix& family, const std::vector<std::string>& params, const RatMatrix& m) {
  FamilyMatch result;
  if (family.rows() != m.rows() || family.cols() != m.cols()) return result;
  const auto np = static_cast<Eigen::Index>(params.size());
  RatMatrix a = RatMatrix::Zero(family.size(), np);
  RatVector b(family.size());
  for (Eigen::Index r = 0; r < family.rows(); ++r)
    for (Eigen::Index c = 0; c < family.cols(); ++c) {
      const Eigen::Index row = r * family.cols() + c;
      Rational constant;
      for (const auto& term : family(r, c).terms()) {
        if (term.mono.is_one()) {
          constant = term.coeff;
          continue;
        }
        const auto& factors = term.mono.factors();
        const auto it = std::find(params.begin(), params.end(), factors.front().first);
        if (factors.size() != 1 || factors.front().second != 1 || it == params.end()) {
          result.supported = false;
          return result;
        }
        a(row, it - params.begin()) = term.coeff;
      }
      b(row) = m(r, c) - constant;
    }
  if (auto x = solve(a, b)) {
    std::map<std::string, Rational> values;
    for (Eigen::Index p = 0; p < np; ++p) values.emplace(params[p], (*x)(p));
    result.values = std::move(values);
  }
  return result;
}

Polynomial reduce_imaginary_unit(const Polynomial& p, const std::string& name) {
  Polynomial out;
  for (const auto& term : p.terms()) {
    const int e = term.mono.exponent_of(name);
    Polynomial t(((e / 2) % 2 == 0) ? term.coeff : -term.coeff);
    for (const auto& [var, exp] : term.mono.factors()) {
      if (var == name) continue;
      for (int k = 0; k < exp; ++k) t *= Polynomial::variable(var);
    }
    if (e % 2 == 1) t *= Polynomial::variable(name);
    out += t;
  }
  return out;
}

Report reduce_imaginary_unit(const Report& r, const std::string& name) {
  Report out;
  for (const auto& e : r.entries()) {
    auto reduced = reduce_imaginary_unit(e.residual, name);
    if (!reduced.is_zero() || !e.note.empty()) out.add(e.template_id, e.witness, std::move(reduced), e.note);
  }
  return out;
}

#define HOMSPLIT_INSTANTIATE(S)                                                                             \
  template OperatorProblem<S> operator_problem<S>(OperatorKind, const BasicAlgebra<S>&, const Matrix<S>&, bool); \
  template OperatorProblem<S> operator_problem<S>(const BasicRepresentation<S>&, const Matrix<S>&);        \
  template Report verify_operator<S>(OperatorKind, const BasicAlgebra<S>&, const Matrix<S>&, bool);        \
  template Report verify_averaging_assoc<S>(const BasicAlgebra<S>&, const Matrix<S>&, bool);               \
  template Report verify_rota_baxter<S>(const BasicAlgebra<S>&, const Matrix<S>&);                         \
  template Report verify_relative_averaging<S>(const BasicRepresentation<S>&, const Matrix<S>&);           \
  template Report verify_homomorphic_relative_averaging<S>(const BasicAction<S>&, const Matrix<S>&);       \
  template Report verify_averaging_quadri<S>(const BasicAlgebra<S>&, const Matrix<S>&);                    \
  template Report graph_is_subalgebra<S>(const BasicAlgebra<S>&, const Matrix<S>&, GraphDirection);

HOMSPLIT_INSTANTIATE(Rational)
HOMSPLIT_INSTANTIATE(Polynomial)

} // namespace homsplit
