#include "homsplit/io.hpp"

#include <fstream>
#include <set>
#include <tuple>
#include <sstream>

namespace homsplit {

using nlohmann::json;

namespace {

const std::set<std::string> kIgnoredKeys = {"source", "transcription_notes", "description"};

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key) && !kIgnoredKeys.count(key)) throw InputError(where + ": unknown key '" + key + "'");
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing key '" + key + "'");
  return *it;
}

int positive_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 64)
    throw InputError(where + ": expected a positive integer");
  return static_cast<int>(j.get<long long>());
}

Polynomial poly(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a polynomial string");
  try {
    return Polynomial::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<std::string> parameter_list(const json& j, const std::string& where) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw InputError(where + ": parameters must be an array of names");
  std::set<std::string> seen;
  for (const auto& p : j) {
    if (!p.is_string() || !is_valid_parameter_name(p.get<std::string>()))
      throw InputError(where + ": invalid parameter name");
    if (!seen.insert(p.get<std::string>()).second)
      throw InputError(where + ": parameter '" + p.get<std::string>() + "' declared twice");
    out.push_back(p.get<std::string>());
  }
  return out;
}

PolyMatrix matrix(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  PolyMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InputError(where + ": row " + std::to_string(r + 1) + " must have " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m(r, c) = poly(row[static_cast<std::size_t>(c)],
                     where + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
  }
  return m;
}

PolyMatrix any_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw InputError(where + ": expected a nonempty matrix");
  return matrix(j, static_cast<int>(j.size()), static_cast<int>(j[0].size()), where);
}

int index_value(const json& entry, const char* key, int bound, const std::string& where) {
  const auto& v = require(entry, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": '" + key + "' must be an integer");
  const long long x = v.get<long long>();
  if (x < 1 || x > bound)
    throw InputError(where + ": index " + key + " = " + std::to_string(x) + " out of range 1.." +
                     std::to_string(bound));
  return static_cast<int>(x);
}

BilinearOp<Polynomial> tensor(const json& j, int left, int right, int out, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of structure constants");
  BilinearOp<Polynomial> op(left, right, out);
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto& e = j[n];
    const std::string at = where + "[" + std::to_string(n) + "]";
    check_keys(e, {"i", "j", "k", "c"}, at);
    const int i = index_value(e, "i", left, at);
    const int jj = index_value(e, "j", right, at);
    const int k = index_value(e, "k", out, at);
    if (!seen.emplace(i, jj, k).second)
      throw InputError(at + ": duplicate structure constant (" + std::to_string(i) + "," + std::to_string(jj) + "," +
                       std::to_string(k) + ")");
    op.set(i, jj, k, poly(require(e, "c", at), at + ".c"));
  }
  return op;
}

std::map<std::string, BilinearOp<Polynomial>> op_map(const json& j, int left, int right, int out,
                                                     const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object of named tensors");
  std::map<std::string, BilinearOp<Polynomial>> ops;
  for (const auto& [name, value] : j.items()) ops.emplace(name, tensor(value, left, right, out, where + "." + name));
  return ops;
}

AlgebraBundle algebra_part(const json& j, const std::string& where) {
  AlgebraBundle b;
  const auto& kind = require(j, "kind", where);
  if (!kind.is_string()) throw InputError(where + ": kind must be a string");
  try {
    b.kind = parse_kind(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  b.dim = positive_int(require(j, "dimension", where), where + ".dimension");
  b.parameters = parameter_list(j.value("parameters", json()), where + ".parameters");
  b.twist = matrix(require(j, "alpha", where), b.dim, b.dim, where + ".alpha");
  b.ops = op_map(require(j, "ops", where), b.dim, b.dim, b.dim, where + ".ops");
  return b;
}

void ensure_valid(const Report& r, const std::string& what) {
  if (!r.pass()) throw InputError(what + ": structural validation failed", r);
}

json read_polys(const PolyMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json tensor_json(const BilinearOp<Polynomial>& op) {
  json out = json::array();
  for (const auto& [key, c] : op.entries()) {
    const auto& [i, j, k] = key;
    out.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", c.str()}});
  }
  return out;
}

json ops_json(const std::map<std::string, BilinearOp<Polynomial>>& ops) {
  json out = json::object();
  for (const auto& [name, op] : ops) out[name] = tensor_json(op);
  return out;
}

} // namespace

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

std::string file_flavor(const json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("module_ops")) return "action";
  if (j.contains("actions")) return "representation";
  return "algebra";
}

AlgebraBundle algebra_from_json(const json& j) {
  check_keys(j, {"kind", "dimension", "parameters", "alpha", "ops"}, "algebra");
  auto b = algebra_part(j, "algebra");
  ensure_valid(validate_bundle(b), "algebra");
  return b;
}

RepresentationBundle representation_from_json(const json& j) {
  check_keys(j, {"kind", "dimension", "parameters", "alpha", "ops", "module_dimension", "beta", "actions"},
             "representation");
  RepresentationBundle r;
  r.base = algebra_part(j, "representation");
  r.module_dim = positive_int(require(j, "module_dimension", "representation"), "representation.module_dimension");
  r.module_twist = matrix(require(j, "beta", "representation"), r.module_dim, r.module_dim, "representation.beta");
  const auto& actions = require(j, "actions", "representation");
  if (!actions.is_object()) throw InputError("representation.actions: expected an object");
  for (const auto& [name, value] : actions.items()) {
    const bool left = name == opname::prec_l || name == opname::succ_l;
    const bool right = name == opname::prec_r || name == opname::succ_r;
    if (!left && !right) throw InputError("representation.actions: unknown action '" + name + "'");
    const int d = r.base.dim, m = r.module_dim;
    r.actions.emplace(name, left ? tensor(value, d, m, m, "representation.actions." + name)
                                 : tensor(value, m, d, m, "representation.actions." + name));
  }
  ensure_valid(validate_representation(r), "representation");
  return r;
}

ActionBundle action_from_json(const json& j) {
  check_keys(j, {"kind", "dimension", "parameters", "alpha", "ops", "module_dimension", "beta", "actions",
                 "module_ops"},
             "action");
  json rep = j;
  rep.erase("module_ops");
  RepresentationBundle r;
  r.base = algebra_part(rep, "action");
  r.module_dim = positive_int(require(j, "module_dimension", "action"), "action.module_dimension");
  r.module_twist = matrix(require(j, "beta", "action"), r.module_dim, r.module_dim, "action.beta");
  ActionBundle a;
  a.acting = r.base;
  a.acted.kind = Kind::dendriform;
  a.acted.dim = r.module_dim;
  a.acted.twist = r.module_twist;
  a.acted.parameters = r.base.parameters;
  const int m = r.module_dim;
  a.acted.ops = op_map(require(j, "module_ops", "action"), m, m, m, "action.module_ops");
  const auto& actions = require(j, "actions", "action");
  if (!actions.is_object()) throw InputError("action.actions: expected an object");
  for (const auto& [name, value] : actions.items()) {
    const bool left = name == opname::prec_l || name == opname::succ_l;
    const bool right = name == opname::prec_r || name == opname::succ_r;
    if (!left && !right) throw InputError("action.actions: unknown action '" + name + "'");
    const int d = a.acting.dim;
    a.actions.emplace(name, left ? tensor(value, d, m, m, "action.actions." + name)
                                 : tensor(value, m, d, m, "action.actions." + name));
  }
  ensure_valid(validate_action(a), "action");
  return a;
}

OperatorFile operator_from_json(const json& j) {
  check_keys(j, {"kind", "matrix", "parameters", "imaginary_unit"}, "operator");
  OperatorFile op;
  const auto& kind = require(j, "kind", "operator");
  if (!kind.is_string()) throw InputError("operator: kind must be a string");
  try {
    op.kind = parse_operator_kind(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("operator: ") + e.what());
  }
  op.matrix = any_matrix(require(j, "matrix", "operator"), "operator.matrix");
  op.parameters = parameter_list(j.value("parameters", json()), "operator.parameters");
  if (j.contains("imaginary_unit")) {
    if (!j["imaginary_unit"].is_string()) throw InputError("operator.imaginary_unit: expected a parameter name");
    op.imaginary_unit = j["imaginary_unit"].get<std::string>();
  }
  const std::set<std::string> declared(op.parameters.begin(), op.parameters.end());
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < op.matrix.cols(); ++c)
      for (const auto& p : op.matrix(r, c).parameters())
        if (!declared.count(p)) throw InputError("operator.matrix: undeclared parameter '" + p + "'");
  if (!op.imaginary_unit.empty() && !declared.count(op.imaginary_unit))
    throw InputError("operator.imaginary_unit: undeclared parameter '" + op.imaginary_unit + "'");
  return op;
}

AlgebraBundle load_algebra(const std::filesystem::path& path) {
  try {
    return algebra_from_json(read_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what(), e.report());
  }
}

RepresentationBundle load_representation(const std::filesystem::path& path) {
  try {
    return representation_from_json(read_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what(), e.report());
  }
}

ActionBundle load_action(const std::filesystem::path& path) {
  try {
    return action_from_json(read_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what(), e.report());
  }
}

OperatorFile load_operator(const std::filesystem::path& path) {
  try {
    return operator_from_json(read_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what(), e.report());
  }
}

json matrix_to_json(const PolyMatrix& m) { return read_polys(m); }

json to_json(const AlgebraBundle& b) {
  json j;
  j["kind"] = std::string(kind_name(b.kind));
  j["dimension"] = b.dim;
  j["parameters"] = b.parameters;
  j["alpha"] = read_polys(b.twist);
  j["ops"] = ops_json(b.ops);
  return j;
}

json to_json(const RepresentationBundle& r) {
  json j = to_json(r.base);
  j["module_dimension"] = r.module_dim;
  j["beta"] = read_polys(r.module_twist);
  j["actions"] = ops_json(r.actions);
  return j;
}

json to_json(const ActionBundle& a) {
  json j = to_json(a.acting);
  std::set<std::string> params(a.acting.parameters.begin(), a.acting.parameters.end());
  params.insert(a.acted.parameters.begin(), a.acted.parameters.end());
  j["parameters"] = std::vector<std::string>(params.begin(), params.end());
  j["module_dimension"] = a.acted.dim;
  j["beta"] = read_polys(a.acted.twist);
  j["module_ops"] = ops_json(a.acted.ops);
  j["actions"] = ops_json(a.actions);
  return j;
}

json to_json(const OperatorFile& op) {
  json j;
  j["kind"] = std::string(operator_kind_name(op.kind));
  j["matrix"] = read_polys(op.matrix);
  j["parameters"] = op.parameters;
  if (!op.imaginary_unit.empty()) j["imaginary_unit"] = op.imaginary_unit;
  return j;
}

json to_json(const Report& r) {
  json entries = json::array();
  for (const auto& e : r.entries()) {
    json entry;
    entry["template"] = e.template_id;
    entry["witness"] = e.witness;
    entry["residual"] = e.residual.str();
    if (!e.note.empty()) entry["note"] = e.note;
    entries.push_back(std::move(entry));
  }
  return {{"status", r.pass() ? "pass" : "fail"}, {"entries", std::move(entries)}};
}

std::string dump(const json& j, const std::vector<std::string>& header) {
  std::string out;
  for (const auto& line : header) out += "// " + line + "\n";
  out += j.dump(2);
  out += "\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << text;
  if (!out) throw InputError(path.string() + ": write failed");
}

} // namespace homsplit
