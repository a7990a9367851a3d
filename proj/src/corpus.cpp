#include "homsplit/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "homsplit/constructions.hpp"

namespace homsplit::corpus {

using nlohmann::json;

const Entry& Manifest::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw InputError("manifest has no entry '" + id + "'");
}

namespace {

std::string str_field(const json& j, const char* key, bool required, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) throw InputError(where + ": missing key '" + key + "'");
    return {};
  }
  if (!it->is_string()) throw InputError(where + ": '" + key + "' must be a string");
  return it->get<std::string>();
}

json rational_matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json entry_json(const ReportEntry& e) {
  json j{{"template", e.template_id}, {"witness", e.witness}, {"residual", e.residual.str()}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

/// Shared tail: expected vs observed, with a discrepancy record on mismatch.
Result finish(const Entry& e, json record, const std::string& observed, const Report* report) {
  record["id"] = e.id;
  record["type"] = e.type;
  record["expected"] = e.expected;
  record["provenance"] = e.provenance;
  record["observed"] = observed;
  const bool agree = observed == e.expected;
  record["agreement"] = agree;
  Result out;
  if (!agree) {
    json d{{"id", e.id}, {"expected", e.expected}, {"observed", observed}, {"provenance", e.provenance}};
    if (report && !report->pass()) {
      d["first_failure"] = entry_json(report->entries().front());
      d["failing_templates"] = report->failing_templates();
      d["failure_count"] = report->size();
    }
    if (record.contains("uncovered")) d["uncovered"] = record["uncovered"];
    record["discrepancy"] = d;
    out.discrepancies = 1;
  }
  out.report = std::move(record);
  return out;
}

} // namespace

Manifest load_manifest(const std::filesystem::path& root) {
  Manifest m;
  m.root = root;
  const json j = read_json_file(root / "manifest.json");
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw InputError("manifest.json: expected {\"entries\": [...]}");
  std::set<std::string> ids;
  for (const auto& item : j["entries"]) {
    Entry e;
    e.id = str_field(item, "id", true, "manifest entry");
    const std::string where = "manifest entry " + e.id;
    if (!ids.insert(e.id).second) throw InputError(where + ": duplicate id");
    e.type = str_field(item, "type", true, where);
    e.path = str_field(item, "path", false, where);
    e.algebra = str_field(item, "algebra", false, where);
    e.construction = str_field(item, "construction", false, where);
    if (item.contains("bindings")) {
      for (const auto& [name, value] : item["bindings"].items()) {
        if (!value.is_string()) throw InputError(where + ": binding values must be rational strings");
        e.bindings.emplace(name, Rational::parse(value.get<std::string>()));
      }
    }
    if (item.contains("grid")) {
      const auto& g = item["grid"];
      if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() || !g[1].is_number_integer())
        throw InputError(where + ": grid must be [lo, hi]");
      e.grid_lo = g[0].get<int>();
      e.grid_hi = g[1].get<int>();
    }
    if (item.contains("families"))
      for (const auto& f : item["families"]) e.families.push_back(f.get<std::string>());
    if (!item.contains("expected") || !item["expected"].is_object())
      throw InputError(where + ": missing expected verdict");
    e.expected = str_field(item["expected"], "verdict", true, where);
    e.provenance = str_field(item["expected"], "provenance", true, where);
    static const std::set<std::string> types = {"algebra", "operator", "grid", "construction"};
    if (!types.count(e.type)) throw InputError(where + ": unknown type '" + e.type + "'");
    m.entries.push_back(std::move(e));
  }
  std::sort(m.entries.begin(), m.entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
  return m;
}

AlgebraBundle with_parameters(const AlgebraBundle& a, const std::vector<std::string>& extra) {
  AlgebraBundle out = a;
  for (const auto& p : extra) {
    if (std::find(a.parameters.begin(), a.parameters.end(), p) != a.parameters.end())
      throw InputError("operator parameter '" + p + "' collides with an algebra parameter");
    out.parameters.push_back(p);
  }
  return out;
}

Result verify_entry(const Manifest& m, const Entry& e, const Options& opts) {
  json record;
  if (e.type == "algebra") {
    const auto a = load_algebra(m.resolve(e));
    const Report r = check_algebra(a, opts.sq15);
    record["kind"] = std::string(kind_name(a.kind));
    record["report"] = to_json(r);
    record["multiplicative"] = check_multiplicative(a).pass() ? "pass" : "fail";
    return finish(e, std::move(record), r.pass() ? "pass" : "fail", &r);
  }
  if (e.type == "operator") {
    const auto op = load_operator(m.resolve(e));
    const auto base = load_algebra(m.resolve(m.find(e.algebra)));
    const auto a = with_parameters(base, op.parameters);
    if (op.matrix.rows() != a.dim || op.matrix.cols() != a.dim)
      throw InputError(e.id + ": operator shape does not match the algebra");
    Report r = verify_operator(op.kind, a, op.matrix, opts.strict_twist);
    if (!op.imaginary_unit.empty()) r = reduce_imaginary_unit(r, op.imaginary_unit);
    record["algebra"] = e.algebra;
    record["operator_kind"] = std::string(operator_kind_name(op.kind));
    record["report"] = to_json(r);
    return finish(e, std::move(record), r.pass() ? "pass" : "fail", &r);
  }
  if (e.type == "grid") {
    const auto base = load_algebra(m.resolve(m.find(e.algebra)));
    const auto a = bundle_specialize(base, e.bindings);
    std::vector<OperatorFile> families;
    for (const auto& f : e.families) families.push_back(load_operator(m.resolve(m.find(f))));
    if (families.empty()) throw InputError(e.id + ": grid entry lists no families");
    GridOptions g;
    g.values = grid_values(e.grid_lo, e.grid_hi);
    g.strict_twist = opts.strict_twist;
    const auto solutions = solve_operators_grid(families.front().kind, a, g);
    json sols = json::array(), uncovered = json::array();
    for (const auto& s : solutions) {
      json covering = json::array();
      for (std::size_t f = 0; f < families.size(); ++f) {
        const auto match = family_membership(families[f].matrix, families[f].parameters, s);
        if (!match.supported) throw InputError(e.families[f] + ": family is not affine in its parameters");
        if (match.values) covering.push_back(e.families[f]);
      }
      sols.push_back({{"matrix", rational_matrix_json(s)}, {"families", covering}});
      if (covering.empty()) uncovered.push_back(rational_matrix_json(s));
    }
    json bindings = json::object();
    for (const auto& [k, v] : e.bindings) bindings[k] = v.str();
    record["algebra"] = e.algebra;
    record["bindings"] = bindings;
    record["grid"] = {e.grid_lo, e.grid_hi};
    record["solutions"] = sols;
    record["uncovered"] = uncovered;
    return finish(e, std::move(record), uncovered.empty() ? "covered" : "uncovered", nullptr);
  }
  // construction
  if (e.construction != "hemi") throw InputError(e.id + ": unsupported construction '" + e.construction + "'");
  const auto rep = load_representation(m.resolve(e));
  BuildOptions b;
  b.force = true;
  const auto q = hemi_semidirect(rep, b);
  const Report r = check_quadri(q);
  record["construction"] = e.construction;
  record["report"] = to_json(r);
  return finish(e, std::move(record), r.pass() ? "pass" : "fail", &r);
}

Result verify_all(const Manifest& m, const Options& opts) {
  Result out;
  json entries = json::array(), discrepancies = json::array();
  std::size_t agree = 0;
  for (const auto& e : m.entries) {
    auto r = verify_entry(m, e, opts);
    if (r.discrepancies) discrepancies.push_back(r.report["discrepancy"]);
    else ++agree;
    out.discrepancies += r.discrepancies;
    entries.push_back(std::move(r.report));
  }
  json summary{{"entries", m.entries.size()},
               {"agreements", agree},
               {"discrepancies", out.discrepancies},
               {"sq15", std::string(sq15_name(opts.sq15))},
               {"strict_twist", opts.strict_twist}};
  out.report = {{"status", out.discrepancies ? "discrepancies" : "agree"},
                {"summary", summary},
                {"entries", entries},
                {"discrepancies", discrepancies}};
  return out;
}

std::string discrepancies_markdown(const Result& r) {
  std::ostringstream md;
  const auto& s = r.report["summary"];
  md << "# Discrepancies\n\n";
  md << "Generated by `homsplit corpus verify-all` (sq15 mode `" << s["sq15"].get<std::string>()
     << "`, strict twist " << (s["strict_twist"].get<bool>() ? "on" : "off") << ").\n\n";
  md << s["entries"].get<std::size_t>() << " corpus entries, " << s["agreements"].get<std::size_t>()
     << " agree with their expected verdict, " << s["discrepancies"].get<std::size_t>() << " do not.\n\n";

  // entries whose failures all come from a single template
  std::map<std::string, std::vector<std::string>> single;
  for (const auto& d : r.report["discrepancies"])
    if (d.contains("failing_templates") && d["failing_templates"].size() == 1)
      single[d["failing_templates"][0].get<std::string>()].push_back(d["id"].get<std::string>());
  if (!single.empty()) {
    md << "Entries failing on one template only:\n\n";
    for (const auto& [t, ids] : single) {
      md << "- `" << t << "` (" << ids.size() << "):";
      for (const auto& id : ids) md << " " << id;
      md << "\n";
    }
    md << "\n";
  }
  for (const auto& d : r.report["discrepancies"]) {
    md << "## " << d["id"].get<std::string>() << "\n\n";
    md << "- expected: " << d["expected"].get<std::string>() << " (" << d["provenance"].get<std::string>() << ")\n";
    md << "- observed: " << d["observed"].get<std::string>() << "\n";
    if (d.contains("first_failure")) {
      const auto& f = d["first_failure"];
      md << "- failing templates (" << d["failure_count"].get<std::size_t>() << " residual entries): ";
      bool first = true;
      for (const auto& t : d["failing_templates"]) {
        md << (first ? "" : ", ") << "`" << t.get<std::string>() << "`";
        first = false;
      }
      md << "\n- first witness: `" << f["template"].get<std::string>() << "` at " << f["witness"].dump()
         << ", residual `" << f["residual"].get<std::string>() << "`\n";
    }
    if (d.contains("uncovered")) {
      md << "- grid solutions outside every listed family:\n";
      for (const auto& mtx : d["uncovered"]) md << "  - `" << mtx.dump() << "`\n";
    }
    md << "\n";
  }
  return md.str();
}

} // namespace homsplit::corpus
