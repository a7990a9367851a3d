// homsplit: command-line front end. Exit codes: 0 pass, 1 violations or
// discrepancies, 2 input error.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homsplit/constructions.hpp"
#include "homsplit/corpus.hpp"
#include "homsplit/io.hpp"
#include "homsplit/morphisms.hpp"

using namespace homsplit;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, Rational> parse_bindings(const std::string& text) {
  std::map<std::string, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--bind expects name=value pairs, got '" + item + "'");
    out.emplace(item.substr(0, eq), Rational::parse(item.substr(eq + 1)));
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--grid expects lo..hi, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--grid expects integer bounds, got '" + text + "'");
  }
}

std::vector<int> parse_denominators(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int d = 0;
    try {
      d = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("--denominators expects positive integers");
    }
    if (d < 1) throw UsageError("--denominators expects positive integers");
    out.push_back(d);
  }
  if (out.empty()) throw UsageError("--denominators is empty");
  return out;
}

Sq15Mode sq15_mode(const std::string& s) {
  try {
    return parse_sq15(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("--sq15 expects literal or symmetric");
  }
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

/// Writes the report file when requested and prints a one-line summary.
int finish_report(const Report& r, const std::string& what, const std::string& report_path) {
  if (!report_path.empty()) write_text_file(report_path, dump(to_json(r)));
  if (r.pass()) {
    std::cout << what << ": pass\n";
    return kPass;
  }
  std::cout << what << ": fail (" << r.size() << " residual entries)\n";
  for (const auto& t : r.failing_templates()) std::cout << "  " << t << "\n";
  return kFail;
}

AlgebraBundle specialized(const AlgebraBundle& a, const std::string& bind) {
  return bind.empty() ? a : bundle_specialize(a, parse_bindings(bind));
}

struct Common {
  std::string report;
  std::string bind;
  std::string sq15 = "literal";
  bool strict_twist = false;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"homsplit: exact verification of Hom-dendriform, diassociative, quadri-dendriform, "
               "six-dendriform and triassociative algebras"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 all checks pass, 1 violations or discrepancies found, 2 input error.\n"
      "Flags by subcommand:\n"
      "  check        --report FILE --multiplicative --sq15 literal|symmetric --bind a=1,b=2\n"
      "  construct    --output FILE --force --sq15 literal|symmetric --bind a=1 --report FILE\n"
      "  verify-op    --strict-twist --report FILE --bind a=1\n"
      "  solve-op     --kind K --grid lo..hi --denominators 1,2 --strict-twist --bind a=1\n"
      "  emit-system  --kind K --strict-twist --prefix h\n"
      "  fingerprint  --bind a=1\n"
      "  iso          --grid lo..hi --denominators 1,2 --bind a=1\n"
      "  corpus       verify-all --corpus DIR --report FILE --discrepancies FILE --sq15 MODE --strict-twist;"
      " list --corpus DIR\n"
      "Operator kinds: averaging_assoc, rota_baxter, relative_averaging, homomorphic_relative_averaging, "
      "averaging_quadri.");

  // check
  Common check_opts;
  std::string check_file;
  bool multiplicative = false;
  auto* check = app.add_subcommand("check", "Check an algebra, representation or action file against its axioms");
  check->add_option("file", check_file, "Algebra, representation or action file")->required();
  check->add_option("--report", check_opts.report, "Write the JSON report to this file");
  check->add_flag("--multiplicative", multiplicative, "Also check multiplicativity of the twist");
  check->add_option("--sq15", check_opts.sq15, "Reading of the sq15 identities: literal (default) or symmetric");
  check->add_option("--bind", check_opts.bind, "Specialize parameters, e.g. a=1,b=1/2");

  // construct
  Common build_opts;
  std::string build_name, output;
  std::vector<std::string> build_inputs;
  bool force = false;
  auto* construct = app.add_subcommand(
      "construct", "Build a derived structure: sum-dias, sum-tri, dsum, hemi, semidirect, quotient, avg-dias, "
                   "rb-dias, ravg-quadri, havg-six");
  construct->add_option("name", build_name, "Construction name")
      ->required()
      ->check(CLI::IsMember({"sum-dias", "sum-tri", "dsum", "hemi", "semidirect", "quotient", "avg-dias", "rb-dias",
                             "ravg-quadri", "havg-six"}));
  construct->add_option("inputs", build_inputs, "Input files (algebra, representation, action, operator)")
      ->required();
  construct->add_option("-o,--output", output, "Write the constructed algebra here instead of stdout");
  construct->add_flag("--force", force, "Build even when the precondition check fails");
  construct->add_option("--sq15", build_opts.sq15, "Reading of sq15 for six-dendriform preconditions");
  construct->add_option("--bind", build_opts.bind, "Specialize parameters of the inputs");
  construct->add_option("--report", build_opts.report, "Write the precondition report here");

  // verify-op
  Common vop_opts;
  std::string vop_algebra, vop_operator;
  auto* verify_op = app.add_subcommand("verify-op", "Verify an operator file against an algebra, representation "
                                                    "or action file");
  verify_op->add_option("algebra", vop_algebra, "Algebra, representation or action file")->required();
  verify_op->add_option("operator", vop_operator, "Operator file")->required();
  verify_op->add_flag("--strict-twist", vop_opts.strict_twist, "Require the operator to commute with the twist");
  verify_op->add_option("--report", vop_opts.report, "Write the JSON report to this file");
  verify_op->add_option("--bind", vop_opts.bind, "Specialize parameters");

  // solve-op
  Common sop_opts;
  std::string sop_algebra, sop_kind, sop_grid = "-2..2", sop_den = "1";
  auto* solve_op = app.add_subcommand("solve-op", "Enumerate operators with entries on a rational grid (dim <= 3)");
  solve_op->add_option("algebra", sop_algebra, "Parameter-free algebra file (or use --bind)")->required();
  solve_op->add_option("--kind", sop_kind, "Operator kind")->required();
  solve_op->add_option("--grid", sop_grid, "Integer numerator range lo..hi (default -2..2)");
  solve_op->add_option("--denominators", sop_den, "Comma-separated denominators (default 1)");
  solve_op->add_flag("--strict-twist", sop_opts.strict_twist, "Require twist commutation for every kind");
  solve_op->add_option("--bind", sop_opts.bind, "Specialize parameters");

  // emit-system
  Common emit_opts;
  std::string emit_algebra, emit_kind, emit_prefix = "h";
  auto* emit = app.add_subcommand("emit-system", "Print the polynomial system defining operators of a kind");
  emit->add_option("algebra", emit_algebra, "Algebra file")->required();
  emit->add_option("--kind", emit_kind, "Operator kind")->required();
  emit->add_flag("--strict-twist", emit_opts.strict_twist, "Include twist commutation for every kind");
  emit->add_option("--prefix", emit_prefix, "Prefix of the unknown entries (default h)");

  // fingerprint
  Common fp_opts;
  std::string fp_algebra;
  auto* fingerprint_cmd = app.add_subcommand("fingerprint", "Isomorphism invariants of a parameter-free algebra");
  fingerprint_cmd->add_option("algebra", fp_algebra, "Algebra file")->required();
  fingerprint_cmd->add_option("--bind", fp_opts.bind, "Specialize parameters");

  // iso
  Common iso_opts;
  std::string iso_a, iso_b, iso_grid = "-2..2", iso_den = "1";
  auto* iso = app.add_subcommand("iso", "Bounded isomorphism search between two parameter-free algebras");
  iso->add_option("first", iso_a, "Algebra file")->required();
  iso->add_option("second", iso_b, "Algebra file")->required();
  iso->add_option("--grid", iso_grid, "Integer numerator range lo..hi (default -2..2)");
  iso->add_option("--denominators", iso_den, "Comma-separated denominators (default 1)");
  iso->add_option("--bind", iso_opts.bind, "Specialize parameters of both algebras");

  // corpus
  Common corpus_opts;
  std::string corpus_dir = "corpus", discrepancies;
  auto* corpus_cmd = app.add_subcommand("corpus", "Corpus verification");
  corpus_cmd->require_subcommand(1);
  auto* verify_all = corpus_cmd->add_subcommand("verify-all", "Verify every manifest entry");
  verify_all->add_option("--corpus", corpus_dir, "Corpus directory (default ./corpus)");
  verify_all->add_option("--report", corpus_opts.report, "Write the aggregate JSON report here");
  verify_all->add_option("--discrepancies", discrepancies, "Write a Markdown discrepancy summary here");
  verify_all->add_option("--sq15", corpus_opts.sq15, "Reading of sq15: literal (default) or symmetric");
  verify_all->add_flag("--strict-twist", corpus_opts.strict_twist, "Require twist commutation for every operator");
  auto* list = corpus_cmd->add_subcommand("list", "List manifest entries");
  list->add_option("--corpus", corpus_dir, "Corpus directory (default ./corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) {
      const json j = read_json_file(check_file);
      const std::string flavor = file_flavor(j);
      const Sq15Mode mode = sq15_mode(check_opts.sq15);
      const auto bindings = check_opts.bind.empty() ? std::map<std::string, Rational>{}
                                                    : parse_bindings(check_opts.bind);
      Report r;
      if (flavor == "algebra") {
        const auto a = bundle_specialize(algebra_from_json(j), bindings);
        r = check_algebra(a, mode);
        if (multiplicative) r.merge(check_multiplicative(a));
      } else if (flavor == "representation") {
        const auto rep = bundle_specialize(representation_from_json(j), bindings);
        r = check_representation(rep);
        if (multiplicative) r.merge(check_multiplicative(rep.base));
      } else {
        const auto act = bundle_specialize(action_from_json(j), bindings);
        r = check_action(act);
        if (multiplicative) {
          r.merge(check_multiplicative(act.acting));
          r.merge(check_multiplicative(act.acted).prefixed("acted."));
        }
      }
      r.sort();
      return finish_report(r, check_file, check_opts.report);
    }

    if (*construct) {
      BuildOptions b;
      b.force = force;
      b.sq15 = sq15_mode(build_opts.sq15);
      const auto bindings = build_opts.bind.empty() ? std::map<std::string, Rational>{}
                                                    : parse_bindings(build_opts.bind);
      auto need = [&](std::size_t n) {
        if (build_inputs.size() != n)
          throw UsageError("construct " + build_name + " expects " + std::to_string(n) + " input file(s)");
      };
      auto algebra_in = [&](std::size_t i) { return bundle_specialize(load_algebra(build_inputs[i]), bindings); };
      auto operator_in = [&](std::size_t i) {
        auto op = load_operator(build_inputs[i]);
        std::map<std::string, Polynomial> subst;
        for (const auto& [k, v] : bindings) subst.emplace(k, Polynomial(v));
        op.matrix = op.matrix.unaryExpr([&](const Polynomial& p) { return p.substitute(subst); }).eval();
        return op;
      };
      // Relative and homomorphic operators accept a plain dendriform algebra,
      // taken with its adjoint representation or action.
      auto rep_in = [&](std::size_t i) {
        const json j = read_json_file(build_inputs[i]);
        if (file_flavor(j) == "algebra") return adjoint_representation(bundle_specialize(algebra_from_json(j), bindings));
        return bundle_specialize(representation_from_json(j), bindings);
      };
      auto action_in = [&](std::size_t i) {
        const json j = read_json_file(build_inputs[i]);
        if (file_flavor(j) == "algebra") return adjoint_action(bundle_specialize(algebra_from_json(j), bindings));
        return bundle_specialize(action_from_json(j), bindings);
      };

      AlgebraBundle out;
      try {
        if (build_name == "sum-dias") {
          need(1);
          out = quadri_to_diassociative(algebra_in(0));
        } else if (build_name == "sum-tri") {
          need(1);
          out = six_to_triassociative(algebra_in(0));
        } else if (build_name == "dsum") {
          need(2);
          out = direct_sum(algebra_in(0), algebra_in(1));
        } else if (build_name == "hemi") {
          need(1);
          out = hemi_semidirect(rep_in(0), b);
        } else if (build_name == "semidirect") {
          need(1);
          out = semidirect_dendriform(action_in(0), b);
        } else if (build_name == "quotient") {
          need(1);
          const auto a = algebra_in(0);
          if (!is_parameter_free(a)) throw UsageError("quotient needs a parameter-free algebra; use --bind");
          const auto q = quotient_dendriform(to_rational(a), force);
          if (!build_opts.report.empty()) write_text_file(build_opts.report, dump(to_json(q.report)));
          if (!q.algebra) {
            std::cerr << "quotient: preconditions fail (" << q.report.size() << " entries)\n";
            for (const auto& t : q.report.failing_templates()) std::cerr << "  " << t << "\n";
            return kFail;
          }
          out = to_polynomial(*q.algebra);
        } else if (build_name == "avg-dias") {
          need(2);
          out = averaging_induced_diassociative(algebra_in(0), operator_in(1).matrix, b);
        } else if (build_name == "rb-dias") {
          need(2);
          out = rota_baxter_induced(algebra_in(0), operator_in(1).matrix, b);
        } else if (build_name == "ravg-quadri") {
          need(2);
          out = relative_averaging_induced_quadri(rep_in(0), operator_in(1).matrix, b);
        } else {
          need(2);
          out = homomorphic_averaging_induced_six(action_in(0), operator_in(1).matrix, b);
        }
      } catch (const PreconditionError& e) {
        if (!build_opts.report.empty()) write_text_file(build_opts.report, dump(to_json(e.report())));
        std::cerr << build_name << ": " << e.what() << " (" << e.report().size() << " entries; use --force)\n";
        for (const auto& t : e.report().failing_templates()) std::cerr << "  " << t << "\n";
        return kFail;
      }
      std::string header = "constructed by homsplit construct " + build_name + " from";
      for (const auto& in : build_inputs) header += " " + std::filesystem::path(in).filename().string();
      if (force) header += " (forced)";
      const std::string text = dump(to_json(out), {header});
      if (output.empty()) std::cout << text;
      else write_text_file(output, text);
      return kPass;
    }

    if (*verify_op) {
      const json j = read_json_file(vop_algebra);
      const std::string flavor = file_flavor(j);
      auto op = load_operator(vop_operator);
      const auto bindings = vop_opts.bind.empty() ? std::map<std::string, Rational>{} : parse_bindings(vop_opts.bind);
      std::map<std::string, Polynomial> subst;
      for (const auto& [k, v] : bindings) subst.emplace(k, Polynomial(v));
      op.matrix = op.matrix.unaryExpr([&](const Polynomial& p) { return p.substitute(subst); }).eval();
      Report r;
      if (flavor == "algebra") {
        const auto a = corpus::with_parameters(bundle_specialize(algebra_from_json(j), bindings), op.parameters);
        r = verify_operator(op.kind, a, op.matrix, vop_opts.strict_twist);
      } else if (flavor == "representation") {
        if (op.kind != OperatorKind::relative_averaging)
          throw UsageError("a representation file takes a relative_averaging operator");
        auto rep = bundle_specialize(representation_from_json(j), bindings);
        rep.base = corpus::with_parameters(rep.base, op.parameters);
        r = verify_relative_averaging(rep, op.matrix);
      } else {
        if (op.kind != OperatorKind::homomorphic_relative_averaging)
          throw UsageError("an action file takes a homomorphic_relative_averaging operator");
        auto act = bundle_specialize(action_from_json(j), bindings);
        act.acting = corpus::with_parameters(act.acting, op.parameters);
        r = verify_homomorphic_relative_averaging(act, op.matrix);
      }
      if (!op.imaginary_unit.empty()) r = reduce_imaginary_unit(r, op.imaginary_unit);
      return finish_report(r, vop_operator, vop_opts.report);
    }

    if (*solve_op) {
      const auto a = specialized(load_algebra(sop_algebra), sop_opts.bind);
      const auto [lo, hi] = parse_range(sop_grid);
      GridOptions g;
      g.values = grid_values(lo, hi, parse_denominators(sop_den));
      g.strict_twist = sop_opts.strict_twist;
      const auto sols = solve_operators_grid(parse_operator_kind(sop_kind), a, g);
      json out = json::array();
      for (const auto& s : sols) out.push_back(rational_matrix_json(s));
      std::cout << dump(json{{"kind", sop_kind}, {"grid", sop_grid}, {"count", sols.size()}, {"solutions", out}});
      return kPass;
    }

    if (*emit) {
      const auto a = load_algebra(emit_algebra);
      for (const auto& eq : emit_operator_system(parse_operator_kind(emit_kind), a, emit_prefix, emit_opts.strict_twist))
        std::cout << eq.str() << " = 0\n";
      return kPass;
    }

    if (*fingerprint_cmd) {
      const auto a = specialized(load_algebra(fp_algebra), fp_opts.bind);
      const auto f = fingerprint(a);
      json cp = json::array();
      for (const auto& c : f.twist_charpoly) cp.push_back(c.str());
      std::cout << dump(json{{"op_span_dims", f.op_span_dims},
                             {"total_span_dim", f.total_span_dim},
                             {"twist_rank", f.twist_rank},
                             {"twist_charpoly", cp},
                             {"annihilator_dim", f.annihilator_dim}});
      return kPass;
    }

    if (*iso) {
      const auto a = specialized(load_algebra(iso_a), iso_opts.bind);
      const auto b = specialized(load_algebra(iso_b), iso_opts.bind);
      const auto [lo, hi] = parse_range(iso_grid);
      const auto res = brute_force_iso_search(a, b, grid_values(lo, hi, parse_denominators(iso_den)));
      json out;
      switch (res.verdict) {
      case IsoSearchResult::Verdict::isomorphic: out["isomorphic"] = rational_matrix_json(*res.map); break;
      case IsoSearchResult::Verdict::distinct: out["distinct"] = res.differing_field; break;
      case IsoSearchResult::Verdict::unknown: out["unknown"] = "no isomorphism within grid " + iso_grid; break;
      }
      out["candidates"] = res.candidates;
      std::cout << dump(out);
      return res.verdict == IsoSearchResult::Verdict::isomorphic ? kPass : kFail;
    }

    if (*corpus_cmd) {
      const auto m = corpus::load_manifest(corpus_dir);
      if (*list) {
        for (const auto& e : m.entries) std::cout << e.id << "\t" << e.type << "\t" << e.expected << "\n";
        return kPass;
      }
      corpus::Options o;
      o.sq15 = sq15_mode(corpus_opts.sq15);
      o.strict_twist = corpus_opts.strict_twist;
      const auto r = corpus::verify_all(m, o);
      if (!corpus_opts.report.empty()) write_text_file(corpus_opts.report, dump(r.report));
      if (!discrepancies.empty()) write_text_file(discrepancies, corpus::discrepancies_markdown(r));
      const auto& s = r.report["summary"];
      std::cout << "corpus: " << s["entries"].get<std::size_t>() << " entries, " << s["agreements"].get<std::size_t>()
                << " agree, " << s["discrepancies"].get<std::size_t>() << " discrepancies\n";
      for (const auto& d : r.report["discrepancies"])
        std::cout << "  " << d["id"].get<std::string>() << ": expected " << d["expected"].get<std::string>()
                  << ", observed " << d["observed"].get<std::string>() << "\n";
      return r.discrepancies ? kFail : kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    for (const auto& entry : e.report().entries())
      std::cerr << "  " << entry.template_id << (entry.note.empty() ? "" : ": " + entry.note) << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
