// Acceptance run: one PASS/FAIL line per criterion.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "homsplit/constructions.hpp"
#include "homsplit/corpus.hpp"
#include "homsplit/generators.hpp"
#include "homsplit/io.hpp"
#include "homsplit/morphisms.hpp"

using namespace homsplit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::uint64_t g_seed = gen::kDefaultSeed;

gen::Rng rng(std::uint64_t salt) { return gen::Rng(g_seed ^ (salt * 0x9E3779B97F4A7C15ull)); }

const std::filesystem::path kCorpus = HOMSPLIT_CORPUS_DIR;

BuildOptions forced(Sq15Mode mode = Sq15Mode::literal) {
  BuildOptions o;
  o.force = true;
  o.sq15 = mode;
  return o;
}

// Square matrices over {-1, 0, 1}.
std::vector<RatMatrix> small_matrices(int rows, int cols) {
  std::vector<RatMatrix> out;
  const int n = rows * cols;
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  while (true) {
    RatMatrix m(rows, cols);
    for (int e = 0; e < n; ++e) m(e / cols, e % cols) = Rational(idx[static_cast<std::size_t>(e)]);
    out.push_back(m);
    int pos = n - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == 2) idx[static_cast<std::size_t>(pos--)] = -1;
    if (pos < 0) break;
  }
  return out;
}

RatMatrix random_operator(gen::Rng& g, int rows, int cols) {
  switch (gen::uniform(g, 0, 3)) {
  case 0: return RatMatrix::Zero(rows, cols);
  case 1: return RatMatrix::Identity(rows, cols);
  case 2: return gen::random_matrix(g, rows, cols, -1, 1, 0.3);
  default: return gen::random_matrix(g, rows, cols);
  }
}

Polynomial random_poly(gen::Rng& g) {
  static const std::vector<std::string> names = {"a", "b", "eta"};
  Polynomial p;
  for (int t = gen::uniform(g, 0, 4); t > 0; --t) {
    Polynomial m(Rational(gen::uniform(g, -5, 5), gen::uniform(g, 1, 4)));
    for (const auto& n : names)
      for (int e = gen::uniform(g, 0, 2); e > 0; --e) m *= Polynomial::variable(n);
    p += m;
  }
  return p;
}

std::vector<std::pair<std::string, AlgebraBundle>> corpus_quadri() {
  const auto m = corpus::load_manifest(kCorpus);
  std::vector<std::pair<std::string, AlgebraBundle>> out;
  for (const auto& e : m.entries) {
    if (e.type != "algebra") continue;
    auto a = load_algebra(m.resolve(e));
    if (a.kind == Kind::quadri_dendriform) out.emplace_back(e.id, std::move(a));
  }
  return out;
}

// Every binding of the declared parameters to values in {0, 1, 2}.
std::vector<std::map<std::string, Rational>> specializations(const AlgebraBundle& a) {
  std::vector<std::map<std::string, Rational>> out{{}};
  for (const auto& p : a.parameters) {
    std::vector<std::map<std::string, Rational>> next;
    for (const auto& b : out)
      for (int v = 0; v <= 2; ++v) {
        auto c = b;
        c[p] = Rational(v);
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

Outcome kernel() {
  auto g = rng(1);
  int failures = 0;
  for (int n = 0; n < 1000; ++n) {
    const Polynomial p = random_poly(g), q = random_poly(g), r = random_poly(g);
    failures += (p + q) + r != p + (q + r);
    failures += p + q != q + p;
    failures += (p * q) * r != p * (q * r);
    failures += p * q != q * p;
    failures += p * (q + r) != p * q + p * r;
    failures += p * Polynomial(1) != p;
    failures += !(p - p).is_zero();
    failures += Polynomial::parse(p.str()) != p;
  }
  return {failures == 0, "1000 triples, " + std::to_string(failures) + " failures"};
}

Outcome splitting_transfer() {
  int checked = 0, bad = 0;
  for (const auto& [id, q] : corpus_quadri()) {
    if (!check_quadri(q).pass()) continue;
    ++checked;
    bad += !check_diassociative(quadri_to_diassociative(q)).pass();
  }
  auto g = rng(2);
  int generated = 0;
  while (generated < 50) {
    const auto d = gen::random_valid_algebra(g, Kind::dendriform, gen::uniform(g, 1, 2));
    const auto q = hemi_semidirect(adjoint_representation(d), forced());
    if (!check_quadri(q).pass()) continue;
    ++generated;
    bad += !check_diassociative(quadri_to_diassociative(q)).pass();
  }
  return {bad == 0, std::to_string(checked) + " corpus + " + std::to_string(generated) + " hemi instances, " +
                        std::to_string(bad) + " failures"};
}

Outcome hemi_closure() {
  auto g = rng(3);
  int instances = 0, bad = 0;
  auto run = [&](const auto& d) {
    ++instances;
    bad += !check_quadri(hemi_semidirect(adjoint_representation(d), forced())).pass();
  };
  run(zero_algebra<Rational>(Kind::dendriform, 2));
  const auto deta = load_algebra(kCorpus / "sec2/D_eta.json");
  if (check_dendriform(deta).pass()) run(deta);
  int tries = 0;
  while (instances < 52 && tries < 100000) {
    ++tries;
    const auto d = gen::sparse_algebra(g, Kind::dendriform, gen::uniform(g, 1, 3), 4);
    if (check_dendriform(d).pass()) run(d);
  }
  return {bad == 0 && instances >= 52,
          std::to_string(instances) + " instances (" + std::to_string(tries) + " sampled), " + std::to_string(bad) +
              " failures"};
}

Outcome graph_biconditional() {
  auto g = rng(4);
  int disagree = 0, pos = 0;
  for (int n = 0; n < 200; ++n) {
    const int dim = gen::uniform(g, 1, 2);
    const auto d = gen::random_valid_algebra(g, Kind::dendriform, dim);
    const auto rep = adjoint_representation(d);
    const RatMatrix t = random_operator(g, dim, dim);
    const bool ravg = verify_relative_averaging(rep, t).pass();
    const bool graph = graph_is_subalgebra(hemi_semidirect(rep, forced()), t, GraphDirection::module_to_base).pass();
    disagree += ravg != graph;
    pos += ravg;
  }
  return {disagree == 0, "200 pairs (" + std::to_string(pos) + " operators), " + std::to_string(disagree) +
                             " disagreements"};
}

Outcome induced_structures() {
  std::ostringstream detail;
  bool ok = true;

  // (a): random operators plus every small operator on small algebras
  {
    auto g = rng(51);
    int cases = 0, bad = 0, commuting = 0, bad_commuting = 0;
    std::string first;
    auto check = [&](const BasicAlgebra<Rational>& a, const RatMatrix& h) {
      if (!verify_averaging_assoc(a, h).pass()) return;
      ++cases;
      const bool comm = h * a.twist == a.twist * h;
      commuting += comm;
      if (check_diassociative(averaging_induced_diassociative(a, h)).pass()) return;
      ++bad;
      bad_commuting += comm;
      if (first.empty()) {
        nlohmann::json j{{"mu", to_json(to_polynomial(a))["ops"]["mu"]},
                         {"alpha", matrix_to_json(to_poly_matrix(a.twist))},
                         {"H", matrix_to_json(to_poly_matrix(h))}};
        first = j.dump();
      }
    };
    {
      auto a = zero_algebra<Rational>(Kind::associative, 2, RatMatrix{{1, -2}, {0, -1}});
      a.op(opname::mu).set(1, 1, 1, Rational(1));
      a.op(opname::mu).set(1, 2, 1, Rational(-1));
      a.op(opname::mu).set(2, 1, 1, Rational(-1));
      a.op(opname::mu).set(2, 2, 2, Rational(-1));
      check(a, RatMatrix{{0, 0}, {-1, -1}});
    }
    for (int n = 0; n < 150; ++n) {
      const auto a = gen::random_valid_algebra(g, Kind::associative, gen::uniform(g, 1, 3));
      check(a, random_operator(g, a.dim, a.dim));
    }
    for (int n = 0; n < 20; ++n) {
      const auto a = gen::random_valid_algebra(g, Kind::associative, 2);
      for (const auto& h : small_matrices(2, 2)) check(a, h);
    }
    ok = ok && bad == 0 && cases >= 100;
    detail << "(a) " << cases << " operators, " << bad << " failures (" << commuting << " commute with the twist, "
           << bad_commuting << " of those fail)";
    if (!first.empty()) detail << ", first counterexample " << first;
  }
  // (b): the worked example at a = 1 with its families, and exhaustive small R
  {
    int cases = 0, bad = 0;
    auto check = [&](const auto& d, const auto& r) {
      ++cases;
      const auto induced = rota_baxter_induced(d, r);
      bad += !(check_diassociative(induced).pass() && verify_rota_baxter(induced, r).pass());
    };
    const auto dias = bundle_specialize(load_algebra(kCorpus / "sec2/dias.json"), {{"a", Rational(1)}});
    for (const char* f : {"sec2/dias_rb1.json", "sec2/dias_rb2.json", "sec2/dias_rb3.json"}) {
      const auto op = load_operator(kCorpus / f);
      auto d = dias;
      d.parameters = op.parameters;
      if (verify_rota_baxter(d, op.matrix).pass()) check(d, op.matrix);
    }
    auto g = rng(52);
    for (int n = 0; n < 20; ++n) {
      const auto d = gen::random_valid_algebra(g, Kind::diassociative, 2);
      for (const auto& r : small_matrices(2, 2))
        if (verify_rota_baxter(d, r).pass()) check(d, r);
    }
    ok = ok && bad == 0 && cases > 0;
    detail << "; (b) " << cases << " operators, " << bad << " failures";
  }
  // (c)
  {
    auto g = rng(53);
    int cases = 0, bad = 0;
    for (int n = 0; n < 30; ++n) {
      const auto d = gen::random_valid_algebra(g, Kind::dendriform, gen::uniform(g, 1, 2));
      const auto rep = adjoint_representation(d);
      for (const auto& t : small_matrices(d.dim, d.dim)) {
        if (!verify_relative_averaging(rep, t).pass()) continue;
        ++cases;
        const auto q = relative_averaging_induced_quadri(rep, t);
        bad += !(check_quadri(q).pass() && check_homomorphism(t, q, d).pass());
      }
    }
    ok = ok && bad == 0 && cases > 0;
    detail << "; (c) " << cases << " operators, " << bad << " failures";
  }
  // (d)
  {
    auto g = rng(54);
    int cases = 0, bad_sym = 0, bad_lit = 0, bad_tri = 0;
    for (int n = 0; n < 30; ++n) {
      const auto d = gen::random_valid_algebra(g, Kind::dendriform, gen::uniform(g, 1, 2));
      const auto action = adjoint_action(d);
      for (const auto& t : small_matrices(d.dim, d.dim)) {
        if (!verify_homomorphic_relative_averaging(action, t).pass()) continue;
        ++cases;
        const auto six = homomorphic_averaging_induced_six(action, t, forced(Sq15Mode::symmetric));
        bad_sym += !check_six(six, Sq15Mode::symmetric).pass();
        bad_lit += !check_six(six, Sq15Mode::literal).pass();
        bad_tri += !check_triassociative(six_to_triassociative(six)).pass();
      }
    }
    ok = ok && bad_lit == 0 && bad_sym == 0 && bad_tri == 0 && cases > 0;
    detail << "; (d) " << cases << " operators, check_six failures: " << bad_lit << " with literal sq15 (default), "
           << bad_sym << " with symmetric sq15; " << bad_tri << " triassociative failures";
  }
  return {ok, detail.str()};
}

Outcome embedding() {
  int specs = 0, not_quadri = 0, refused = 0, verified = 0, bad = 0;
  std::vector<std::string> refusals;
  for (const auto& [id, q] : corpus_quadri()) {
    for (const auto& bind : specializations(q)) {
      const auto ra = to_rational(bundle_specialize(q, bind));
      ++specs;
      if (!check_quadri(ra).pass()) {
        ++not_quadri;
        continue;
      }
      const auto quotient = quotient_dendriform(ra);
      if (!quotient.report.pass()) {
        ++refused;
        refusals.push_back(id);
        continue;
      }
      const auto rep = embedding_representation(ra, quotient);
      const bool ok = check_representation(rep).pass() && verify_relative_averaging(rep, quotient.projection).pass();
      verified += ok;
      bad += !ok;
    }
  }
  std::ostringstream detail;
  detail << specs << " specializations: " << verified << " verified, " << bad << " failed, " << refused
         << " quotient preconditions failed, " << not_quadri << " not quadri-dendriform";
  if (!refusals.empty()) {
    refusals.erase(std::unique(refusals.begin(), refusals.end()), refusals.end());
    detail << " (refused:";
    for (const auto& r : refusals) detail << ' ' << r;
    detail << ')';
  }
  return {bad == 0 && verified > 0, detail.str()};
}

Outcome corpus_report() {
  const auto m = corpus::load_manifest(kCorpus);
  const auto first = corpus::verify_all(m);
  const auto second = corpus::verify_all(m);
  const bool identical = dump(first.report) == dump(second.report);

  std::set<std::string> dim2, dim3;
  std::set<std::string> families;
  int sec2 = 0, malformed = 0;
  for (const auto& rec : first.report["entries"]) {
    const auto id = rec["id"].get<std::string>();
    if (rec["type"] == "algebra" && id.rfind("dim2.", 0) == 0) dim2.insert(id.substr(5, 2));
    if (rec["type"] == "algebra" && id.rfind("dim3.", 0) == 0) dim3.insert(id.substr(5, id.find('.', 5) - 5));
    if (id.rfind("ops.", 0) == 0) families.insert(m.resolve(m.find(id)).string());
    if (id.rfind("sec2.", 0) == 0) ++sec2;
    if (rec["agreement"].get<bool>()) continue;
    const auto& d = rec["discrepancy"];
    const bool witnessed = (d.contains("first_failure") && !d["first_failure"]["witness"].empty()) ||
                           (d.contains("uncovered") && !d["uncovered"].empty()) ||
                           (d["observed"] == "pass" || d["observed"] == "covered");
    malformed += !witnessed;
  }
  const bool coverage = dim2.size() == 5 && dim3.size() == 13 && families.size() == 40 && sec2 >= 5;
  std::ostringstream detail;
  detail << m.entries.size() << " entries, " << first.discrepancies << " discrepancies reported, coverage "
         << (coverage ? "complete" : "incomplete") << ", runs " << (identical ? "byte-identical" : "differ");
  return {identical && coverage && malformed == 0, detail.str()};
}

Outcome operator_propositions() {
  const auto m = corpus::load_manifest(kCorpus);
  int families = 0, families_pass = 0, grids = 0, uncovered = 0;
  std::set<std::string> files;
  std::map<std::string, int> grids_per_algebra;
  for (const auto& e : m.entries) {
    if (e.type == "operator" && e.id.rfind("ops.", 0) == 0) {
      const auto r = corpus::verify_entry(m, e);
      ++families;
      files.insert(e.path);
      families_pass += r.report["observed"] == "pass";
    }
    if (e.type == "grid") {
      const auto r = corpus::verify_entry(m, e);
      ++grids;
      ++grids_per_algebra[e.algebra];
      uncovered += static_cast<int>(r.report["uncovered"].size());
    }
  }
  int dim2_algebras = 0;
  bool two_each = true;
  for (const auto& e : m.entries)
    if (e.type == "algebra" && e.id.rfind("dim2.", 0) == 0) {
      ++dim2_algebras;
      two_each = two_each && grids_per_algebra[e.id] == 2;
    }
  std::ostringstream detail;
  detail << files.size() << " families in " << families << " verifications (" << families_pass << " pass), " << grids
         << " grid searches over {-2..2}, " << uncovered << " grid solutions outside every family (reported)";
  return {files.size() == 40 && dim2_algebras > 0 && two_each, detail.str()};
}

Outcome fingerprint_invariance() {
  auto g = rng(9);
  int bad = 0;
  for (int n = 0; n < 100; ++n) {
    const Kind kind = n % 2 ? Kind::quadri_dendriform : Kind::dendriform;
    const auto a = gen::random_valid_algebra(g, kind, gen::uniform(g, 1, 3));
    bad += fingerprint(push_forward(a, gen::random_invertible(g, a.dim))) != fingerprint(a);
  }
  return {bad == 0, "100 push-forwards, " + std::to_string(bad) + " changed fingerprints"};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  app.add_option("--seed", g_seed, "seed for generated instances");
  CLI11_PARSE(app, argc, argv);
  std::cout << "seed " << g_seed << "\n";

  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"kernel soundness", kernel},
      {"splitting transfer", splitting_transfer},
      {"hemi-semidirect closure", hemi_closure},
      {"graph biconditional", graph_biconditional},
      {"operator-induced structures", induced_structures},
      {"embedding theorems", embedding},
      {"corpus report", corpus_report},
      {"operator propositions", operator_propositions},
      {"fingerprint invariance", fingerprint_invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail << " [" << ms << " ms]" << std::endl;
  }
  return failed ? 1 : 0;
}
