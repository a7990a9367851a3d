#include <doctest.h>

#include <filesystem>

#include "homsplit/axioms.hpp"
#include "homsplit/constructions.hpp"
#include "homsplit/io.hpp"
#include "support.hpp"

using namespace homsplit;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

std::vector<std::string> corpus_quadri_files() {
  std::vector<std::string> out;
  for (const char* dir : {"dim2", "dim3"})
    for (const auto& f : std::filesystem::directory_iterator(std::filesystem::path(test::corpus_dir()) / dir))
      out.push_back(std::string(dir) + "/" + f.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subset(const Report& r, const std::string& prefix) {
  for (const auto& e : r.entries())
    if (e.template_id.rfind(prefix, 0) == 0) return true;
  return false;
}

template <typename S>
BasicAlgebra<S> with_twist(BasicAlgebra<S> b, Matrix<S> t) {
  b.twist = std::move(t);
  return b;
}

} // namespace

TEST_SUITE("axioms") {

TEST_CASE("zero algebras pass every kind") {
  for (Kind k : {Kind::associative, Kind::dendriform, Kind::diassociative, Kind::triassociative,
                 Kind::quadri_dendriform, Kind::six_dendriform})
    for (int n = 1; n <= 3; ++n) {
      auto g = test::rng(100 + n);
      CHECK(check_algebra(zero_algebra<Rational>(k, n, gen::random_matrix(g, n, n))).pass());
    }
}

TEST_CASE("template counts") {
  CHECK(templates::dendriform().size() == 3);
  CHECK(templates::diassociative().size() == 5);
  CHECK(templates::quadri().size() == 19);
  CHECK(templates::triassociative().size() == 11);
  CHECK(templates::six().size() == 47);
  CHECK(templates::six(Sq15Mode::symmetric).size() == 47);
  CHECK(templates::representation().size() == 9);
}

TEST_CASE("one-dimensional associative examples") {
  auto a = zero_algebra<Rational>(Kind::associative, 1);
  a.op(opname::mu).set(1, 1, 1, Rational(1));
  CHECK(check_associative(a).pass());
  CHECK(check_associative(with_twist(a, RatMatrix{{2}})).pass());
  CHECK_THROWS_AS(check_dendriform(a), std::invalid_argument);
}

TEST_CASE("dendriform example agrees with the brute-force oracle") {
  const auto d = test::load_corpus_algebra("sec2/D_eta.json");
  const Report r = check_dendriform(d);
  CHECK(test::report_failures(r) == test::naive_failures(d, test::naive_dendriform<Polynomial>()));
  CHECK(r.pass());
}

TEST_CASE("perturbed dendriform example") {
  // The twist kills e1 and sends e2 to e1 while every product lands in e3, so
  // each term of each identity vanishes whatever the coefficients on this
  // support are; only a change of support can break it.
  auto d = test::load_corpus_algebra("sec2/D_eta.json");
  d.op(opname::prec).set(2, 2, 3, P("1/2"));
  const Report r = check_dendriform(d);
  CHECK(test::report_failures(r) == test::naive_failures(d, test::naive_dendriform<Polynomial>()));
  CHECK(r.pass());

  d.op(opname::prec).set(2, 2, 2, P("1"));
  const Report moved = check_dendriform(d);
  CHECK_FALSE(moved.pass());
  CHECK(test::report_failures(moved) == test::naive_failures(d, test::naive_dendriform<Polynomial>()));
}

TEST_CASE("diassociative example agrees with the brute-force oracle") {
  const auto d = test::load_corpus_algebra("sec2/dias.json");
  const Report r = check_diassociative(d);
  CHECK(test::report_failures(r) == test::naive_failures(d, test::naive_diassociative<Polynomial>()));
}

TEST_CASE("dendriform reinterpreted as diassociative") {
  const auto d = test::load_corpus_algebra("sec2/D_eta.json");
  auto dias = zero_algebra(Kind::diassociative, 3, d.twist);
  dias.parameters = d.parameters;
  dias.op(opname::dashv) = d.op(opname::prec);
  dias.op(opname::vdash) = d.op(opname::succ);
  const Report r = check_diassociative(dias);
  CHECK(test::report_failures(r) == test::naive_failures(dias, test::naive_diassociative<Polynomial>()));
}

TEST_CASE("corpus quadri entries agree with the brute-force oracle") {
  const auto oracle = test::naive_quadri<Polynomial>();
  for (const auto& f : corpus_quadri_files()) {
    CAPTURE(f);
    const auto q = test::load_corpus_algebra(f);
    CHECK(test::report_failures(check_quadri(q)) == test::naive_failures(q, oracle));
  }
}

TEST_CASE("dim-2 D1 passes the oracle and the checker") {
  const auto q = test::load_corpus_algebra("dim2/D1.json");
  CHECK(test::naive_failures(q, test::naive_quadri<Polynomial>()).empty());
  CHECK(check_quadri(q).pass());
}

TEST_CASE("random instances agree with the brute-force oracle") {
  auto g = test::rng(21);
  const auto dend = test::naive_dendriform<Rational>();
  const auto dias = test::naive_diassociative<Rational>();
  const auto quadri = test::naive_quadri<Rational>();
  for (int n = 0; n < 150; ++n) {
    const int dim = gen::uniform(g, 1, 3);
    const auto d = gen::sparse_algebra(g, Kind::dendriform, dim, 4);
    CHECK(test::report_failures(check_dendriform(d)) == test::naive_failures(d, dend));
    const auto a = gen::sparse_algebra(g, Kind::diassociative, dim, 4);
    CHECK(test::report_failures(check_diassociative(a)) == test::naive_failures(a, dias));
    const auto q = gen::sparse_algebra(g, Kind::quadri_dendriform, dim, 5);
    CHECK(test::report_failures(check_quadri(q)) == test::naive_failures(q, quadri));
  }
}

TEST_CASE("sign-flip perturbations agree with the oracle") {
  // Passing instances: corpus entries that verify and the worked example.
  std::vector<AlgebraBundle> passing;
  for (const auto& f : corpus_quadri_files()) {
    auto q = test::load_corpus_algebra(f);
    if (check_quadri(q).pass()) passing.push_back(std::move(q));
  }
  passing.push_back(test::load_corpus_algebra("sec2/D_eta.json"));
  REQUIRE(passing.size() > 5);
  const auto quadri = test::naive_quadri<Polynomial>();
  const auto dend = test::naive_dendriform<Polynomial>();
  auto g = test::rng(22);
  int detected = 0, total = 0;
  while (total < 100) {
    auto b = passing[static_cast<std::size_t>(gen::uniform(g, 0, static_cast<int>(passing.size()) - 1))];
    std::vector<std::pair<std::string, BilinearOp<Polynomial>::Key>> nonzero;
    for (const auto& [name, op] : b.ops)
      for (const auto& [key, c] : op.entries()) nonzero.emplace_back(name, key);
    if (nonzero.empty()) continue;
    const auto& [name, key] = nonzero[static_cast<std::size_t>(gen::uniform(g, 0, static_cast<int>(nonzero.size()) - 1))];
    const auto [i, j, k] = key;
    auto& op = b.op(name);
    op.set(i, j, k, -op.get(i, j, k));
    ++total;
    const Report r = check_algebra(b);
    detected += !r.pass();
    CHECK(test::report_failures(r) ==
          test::naive_failures(b, b.kind == Kind::dendriform ? dend : quadri));
  }
  MESSAGE("sign flips detected: " << detected << " of " << total);
}

TEST_CASE("third pairs of split chains are implied") {
  auto g = test::rng(23);
  int both = 0;
  for (int n = 0; n < 300; ++n) {
    const auto q = gen::sparse_algebra(g, Kind::quadri_dendriform, gen::uniform(g, 1, 3), 4);
    const Report pairs = check_quadri(q);
    const Report third = evaluate_templates(algebra_context(q), templates::quadri_third_pairs());
    for (const auto& t : templates::quadri_third_pairs()) {
      const std::string chain = t.id.substr(0, t.id.size() - 2);
      const auto failed = pairs.failing_templates();
      const bool a = std::find(failed.begin(), failed.end(), chain + ".a") != failed.end();
      const bool b = std::find(failed.begin(), failed.end(), chain + ".b") != failed.end();
      if (a || b) continue;
      ++both;
      const auto thirds = third.failing_templates();
      CHECK(std::find(thirds.begin(), thirds.end(), t.id) == thirds.end());
    }
  }
  CHECK(both > 0);
}

TEST_CASE("six-dendriform pass implies its parts pass") {
  auto g = test::rng(24);
  int passes = 0;
  for (int n = 0; n < 400; ++n) {
    const auto s = gen::sparse_algebra(g, Kind::six_dendriform, gen::uniform(g, 1, 2), 3);
    for (Sq15Mode mode : {Sq15Mode::literal, Sq15Mode::symmetric}) {
      if (!check_six(s, mode).pass()) continue;
      ++passes;
      CHECK(check_quadri(six_quadri_part(s)).pass());
      CHECK(check_dendriform(six_perp_part(s)).pass());
    }
  }
  CHECK(passes > 0);
}

TEST_CASE("degenerate six-dendriform from one dendriform pair") {
  auto g = test::rng(25);
  for (int n = 0; n < 30; ++n) {
    const auto d = gen::random_valid_algebra(g, Kind::dendriform, gen::uniform(g, 1, 3));
    auto s = zero_algebra<Rational>(Kind::six_dendriform, d.dim, d.twist);
    for (const char* p : {opname::prec_perp, opname::prec_vdash, opname::prec_dashv}) s.op(p) = d.op(opname::prec);
    for (const char* q : {opname::succ_perp, opname::succ_vdash, opname::succ_dashv}) s.op(q) = d.op(opname::succ);
    CHECK(check_six(s, Sq15Mode::symmetric).pass());
  }
}

TEST_CASE("triassociative with one operation repeated") {
  const auto d = test::load_corpus_algebra("sec2/dias.json");
  auto t = zero_algebra(Kind::triassociative, 3, d.twist);
  t.parameters = d.parameters;
  t.op(opname::dashv) = d.op(opname::dashv);
  t.op(opname::vdash) = d.op(opname::dashv);
  t.op(opname::perp) = d.op(opname::dashv);
  const Report r = check_triassociative(t);
  // Every template of the triassociative set is then an instance of
  // (x.y).a(z) = a(x).(y.z) for the single product.
  auto a = zero_algebra(Kind::associative, 3, d.twist);
  a.parameters = d.parameters;
  a.op(opname::mu) = d.op(opname::dashv);
  CHECK(r.pass() == check_associative(a).pass());
}

TEST_CASE("representation checks") {
  auto g = test::rng(26);
  const auto d = test::load_corpus_algebra("sec2/D_eta.json");
  CHECK(check_representation(adjoint_representation(d)).pass() == check_dendriform(d).pass());
  CHECK(check_representation(adjoint_representation(zero_algebra<Rational>(Kind::dendriform, 2))).pass());
  for (int n = 0; n < 100; ++n) {
    const auto s = gen::sparse_algebra(g, Kind::dendriform, gen::uniform(g, 1, 3), 4);
    CHECK(check_representation(adjoint_representation(s)).pass() == check_dendriform(s).pass());
    BasicRepresentation<Rational> zero{s, 2, {}, gen::random_matrix(g, 2, 2)};
    for (const char* a : {opname::prec_l, opname::succ_l})
      zero.actions.emplace(a, BilinearOp<Rational>(s.dim, 2, 2));
    for (const char* a : {opname::prec_r, opname::succ_r})
      zero.actions.emplace(a, BilinearOp<Rational>(2, s.dim, 2));
    CHECK(check_representation(zero).pass());
  }
}

TEST_CASE("action checks") {
  auto g = test::rng(27);
  for (int n = 0; n < 60; ++n) {
    const auto d = gen::random_valid_algebra(g, Kind::dendriform, gen::uniform(g, 1, 2));
    const auto d2 = gen::random_valid_algebra(g, Kind::dendriform, gen::uniform(g, 1, 2));
    BasicAction<Rational> zero{d, d2, {}};
    for (const char* a : {opname::prec_l, opname::succ_l})
      zero.actions.emplace(a, BilinearOp<Rational>(d.dim, d2.dim, d2.dim));
    for (const char* a : {opname::prec_r, opname::succ_r})
      zero.actions.emplace(a, BilinearOp<Rational>(d2.dim, d.dim, d2.dim));
    CHECK(check_action(zero).pass());
    const auto s = gen::sparse_algebra(g, Kind::dendriform, gen::uniform(g, 1, 2), 3);
    CHECK(check_action(adjoint_action(s)).pass() == check_dendriform(s).pass());
  }
  const auto z = zero_algebra<Rational>(Kind::dendriform, 2);
  CHECK(check_action(adjoint_action(z)).pass());
}

TEST_CASE("multiplicativity") {
  auto g = test::rng(28);
  for (int n = 0; n < 50; ++n) {
    const auto s = gen::sparse_algebra(g, Kind::quadri_dendriform, 3, 5);
    CHECK(check_multiplicative(with_twist(s, RatMatrix(RatMatrix::Identity(3, 3)))).pass());
    CHECK(check_multiplicative(zero_algebra<Rational>(Kind::dendriform, 3, gen::random_matrix(g, 3, 3))).pass());
  }
  // alpha(e_i o e_j) - alpha(e_i) o alpha(e_j), expanded by hand loops.
  const auto d = test::load_corpus_algebra("sec2/D_eta.json");
  const test::Naive<Polynomial> n{d};
  std::vector<std::string> expected;
  for (const auto& [name, op] : d.ops)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const auto l = n.twist(n.mul(name, n.basis(i), n.basis(j)));
        const auto r = n.mul(name, n.twist(n.basis(i)), n.twist(n.basis(j)));
        for (int k = 0; k < 3; ++k)
          if (!(l[k] - r[k]).is_zero())
            expected.push_back("mult." + name + "|" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k + 1) + "|" + (l[k] - r[k]).str());
      }
  std::sort(expected.begin(), expected.end());
  const Report r = check_multiplicative(d);
  CHECK_FALSE(r.pass());
  CHECK(test::report_failures(r) == expected);
}

TEST_CASE("homomorphism checks") {
  auto g = test::rng(29);
  for (int n = 0; n < 40; ++n) {
    const auto a = gen::random_valid_algebra(g, Kind::quadri_dendriform, 2);
    const auto b = gen::sparse_algebra(g, Kind::quadri_dendriform, 3, 4);
    CHECK(check_homomorphism(RatMatrix(RatMatrix::Identity(2, 2)), a, a).pass());
    CHECK(check_homomorphism(RatMatrix(RatMatrix::Zero(3, 2)), a, b).pass());
  }
  const auto d = test::load_corpus_algebra("sec2/D_eta.json");
  CHECK(check_homomorphism(PolyMatrix(PolyMatrix::Identity(3, 3)), d, d).pass());
  CHECK(homomorphism_correspondence(Kind::quadri_dendriform, Kind::dendriform).size() == 4);
}

TEST_CASE("reports are deterministic and sorted") {
  const auto q = test::load_corpus_algebra("dim2/D5.json");
  const Report r1 = check_quadri(q), r2 = check_quadri(q);
  CHECK(dump(to_json(r1)) == dump(to_json(r2)));
  CHECK_FALSE(r1.pass());
  for (std::size_t i = 1; i < r1.size(); ++i) {
    const auto& x = r1.entries()[i - 1];
    const auto& y = r1.entries()[i];
    CHECK((x.template_id < y.template_id || (x.template_id == y.template_id && x.witness < y.witness)));
    CHECK_FALSE(y.residual.is_zero());
  }
  CHECK(is_subset(r1, "quadri.Hq"));
}

TEST_CASE("sq15 readings differ only on sq15") {
  auto g = test::rng(30);
  auto strip = [](const Report& r) {
    std::vector<std::string> out;
    for (const auto& f : test::report_failures(r))
      if (f.rfind("six.sq15", 0) != 0) out.push_back(f);
    return out;
  };
  for (int n = 0; n < 200; ++n) {
    const auto s = gen::sparse_algebra(g, Kind::six_dendriform, 2, 3);
    CHECK(strip(check_six(s, Sq15Mode::literal)) == strip(check_six(s, Sq15Mode::symmetric)));
  }
  int literal_fails = 0;
  for (int n = 0; n < 50; ++n) {
    const auto d = gen::random_valid_algebra(g, Kind::dendriform, gen::uniform(g, 2, 3));
    auto s = zero_algebra<Rational>(Kind::six_dendriform, d.dim, d.twist);
    for (const char* p : {opname::prec_perp, opname::prec_vdash, opname::prec_dashv}) s.op(p) = d.op(opname::prec);
    for (const char* q : {opname::succ_perp, opname::succ_vdash, opname::succ_dashv}) s.op(q) = d.op(opname::succ);
    literal_fails += !check_six(s, Sq15Mode::literal).pass();
  }
  CHECK(literal_fails > 0);
}

}
