#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>

#include "homsplit/io.hpp"

namespace test {

namespace {
std::uint64_t g_seed = homsplit::gen::kDefaultSeed;
}

std::uint64_t seed() { return g_seed; }
void set_seed(std::uint64_t s) { g_seed = s; }
homsplit::gen::Rng rng(std::uint64_t salt) { return homsplit::gen::Rng(g_seed ^ (salt * 0x9E3779B97F4A7C15ull)); }

template <typename S>
std::vector<NaiveIdentity<S>> naive_dendriform() {
  using V = Vec<S>;
  using N = Naive<S>;
  auto P = [](const N& n, const V& a, const V& b) { return n.mul("prec", a, b); };
  auto Q = [](const N& n, const V& a, const V& b) { return n.mul("succ", a, b); };
  return {
      {"dend.1",
       [=](const N& n, const V& x, const V& y, const V& z) { return P(n, n.twist(x), N::add(P(n, y, z), Q(n, y, z))); },
       [=](const N& n, const V& x, const V& y, const V& z) { return P(n, P(n, x, y), n.twist(z)); }},
      {"dend.2", [=](const N& n, const V& x, const V& y, const V& z) { return Q(n, n.twist(x), P(n, y, z)); },
       [=](const N& n, const V& x, const V& y, const V& z) { return P(n, Q(n, x, y), n.twist(z)); }},
      {"dend.3", [=](const N& n, const V& x, const V& y, const V& z) { return Q(n, n.twist(x), Q(n, y, z)); },
       [=](const N& n, const V& x, const V& y, const V& z) { return Q(n, N::add(P(n, x, y), Q(n, x, y)), n.twist(z)); }},
  };
}

template <typename S>
std::vector<NaiveIdentity<S>> naive_diassociative() {
  using V = Vec<S>;
  using N = Naive<S>;
  auto L = [](const N& n, const V& a, const V& b) { return n.mul("dashv", a, b); };
  auto R = [](const N& n, const V& a, const V& b) { return n.mul("vdash", a, b); };
  return {
      {"dias.1", [=](const N& n, const V& x, const V& y, const V& z) { return L(n, L(n, x, y), n.twist(z)); },
       [=](const N& n, const V& x, const V& y, const V& z) { return L(n, n.twist(x), L(n, y, z)); }},
      {"dias.2", [=](const N& n, const V& x, const V& y, const V& z) { return L(n, L(n, x, y), n.twist(z)); },
       [=](const N& n, const V& x, const V& y, const V& z) { return L(n, n.twist(x), R(n, y, z)); }},
      {"dias.3", [=](const N& n, const V& x, const V& y, const V& z) { return L(n, R(n, x, y), n.twist(z)); },
       [=](const N& n, const V& x, const V& y, const V& z) { return R(n, n.twist(x), L(n, y, z)); }},
      {"dias.4", [=](const N& n, const V& x, const V& y, const V& z) { return R(n, L(n, x, y), n.twist(z)); },
       [=](const N& n, const V& x, const V& y, const V& z) { return R(n, n.twist(x), R(n, y, z)); }},
      {"dias.5", [=](const N& n, const V& x, const V& y, const V& z) { return R(n, R(n, x, y), n.twist(z)); },
       [=](const N& n, const V& x, const V& y, const V& z) { return R(n, n.twist(x), R(n, y, z)); }},
  };
}

template <typename S>
std::vector<NaiveIdentity<S>> naive_quadri() {
  using V = Vec<S>;
  using N = Naive<S>;
  using F = std::function<V(const N&, const V&, const V&, const V&)>;
  auto op = [](const char* name) {
    return [name](const N& n, const V& a, const V& b) { return n.mul(name, a, b); };
  };
  const auto pv = op("prec_vdash"), pd = op("prec_dashv"), sv = op("succ_vdash"), sd = op("succ_dashv");
  std::vector<NaiveIdentity<S>> out;
  auto chain = [&](const std::string& id, F first, F second, F third) {
    out.push_back({id + ".a", first, second});
    out.push_back({id + ".b", first, third});
  };
  auto single = [&](const std::string& id, F lhs, F rhs) { out.push_back({id, lhs, rhs}); };
  // (x pv y) pv a(z) = (x pd y) pv a(z) = a(x) pv (y pv z + y sv z)
  chain("quadri.Hq1", [=](const N& n, const V& x, const V& y, const V& z) { return pv(n, pv(n, x, y), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return pv(n, pd(n, x, y), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return pv(n, n.twist(x), N::add(pv(n, y, z), sv(n, y, z))); });
  chain("quadri.Hq2", [=](const N& n, const V& x, const V& y, const V& z) { return pv(n, sv(n, x, y), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return pv(n, sd(n, x, y), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, n.twist(x), pv(n, y, z)); });
  chain("quadri.Hq3", [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, n.twist(x), sv(n, y, z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, N::add(pv(n, x, y), sv(n, x, y)), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, N::add(pd(n, x, y), sd(n, x, y)), n.twist(z)); });
  chain("quadri.Hq4", [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, n.twist(x), sv(n, y, z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, N::add(pd(n, x, y), sv(n, x, y)), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, N::add(pv(n, x, y), sd(n, x, y)), n.twist(z)); });
  single("quadri.Hq5", [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, pv(n, x, y), n.twist(z)); },
         [=](const N& n, const V& x, const V& y, const V& z) { return pv(n, n.twist(x), N::add(pd(n, y, z), sd(n, y, z))); });
  single("quadri.Hq6", [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, sv(n, x, y), n.twist(z)); },
         [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, n.twist(x), pd(n, y, z)); });
  single("quadri.Hq7", [=](const N& n, const V& x, const V& y, const V& z) { return sv(n, n.twist(x), sd(n, y, z)); },
         [=](const N& n, const V& x, const V& y, const V& z) { return sd(n, N::add(pv(n, x, y), sv(n, x, y)), n.twist(z)); });
  chain("quadri.Hq8", [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, pd(n, x, y), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, n.twist(x), N::add(pv(n, y, z), sv(n, y, z))); },
        [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, n.twist(x), N::add(pd(n, y, z), sd(n, y, z))); });
  chain("quadri.Hq9", [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, pd(n, x, y), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, n.twist(x), N::add(pv(n, y, z), sd(n, y, z))); },
        [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, n.twist(x), N::add(pd(n, y, z), sv(n, y, z))); });
  chain("quadri.Hq10", [=](const N& n, const V& x, const V& y, const V& z) { return pd(n, sd(n, x, y), n.twist(z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sd(n, n.twist(x), pv(n, y, z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sd(n, n.twist(x), pd(n, y, z)); });
  chain("quadri.Hq11", [=](const N& n, const V& x, const V& y, const V& z) { return sd(n, n.twist(x), sv(n, y, z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sd(n, n.twist(x), sd(n, y, z)); },
        [=](const N& n, const V& x, const V& y, const V& z) { return sd(n, N::add(pd(n, x, y), sd(n, x, y)), n.twist(z)); });
  return out;
}

template <typename S>
std::vector<std::string> naive_failures(const homsplit::BasicAlgebra<S>& a, const std::vector<NaiveIdentity<S>>& ids) {
  const Naive<S> n{a};
  std::vector<std::string> out;
  for (const auto& id : ids)
    for (int i = 1; i <= a.dim; ++i)
      for (int j = 1; j <= a.dim; ++j)
        for (int k = 1; k <= a.dim; ++k) {
          const auto l = id.lhs(n, n.basis(i), n.basis(j), n.basis(k));
          const auto r = id.rhs(n, n.basis(i), n.basis(j), n.basis(k));
          for (int c = 0; c < a.dim; ++c) {
            const S d = l[static_cast<std::size_t>(c)] - r[static_cast<std::size_t>(c)];
            if (homsplit::is_zero(d)) continue;
            std::ostringstream s;
            s << id.id << '|' << i << ',' << j << ',' << k << ',' << (c + 1) << '|' << homsplit::to_polynomial(d).str();
            out.push_back(s.str());
          }
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> report_failures(const homsplit::Report& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries()) {
    std::ostringstream s;
    s << e.template_id << '|';
    for (std::size_t i = 0; i < e.witness.size(); ++i) s << (i ? "," : "") << e.witness[i];
    s << '|' << e.residual.str();
    out.push_back(s.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string corpus_dir() { return HOMSPLIT_CORPUS_DIR; }

homsplit::AlgebraBundle load_corpus_algebra(const std::string& relative) {
  return homsplit::load_algebra(std::filesystem::path(corpus_dir()) / relative);
}

#define HOMSPLIT_NAIVE(S)                                                                                         \
  template std::vector<NaiveIdentity<S>> naive_dendriform<S>();                                                   \
  template std::vector<NaiveIdentity<S>> naive_diassociative<S>();                                                \
  template std::vector<NaiveIdentity<S>> naive_quadri<S>();                                                       \
  template std::vector<std::string> naive_failures<S>(const homsplit::BasicAlgebra<S>&,                           \
                                                      const std::vector<NaiveIdentity<S>>&);
HOMSPLIT_NAIVE(homsplit::Rational)
HOMSPLIT_NAIVE(homsplit::Polynomial)
#undef HOMSPLIT_NAIVE

} // namespace test

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    const char* arg = argv[i];
    if (std::strncmp(arg, "--seed=", 7) == 0) {
      test::set_seed(std::strtoull(arg + 7, nullptr, 10));
      continue;
    }
    if (std::strcmp(arg, "--seed") == 0 && i + 1 < argc) {
      test::set_seed(std::strtoull(argv[++i], nullptr, 10));
      continue;
    }
    rest.push_back(argv[i]);
  }
  std::cout << "seed " << test::seed() << "\n";
  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
