#pragma once

// Shared test helpers: the seed option and a naive evaluator that expands
// identities with plain loops over structure constants. The naive path
// shares no code with the expression engine and serves as its oracle.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "homsplit/bundle.hpp"
#include "homsplit/generators.hpp"

namespace test {

/// Seed for randomized tests; set by --seed on the test binary command line.
std::uint64_t seed();
void set_seed(std::uint64_t s);
homsplit::gen::Rng rng(std::uint64_t salt = 0);

template <typename S>
using Vec = std::vector<S>;

template <typename S>
struct Naive {
  const homsplit::BasicAlgebra<S>& a;

  Vec<S> basis(int i) const {
    Vec<S> v(static_cast<std::size_t>(a.dim), S(0));
    v[static_cast<std::size_t>(i - 1)] = S(1);
    return v;
  }
  Vec<S> mul(const std::string& op, const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out(static_cast<std::size_t>(a.dim), S(0));
    const auto& t = a.op(op);
    for (int i = 1; i <= a.dim; ++i)
      for (int j = 1; j <= a.dim; ++j)
        for (int k = 1; k <= a.dim; ++k) {
          const S c = t.get(i, j, k);
          if (homsplit::is_zero(c)) continue;
          out[static_cast<std::size_t>(k - 1)] += x[static_cast<std::size_t>(i - 1)] *
                                                  y[static_cast<std::size_t>(j - 1)] * c;
        }
    return out;
  }
  Vec<S> twist(const Vec<S>& x) const { return apply(a.twist, x); }
  static Vec<S> apply(const homsplit::Matrix<S>& m, const Vec<S>& x) {
    Vec<S> out(static_cast<std::size_t>(m.rows()), S(0));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)] += m(r, c) * x[static_cast<std::size_t>(c)];
    return out;
  }
  static Vec<S> add(Vec<S> x, const Vec<S>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  }
};

/// One naive identity: name plus lhs - rhs at basis triple (x, y, z).
template <typename S>
struct NaiveIdentity {
  std::string id;
  std::function<Vec<S>(const Naive<S>&, const Vec<S>&, const Vec<S>&, const Vec<S>&)> lhs, rhs;
};

template <typename S>
std::vector<NaiveIdentity<S>> naive_dendriform();
template <typename S>
std::vector<NaiveIdentity<S>> naive_diassociative();
template <typename S>
std::vector<NaiveIdentity<S>> naive_quadri();

/// Failing (id, i, j, k, coord) tuples, sorted.
template <typename S>
std::vector<std::string> naive_failures(const homsplit::BasicAlgebra<S>& a, const std::vector<NaiveIdentity<S>>& ids);

/// Same tuples from an engine report.
std::vector<std::string> report_failures(const homsplit::Report& r);

homsplit::AlgebraBundle load_corpus_algebra(const std::string& relative);
std::string corpus_dir();

} // namespace test
