#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "homsplit/axioms.hpp"
#include "homsplit/io.hpp"

namespace homsplit::corpus {

/// One line of corpus/manifest.json.
struct Entry {
  std::string id;
  /// algebra | operator | grid | construction
  std::string type;
  std::string path;
  /// Id of the algebra entry an operator or grid entry refers to.
  std::string algebra;
  std::string construction;
  std::map<std::string, Rational> bindings;
  int grid_lo = -2, grid_hi = 2;
  std::vector<std::string> families;
  /// pass | fail for algebras, operators and constructions; covered for grids.
  std::string expected;
  std::string provenance;
};

struct Manifest {
  std::filesystem::path root;
  std::vector<Entry> entries;

  const Entry& find(const std::string& id) const;
  std::filesystem::path resolve(const Entry& e) const { return root / e.path; }
};

Manifest load_manifest(const std::filesystem::path& root);

struct Options {
  Sq15Mode sq15 = Sq15Mode::literal;
  bool strict_twist = false;
};

struct Result {
  /// {"status", "summary", "entries", "discrepancies"}
  nlohmann::json report;
  std::size_t discrepancies = 0;
};

/// An algebra entry's bundle with an operator family's parameters merged
/// into its declared list; name collisions are an input error.
AlgebraBundle with_parameters(const AlgebraBundle& a, const std::vector<std::string>& extra);

Result verify_entry(const Manifest& m, const Entry& e, const Options& opts = {});
Result verify_all(const Manifest& m, const Options& opts = {});

/// Markdown summary of every discrepancy record, with witnesses and residuals.
std::string discrepancies_markdown(const Result& r);

} // namespace homsplit::corpus
