#pragma once

#include <string>
#include <vector>

#include "homsplit/polynomial.hpp"

namespace homsplit {

/// One failed identity instance: the template it came from, the 1-based
/// basis indices it was evaluated at (the last index is the coordinate of
/// the residual), and the nonzero residual lhs - rhs.
struct ReportEntry {
  std::string template_id;
  std::vector<int> witness;
  Polynomial residual;
  std::string note;  // structural violations only
};

/// Verdict list; passes iff there are no entries.
class Report {
public:
  bool pass() const { return entries_.empty(); }
  const std::vector<ReportEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }
  void add(std::string id, std::vector<int> witness, Polynomial residual, std::string note = {}) {
    entries_.push_back({std::move(id), std::move(witness), std::move(residual), std::move(note)});
  }
  void merge(const Report& other);
  /// Prefixes every template id, e.g. "rep." when nesting checks.
  Report prefixed(const std::string& prefix) const;
  /// Canonical order: template id, then witness.
  void sort();

  /// Distinct template ids that produced at least one entry.
  std::vector<std::string> failing_templates() const;

private:
  std::vector<ReportEntry> entries_;
};

} // namespace homsplit
