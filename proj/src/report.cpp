#include "homsplit/report.hpp"

#include <algorithm>
#include <set>

namespace homsplit {

void Report::merge(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

Report Report::prefixed(const std::string& prefix) const {
  Report r = *this;
  for (auto& e : r.entries_) e.template_id = prefix + e.template_id;
  return r;
}

void Report::sort() {
  std::stable_sort(entries_.begin(), entries_.end(), [](const ReportEntry& a, const ReportEntry& b) {
    if (a.template_id != b.template_id) return a.template_id < b.template_id;
    return a.witness < b.witness;
  });
}

std::vector<std::string> Report::failing_templates() const {
  std::set<std::string> ids;
  for (const auto& e : entries_) ids.insert(e.template_id);
  return {ids.begin(), ids.end()};
}

} // namespace homsplit
