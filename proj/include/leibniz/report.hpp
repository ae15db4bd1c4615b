#pragma once

#include <string>
#include <vector>

#include "leibniz/bounds.hpp"

namespace leibniz {

enum class ReportFormat { text, kv };

ReportFormat parse_report_format(const std::string& name);

/// kv: stable machine-readable `key = value` lines, one quantity per line,
/// claim-name prefixed; inapplicable reports carry no lhs/rhs/holds lines.
/// text: one human-readable line per report.
std::string render_report(const std::vector<BoundReport>& reports, ReportFormat format);

bool all_applicable_hold(const std::vector<BoundReport>& reports);

}  // namespace leibniz
