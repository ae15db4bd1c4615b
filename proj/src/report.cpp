#include "leibniz/report.hpp"

#include <sstream>

namespace leibniz {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "kv") return ReportFormat::kv;
  throw ParseError("format must be text or kv, got '" + name + "'");
}

namespace {

void render_kv(std::ostringstream& out, const BoundReport& r) {
  std::string p = claim_name(r.claim) + ".";
  out << p << "applicable = " << (r.applicable ? "true" : "false") << "\n";
  for (const auto& [key, value] : r.quantities) out << p << key << " = " << value.str() << "\n";
  if (!r.applicable) return;
  out << p << "lhs = " << r.lhs.str() << "\n";
  out << p << "rhs = " << r.rhs.str() << "\n";
  out << p << "holds = " << (r.holds ? "true" : "false") << "\n";
}

void render_text(std::ostringstream& out, const BoundReport& r) {
  out << claim_name(r.claim) << ":";
  if (!r.applicable) {
    out << " NOT_APPLICABLE";
  } else {
    out << " lhs = " << r.lhs.str() << (r.holds ? " <= " : " > ") << "rhs = " << r.rhs.str();
  }
  if (!r.quantities.empty()) {
    out << " [";
    for (std::size_t i = 0; i < r.quantities.size(); ++i)
      out << (i ? ", " : "") << r.quantities[i].first << " = " << r.quantities[i].second.str();
    out << "]";
  }
  if (r.applicable) out << (r.holds ? " HOLDS" : " FAILS");
  out << "\n";
}

}  // namespace

std::string render_report(const std::vector<BoundReport>& reports, ReportFormat format) {
  std::ostringstream out;
  for (const BoundReport& r : reports)
    format == ReportFormat::kv ? render_kv(out, r) : render_text(out, r);
  return out.str();
}

bool all_applicable_hold(const std::vector<BoundReport>& reports) {
  for (const BoundReport& r : reports)
    if (r.applicable && !r.holds) return false;
  return true;
}

}  // namespace leibniz
