#include "kwb/report.hpp"

#include <algorithm>
#include <sstream>

namespace kwb {

void ReportBundle::add_dims(const std::string& theory, const HomologyReport& h) {
  std::set<Bidegree> keys;
  for (const auto& [b, d] : h.dims) keys.insert(b);
  for (Bidegree b : h.truncated) keys.insert(b);
  for (Bidegree b : keys) {
    const int d = h.dim(b);
    const bool tr = h.is_truncated(b);
    if (d == 0 && !tr) continue;
    rows.push_back({theory, b.h, b.a, d, tr});
  }
}

void ReportBundle::add_comparison(const std::string& check, const DimComparison& cmp) {
  std::ostringstream detail;
  detail << cmp.lhs_name << " vs " << cmp.rhs_name;
  int mismatches = 0;
  for (const auto& [b, lr] : cmp.dims)
    if (lr.first != lr.second && !cmp.truncated.count(b)) {
      if (mismatches == 0)
        detail << "; first mismatch at " << to_string(b) << ": " << lr.first
               << " != " << lr.second;
      ++mismatches;
    }
  if (mismatches > 1) detail << " (+" << mismatches - 1 << " more)";
  add_verdict(check, cmp.pass, detail.str());
}

void ReportBundle::add_verdict(const std::string& check, bool pass,
                               const std::string& detail) {
  verdicts.push_back({check, pass, detail});
}

bool ReportBundle::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const VerdictRow& v) { return v.pass; });
}

void ReportBundle::normalize() {
  std::stable_sort(rows.begin(), rows.end(), [](const DimRow& x, const DimRow& y) {
    if (x.theory != y.theory) return x.theory < y.theory;
    if (x.a != y.a) return x.a < y.a;
    return x.h < y.h;
  });
}

std::string to_tsv(const ReportBundle& r) {
  std::ostringstream os;
  os << "theory\th\ta\tdim\ttruncated\n";
  for (const auto& row : r.rows)
    os << row.theory << "\t" << row.h << "\t" << row.a << "\t" << row.dim << "\t"
       << (row.truncated ? "yes" : "no") << "\n";
  for (const auto& v : r.verdicts)
    os << "# verdict\t" << v.check << "\t" << (v.pass ? "pass" : "fail") << "\t"
       << v.detail << "\n";
  for (const auto& [k, v] : r.notes) os << "# note\t" << k << "\t" << v << "\n";
  return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

std::string to_json(const ReportBundle& r) {
  std::ostringstream os;
  os << "{\"schema\":" << kReportSchemaVersion;
  os << ",\"algebra\":\"" << json_escape(r.algebra) << "\"";
  os << ",\"window\":{\"a_min\":" << r.window.a_min << ",\"a_max\":" << r.window.a_max
     << ",\"h_min\":" << r.window.h_min << ",\"h_max\":" << r.window.h_max << "}";
  os << ",\"tasks\":[";
  for (size_t i = 0; i < r.tasks.size(); ++i) {
    if (i) os << ",";
    os << "\"" << json_escape(r.tasks[i]) << "\"";
  }
  os << "],\"dims\":[";
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    if (i) os << ",";
    os << "{\"theory\":\"" << json_escape(row.theory) << "\",\"h\":" << row.h
       << ",\"a\":" << row.a << ",\"dim\":" << row.dim << ",\"truncated\":"
       << (row.truncated ? "true" : "false") << "}";
  }
  os << "],\"verdicts\":[";
  for (size_t i = 0; i < r.verdicts.size(); ++i) {
    const auto& v = r.verdicts[i];
    if (i) os << ",";
    os << "{\"check\":\"" << json_escape(v.check) << "\",\"pass\":"
       << (v.pass ? "true" : "false") << ",\"detail\":\"" << json_escape(v.detail)
       << "\"}";
  }
  os << "],\"notes\":{";
  bool first = true;
  for (const auto& [k, v] : r.notes) {
    if (!first) os << ",";
    first = false;
    os << "\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
  }
  os << "}}\n";
  return os.str();
}

}  // namespace kwb
