#pragma once

#include "kwb/bar.hpp"
#include "kwb/exactlin.hpp"

namespace kwb {

inline constexpr int kReportSchemaVersion = 1;

struct DimRow {
  std::string theory;
  int h = 0;
  int a = 0;
  int dim = 0;
  bool truncated = false;
};

struct VerdictRow {
  std::string check;
  bool pass = false;
  std::string detail;
};

/// Everything one invocation reports: dimension tables per theory,
/// verdicts of comparison checks, free-form notes. Serialization is
/// deterministic: equal bundles produce identical bytes.
struct ReportBundle {
  std::string algebra;
  Window window;
  std::vector<std::string> tasks;
  std::vector<DimRow> rows;
  std::vector<VerdictRow> verdicts;
  std::map<std::string, std::string> notes;

  void add_dims(const std::string& theory, const HomologyReport& h);
  void add_comparison(const std::string& check, const DimComparison& cmp);
  void add_verdict(const std::string& check, bool pass, const std::string& detail);
  bool all_pass() const;
  /// Sorts dimension rows by (theory, a, h) for stable output.
  void normalize();
};

/// Columns: theory, h, a, dim, truncated. Verdicts and notes follow as
/// '# verdict' / '# note' comment lines.
std::string to_tsv(const ReportBundle& r);
std::string to_json(const ReportBundle& r);

}  // namespace kwb
