#pragma once

#include "kwb/report.hpp"

namespace kwb {

/// Task names accepted by the pipeline, in canonical execution order.
const std::vector<std::string>& pipeline_tasks();

struct PipelineOptions {
  std::string algebra_path;
  int adams_max = 4;
  int hmin = -8;
  int hmax = 8;
  std::vector<std::string> tasks;  // empty means every task
  /// Result cache directory; empty falls back to the KWB_CACHE_DIR
  /// environment variable, and caching is disabled when both are unset.
  std::string cache_dir;
};

/// Runs the requested tasks over one presentation file. Results are
/// deterministic; a warm cache returns byte-identical reports.
ReportBundle run_pipeline(const PipelineOptions& opt);

/// Cache round-trip format (stable, versioned).
std::string serialize_bundle(const ReportBundle& r);
/// Returns nullopt when the payload is malformed or from another version.
std::optional<ReportBundle> deserialize_bundle(const std::string& payload);

}  // namespace kwb
