#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trilab/bounds.hpp"
#include "trilab/lab/config.hpp"
#include "trilab/lab/report.hpp"

namespace trilab::lab {

using Job = std::function<std::vector<ReportRow>()>;

/// Runs jobs on `threads` workers and concatenates their rows in job order.
/// The first exception (by job index) is rethrown after all workers finish.
std::vector<ReportRow> run_jobs(const std::vector<Job>& jobs, std::size_t threads);

struct RunResult {
  std::vector<ReportRow> rows;  // sorted
  std::size_t hard_checks = 0;
  std::size_t violations = 0;
  /// Ratio summaries keyed by bound name; hard checks included.
  std::map<std::string, RatioSummary> summary;
};

/// Validates and executes one experiment. Errors propagate as trilab::Error.
RunResult run(const ExperimentConfig& config);

/// Writes the report in the configured format to config.out, or `fallback`
/// when config.out is empty.
void write_report(const ExperimentConfig& config, const RunResult& result, std::ostream& fallback);

void write_summary(std::ostream& out, const RunResult& result);

}  // namespace trilab::lab
