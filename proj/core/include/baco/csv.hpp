#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "baco/experiment.hpp"
#include "baco/types.hpp"

namespace baco {

// CSV persistence. All files are UTF-8 with LF line endings and '.' as the
// decimal separator; floating-point fields are printed with 17 significant
// digits so values round-trip exactly. I/O failures throw std::runtime_error
// carrying the path.

/// Header: problem,n,t,seed,iterations,hit_max_iters
void write_records_csv(std::span<const RunRecord> records, const std::filesystem::path &path);
std::vector<RunRecord> read_records_csv(const std::filesystem::path &path);

/// Header: problem,n,t,reps,mean_iterations,stddev,stderr,analytic_T,rel_error,capped_runs
/// A leading comment line states that stddev is the unbiased (n-1) estimate.
void write_summaries_csv(std::span<const ExperimentSummary> summaries,
                         const std::filesystem::path &path);
std::vector<ExperimentSummary> read_summaries_csv(const std::filesystem::path &path);

/// Two-section plot file: `# scatter` rows n,iterations for every run, then
/// `# curve` rows n,analytic_T for every summarized size.
void write_plot_data(std::span<const RunRecord> records,
                     std::span<const ExperimentSummary> summaries,
                     const std::filesystem::path &path);

} // namespace baco
