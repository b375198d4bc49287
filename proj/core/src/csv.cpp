#include "baco/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace baco {

namespace {

const char *kRecordsHeader = "problem,n,t,seed,iterations,hit_max_iters";
const char *kSummariesHeader =
    "problem,n,t,reps,mean_iterations,stddev,stderr,analytic_T,rel_error,capped_runs";

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

[[noreturn]] void fail(const std::filesystem::path &path, const std::string &what) {
    throw std::runtime_error(path.string() + ": " + what);
}

std::ofstream open_out(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open for reading");
    return in;
}

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::filesystem::path &path, const std::string &field) {
    char *end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) fail(path, "bad numeric field '" + field + "'");
    return value;
}

std::uint64_t parse_u64(const std::filesystem::path &path, const std::string &field) {
    char *end = nullptr;
    const std::uint64_t value = std::strtoull(field.c_str(), &end, 10);
    if (end != field.c_str() + field.size()) fail(path, "bad integer field '" + field + "'");
    return value;
}

Problem parse_problem(const std::filesystem::path &path, const std::string &field) {
    const auto problem = problem_from_string(field);
    if (!problem) fail(path, "unknown problem '" + field + "'");
    return *problem;
}

} // namespace

void write_records_csv(std::span<const RunRecord> records, const std::filesystem::path &path) {
    auto out = open_out(path);
    out << kRecordsHeader << "\n";
    for (const RunRecord &r : records) {
        out << to_string(r.problem) << ',' << r.n << ',' << format_double(r.ratio) << ','
            << r.seed << ',' << r.iterations << ',' << (r.hit_max_iters ? 1 : 0) << "\n";
    }
    if (!out) fail(path, "write failed");
}

std::vector<RunRecord> read_records_csv(const std::filesystem::path &path) {
    auto in = open_in(path);
    std::string line;
    std::vector<RunRecord> records;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != kRecordsHeader) fail(path, "unexpected header '" + line + "'");
            saw_header = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 6) fail(path, "expected 6 fields, got line '" + line + "'");
        records.push_back({parse_problem(path, fields[0]),
                           static_cast<std::uint32_t>(parse_u64(path, fields[1])),
                           parse_double(path, fields[2]), parse_u64(path, fields[3]),
                           parse_u64(path, fields[4]), parse_u64(path, fields[5]) != 0});
    }
    if (!saw_header) fail(path, "missing header");
    return records;
}

void write_summaries_csv(std::span<const ExperimentSummary> summaries,
                         const std::filesystem::path &path) {
    auto out = open_out(path);
    out << "# stddev is the unbiased (n-1) sample estimate; stderr = stddev/sqrt(reps)\n";
    out << kSummariesHeader << "\n";
    for (const ExperimentSummary &s : summaries) {
        out << to_string(s.problem) << ',' << s.n << ',' << format_double(s.ratio) << ','
            << s.reps << ',' << format_double(s.mean_iterations) << ','
            << format_double(s.stddev) << ',' << format_double(s.std_error) << ','
            << format_double(s.analytic_time) << ',' << format_double(s.rel_error) << ','
            << s.capped_runs << "\n";
    }
    if (!out) fail(path, "write failed");
}

std::vector<ExperimentSummary> read_summaries_csv(const std::filesystem::path &path) {
    auto in = open_in(path);
    std::string line;
    std::vector<ExperimentSummary> summaries;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != kSummariesHeader) fail(path, "unexpected header '" + line + "'");
            saw_header = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 10) fail(path, "expected 10 fields, got line '" + line + "'");
        summaries.push_back({parse_problem(path, fields[0]),
                             static_cast<std::uint32_t>(parse_u64(path, fields[1])),
                             parse_double(path, fields[2]),
                             static_cast<std::uint32_t>(parse_u64(path, fields[3])),
                             parse_double(path, fields[4]), parse_double(path, fields[5]),
                             parse_double(path, fields[6]), parse_double(path, fields[7]),
                             parse_double(path, fields[8]),
                             static_cast<std::uint32_t>(parse_u64(path, fields[9]))});
    }
    if (!saw_header) fail(path, "missing header");
    return summaries;
}

void write_plot_data(std::span<const RunRecord> records,
                     std::span<const ExperimentSummary> summaries,
                     const std::filesystem::path &path) {
    auto out = open_out(path);
    out << "# scatter\n";
    for (const RunRecord &r : records) out << r.n << ',' << r.iterations << "\n";
    out << "# curve\n";
    for (const ExperimentSummary &s : summaries) {
        out << s.n << ',' << format_double(s.analytic_time) << "\n";
    }
    if (!out) fail(path, "write failed");
}

} // namespace baco
