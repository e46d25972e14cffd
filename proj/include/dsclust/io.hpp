#pragma once

// File formats: evidence sets, network parameter files, run reports,
// experiment reports (JSON), table CSV and trace CSV. All emitters are
// deterministic: sorted keys, shortest round-trip doubles, no timestamps.
// Wall-clock fields stay in memory only unless include_timing is set.

#include <string>

#include "dsclust/bench.hpp"

namespace dsclust::io {

// Shortest round-trip decimal form of a double.
std::string format_double(double x);

struct EvidenceSet {
    int frame_size = 0;
    EvidenceList evidence;
};

std::string evidence_to_json(const EvidenceSet& set);
EvidenceSet evidence_from_json(const std::string& text);  // throws ParseError

EvidenceSet load_evidence(const std::string& path);  // throws Error naming the path
void save_evidence(const EvidenceSet& set, const std::string& path);

std::string params_to_json(const NetworkParams& params);
NetworkParams params_from_json(const std::string& text);
NetworkParams load_params(const std::string& path);

std::string report_to_json(const RunReport& report, bool include_timing = false);

std::string experiment_to_json(const ExperimentReport& report, bool include_timing = false);
ExperimentReport experiment_from_json(const std::string& text);  // aggregates only, no raw runs

// One row per (method, metric): family,r,M,method,metric,value,repeats,seed
std::string experiment_csv(std::span<const ExperimentReport> reports,
                           bool include_timing = false);

// format is "csv" or "json"; anything else throws UnknownFormat.
std::string emit_report(const ExperimentReport& report, const std::string& format);

// phase,iteration,mcf
std::string trace_csv(const RunReport& report);

// One RunReport JSON document per line, in run order.
std::string runs_jsonl(std::span<const RunReport> runs, bool include_timing = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dsclust::io
