#pragma once

// Command-line front end: gen | run | bench | trace. Every run is fully
// determined by the parsed config; outputs carry no timestamps or timing,
// so identical invocations write identical bytes.

#include <vector>

#include "dsclust/bench.hpp"

namespace dsclust::cli {

enum class Command { gen, run, bench, trace, help };

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);  // throws UnknownFormat

struct CliConfig {
    Command command = Command::help;
    std::string in_path;
    std::string out_path;      // empty = stdout
    std::string params_path;   // empty = shipped defaults
    Method method = Method::hybrid;
    std::vector<Method> methods;  // bench; empty = all three
    Family family = Family::exhaustive;
    int clusters = 0;
    int size = 0;                 // evidence count for the random family
    std::vector<int> sizes;       // bench problem sizes
    int repeats = 10;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::csv;
    bool trace_enabled = false;   // per-iteration Mcf rows in reports
    int jobs = 1;
};

// Parses program arguments (without argv[0]). Throws UsageError on any
// invalid or unknown flag; --help yields Command::help after printing.
CliConfig parse_args(const std::vector<std::string>& args);

// Executes the command. Returns the process exit code for success paths;
// runtime failures propagate as exceptions for the caller to map to exit
// code 2.
int run_cli(const CliConfig& config);

}  // namespace dsclust::cli
