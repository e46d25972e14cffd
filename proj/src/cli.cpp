#include "dsclust/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dsclust/io.hpp"

namespace dsclust::cli {

namespace {

std::vector<Method> parse_method_list(const std::string& list) {
    std::vector<Method> methods;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) methods.push_back(parse_method(item));
    }
    if (methods.empty()) throw UsageError("--method lists no method");
    return methods;
}

ProblemSpec spec_for_size(const CliConfig& config, int size) {
    if (config.family == Family::exhaustive)
        return make_spec(Family::exhaustive, size, 0, 0, config.seed);
    // Random family: sizes are evidence counts; the frame matches the
    // cluster count, as in the six-cluster experiments.
    return make_spec(Family::random_subsets, config.clusters, size, config.clusters,
                     config.seed);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        io::write_file(out_path, content);
}

NetworkParams load_or_default_params(const CliConfig& config) {
    if (config.params_path.empty()) return NetworkParams{};
    return io::load_params(config.params_path);
}

int cmd_gen(const CliConfig& config) {
    const ProblemSpec spec = spec_for_size(
        config, config.family == Family::exhaustive ? config.clusters : config.size);
    io::EvidenceSet set{spec.frame_size, generate_instance(spec, 0)};
    emit(config.out_path, io::evidence_to_json(set));
    return 0;
}

RunReport execute_run(const CliConfig& config, bool record_trace) {
    const io::EvidenceSet set = io::load_evidence(config.in_path);
    const NetworkParams params = load_or_default_params(config);
    if (config.clusters < 1) throw UsageError("--clusters must be >= 1");

    Rng rng = Rng::substream(config.seed, 0, static_cast<std::uint64_t>(config.method));
    RunReport report = run_single(config.method, set.evidence, config.clusters, params, rng,
                                  record_trace);
    report.seed = config.seed;
    report.problem = {config.in_path, set.frame_size, static_cast<int>(set.evidence.size()),
                      config.clusters};
    return report;
}

int cmd_run(const CliConfig& config) {
    RunReport report = execute_run(config, config.trace_enabled);
    emit(config.out_path, io::report_to_json(report));
    std::cerr << "# " << method_name(report.method) << " final_mcf="
              << io::format_double(report.final_mcf) << " wall=" << report.wall_time << "s\n";
    return 0;
}

int cmd_trace(const CliConfig& config) {
    RunReport report = execute_run(config, true);
    emit(config.out_path, io::trace_csv(report));
    return 0;
}

int cmd_bench(const CliConfig& config) {
    const NetworkParams params = load_or_default_params(config);
    std::vector<Method> methods = config.methods;
    if (methods.empty()) methods = {Method::neural, Method::iterative, Method::hybrid};

    std::vector<int> sizes = config.sizes;
    if (sizes.empty() && config.size > 0) sizes.push_back(config.size);
    if (sizes.empty() && config.family == Family::exhaustive && config.clusters > 0)
        sizes.push_back(config.clusters);
    if (sizes.empty()) throw UsageError("bench needs --sizes or --size");

    std::vector<ExperimentReport> reports;
    reports.reserve(sizes.size());
    for (int size : sizes) {
        ExperimentReport report = run_experiment(spec_for_size(config, size), methods,
                                                 config.repeats, params, config.jobs,
                                                 config.trace_enabled);
        for (const MethodAggregate& a : report.aggregates)
            std::cerr << "# " << family_name(report.spec.family) << " r=" << report.spec.n_clusters
                      << " M=" << report.spec.n_evidence << ' ' << method_name(a.method)
                      << ": mean_mcf=" << io::format_double(a.mean_mcf) << " mean_wall="
                      << a.mean_wall_time << "s over " << a.runs << " runs\n";
        for (const CellError& e : report.errors)
            std::cerr << "# failed cell repeat=" << e.repeat << " method="
                      << method_name(e.method) << ": " << e.message << '\n';
        reports.push_back(std::move(report));
    }

    if (config.format == OutputFormat::csv) {
        emit(config.out_path, io::experiment_csv(reports));
    } else {
        std::string doc;
        doc += "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string one = io::experiment_to_json(reports[i]);
            if (!one.empty() && one.back() == '\n') one.pop_back();
            doc += one;
            doc += (i + 1 < reports.size()) ? ",\n" : "\n";
        }
        doc += "]\n";
        emit(config.out_path, doc);
    }

    // Raw per-run log next to the aggregate file.
    if (!config.out_path.empty()) {
        std::string all;
        for (const ExperimentReport& report : reports)
            all += io::runs_jsonl(report.runs);
        io::write_file(config.out_path + ".runs.jsonl", all);
    }
    return 0;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw UnknownFormat(name);
}

CliConfig parse_args(const std::vector<std::string>& args) {
    CliConfig config;

    CLI::App app{"Dempster-Shafer evidence clustering by metaconflict minimization"};
    app.name("dsclust");
    app.require_subcommand(1);

    std::string method_str, methods_str = "neural,iterative,hybrid", family_str = "exhaustive";
    std::string format_str = "csv";

    CLI::App* gen = app.add_subcommand("gen", "Generate an evidence-set file");
    gen->add_option("--family", family_str, "exhaustive | random")->required();
    gen->add_option("--clusters", config.clusters, "cluster count r (frame size tracks it)")
        ->required();
    gen->add_option("--size", config.size, "evidence count (random family)");
    gen->add_option("--seed", config.seed, "generator seed");
    gen->add_option("--out", config.out_path, "output path (default stdout)");

    CLI::App* run = app.add_subcommand("run", "Run one solver on an evidence set");
    run->add_option("--method", method_str, "neural | iterative | hybrid")->required();
    run->add_option("--in", config.in_path, "evidence-set file")->required();
    run->add_option("--clusters", config.clusters, "cluster count r")->required();
    run->add_option("--seed", config.seed, "run seed");
    run->add_option("--params", config.params_path, "network parameter file");
    run->add_option("--out", config.out_path, "report path (default stdout)");
    run->add_flag("--trace", config.trace_enabled, "record per-iteration Mcf in the report");

    CLI::App* bench = app.add_subcommand("bench", "Run seeded experiments and aggregate");
    bench->add_option("--family", family_str, "exhaustive | random");
    bench->add_option("--sizes", config.sizes, "problem sizes, comma separated")
        ->delimiter(',');
    bench->add_option("--size", config.size, "single problem size");
    bench->add_option("--clusters", config.clusters, "cluster count r (random family)");
    bench->add_option("--repeats", config.repeats, "repeats per size");
    bench->add_option("--seed", config.seed, "experiment seed");
    bench->add_option("--method", methods_str, "methods to run, comma separated");
    bench->add_option("--params", config.params_path, "network parameter file");
    bench->add_option("--format", format_str, "csv | json");
    bench->add_option("--out", config.out_path, "report path (default stdout)");
    bench->add_option("--jobs", config.jobs, "parallel cells");
    bench->add_flag("--trace", config.trace_enabled, "record per-iteration Mcf in raw logs");

    CLI::App* trace = app.add_subcommand("trace", "Write the per-iteration Mcf series as CSV");
    trace->add_option("--method", method_str, "neural | iterative | hybrid")->required();
    trace->add_option("--in", config.in_path, "evidence-set file")->required();
    trace->add_option("--clusters", config.clusters, "cluster count r")->required();
    trace->add_option("--seed", config.seed, "run seed");
    trace->add_option("--params", config.params_path, "network parameter file");
    trace->add_option("--out", config.out_path, "trace path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        config.command = Command::help;
        return config;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    try {
        if (gen->parsed()) {
            config.command = Command::gen;
            config.family = parse_family(family_str);
            if (config.family == Family::random_subsets && config.size < 1)
                throw UsageError("gen --family random needs --size");
            if (config.family == Family::exhaustive && config.size != 0)
                throw UsageError("--size is derived for the exhaustive family");
        } else if (run->parsed()) {
            config.command = Command::run;
            config.method = parse_method(method_str);
        } else if (bench->parsed()) {
            config.command = Command::bench;
            config.family = parse_family(family_str);
            config.methods = parse_method_list(methods_str);
            config.format = parse_format(format_str);
            if (config.repeats < 1) throw UsageError("--repeats must be >= 1");
            if (config.jobs < 1) throw UsageError("--jobs must be >= 1");
            if (config.family == Family::random_subsets && config.clusters < 1)
                throw UsageError("bench --family random needs --clusters");
        } else if (trace->parsed()) {
            config.command = Command::trace;
            config.method = parse_method(method_str);
            config.trace_enabled = true;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return config;
}

int run_cli(const CliConfig& config) {
    switch (config.command) {
        case Command::help: return 0;
        case Command::gen: return cmd_gen(config);
        case Command::run: return cmd_run(config);
        case Command::bench: return cmd_bench(config);
        case Command::trace: return cmd_trace(config);
    }
    throw UsageError("no command given");
}

}  // namespace dsclust::cli
