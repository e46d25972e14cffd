#include "dsclust/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dsclust::io {

using nlohmann::json;

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

namespace {

json partition_to_json(const Partition& p) {
    return json{{"r", p.r}, {"assignment", p.assignment}, {"mcf", metaconflict(p)}};
}

json trace_to_json(const std::vector<TracePoint>& trace) {
    json arr = json::array();
    for (const TracePoint& pt : trace)
        arr.push_back({{"phase", phase_name(pt.phase)}, {"iteration", pt.iteration}, {"mcf", pt.mcf}});
    return arr;
}

json moves_to_json(const MoveTrace& moves) {
    json steps = json::array();
    for (const MoveStep& s : moves.steps)
        steps.push_back({{"iteration", s.iteration},
                         {"evidence_id", s.evidence_id},
                         {"from_cluster", s.from_cluster},
                         {"to_cluster", s.to_cluster},
                         {"mcf_after", s.mcf_after}});
    return json{{"initial_mcf", moves.initial_mcf},
                {"steps", std::move(steps)},
                {"budget_exhausted", moves.budget_exhausted}};
}

json report_to_json_value(const RunReport& r, bool include_timing) {
    json doc{{"method", method_name(r.method)},
             {"seed", r.seed},
             {"problem",
              {{"source", r.problem.source},
               {"frame_size", r.problem.frame_size},
               {"n_evidence", r.problem.n_evidence},
               {"r", r.problem.r}}},
             {"final_mcf", r.final_mcf},
             {"final_partition", partition_to_json(r.final_partition)},
             {"neural_iterations", r.neural_iterations},
             {"iterative_moves", r.iterative_moves},
             {"mcf_trace", trace_to_json(r.mcf_trace)},
             {"moves", moves_to_json(r.moves)},
             {"neural_converged", r.neural_converged},
             {"iterative_converged", r.iterative_converged},
             {"neural_decode_mcf", r.neural_decode_mcf},
             {"neural_crispness", r.neural_crispness}};
    if (include_timing) doc["wall_time"] = r.wall_time;
    return doc;
}

json spec_to_json(const ProblemSpec& spec) {
    return json{{"family", family_name(spec.family)},
                {"n_clusters", spec.n_clusters},
                {"n_evidence", spec.n_evidence},
                {"frame_size", spec.frame_size},
                {"seed", spec.seed}};
}

ProblemSpec spec_from_json(const json& doc) {
    return make_spec(parse_family(doc.at("family").get<std::string>()),
                     doc.at("n_clusters").get<int>(), doc.at("n_evidence").get<int>(),
                     doc.at("frame_size").get<int>(), doc.at("seed").get<std::uint64_t>());
}

json aggregate_to_json(const MethodAggregate& a, bool include_timing) {
    json doc{{"method", method_name(a.method)},
             {"runs", a.runs},
             {"best_mcf", a.best_mcf},
             {"mean_mcf", a.mean_mcf},
             {"mean_conflict_per_cluster", a.mean_conflict_per_cluster},
             {"mean_conflict_per_evidence", a.mean_conflict_per_evidence},
             {"mean_neural_iterations", a.mean_neural_iterations},
             {"sd_neural_iterations", a.sd_neural_iterations},
             {"mean_iterative_moves", a.mean_iterative_moves},
             {"sd_iterative_moves", a.sd_iterative_moves}};
    if (include_timing) doc["mean_wall_time"] = a.mean_wall_time;
    return doc;
}

MethodAggregate aggregate_from_json(const json& doc) {
    MethodAggregate a;
    a.method = parse_method(doc.at("method").get<std::string>());
    a.runs = doc.at("runs").get<int>();
    a.best_mcf = doc.at("best_mcf").get<double>();
    a.mean_mcf = doc.at("mean_mcf").get<double>();
    a.mean_conflict_per_cluster = doc.at("mean_conflict_per_cluster").get<double>();
    a.mean_conflict_per_evidence = doc.at("mean_conflict_per_evidence").get<double>();
    a.mean_neural_iterations = doc.at("mean_neural_iterations").get<double>();
    a.sd_neural_iterations = doc.at("sd_neural_iterations").get<double>();
    a.mean_iterative_moves = doc.at("mean_iterative_moves").get<double>();
    a.sd_iterative_moves = doc.at("sd_iterative_moves").get<double>();
    if (doc.contains("mean_wall_time")) a.mean_wall_time = doc.at("mean_wall_time").get<double>();
    return a;
}

}  // namespace

std::string evidence_to_json(const EvidenceSet& set) {
    Frame frame(set.frame_size);
    json items = json::array();
    for (const SimpleEvidence& e : set.evidence) {
        if ((e.focal.bits & ~frame.full_mask()) != 0)
            throw BadSize("focal element outside the frame");
        items.push_back({{"id", e.id}, {"focal", e.focal.elements()}, {"mass", e.mass}});
    }
    return json{{"frame_size", set.frame_size}, {"evidence", std::move(items)}}.dump(2) + "\n";
}

EvidenceSet evidence_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed evidence document");
    try {
        EvidenceSet set;
        set.frame_size = doc.at("frame_size").get<int>();
        Frame frame(set.frame_size);
        for (const json& item : doc.at("evidence")) {
            const auto elements = item.at("focal").get<std::vector<int>>();
            set.evidence.push_back(make_evidence(FocalSet::from_elements(elements, frame),
                                                 item.at("mass").get<double>(),
                                                 item.at("id").get<int>()));
        }
        return set;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed evidence document: ") + e.what());
    }
}

EvidenceSet load_evidence(const std::string& path) {
    return evidence_from_json(read_file(path));
}

void save_evidence(const EvidenceSet& set, const std::string& path) {
    write_file(path, evidence_to_json(set));
}

std::string params_to_json(const NetworkParams& p) {
    return json{{"eta", p.eta},
                {"u0", p.u0},
                {"dt", p.dt},
                {"gi", p.gi},
                {"ri", p.ri},
                {"eb", p.eb},
                {"noise_scale", p.noise_scale},
                {"conv_epsilon", p.conv_epsilon},
                {"conv_window", p.conv_window},
                {"max_iters", p.max_iters}}
               .dump(2) +
           "\n";
}

NetworkParams params_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed parameter document");
    try {
        NetworkParams p;
        p.eta = doc.at("eta").get<double>();
        p.u0 = doc.at("u0").get<double>();
        p.dt = doc.at("dt").get<double>();
        p.gi = doc.at("gi").get<double>();
        p.ri = doc.at("ri").get<double>();
        p.eb = doc.at("eb").get<double>();
        p.noise_scale = doc.at("noise_scale").get<double>();
        p.conv_epsilon = doc.at("conv_epsilon").get<double>();
        p.conv_window = doc.at("conv_window").get<int>();
        p.max_iters = doc.at("max_iters").get<int>();
        validate_params(p);
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed parameter document: ") + e.what());
    }
}

NetworkParams load_params(const std::string& path) {
    return params_from_json(read_file(path));
}

std::string report_to_json(const RunReport& report, bool include_timing) {
    return report_to_json_value(report, include_timing).dump(2) + "\n";
}

std::string experiment_to_json(const ExperimentReport& report, bool include_timing) {
    json aggs = json::array();
    for (const MethodAggregate& a : report.aggregates)
        aggs.push_back(aggregate_to_json(a, include_timing));
    json errors = json::array();
    for (const CellError& e : report.errors)
        errors.push_back({{"repeat", e.repeat}, {"method", method_name(e.method)}, {"message", e.message}});
    return json{{"spec", spec_to_json(report.spec)},
                {"repeats", report.repeats},
                {"aggregates", std::move(aggs)},
                {"errors", std::move(errors)}}
               .dump(2) +
           "\n";
}

ExperimentReport experiment_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed experiment document");
    try {
        ExperimentReport report;
        report.spec = spec_from_json(doc.at("spec"));
        report.repeats = doc.at("repeats").get<int>();
        for (const json& a : doc.at("aggregates"))
            report.aggregates.push_back(aggregate_from_json(a));
        for (const json& e : doc.at("errors"))
            report.errors.push_back({e.at("repeat").get<int>(),
                                     parse_method(e.at("method").get<std::string>()),
                                     e.at("message").get<std::string>()});
        return report;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed experiment document: ") + e.what());
    }
}

std::string experiment_csv(std::span<const ExperimentReport> reports, bool include_timing) {
    std::ostringstream out;
    out << "family,r,M,method,metric,value,repeats,seed\n";
    for (const ExperimentReport& report : reports) {
        const ProblemSpec& spec = report.spec;
        auto row = [&](Method method, const std::string& metric, double value) {
            out << family_name(spec.family) << ',' << spec.n_clusters << ',' << spec.n_evidence
                << ',' << method_name(method) << ',' << metric << ',' << format_double(value)
                << ',' << report.repeats << ',' << spec.seed << '\n';
        };
        for (const MethodAggregate& a : report.aggregates) {
            row(a.method, "mcf_best", a.best_mcf);
            row(a.method, "mcf_mean", a.mean_mcf);
            row(a.method, "conflict_per_cluster_mean", a.mean_conflict_per_cluster);
            row(a.method, "conflict_per_evidence_mean", a.mean_conflict_per_evidence);
            row(a.method, "neural_iterations_mean", a.mean_neural_iterations);
            row(a.method, "neural_iterations_sd", a.sd_neural_iterations);
            row(a.method, "iterative_moves_mean", a.mean_iterative_moves);
            row(a.method, "iterative_moves_sd", a.sd_iterative_moves);
            if (a.method == Method::hybrid)
                row(a.method, "delta_iterations_mean", a.mean_iterative_moves);
            if (include_timing) row(a.method, "wall_time_mean", a.mean_wall_time);
        }
    }
    return out.str();
}

std::string emit_report(const ExperimentReport& report, const std::string& format) {
    if (format == "csv") return experiment_csv(std::span(&report, 1));
    if (format == "json") return experiment_to_json(report);
    throw UnknownFormat(format);
}

std::string trace_csv(const RunReport& report) {
    std::ostringstream out;
    out << "phase,iteration,mcf\n";
    for (const TracePoint& pt : report.mcf_trace)
        out << phase_name(pt.phase) << ',' << pt.iteration << ',' << format_double(pt.mcf) << '\n';
    return out.str();
}

std::string runs_jsonl(std::span<const RunReport> runs, bool include_timing) {
    std::ostringstream out;
    for (const RunReport& run : runs)
        out << report_to_json_value(run, include_timing).dump() << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
    if (!out) throw Error("failed writing file: " + path);
}

}  // namespace dsclust::io
