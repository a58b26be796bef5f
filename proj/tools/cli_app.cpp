#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgmf/chromatic.hpp"
#include "qgmf/measurement.hpp"
#include "qgmf/oracle.hpp"
#include "qgmf/qgmf.hpp"
#include "qgmf/serialize.hpp"

namespace qgmf::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string value_qubits = "6";
    std::size_t threshold = 2;
    std::string mode = "exact";
    std::size_t shots = 8000;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string graph;
    std::string out;
    std::string format = "json";
    std::string config;
};

struct Range {
    std::size_t lo, hi;
};

Range parse_range(const std::string& text) {
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("--value-qubits expects k or a..b, got \"" + text + "\"");
        }
        return static_cast<std::size_t>(std::stoul(s));
    };
    const auto dots = text.find("..");
    Range r{};
    if (dots == std::string::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw UsageError("empty value-qubit range " + text);
    // overflow qubit, plus the Hadamard-test ancilla in vqs mode
    if (r.lo < 2 || r.hi + 2 > kDefaultCapacity) {
        throw UsageError("value qubits must lie in [2, " + std::to_string(kDefaultCapacity - 2) + "]");
    }
    return r;
}

QgmfConfig build_config(const Options& o, const CLI::App& sub) {
    QgmfConfig config;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw UsageError("cannot open config file " + o.config);
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw UsageError(std::string("malformed config file: ") + e.what());
        }
        apply_config_json(j, config);
    }
    // flags override the file
    if (sub.count("--threshold")) config.threshold = o.threshold;
    if (sub.count("--mode")) config.mode = parse_mode(o.mode);
    if (sub.count("--shots")) config.shots = o.shots;
    if (sub.count("--seed")) config.seed = o.seed;
    if (config.threshold < 1) throw UsageError("--threshold must be at least 1");
    if (config.shots < 1) throw UsageError("--shots must be at least 1");
    return config;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.out);
    file << text;
    if (!file) throw UsageError("write failed for " + o.out);
}

// ---------------------------------------------------------------------------

struct Trial {
    std::size_t value_qubits;
    std::size_t trial;
    std::uint64_t seed;
    std::int64_t ground_truth = 0;
    std::optional<QgmfResult> result;
    std::string error;

    bool matches() const { return result && result->g_m == ground_truth; }
};

std::vector<Trial> run_trials(const Range& range, std::size_t trials, const QgmfConfig& base) {
    std::vector<Trial> jobs;
    for (std::size_t m = range.lo; m <= range.hi; ++m) {
        for (std::size_t t = 0; t < trials; ++t) {
            jobs.push_back(Trial{m, t, split_seed(split_seed(base.seed, m), t)});
        }
    }
    // Trials are independent; each writes only its own slot, so the output
    // order does not depend on scheduling.
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        Trial& job = jobs[i];
        try {
            const RandomOracleInstance inst = build_random_oracle(job.value_qubits, job.seed);
            job.ground_truth = inst.g_m;
            QgmfConfig config = base;
            config.seed = job.seed;
            job.result = find_global_minimum(OracleSpec{inst.vector}, config);
        } catch (const std::exception& e) {
            job.error = e.what();
        }
    }
    return jobs;
}

int mismatch_status(const std::vector<Trial>& jobs, std::ostream& err) {
    std::size_t bad = 0;
    for (const auto& j : jobs) bad += !j.matches();
    if (bad == 0) return kOk;
    err << bad << " of " << jobs.size() << " runs disagree with the ground truth\n";
    return kMismatch;
}

int cmd_run_random(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    const Range range = parse_range(o.value_qubits);
    const QgmfConfig config = build_config(o, sub);
    const auto jobs = run_trials(range, o.trials, config);

    std::ostringstream text;
    if (o.format == "csv") {
        text << "value_qubits,trial,seed,g_m,ground_truth,match,outer_steps,confirmation_passes,error\n";
        for (const auto& j : jobs) {
            text << j.value_qubits << ',' << j.trial << ',' << j.seed << ',';
            if (j.result) text << j.result->g_m;
            text << ',' << j.ground_truth << ',' << (j.matches() ? "true" : "false") << ',';
            if (j.result) text << j.result->outer_steps << ',' << j.result->confirmation_passes;
            else text << ',';
            text << ',' << j.error << '\n';
        }
    } else {
        json runs = json::array();
        for (const auto& j : jobs) {
            json r = j.result ? to_json(*j.result) : json::object();
            r["value_qubits"] = j.value_qubits;
            r["trial"] = j.trial;
            r["seed"] = j.seed;
            r["ground_truth"] = j.ground_truth;
            r["match"] = j.matches();
            if (!j.error.empty()) r["error"] = j.error;
            runs.push_back(std::move(r));
        }
        json doc{{"command", "run-random"},
                 {"mode", to_string(config.mode)},
                 {"threshold", config.threshold},
                 {"shots", config.shots},
                 {"seed", config.seed},
                 {"runs", std::move(runs)}};
        text << doc.dump(2) << '\n';
    }
    emit(text.str(), o, out);
    return mismatch_status(jobs, err);
}

int cmd_sweep(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    const Range range = parse_range(o.value_qubits);
    const QgmfConfig config = build_config(o, sub);
    const auto jobs = run_trials(range, o.trials, config);

    std::ostringstream text;
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& j : jobs) {
            rows.push_back({{"value_qubits", j.value_qubits},
                            {"trial", j.trial},
                            {"outer_steps", j.result ? json(j.result->outer_steps) : json(nullptr)},
                            {"search_space", std::uint64_t{1} << j.value_qubits},
                            {"log2_space", j.value_qubits}});
        }
        text << rows.dump(2) << '\n';
    } else {
        text << "value_qubits,trial,outer_steps,search_space,log2_space\n";
        for (const auto& j : jobs) {
            text << j.value_qubits << ',' << j.trial << ',';
            if (j.result) text << j.result->outer_steps;
            text << ',' << (std::uint64_t{1} << j.value_qubits) << ',' << j.value_qubits << '\n';
        }
    }
    emit(text.str(), o, out);
    return mismatch_status(jobs, err);
}

int cmd_chromatic(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    Graph graph = [&] {
        try {
            return load_graph(o.graph);
        } catch (const std::runtime_error& e) {
            throw UsageError(e.what());
        }
    }();
    const QgmfConfig config = build_config(o, sub);

    const std::size_t v = graph.num_vertices();
    std::vector<std::size_t> curve(v), bf_curve(v);
    for (std::size_t k = 1; k <= v; ++k) {
        curve[k - 1] = min_violations(graph, k, config);
        bf_curve[k - 1] = brute_force_violations(graph, k).minimum;
    }
    const std::size_t chi = chromatic_number(graph, config);
    const std::size_t bf_chi = brute_force_chromatic_number(graph);
    const bool agree = chi == bf_chi && curve == bf_curve;

    std::ostringstream text;
    if (o.format == "csv") {
        text << "k,min_violations,brute_force_min\n";
        for (std::size_t k = 1; k <= v; ++k) text << k << ',' << curve[k - 1] << ',' << bf_curve[k - 1] << '\n';
    } else {
        json vc = json::array(), bc = json::array();
        for (std::size_t k = 1; k <= v; ++k) {
            vc.push_back({k, curve[k - 1]});
            bc.push_back({k, bf_curve[k - 1]});
        }
        json doc{{"graph", to_json(graph)},
                 {"mode", to_string(config.mode)},
                 {"chi", chi},
                 {"violations_curve", std::move(vc)},
                 {"brute_force_chi", bf_chi},
                 {"brute_force_curve", std::move(bc)},
                 {"agree", agree}};
        text << doc.dump(2) << '\n';
    }
    emit(text.str(), o, out);
    if (!agree) {
        err << "quantum and brute-force results disagree\n";
        return kMismatch;
    }
    return kOk;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--threshold", o.threshold, "distinct-negative threshold T");
    sub->add_option("--mode", o.mode, "exact or vqs")->check(CLI::IsMember({"exact", "vqs"}));
    sub->add_option("--shots", o.shots, "measurements per scan (vqs mode)");
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--config", o.config, "JSON config file; flags take precedence");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Global minimum finder on a statevector simulator", "qgmf"};
    app.require_subcommand(1);
    Options o;

    auto* run_random = app.add_subcommand("run-random", "random sparse oracles checked against ground truth");
    add_common(run_random, o);
    run_random->add_option("--value-qubits", o.value_qubits, "k or a..b");
    run_random->add_option("--trials", o.trials, "runs per size")->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "binary-search step counts per value width");
    add_common(sweep, o);
    sweep->add_option("--value-qubits", o.value_qubits, "k or a..b")->required();
    sweep->add_option("--trials", o.trials, "runs per size")->check(CLI::PositiveNumber);

    auto* chromatic = app.add_subcommand("chromatic", "chromatic number of a graph file");
    add_common(chromatic, o);
    chromatic->add_option("--graph", o.graph, "graph JSON {vertices, edges}")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (!rev.empty()) rev.pop_back();  // program name
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (run_random->parsed()) return cmd_run_random(o, *run_random, out, err);
        if (sweep->parsed()) {
            Options so = o;
            if (!sweep->count("--format")) so.format = "csv";
            return cmd_sweep(so, *sweep, out, err);
        }
        return cmd_chromatic(o, *chromatic, out, err);
    } catch (const std::exception& e) {
        // bad arguments, bad files, capacity guards: all usage-level failures
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

}  // namespace qgmf::cli
