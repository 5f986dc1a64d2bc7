#include "rrt/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"

#include "rrt/centrality.hpp"
#include "rrt/experiments.hpp"
#include "rrt/io.hpp"
#include "rrt/oracle.hpp"
#include "rrt/urns.hpp"

namespace rrt {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes to `fallback` for an empty path or "-", otherwise to a file.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw UsageError("cannot write '" + path + "'");
        stream_ = file_.get();
    }
    std::ostream& stream() { return *stream_; }
    void close() {
        stream_->flush();
        if (!*stream_) throw UsageError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

struct GenerateOptions {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string out;
};

struct CentralityOptions {
    std::string in;
    std::string measure = "all";
    unsigned q = 2;
    std::string out;
};

struct DickmanOptions {
    std::uint64_t count = 1000;
    std::uint64_t seed = 0;
    std::string out;
};

struct UrnOptions {
    std::string type = "polya";
    std::int64_t a = 1;
    std::int64_t steps = 1000;
    std::uint64_t seed = 0;
    double x = 0.5;
    std::int64_t horizon = 100'000;
    std::uint64_t reps = 1000;
    unsigned workers = 1;
    std::string out;
};

struct ExperimentOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::string out;
    std::string trajectories;
};

struct VerifyOptions {
    std::size_t max_n = 8;
    bool inject_fault = false;
};

void cmd_generate(const GenerateOptions& o, std::ostream& out) {
    if (o.n == 0) throw UsageError("--n must be at least 1");
    RngStream rng(o.seed, o.stream);
    const RecursiveTree tree = grow_urrt(o.n, rng);
    OutputTarget target(o.out, out);
    write_edge_list(target.stream(), tree);
    target.close();
}

void cmd_centrality(const CentralityOptions& o, std::ostream& out) {
    std::ifstream in(o.in, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + o.in + "'");
    const RecursiveTree tree = read_edge_list(in);
    const SubtreeSizes sizes = subtree_sizes(tree);

    std::vector<Measure> measures;
    if (o.measure == "all") {
        measures = standard_measures();
        measures.push_back({MeasureKind::BetweennessPairs});
        measures.push_back({MeasureKind::BetweennessQ, o.q});
    } else {
        measures.push_back(Measure::parse(o.measure, o.q));
    }

    OutputTarget target(o.out, out);
    std::vector<std::string> reports;
    for (const auto& measure : measures) {
        const CentralityProfile profile = compute_profile(tree, sizes, measure);
        const auto rank = rank_vertices(profile);
        if (measures.size() > 1) target.stream() << "# measure = " << measure.name() << '\n';
        write_profile_csv(target.stream(), profile, rank);

        const CenterReport report = center_report(profile);
        std::string line = "# center " + measure.name() + " I=" + std::to_string(report.center_index) +
                           " R=" + std::to_string(report.root_rank) + " tied=";
        for (std::size_t i = 0; i < report.tied_center_set.size(); ++i) {
            if (i) line += ",";
            line += std::to_string(report.tied_center_set[i]);
        }
        reports.push_back(line);
    }
    target.close();
    for (const auto& line : reports) out << line << '\n';
}

void cmd_sample_dickman(const DickmanOptions& o, std::ostream& out) {
    RngStream rng(o.seed, 0);
    std::vector<double> values(o.count);
    for (auto& v : values) v = sample_dickman(rng).value;
    OutputTarget target(o.out, out);
    write_samples(target.stream(), values);
    target.close();
}

void cmd_urn(const UrnOptions& o, std::ostream& out) {
    RngStream rng(o.seed, 0);
    OutputTarget target(o.out, out);
    if (o.type == "polya") {
        write_polya_csv(target.stream(), polya_run(o.a, o.steps, rng));
    } else if (o.type == "hoppe") {
        write_hoppe_csv(target.stream(), hoppe_run(o.steps, rng));
    } else if (o.type == "diagonal-hit") {
        const HitEstimate e = polya_diagonal_hit_estimate(o.a, o.x, o.horizon, o.reps, o.seed, o.workers);
        target.stream() << "a,x,horizon,estimate,stderr,reps,hits\n"
                        << o.a << ',' << format_number(o.x) << ',' << e.horizon << ',' << format_number(e.estimate)
                        << ',' << format_number(e.std_error) << ',' << e.reps << ',' << e.hits << '\n';
    } else {
        throw UsageError("--type must be polya, hoppe or diagonal-hit");
    }
    target.close();
}

ExperimentConfig resolve_config(const ExperimentOptions& o) {
    ExperimentConfig config = load_config(o.config);
    if (o.seed) config.seed = o.seed;
    if (o.workers) config.workers = *o.workers;
    if (!config.seed) throw ConfigError("missing required key 'seed' (pass --seed or set it in the config)");
    if (!o.out.empty()) config.output = o.out;
    if (!o.trajectories.empty()) config.trajectory_output = o.trajectories;
    validate(config);
    return config;
}

void emit_result(const ExperimentResult& result, std::ostream& out) {
    OutputTarget csv(result.config.output, out);
    write_result_csv(csv.stream(), result);
    csv.close();
    if (!result.config.output.empty() && result.config.output != "-") {
        OutputTarget json(result.config.output + ".json", out);
        write_result_json(json.stream(), result);
        json.close();
    }
}

void cmd_experiment(const ExperimentOptions& o, std::ostream& out) {
    const ExperimentConfig config = resolve_config(o);
    if (config.experiment == ExperimentKind::Persistence) {
        const bool dump = !config.trajectory_output.empty();
        const PersistenceOutcome outcome = run_persistence(config, dump);
        emit_result(outcome.summary, out);
        if (dump) {
            OutputTarget traj(config.trajectory_output, out);
            write_trajectory_csv(traj.stream(), config, outcome.records);
            traj.close();
        }
        return;
    }
    emit_result(run_experiment(config), out);
}

void cmd_persistence(const ExperimentOptions& o, std::ostream& out) {
    const ExperimentConfig config = resolve_config(o);
    if (config.experiment != ExperimentKind::Persistence) {
        throw ConfigError("key 'experiment': the persistence command needs experiment = persistence");
    }
    cmd_experiment(o, out);
}

void cmd_verify(const VerifyOptions& o, std::ostream& out) {
    if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
    if (o.max_n > 10) throw UsageError("--max-n above 10 is too expensive to enumerate");
    const auto levels = verify_against_oracles(o.max_n, o.inject_fault);
    std::size_t failures = 0;
    for (const auto& level : levels) {
        out << level.trees << " trees at n=" << level.n << ": ";
        if (level.mismatches == 0) {
            out << "all measures agree\n";
        } else {
            out << level.mismatches << " mismatching trees\n";
        }
        failures += level.mismatches;
    }
    if (failures) throw InternalError("fast scores disagree with the brute-force oracle");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random recursive trees: generation, centrality, urns and Monte Carlo experiments", "rrt"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Write a uniform random recursive tree as an edge list");
    generate->add_option("--n", gen.n, "Number of vertices")->required();
    generate->add_option("--seed", gen.seed, "Master seed");
    generate->add_option("--stream", gen.stream, "Stream id");
    generate->add_option("--out", gen.out, "Output path (default stdout)");

    CentralityOptions cen;
    auto* centrality = app.add_subcommand("centrality", "Scores, ranks and center report for an edge-list tree");
    centrality->add_option("--in", cen.in, "Edge-list file")->required();
    centrality->add_option("--measure", cen.measure,
                           "jordan, closeness, rumor, betweenness, betweenness-pairs, betweenness-q, degree or all");
    centrality->add_option("--q", cen.q, "Exponent for betweenness-q");
    centrality->add_option("--out", cen.out, "CSV output path (default stdout)");

    DickmanOptions dick;
    auto* dickman = app.add_subcommand("sample-dickman", "Exact max-Dickman-Goncharov samples");
    dickman->add_option("--count", dick.count, "Number of samples");
    dickman->add_option("--seed", dick.seed, "Master seed");
    dickman->add_option("--out", dick.out, "Output path (default stdout)");

    UrnOptions urn_opts;
    auto* urn = app.add_subcommand("urn", "Polya or Hoppe urn trajectories, or a diagonal-hit estimate");
    urn->add_option("--type", urn_opts.type, "polya, hoppe or diagonal-hit");
    urn->add_option("--a", urn_opts.a, "Initial X count of the Polya urn");
    urn->add_option("--steps", urn_opts.steps, "Number of draws");
    urn->add_option("--seed", urn_opts.seed, "Master seed");
    urn->add_option("--x", urn_opts.x, "Diagonal threshold in (0, 1)");
    urn->add_option("--horizon", urn_opts.horizon, "Diagonal-hit horizon");
    urn->add_option("--reps", urn_opts.reps, "Diagonal-hit replicates");
    urn->add_option("--workers", urn_opts.workers, "Worker threads");
    urn->add_option("--out", urn_opts.out, "Output path (default stdout)");

    ExperimentOptions exp_opts;
    auto add_experiment_flags = [&](CLI::App* sub) {
        sub->add_option("--config", exp_opts.config, "Flat key = value config file")->required();
        sub->add_option("--seed", exp_opts.seed, "Master seed (overrides the config)");
        sub->add_option("--workers", exp_opts.workers, "Worker threads (does not change results)");
        sub->add_option("--out", exp_opts.out, "CSV output path; JSON goes to <path>.json");
    };
    auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
    add_experiment_flags(experiment);
    experiment->add_option("--trajectories", exp_opts.trajectories, "Persistence trajectory CSV path");
    auto* persistence = app.add_subcommand("persistence", "Run a persistence experiment");
    add_experiment_flags(persistence);
    persistence->add_option("--trajectories", exp_opts.trajectories, "Trajectory CSV path");

    VerifyOptions ver;
    auto* verify = app.add_subcommand("verify", "Check fast centrality against brute-force oracles");
    verify->add_option("--max-n", ver.max_n, "Largest tree size to enumerate");
    verify->add_flag("--inject-fault", ver.inject_fault, "Corrupt one score to exercise the failure path")
        ->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) cmd_generate(gen, out);
        if (centrality->parsed()) cmd_centrality(cen, out);
        if (dickman->parsed()) cmd_sample_dickman(dick, out);
        if (urn->parsed()) cmd_urn(urn_opts, out);
        if (experiment->parsed()) cmd_experiment(exp_opts, out);
        if (persistence->parsed()) cmd_persistence(exp_opts, out);
        if (verify->parsed()) cmd_verify(ver, out);
    } catch (const NumericGuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumericGuard;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace rrt
