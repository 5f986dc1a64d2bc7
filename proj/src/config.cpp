#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rrt/experiments.hpp"

namespace rrt {

namespace {

const std::pair<ExperimentKind, const char*> kExperimentNames[] = {
    {ExperimentKind::RootCenterProbability, "root-center-probability"},
    {ExperimentKind::ExpectedRank, "expected-rank"},
    {ExperimentKind::ExpectedCenterIndex, "expected-center-index"},
    {ExperimentKind::RankTail, "rank-tail"},
    {ExperimentKind::IndexTail, "index-tail"},
    {ExperimentKind::ConfidenceCoverage, "confidence-coverage"},
    {ExperimentKind::Survey, "survey"},
    {ExperimentKind::Persistence, "persistence"},
};

const std::set<std::string> kKnownKeys = {"experiment", "measures", "q",       "n",         "reps",
                                          "seed",       "workers",  "x_grid",  "k_grid",    "coverage_grid",
                                          "horizon",    "checkpoints", "stride", "output", "trajectory_output"};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

// Accepts plain integers and the shorthand 1e5.
std::uint64_t parse_uint(const std::string& key, const std::string& raw) {
    const std::string text = trim(raw);
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec == std::errc() && ptr == end && !text.empty()) return value;
    double d = 0.0;
    auto [dptr, dec] = std::from_chars(text.data(), end, d);
    if (dec == std::errc() && dptr == end && d >= 0 && d < 1.8e19 && std::floor(d) == d) {
        return static_cast<std::uint64_t>(d);
    }
    throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& raw) {
    std::vector<std::string> items;
    std::stringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::vector<std::uint64_t> parse_uint_list(const std::string& key, const std::string& raw) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(raw)) out.push_back(parse_uint(key, item));
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

std::string join(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

void require_increasing(const std::string& key, const std::vector<std::uint64_t>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) throw ConfigError("key '" + key + "': values must be strictly increasing");
    }
    if (!values.empty() && values.front() == 0) throw ConfigError("key '" + key + "': values must be positive");
}

}  // namespace

std::string experiment_name(ExperimentKind kind) {
    for (const auto& [k, name] : kExperimentNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

ExperimentKind parse_experiment(const std::string& name) {
    for (const auto& [k, known] : kExperimentNames) {
        if (name == known) return k;
    }
    throw ConfigError("key 'experiment': unknown experiment '" + name + "'");
}

ExperimentConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> entries;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.contains(key)) throw ConfigError("unknown key '" + key + "'");
        if (entries.contains(key)) throw ConfigError("duplicate key '" + key + "'");
        entries[key] = value;
    }

    ExperimentConfig config;
    if (!entries.contains("experiment")) throw ConfigError("missing required key 'experiment'");
    config.experiment = parse_experiment(entries["experiment"]);
    const bool persistence = config.experiment == ExperimentKind::Persistence;

    if (!entries.contains("reps")) throw ConfigError("missing required key 'reps'");
    config.reps = parse_uint("reps", entries["reps"]);

    const unsigned q = entries.contains("q") ? static_cast<unsigned>(parse_uint("q", entries["q"])) : 2;
    if (entries.contains("measures")) {
        config.measures.clear();
        for (const auto& name : split_list(entries["measures"])) {
            try {
                config.measures.push_back(Measure::parse(name, q));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("key 'measures': ") + e.what());
            }
        }
    }

    if (persistence) {
        if (!entries.contains("horizon")) throw ConfigError("missing required key 'horizon'");
        config.horizon = parse_uint("horizon", entries["horizon"]);
        config.checkpoints = entries.contains("checkpoints") ? parse_uint_list("checkpoints", entries["checkpoints"])
                                                             : std::vector<std::uint64_t>{config.horizon};
        if (entries.contains("stride")) config.stride = parse_uint("stride", entries["stride"]);
    } else {
        if (!entries.contains("n")) throw ConfigError("missing required key 'n'");
        config.n_values = parse_uint_list("n", entries["n"]);
    }
    if (entries.contains("seed")) config.seed = parse_uint("seed", entries["seed"]);
    if (entries.contains("workers")) config.workers = static_cast<unsigned>(parse_uint("workers", entries["workers"]));
    if (entries.contains("x_grid")) config.x_grid = parse_uint_list("x_grid", entries["x_grid"]);
    if (entries.contains("k_grid")) config.k_grid = parse_uint_list("k_grid", entries["k_grid"]);
    if (entries.contains("coverage_grid")) config.coverage_grid = parse_uint_list("coverage_grid", entries["coverage_grid"]);
    if (entries.contains("output")) config.output = entries["output"];
    if (entries.contains("trajectory_output")) config.trajectory_output = entries["trajectory_output"];

    validate(config);
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void validate(const ExperimentConfig& config) {
    if (config.reps < 1) throw ConfigError("key 'reps': must be at least 1");
    if (config.reps >= (std::uint64_t{1} << 32)) throw ConfigError("key 'reps': must be below 2^32");
    if (config.measures.empty()) throw ConfigError("key 'measures': at least one measure required");
    if (config.workers < 1) throw ConfigError("key 'workers': must be at least 1");
    require_increasing("x_grid", config.x_grid);
    require_increasing("k_grid", config.k_grid);
    require_increasing("coverage_grid", config.coverage_grid);
    if (config.experiment == ExperimentKind::Persistence) {
        if (config.horizon < 2) throw ConfigError("key 'horizon': must be at least 2");
        if (config.checkpoints.empty()) throw ConfigError("key 'checkpoints': at least one checkpoint required");
        require_increasing("checkpoints", config.checkpoints);
        if (config.checkpoints.front() < 2) throw ConfigError("key 'checkpoints': must be at least 2");
        if (config.checkpoints.back() > config.horizon) {
            throw ConfigError("key 'checkpoints': must not exceed the horizon");
        }
        const std::uint64_t stride = config.effective_stride();
        for (auto c : config.checkpoints) {
            if (c % stride != 0) throw ConfigError("key 'stride': must divide every checkpoint");
        }
        for (const auto& m : config.measures) {
            if (m.kind == MeasureKind::BetweennessQ) {
                throw ConfigError("key 'measures': persistence supports q = 2 betweenness only");
            }
        }
    } else {
        if (config.n_values.empty()) throw ConfigError("missing required key 'n'");
        require_increasing("n", config.n_values);
        if (config.n_values.back() >= (std::uint64_t{1} << 31)) throw ConfigError("key 'n': too large");
    }
}

std::vector<std::pair<std::string, std::string>> resolved_entries(const ExperimentConfig& config) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("experiment", experiment_name(config.experiment));
    std::string measures;
    unsigned q = 2;
    for (std::size_t i = 0; i < config.measures.size(); ++i) {
        if (i) measures += ",";
        const auto& m = config.measures[i];
        measures += m.kind == MeasureKind::BetweennessQ ? std::string("betweenness-q") : m.name();
        if (m.kind == MeasureKind::BetweennessQ) q = m.q;
    }
    out.emplace_back("measures", measures);
    out.emplace_back("q", std::to_string(q));
    out.emplace_back("reps", std::to_string(config.reps));
    out.emplace_back("seed", config.seed ? std::to_string(*config.seed) : "");
    if (config.experiment == ExperimentKind::Persistence) {
        out.emplace_back("horizon", std::to_string(config.horizon));
        out.emplace_back("checkpoints", join(config.checkpoints));
        out.emplace_back("stride", std::to_string(config.effective_stride()));
    } else {
        out.emplace_back("n", join(config.n_values));
        out.emplace_back("x_grid", join(config.x_grid));
        out.emplace_back("k_grid", join(config.k_grid));
        out.emplace_back("coverage_grid", join(config.coverage_grid));
    }
    return out;
}

std::uint64_t config_hash(const ExperimentConfig& config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        h ^= 0xff;
        h *= 0x100000001b3ULL;
    };
    for (const auto& [key, value] : resolved_entries(config)) {
        feed(key);
        feed(value);
    }
    return h;
}

}  // namespace rrt
