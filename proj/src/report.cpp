#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "rrt/experiments.hpp"

namespace rrt {

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void write_result_csv(std::ostream& out, const ExperimentResult& result) {
    for (const auto& [key, value] : resolved_entries(result.config)) out << "# " << key << " = " << value << '\n';
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(result.hash));
    out << "# config_hash = " << hash << '\n';
    out << "measure,n,statistic,param,estimate,stderr,reps,seed\n";
    for (const auto& r : result.records) {
        out << r.measure << ',' << r.n << ',' << r.statistic << ',' << r.param << ',' << format_number(r.estimate)
            << ',' << format_number(r.std_error) << ',' << r.reps << ',' << r.seed << '\n';
    }
}

void write_result_json(std::ostream& out, const ExperimentResult& result) {
    nlohmann::ordered_json config;
    for (const auto& [key, value] : resolved_entries(result.config)) config[key] = value;
    config["workers"] = result.config.workers;
    nlohmann::ordered_json doc;
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(result.hash));
    doc["config"] = config;
    doc["config_hash"] = hash;
    doc["wall_seconds"] = result.wall_seconds;
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : result.records) {
        records.push_back({{"measure", r.measure},
                           {"n", r.n},
                           {"statistic", r.statistic},
                           {"param", r.param},
                           {"estimate", r.estimate},
                           {"stderr", r.std_error},
                           {"reps", r.reps},
                           {"seed", r.seed}});
    }
    out << doc.dump(2) << '\n';
}

void write_trajectory_csv(std::ostream& out, const ExperimentConfig& config,
                          const std::vector<PersistenceRecord>& records) {
    out << "replicate,n,measure,I,R\n";
    for (const auto& rec : records) {
        for (const auto& p : rec.sequence) {
            out << rec.trajectory << ',' << p.n << ',' << config.measures[p.measure].name() << ',' << p.center_index
                << ',' << p.root_rank << '\n';
        }
    }
}

}  // namespace rrt
