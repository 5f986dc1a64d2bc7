#include "rrt/io.hpp"

#include <ostream>

#include "rrt/experiments.hpp"

namespace rrt {

void write_profile_csv(std::ostream& out, const CentralityProfile& profile, std::span<const std::uint32_t> rank) {
    out << "vertex,score,rank\n";
    for (Vertex v = 1; v <= profile.size(); ++v) {
        out << v << ',';
        if (profile.has_integer_scores()) {
            out << profile.integer_scores()[v];
        } else {
            out << format_number(profile.rumor().log_score(v));
        }
        out << ',' << rank[v] << '\n';
    }
}

void write_polya_csv(std::ostream& out, const std::vector<PolyaState>& trajectory) {
    out << "t,x,y\n";
    for (const auto& s : trajectory) out << s.t << ',' << s.x << ',' << s.y << '\n';
}

void write_hoppe_csv(std::ostream& out, const HoppeRun& run) {
    out << "t,num_colors,leader,leader_count\n";
    for (const auto& s : run.trajectory) {
        out << s.t << ',' << s.num_colors << ',' << s.leader << ',' << s.leader_count << '\n';
    }
}

void write_samples(std::ostream& out, std::span<const double> values) {
    for (double v : values) out << format_number(v) << '\n';
}

}  // namespace rrt
