#include <charconv>

#include "rrt/measure.hpp"

namespace rrt {

std::string Measure::name() const {
    switch (kind) {
        case MeasureKind::Jordan: return "jordan";
        case MeasureKind::Closeness: return "closeness";
        case MeasureKind::Rumor: return "rumor";
        case MeasureKind::BetweennessSq: return "betweenness";
        case MeasureKind::BetweennessPairs: return "betweenness-pairs";
        case MeasureKind::BetweennessQ: return "betweenness-q" + std::to_string(q);
        case MeasureKind::Degree: return "degree";
    }
    return "unknown";
}

Measure Measure::parse(std::string_view name, unsigned q) {
    if (name == "jordan") return {MeasureKind::Jordan};
    if (name == "closeness") return {MeasureKind::Closeness};
    if (name == "rumor") return {MeasureKind::Rumor};
    if (name == "betweenness") return {MeasureKind::BetweennessSq};
    if (name == "betweenness-pairs") return {MeasureKind::BetweennessPairs};
    if (name == "degree") return {MeasureKind::Degree};
    if (name == "betweenness-q") {
        if (q < 2) throw std::invalid_argument("betweenness-q needs q >= 2");
        return {MeasureKind::BetweennessQ, q};
    }
    constexpr std::string_view prefix = "betweenness-q";
    if (name.starts_with(prefix) && name.size() > prefix.size()) {
        unsigned parsed = 0;
        const char* first = name.data() + prefix.size();
        const char* last = name.data() + name.size();
        const auto [end, ec] = std::from_chars(first, last, parsed);
        if (ec == std::errc() && end == last) return parse(prefix, parsed);
    }
    throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

std::vector<Measure> standard_measures() {
    return {{MeasureKind::Jordan},
            {MeasureKind::Closeness},
            {MeasureKind::Rumor},
            {MeasureKind::BetweennessSq},
            {MeasureKind::Degree}};
}

}  // namespace rrt
