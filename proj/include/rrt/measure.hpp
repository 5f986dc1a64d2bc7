#ifndef RRT_MEASURE_HPP
#define RRT_MEASURE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rrt {

enum class MeasureKind {
    Jordan,
    Closeness,
    Rumor,
    BetweennessSq,     // sum of squared neighbour-subtree sizes, minimised
    BetweennessPairs,  // number of pairs routed through the vertex, maximised
    BetweennessQ,      // sum of q-th powers of neighbour-subtree sizes, minimised
    Degree,
};

enum class Direction { SmallerIsCentral, LargerIsCentral };

/// Raised when an integer score could overflow 64 bits.
class NumericGuardError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

struct Measure {
    MeasureKind kind = MeasureKind::Jordan;
    unsigned q = 2;  // exponent, only read for BetweennessQ

    Direction direction() const noexcept {
        return kind == MeasureKind::Degree || kind == MeasureKind::BetweennessPairs ? Direction::LargerIsCentral
                                                                                    : Direction::SmallerIsCentral;
    }

    /// Name used on the command line and in CSV output.
    std::string name() const;

    /// Accepts jordan, closeness, rumor, betweenness, betweenness-pairs,
    /// betweenness-q (with the supplied q) and degree.
    static Measure parse(std::string_view name, unsigned q = 2);

    friend bool operator==(const Measure&, const Measure&) = default;
};

/// The five measures studied in experiments, betweenness in its squared form.
std::vector<Measure> standard_measures();

}  // namespace rrt

#endif  // RRT_MEASURE_HPP
