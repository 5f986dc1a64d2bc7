#ifndef RRT_IO_HPP
#define RRT_IO_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "rrt/centrality.hpp"
#include "rrt/urns.hpp"

namespace rrt {

/// vertex,score,rank with vertices ascending. Rumor scores are written as
/// log(phi) with 12 significant digits.
void write_profile_csv(std::ostream& out, const CentralityProfile& profile, std::span<const std::uint32_t> rank);

/// t,x,y
void write_polya_csv(std::ostream& out, const std::vector<PolyaState>& trajectory);

/// t,num_colors,leader,leader_count
void write_hoppe_csv(std::ostream& out, const HoppeRun& run);

/// One value per line, 12 significant digits.
void write_samples(std::ostream& out, std::span<const double> values);

}  // namespace rrt

#endif  // RRT_IO_HPP
