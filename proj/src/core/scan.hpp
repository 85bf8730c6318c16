#pragma once

#include "covering_spec.hpp"
#include "marked_config.hpp"

#include <string>
#include <vector>

namespace thurston {

// Certified upper bound for the hyperbolic length of one curve class: any
// embedded annulus separating the two sides gives mod <= pi / length, so
// length <= pi / mod for the best annulus found.
struct LengthEstimate {
    std::string curve_id; // universe id, or a provisional "~..." label
    double mod_lower = 0;
    double length_upper = 0; // pi / mod_lower
    double w = 0;            // -log(length_upper)
    bool provisional = false;
};

enum class ScanMarking {
    DiskExtent, // disks enter as round obstacles of their full radius
    DiskPoints  // disks enter as center + one boundary sample point
};

// Cluster candidates come from single-linkage merging of the marked objects;
// each candidate is separated from its complement by the best round annulus
// visible after a Mobius move (cluster circumcenter to 0, an exterior point
// to infinity). Only entries with w >= w_floor are returned.
std::vector<LengthEstimate> short_curve_scan(const MarkedConfiguration& config,
                                             const CoveringSpec& spec, double w_floor,
                                             ScanMarking marking = ScanMarking::DiskPoints);

// Modulus of the round annulus r_in < |z| < r_out.
double round_annulus_modulus(double r_in, double r_out);

} // namespace thurston
