#pragma once

#include "covering_spec.hpp"
#include "sphere.hpp"

#include <map>
#include <optional>
#include <string>

namespace thurston {

inline constexpr double kNoDiskSentinel = std::numeric_limits<double>::infinity();

// Normalized sphere positions of the tracked marked ids (P1 points, portrait
// extras, disk centers) plus chordal disk radii. Anchors sit exactly at
// 0, 1, infinity.
struct MarkedConfiguration {
    std::map<std::string, SpherePoint> positions;
    std::map<std::string, double> radii; // disk id -> chordal radius
    Anchors anchors;

    const SpherePoint& at(const std::string& id) const;
    bool has(const std::string& id) const { return positions.count(id) != 0; }
};

// Spherical separation minima of Definition-style bounded geometry: pairwise
// point distance, point-to-disk, disk-to-disk, and disk inradius. Disk
// statistics report an infinite sentinel when the spec carries no disks.
struct BoundedGeometryStats {
    double min_pair_dist = kNoDiskSentinel;
    double min_point_disk_dist = kNoDiskSentinel;
    double min_disk_disk_dist = kNoDiskSentinel;
    double min_inradius = kNoDiskSentinel;
    double b_star = kNoDiskSentinel;
};

// Validates invariants: anchors pinned, pairwise distinct positions, disk
// closures disjoint from each other and from the marked points.
void check_configuration(const MarkedConfiguration& config, const CoveringSpec& spec);

// Ids the engine tracks for a spec: P1 points, portrait ids, disk centers.
std::vector<std::string> tracked_ids(const CoveringSpec& spec);

// Renormalizes so the anchors return to 0, 1, infinity; radii are scaled by
// the spherical derivative at each disk center.
MarkedConfiguration normalize(const MarkedConfiguration& config, const CoveringSpec& spec);

struct PlacementOptions {
    double min_separation = 0.15;  // chordal rejection threshold for seeding
    double radius_fraction = 0.25; // initial disk radius as a fraction of the
                                   // nearest-neighbor distance
};

MarkedConfiguration initialize_configuration(const CoveringSpec& spec, std::uint64_t seed,
                                             const PlacementOptions& opt = {});
MarkedConfiguration initialize_configuration(const CoveringSpec& spec,
                                             const std::map<std::string, SpherePoint>& explicit_pos,
                                             const std::map<std::string, double>& explicit_radii = {},
                                             const PlacementOptions& opt = {});

BoundedGeometryStats bounded_geometry_stats(const MarkedConfiguration& config,
                                            const CoveringSpec& spec);

} // namespace thurston
