#include "marked_config.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace thurston {

const SpherePoint& MarkedConfiguration::at(const std::string& id) const {
    auto it = positions.find(id);
    if (it == positions.end())
        throw Error(ErrorKind::Argument, "configuration has no position for '" + id + "'");
    return it->second;
}

std::vector<std::string> tracked_ids(const CoveringSpec& spec) {
    std::vector<std::string> out = spec.p1_points;
    std::set<std::string> seen(out.begin(), out.end());
    if (spec.portrait)
        for (const auto& p : spec.portrait->points)
            if (seen.insert(p.id).second) out.push_back(p.id);
    for (const auto* d : spec.all_disks())
        if (seen.insert(d->center_id).second) out.push_back(d->center_id);
    return out;
}

void check_configuration(const MarkedConfiguration& config, const CoveringSpec& spec) {
    for (const auto& id : tracked_ids(spec))
        if (!config.has(id))
            throw Error(ErrorKind::Argument, "configuration is missing position for '" + id + "'");

    const SpherePoint& a0 = config.at(config.anchors.zero);
    const SpherePoint& a1 = config.at(config.anchors.one);
    const SpherePoint& ai = config.at(config.anchors.infinity);
    if (a0.inf || std::abs(a0.z) > 1e-9)
        throw Error(ErrorKind::Argument, "anchor '" + config.anchors.zero + "' is not at 0");
    if (a1.inf || std::abs(a1.z - Complex(1, 0)) > 1e-9)
        throw Error(ErrorKind::Argument, "anchor '" + config.anchors.one + "' is not at 1");
    if (!ai.inf)
        throw Error(ErrorKind::Argument, "anchor '" + config.anchors.infinity +
                                             "' is not at infinity");

    std::vector<std::pair<std::string, SpherePoint>> pts(config.positions.begin(),
                                                         config.positions.end());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (chordal(pts[i].second, pts[j].second) < 1e-12)
                throw Error(ErrorKind::Argument, "positions of '" + pts[i].first + "' and '" +
                                                     pts[j].first + "' coincide");

    // disk closures pairwise disjoint and clear of the P1 points
    auto disks = spec.all_disks();
    for (std::size_t i = 0; i < disks.size(); ++i) {
        double ri = config.radii.count(disks[i]->id) ? config.radii.at(disks[i]->id) : 0.0;
        if (ri <= 0)
            throw Error(ErrorKind::Argument, "disk '" + disks[i]->id + "' needs a positive radius");
        const SpherePoint& ci = config.at(disks[i]->center_id);
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            double rj = config.radii.at(disks[j]->id);
            if (chordal(ci, config.at(disks[j]->center_id)) <= ri + rj)
                throw Error(ErrorKind::Argument, "disks '" + disks[i]->id + "' and '" +
                                                     disks[j]->id + "' overlap");
        }
        for (const auto& p : spec.p1_points)
            if (chordal(ci, config.at(p)) <= ri)
                throw Error(ErrorKind::Argument, "P1 point '" + p + "' lies inside disk '" +
                                                     disks[i]->id + "'");
    }
}

MarkedConfiguration normalize(const MarkedConfiguration& config, const CoveringSpec& spec) {
    Mobius m = Mobius::to_standard_triple(config.at(config.anchors.zero),
                                          config.at(config.anchors.one),
                                          config.at(config.anchors.infinity));
    MarkedConfiguration out;
    out.anchors = config.anchors;
    for (const auto& [id, p] : config.positions) out.positions[id] = m.apply(p);
    // pin the anchors exactly; the algebra above is exact only up to rounding
    out.positions[config.anchors.zero] = SpherePoint::at(Complex(0, 0));
    out.positions[config.anchors.one] = SpherePoint::at(Complex(1, 0));
    out.positions[config.anchors.infinity] = SpherePoint::infinity();
    for (const auto* d : spec.all_disks()) {
        auto it = config.radii.find(d->id);
        if (it == config.radii.end()) continue;
        out.radii[d->id] = it->second * m.spherical_scale(config.at(d->center_id));
    }
    return out;
}

namespace {

SpherePoint random_sphere_point(std::mt19937_64& rng) {
    // uniform on the unit sphere, then stereographic to the plane
    std::normal_distribution<double> g(0.0, 1.0);
    double x = g(rng), y = g(rng), w = g(rng);
    double n = std::sqrt(x * x + y * y + w * w);
    if (n < 1e-12) return SpherePoint::at(Complex(0.5, 0.5));
    x /= n;
    y /= n;
    w /= n;
    if (w > 1.0 - 1e-12) return SpherePoint::infinity();
    return SpherePoint::at(Complex(x / (1.0 - w), y / (1.0 - w)));
}

void assign_default_radii(MarkedConfiguration& config, const CoveringSpec& spec,
                          const PlacementOptions& opt) {
    for (const auto* d : spec.all_disks()) {
        const SpherePoint& c = config.at(d->center_id);
        double nearest = 4.0;
        for (const auto& [id, p] : config.positions)
            if (id != d->center_id) nearest = std::min(nearest, chordal(c, p));
        config.radii[d->id] = opt.radius_fraction * nearest;
    }
}

} // namespace

MarkedConfiguration initialize_configuration(const CoveringSpec& spec, std::uint64_t seed,
                                             const PlacementOptions& opt) {
    MarkedConfiguration config;
    config.anchors = spec.anchors;
    config.positions[spec.anchors.zero] = SpherePoint::at(Complex(0, 0));
    config.positions[spec.anchors.one] = SpherePoint::at(Complex(1, 0));
    config.positions[spec.anchors.infinity] = SpherePoint::infinity();

    std::mt19937_64 rng(seed);
    for (const auto& id : tracked_ids(spec)) {
        if (config.has(id)) continue;
        for (int attempt = 0;; ++attempt) {
            SpherePoint cand = random_sphere_point(rng);
            double sep = 4.0;
            for (const auto& [other, p] : config.positions)
                sep = std::min(sep, chordal(cand, p));
            if (sep >= opt.min_separation || attempt > 500) {
                config.positions[id] = cand;
                break;
            }
        }
    }
    assign_default_radii(config, spec, opt);
    check_configuration(config, spec);
    return config;
}

MarkedConfiguration initialize_configuration(const CoveringSpec& spec,
                                             const std::map<std::string, SpherePoint>& explicit_pos,
                                             const std::map<std::string, double>& explicit_radii,
                                             const PlacementOptions& opt) {
    MarkedConfiguration config;
    config.anchors = spec.anchors;
    config.positions = explicit_pos;
    config.radii = explicit_radii;
    if (config.radii.empty()) assign_default_radii(config, spec, opt);
    check_configuration(config, spec);
    return config;
}

BoundedGeometryStats bounded_geometry_stats(const MarkedConfiguration& config,
                                            const CoveringSpec& spec) {
    BoundedGeometryStats out;
    const auto& pts = spec.p1_points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            out.min_pair_dist =
                std::min(out.min_pair_dist, chordal(config.at(pts[i]), config.at(pts[j])));

    auto disks = spec.all_disks();
    for (const auto* d : disks) {
        double r = config.radii.at(d->id);
        const SpherePoint& c = config.at(d->center_id);
        out.min_inradius = std::min(out.min_inradius, r);
        for (const auto& p : pts)
            out.min_point_disk_dist =
                std::min(out.min_point_disk_dist, std::max(0.0, chordal(config.at(p), c) - r));
    }
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            double gap = chordal(config.at(disks[i]->center_id), config.at(disks[j]->center_id)) -
                         config.radii.at(disks[i]->id) - config.radii.at(disks[j]->id);
            out.min_disk_disk_dist = std::min(out.min_disk_disk_dist, std::max(0.0, gap));
        }

    out.b_star = std::min(std::min(out.min_pair_dist, out.min_point_disk_dist),
                          std::min(out.min_disk_disk_dist, out.min_inradius));
    return out;
}

} // namespace thurston
