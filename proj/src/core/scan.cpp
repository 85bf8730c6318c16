#include "scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace thurston {

double round_annulus_modulus(double r_in, double r_out) {
    if (!(r_in > 0) || !(r_out > r_in)) return 0.0;
    return std::log(r_out / r_in) / (2.0 * M_PI);
}

namespace {

struct ScanObject {
    std::string label; // marked-object id this sample belongs to
    SpherePoint pos;
    double extent = 0; // chordal radius of the obstacle, 0 for plain points
};

struct Candidate {
    std::set<std::size_t> members;
};

double object_gap(const ScanObject& a, const ScanObject& b) {
    return std::max(0.0, chordal(a.pos, b.pos) - a.extent - b.extent);
}

// single-linkage merge tree; returns the member sets of every internal node
std::vector<Candidate> single_linkage_clusters(const std::vector<ScanObject>& objs) {
    std::vector<std::set<std::size_t>> clusters;
    for (std::size_t i = 0; i < objs.size(); ++i) clusters.push_back({i});
    std::vector<Candidate> out;
    while (clusters.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 1;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                double d = std::numeric_limits<double>::infinity();
                for (std::size_t a : clusters[i])
                    for (std::size_t b : clusters[j]) d = std::min(d, object_gap(objs[a], objs[b]));
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        clusters[bi].insert(clusters[bj].begin(), clusters[bj].end());
        clusters.erase(clusters.begin() + static_cast<long>(bj));
        out.push_back({clusters[bi]});
    }
    return out;
}

} // namespace

std::vector<LengthEstimate> short_curve_scan(const MarkedConfiguration& config,
                                             const CoveringSpec& spec, double w_floor,
                                             ScanMarking marking) {
    std::vector<ScanObject> objs;
    for (const auto& p : spec.p1_points) objs.push_back({p, config.at(p), 0.0});
    std::map<std::string, int> disk_sample_count;
    for (const auto* d : spec.all_disks()) {
        const SpherePoint& center = config.at(d->center_id);
        double r = config.radii.at(d->id);
        if (marking == ScanMarking::DiskExtent) {
            objs.push_back({d->id, center, r});
            disk_sample_count[d->id] = 1;
        } else {
            objs.push_back({d->id, center, 0.0});
            objs.push_back({d->id, SpherePoint::at(center.z + euclidean_radius(center, r)), 0.0});
            disk_sample_count[d->id] = 2;
        }
    }

    const std::size_t n = objs.size();
    std::map<std::string, LengthEstimate> best;

    auto all_labels = spec.marked_object_ids();
    for (const auto& cand : single_linkage_clusters(objs)) {
        if (cand.members.size() < 2 || cand.members.size() > n - 2) continue;

        std::set<std::size_t> side = cand.members;
        // work on the finite side of the bipartition; the annulus is the same
        bool has_inf = false;
        for (std::size_t i : side)
            if (objs[i].pos.inf) has_inf = true;
        if (has_inf) {
            std::set<std::size_t> comp;
            for (std::size_t i = 0; i < n; ++i)
                if (!side.count(i)) comp.insert(i);
            side = std::move(comp);
            if (side.size() < 2) continue;
        }

        // partition label of the candidate: marked objects fully inside
        std::map<std::string, int> hits;
        for (std::size_t i : side) hits[objs[i].label]++;
        bool split_disk = false;
        std::set<std::string> label;
        for (const auto& [id, cnt] : hits) {
            int expect = disk_sample_count.count(id) ? disk_sample_count[id] : 1;
            if (cnt != expect) split_disk = true;
            label.insert(id);
        }
        if (split_disk) continue;
        if (label.size() < 2 || all_labels.size() - label.size() < 2) continue;

        // Mobius move: cluster circumcenter to 0, an exterior point to infinity
        std::vector<Complex> pts;
        for (std::size_t i : side) pts.push_back(objs[i].pos.z);
        Circle cc = smallest_enclosing_circle(pts);

        std::size_t far_idx = n;
        bool far_is_inf = false;
        double far_d = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (side.count(i)) continue;
            if (objs[i].pos.inf) {
                far_idx = i;
                far_is_inf = true;
                break;
            }
            double d = chordal(objs[i].pos, SpherePoint::at(cc.center));
            if (d > far_d) {
                far_d = d;
                far_idx = i;
            }
        }
        if (far_idx == n) continue;

        Mobius m;
        if (far_is_inf)
            m = Mobius{Complex(1, 0), -cc.center, Complex(0, 0), Complex(1, 0)};
        else
            m = Mobius{Complex(1, 0), -cc.center, Complex(1, 0), -objs[far_idx].pos.z};

        auto mapped_extent = [&](const ScanObject& o) {
            if (o.extent <= 0) return 0.0;
            return euclidean_radius(o.pos, o.extent) * m.planar_scale(o.pos);
        };

        double r_in = 0;
        for (std::size_t i : side) {
            SpherePoint img = m.apply(objs[i].pos);
            if (img.inf) { r_in = std::numeric_limits<double>::infinity(); break; }
            r_in = std::max(r_in, std::abs(img.z) + mapped_extent(objs[i]));
        }
        double r_out = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (side.count(i) || i == far_idx) continue;
            SpherePoint img = m.apply(objs[i].pos);
            if (img.inf) continue;
            r_out = std::min(r_out, std::abs(img.z) - mapped_extent(objs[i]));
        }
        if (!std::isfinite(r_in) || !std::isfinite(r_out)) continue;
        double mod = round_annulus_modulus(std::max(r_in, 1e-300), r_out);
        if (mod <= 0) continue;

        // identify the candidate with universe curves by partition label
        std::vector<std::string> matched;
        for (const auto& c : spec.curves) {
            std::set<std::string> sa(c.side_a.begin(), c.side_a.end());
            std::set<std::string> sb(c.side_b.begin(), c.side_b.end());
            if (label == sa || label == sb) matched.push_back(c.id);
        }
        bool provisional = matched.empty();
        if (provisional) {
            std::string id = "~";
            for (const auto& l : label) id += (id.size() > 1 ? "+" : "") + l;
            matched.push_back(id);
        }
        for (const auto& id : matched) {
            auto it = best.find(id);
            if (it == best.end() || mod > it->second.mod_lower) {
                LengthEstimate e;
                e.curve_id = id;
                e.mod_lower = mod;
                e.length_upper = M_PI / mod;
                e.w = -std::log(e.length_upper);
                e.provisional = provisional;
                best[id] = e;
            }
        }
    }

    std::vector<LengthEstimate> out;
    for (const auto& [id, e] : best)
        if (e.w >= w_floor) out.push_back(e);
    return out;
}

} // namespace thurston
