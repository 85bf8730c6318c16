#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thurston {

// Sentinel pullback targets for preimage components that are not
// non-peripheral curves of the universe.
inline constexpr const char* kPeripheral = "peripheral";
inline constexpr const char* kTrivial = "trivial";

// Isotopy class of a non-peripheral simple closed curve, identified by an
// opaque id plus the bipartition of marked objects it induces. Distinct
// non-isotopic curves may share a partition label; the id disambiguates.
struct CurveClass {
    std::string id;
    std::vector<std::string> side_a;
    std::vector<std::string> side_b;

    bool operator==(const CurveClass&) const = default;
};

// Ordered list of distinct curve ids; the order fixes the basis of R^Gamma.
struct MultiCurve {
    std::vector<std::string> ids;

    bool contains(const std::string& id) const;
    bool operator==(const MultiCurve&) const = default;
};

struct PullbackComponent {
    std::string target; // curve id, "peripheral", or "trivial"
    int degree = 1;

    bool operator==(const PullbackComponent&) const = default;
};

// Declared shielding-ring axioms; the geometry is never recomputed, the spec
// records that the construction satisfies them.
struct RingAxioms {
    bool avoids_postcritical = true; // closure of the ring misses the post-critical set
    bool abuts_disk = true;          // one boundary component is the disk boundary
    bool closures_disjoint = true;   // disk+ring closures pairwise disjoint
    bool holomorphic = true;         // map holomorphic on disk closure and ring
    bool maps_into_next = true;      // f(closure(D_i) u A_i) inside D_{i+1}

    bool all() const {
        return avoids_postcritical && abuts_disk && closures_disjoint && holomorphic &&
               maps_into_next;
    }
    bool operator==(const RingAxioms&) const = default;
};

struct DiskSpec {
    std::string id;          // marked-object id of the disk
    std::string center_id;   // a_i
    std::string boundary_id; // b_i
    RingAxioms ring;

    bool operator==(const DiskSpec&) const = default;
};

enum class CycleKind { Attractive, SuperAttractive };

// One periodic cycle of accumulation disks; disk k maps into disk k+1 (mod period).
struct DiskCycle {
    int period = 1;
    CycleKind kind = CycleKind::SuperAttractive;
    std::vector<DiskSpec> disks;

    bool operator==(const DiskCycle&) const = default;
};

struct PortraitPoint {
    std::string id;
    std::string successor;
    int local_degree = 1;

    bool operator==(const PortraitPoint&) const = default;
};

// Finite forward-orbit data used to realize the covering numerically.
struct CriticalPortrait {
    std::vector<PortraitPoint> points;

    const PortraitPoint* find(const std::string& id) const;
    bool operator==(const CriticalPortrait&) const = default;
};

struct Anchors {
    std::string zero;
    std::string one;
    std::string infinity;

    bool operator==(const Anchors&) const = default;
};

// Combinatorial description of a branched cover: degree, marked structure,
// disk cycles with shielding rings, curve universe with pullback tables,
// optional critical portrait.
struct CoveringSpec {
    std::string name;
    int degree = 2;
    std::vector<std::string> p1_points;
    Anchors anchors;
    std::vector<DiskCycle> disk_cycles;
    std::vector<CurveClass> curves;
    std::map<std::string, std::vector<PullbackComponent>> pullback;
    std::optional<CriticalPortrait> portrait;

    std::vector<std::string> marked_object_ids() const; // p1 points then disk ids
    std::vector<const DiskSpec*> all_disks() const;
    const CurveClass* find_curve(const std::string& id) const;
    bool has_curve(const std::string& id) const;
    MultiCurve universe() const;

    bool operator==(const CoveringSpec&) const = default;
};

struct Diagnostic {
    std::string code;
    std::string message;
};

// Structural validation; returns a list of violations, empty when valid.
std::vector<Diagnostic> validate_spec(const CoveringSpec& spec);

// Smallest superset of the seeds closed under non-peripheral pullback.
MultiCurve pullback_closure(const CoveringSpec& spec, const MultiCurve& seeds);

bool is_f_stable(const CoveringSpec& spec, const MultiCurve& gamma);

struct OrbifoldData {
    // signature values; kNuInfinity encodes an infinite ramification index
    static constexpr long long kNuInfinity = -1;
    std::map<std::string, long long> nu;
    Rational chi{0};
    bool hyperbolic = false; // chi < 0; otherwise parabolic (chi == 0)
};

OrbifoldData orbifold_characteristic(const CriticalPortrait& portrait);

std::vector<std::string> canned_example_names();
CoveringSpec canned_example(const std::string& name);

// JSON spec document ("format": 1)
CoveringSpec parse_spec_json(const std::string& text);
std::string spec_to_json(const CoveringSpec& spec, int indent = 2);
CoveringSpec load_spec_file(const std::string& path);

// Resolves a canned name or a file path.
CoveringSpec resolve_spec(const std::string& name_or_path);

} // namespace thurston
