#pragma once

#include "covering_spec.hpp"
#include "rat_matrix.hpp"
#include "spectral.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thurston {

// Exact non-negative transition matrix over a multicurve basis: entry (i,j)
// is the sum of 1/d over the components of the preimage of curve j that are
// homotopic to curve i.
struct TransitionMatrix {
    MultiCurve basis;
    RatMatrix entries;

    std::size_t index_of(const std::string& id) const;
};

TransitionMatrix build_transition_matrix(const CoveringSpec& spec, const MultiCurve& gamma);

inline constexpr int kDepthInfinity = -1;

struct DepthDecomposition {
    std::map<std::string, int> depth; // kDepthInfinity encodes infinite depth
    MultiCurve gamma_ob;
    MultiCurve gamma_0;
    MultiCurve gamma_inf;
    TransitionMatrix matrix;  // over the input basis
    FrobeniusForm frobenius;  // irreducible decomposition of `matrix`
    SpectralResult lambda_gamma;
    SpectralResult lambda_gamma_0;   // exact 0 when the slice is empty
    SpectralResult lambda_gamma_inf; // exact 0 when the slice is empty
    int max_finite_depth = 0;
    int depth_bound = 0; // number of curves in the universe
};

// Requires an f-stable multicurve. Depths are computed by breadth-first
// search on the reversed lifting digraph starting from the union of the
// irreducible blocks with spectral radius >= 1.
DepthDecomposition depth_decomposition(const CoveringSpec& spec, const MultiCurve& gamma,
                                       const SpectralOptions& opt = {});

struct ObstructionVerdict {
    bool f_stable = false;
    SpectralResult lambda;
    bool is_obstruction = false;
    bool lambda_decisive = true; // false when the enclosure straddles 1
    TransitionMatrix matrix;
    std::optional<DepthDecomposition> decomposition; // present when f-stable
};

ObstructionVerdict obstruction_verdict(const CoveringSpec& spec, const MultiCurve& gamma,
                                       const SpectralOptions& opt = {});

} // namespace thurston
