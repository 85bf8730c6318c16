#include "transition.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace thurston {

std::size_t TransitionMatrix::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < basis.ids.size(); ++i)
        if (basis.ids[i] == id) return i;
    throw Error(ErrorKind::Argument, "transition matrix basis has no curve '" + id + "'");
}

TransitionMatrix build_transition_matrix(const CoveringSpec& spec, const MultiCurve& gamma) {
    {
        std::set<std::string> seen;
        for (const auto& id : gamma.ids)
            if (!seen.insert(id).second)
                throw Error(ErrorKind::Argument, "multicurve has duplicate curve '" + id + "'");
    }
    TransitionMatrix out;
    out.basis = gamma;
    out.entries = RatMatrix(gamma.ids.size());
    for (std::size_t j = 0; j < gamma.ids.size(); ++j) {
        const std::string& cj = gamma.ids[j];
        if (!spec.has_curve(cj))
            throw Error(ErrorKind::Validation,
                        "build_transition_matrix: curve '" + cj + "' is not in the universe");
        auto it = spec.pullback.find(cj);
        if (it == spec.pullback.end())
            throw Error(ErrorKind::Validation,
                        "build_transition_matrix: curve '" + cj + "' has no pullback entry");
        int total = 0;
        for (const auto& comp : it->second) {
            if (comp.degree <= 0)
                throw Error(ErrorKind::Validation, "build_transition_matrix: component of '" + cj +
                                                       "' has non-positive degree");
            total += comp.degree;
            if (comp.target == kPeripheral || comp.target == kTrivial) continue;
            for (std::size_t i = 0; i < gamma.ids.size(); ++i)
                if (gamma.ids[i] == comp.target)
                    out.entries.at(i, j) += Rational(1, comp.degree);
        }
        if (total != spec.degree)
            throw Error(ErrorKind::Validation, "build_transition_matrix: preimage degrees of '" +
                                                   cj + "' sum to " + std::to_string(total) +
                                                   ", expected " + std::to_string(spec.degree));
    }
    return out;
}

namespace {

SpectralResult exact_zero() {
    SpectralResult r;
    r.exact = true;
    r.exact_value = 0;
    r.lower = r.upper = 0;
    r.value = 0.0;
    return r;
}

SpectralResult slice_radius(const CoveringSpec& spec, const MultiCurve& slice,
                            const SpectralOptions& opt) {
    if (slice.ids.empty()) return exact_zero();
    return spectral_radius(build_transition_matrix(spec, slice).entries, opt);
}

} // namespace

DepthDecomposition depth_decomposition(const CoveringSpec& spec, const MultiCurve& gamma,
                                       const SpectralOptions& opt) {
    if (!is_f_stable(spec, gamma))
        throw Error(ErrorKind::Precondition,
                    "depth_decomposition: multicurve is not f-stable; close it with "
                    "pullback_closure first");

    DepthDecomposition out;
    out.matrix = build_transition_matrix(spec, gamma);
    out.frobenius = frobenius_normal_form(out.matrix.entries, opt);
    out.lambda_gamma = out.frobenius.overall;
    out.depth_bound = static_cast<int>(spec.curves.size());

    // Gamma_Ob: union of the irreducible blocks with spectral radius >= 1
    std::set<std::string> ob;
    for (std::size_t b = 0; b < out.frobenius.block_original_indices.size(); ++b)
        if (out.frobenius.block_spectra[b].at_least_one())
            for (std::size_t idx : out.frobenius.block_original_indices[b])
                ob.insert(gamma.ids[idx]);
    for (const auto& id : gamma.ids)
        if (ob.count(id)) out.gamma_ob.ids.push_back(id);

    // depth(c) = least k >= 0 with c homotopic to a component of f^{-k}(c_ob);
    // BFS over the universe lifting digraph seeded by Gamma_Ob at depth 0.
    std::map<std::string, int> depth;
    std::deque<std::string> queue;
    for (const auto& id : out.gamma_ob.ids) {
        depth[id] = 0;
        queue.push_back(id);
    }
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        auto it = spec.pullback.find(cur);
        if (it == spec.pullback.end()) continue;
        for (const auto& comp : it->second) {
            if (comp.target == kPeripheral || comp.target == kTrivial) continue;
            if (!depth.count(comp.target)) {
                depth[comp.target] = depth[cur] + 1;
                queue.push_back(comp.target);
            }
        }
    }

    for (const auto& id : gamma.ids) {
        auto it = depth.find(id);
        if (it == depth.end()) {
            out.depth[id] = kDepthInfinity;
            out.gamma_inf.ids.push_back(id);
        } else {
            out.depth[id] = it->second;
            out.gamma_0.ids.push_back(id);
            out.max_finite_depth = std::max(out.max_finite_depth, it->second);
        }
    }

    out.lambda_gamma_0 = slice_radius(spec, out.gamma_0, opt);
    out.lambda_gamma_inf = slice_radius(spec, out.gamma_inf, opt);
    return out;
}

ObstructionVerdict obstruction_verdict(const CoveringSpec& spec, const MultiCurve& gamma,
                                       const SpectralOptions& opt) {
    ObstructionVerdict out;
    out.matrix = build_transition_matrix(spec, gamma);
    out.f_stable = is_f_stable(spec, gamma);
    out.lambda = spectral_radius(out.matrix.entries, opt);
    out.lambda_decisive = out.lambda.decisive_vs_one();
    bool at_least_one =
        out.lambda_decisive ? out.lambda.at_least_one() : (out.lambda.value >= 1.0);
    out.is_obstruction = out.f_stable && at_least_one;
    if (out.f_stable) out.decomposition = depth_decomposition(spec, gamma, opt);
    return out;
}

} // namespace thurston
