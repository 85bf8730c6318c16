#include "spectral.hpp"

#include "rat_poly.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace thurston {

bool SpectralResult::at_least_one() const {
    if (exact) return exact_value >= 1;
    return lower >= 1;
}

bool SpectralResult::below_one() const {
    if (exact) return exact_value < 1;
    return upper < 1;
}

bool SpectralResult::decisive_vs_one() const {
    return exact || lower >= 1 || upper < 1;
}

namespace {

// Tarjan SCC on the digraph with edge j -> i whenever m(i,j) > 0.
struct TarjanState {
    const RatMatrix& m;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    int counter = 0;
    int ncomp = 0;

    explicit TarjanState(const RatMatrix& mat)
        : m(mat), index(mat.size(), -1), low(mat.size(), 0), comp(mat.size(), -1),
          on_stack(mat.size(), false) {}

    void run(std::size_t v) {
        // iterative DFS to avoid deep recursion on large universes
        struct Frame { std::size_t v; std::size_t next_i; };
        std::vector<Frame> frames{{v, 0}};
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            bool descended = false;
            // successors of j are all i with m(i,j) > 0
            for (std::size_t i = f.next_i; i < m.size(); ++i) {
                if (m.at(i, f.v) == 0) continue;
                f.next_i = i + 1;
                if (index[i] < 0) {
                    index[i] = low[i] = counter++;
                    stack.push_back(i);
                    on_stack[i] = true;
                    frames.push_back({i, 0});
                    descended = true;
                    break;
                }
                if (on_stack[i]) low[f.v] = std::min(low[f.v], index[i]);
            }
            if (descended) continue;
            {
                std::size_t w = f.v;
                if (low[w] == index[w]) {
                    while (true) {
                        std::size_t u = stack.back();
                        stack.pop_back();
                        on_stack[u] = false;
                        comp[u] = ncomp;
                        if (u == w) break;
                    }
                    ++ncomp;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    auto& parent = frames.back();
                    low[parent.v] = std::min(low[parent.v], low[w]);
                }
            }
        }
    }
};

} // namespace

std::vector<std::vector<std::size_t>> transition_components(const RatMatrix& m) {
    const std::size_t n = m.size();
    TarjanState st(m);
    for (std::size_t v = 0; v < n; ++v)
        if (st.index[v] < 0) st.run(v);

    std::vector<std::vector<std::size_t>> members(st.ncomp);
    for (std::size_t v = 0; v < n; ++v) members[st.comp[v]].push_back(v);

    // condensation edges: c(j) -> c(i) when m(i,j) > 0 across components
    std::vector<std::set<int>> out(st.ncomp);
    std::vector<int> indeg(st.ncomp, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (m.at(i, j) != 0 && st.comp[i] != st.comp[j])
                if (out[st.comp[j]].insert(st.comp[i]).second) ++indeg[st.comp[i]];

    // topological order, ties by smallest original vertex index (deterministic)
    auto min_vertex = [&](int c) { return *std::min_element(members[c].begin(), members[c].end()); };
    auto cmp = [&](int a, int b) { return min_vertex(a) > min_vertex(b); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int c = 0; c < st.ncomp; ++c)
        if (indeg[c] == 0) ready.push(c);
    std::vector<std::vector<std::size_t>> ordered;
    while (!ready.empty()) {
        int c = ready.top();
        ready.pop();
        std::sort(members[c].begin(), members[c].end());
        ordered.push_back(members[c]);
        for (int d : out[c])
            if (--indeg[d] == 0) ready.push(d);
    }
    return ordered;
}

bool is_irreducible(const RatMatrix& m) {
    if (m.size() == 0) throw Error(ErrorKind::Argument, "is_irreducible: empty matrix");
    if (!m.nonnegative()) throw Error(ErrorKind::Argument, "is_irreducible: negative entry");
    if (m.size() == 1) return m.at(0, 0) != 0; // the 1x1 zero matrix counts as a zero block
    return transition_components(m).size() == 1;
}

namespace {

std::vector<Rational> rationalize(const std::vector<double>& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double x = v[i];
        if (!(x > 0) || !std::isfinite(x)) x = 1e-300;
        out[i] = Rational(x); // exact binary value
    }
    return out;
}

// Power iteration for B+I (primitive whenever B is irreducible), doubles.
std::vector<double> power_iterate(const RatMatrix& b, int budget, double stop_width) {
    const std::size_t n = b.size();
    std::vector<std::vector<double>> bd(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            bd[i][j] = to_double(b.at(i, j)) + (i == j ? 1.0 : 0.0);
    std::vector<double> v(n, 1.0), w(n);
    for (int it = 0; it < budget; ++it) {
        double lo = 1e300, hi = 0, vmax = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < n; ++j) s += bd[i][j] * v[j];
            w[i] = s;
            double ratio = s / v[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            vmax = std::max(vmax, s);
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / vmax;
        if (hi - lo < stop_width) break;
    }
    return v;
}

// Exact spectral radius attempt through the characteristic polynomial:
// the spectral radius of a non-negative matrix is its largest real root.
std::optional<Rational> exact_radius_via_charpoly(const RatMatrix& m) {
    if (m.size() > 4) return std::nullopt;
    RatPoly chi = characteristic_polynomial(m);
    auto roots = rational_roots(chi);
    if (!roots) return std::nullopt;
    if (roots->empty()) return std::nullopt;
    Rational best = (*roots)[0];
    for (const auto& r : *roots)
        if (r > best) best = r;
    if (best < 0) return std::nullopt; // largest real root cannot be negative here
    // certify no real root above `best`
    Rational bound = max_norm(m) + 1;
    RatPoly sf = square_free_part(chi);
    if (sturm_count(sf, best, bound) != 0) return std::nullopt;
    return best;
}

struct BlockSpectrum {
    SpectralResult result;
    std::optional<std::vector<Rational>> exact_vector; // only for irreducible inputs
    std::vector<double> approx_vector;
};

// Spectral data of an irreducible (or 1x1) block.
BlockSpectrum irreducible_block_spectrum(const RatMatrix& b, const SpectralOptions& opt) {
    BlockSpectrum out;
    const std::size_t n = b.size();
    if (n == 1) {
        out.result.exact = true;
        out.result.exact_value = b.at(0, 0);
        out.result.lower = out.result.upper = b.at(0, 0);
        out.result.value = to_double(b.at(0, 0));
        out.result.exact = true;
        out.exact_vector = std::vector<Rational>{Rational(1)};
        out.approx_vector = {1.0};
        return out;
    }

    std::vector<double> v = power_iterate(b, opt.power_budget, opt.tolerance * 1e-3);
    double vmax = 0;
    for (double x : v) vmax = std::max(vmax, x);
    for (double& x : v) x /= vmax;

    // try to recognize an exact eigenpair behind the converged vector
    bool have_exact_pair = false;
    std::vector<Rational> vr;
    {
        std::vector<Rational> snapped(n);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            auto s = snap_to_rational(v[i]);
            if (!s || *s <= 0) { ok = false; break; }
            snapped[i] = *s;
        }
        if (ok) {
            std::vector<Rational> bv = b * snapped;
            Rational lambda = bv[0] / snapped[0];
            bool eigen = true;
            for (std::size_t i = 1; i < n; ++i)
                if (bv[i] != lambda * snapped[i]) { eigen = false; break; }
            if (eigen && lambda >= 0) {
                out.result.exact = true;
                out.result.exact_value = lambda;
                out.result.lower = out.result.upper = lambda;
                out.result.value = to_double(lambda);
                Rational nrm = max_norm(snapped);
                for (auto& x : snapped) x /= nrm;
                out.exact_vector = snapped;
                have_exact_pair = true;
                vr = *out.exact_vector;
            }
        }
    }

    if (!have_exact_pair) {
        // exact rational radius via the characteristic polynomial (small blocks)
        std::optional<Rational> exact = exact_radius_via_charpoly(b);
        vr = rationalize(v);
        auto [lo, hi] = collatz_wielandt_bounds(b, vr);
        int rounds = 0;
        while (!exact && hi - lo > Rational(opt.tolerance) && rounds < opt.exact_refine_rounds) {
            // exact refinement: v <- (B+I)^4 v, renormalized
            for (int k = 0; k < 4; ++k) {
                std::vector<Rational> w = b * vr;
                for (std::size_t i = 0; i < n; ++i) w[i] += vr[i];
                Rational nrm = max_norm(w);
                for (auto& x : w) x /= nrm;
                vr = std::move(w);
            }
            std::tie(lo, hi) = collatz_wielandt_bounds(b, vr);
            ++rounds;
        }
        if (exact) {
            out.result.exact = true;
            out.result.exact_value = *exact;
            out.result.lower = out.result.upper = *exact;
            out.result.value = to_double(*exact);
        } else {
            if (hi - lo > Rational(opt.tolerance))
                throw Error(ErrorKind::Budget,
                            "spectral_radius: enclosure did not reach tolerance; last bounds [" +
                                lo.str() + ", " + hi.str() + "]");
            out.result.lower = lo;
            out.result.upper = hi;
            out.result.value = to_double((lo + hi) / 2);
        }
    }

    out.approx_vector.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) out.approx_vector[i] = to_double(vr[i]);
    double mx = 0;
    for (double x : out.approx_vector) mx = std::max(mx, x);
    for (double& x : out.approx_vector) x /= mx;
    return out;
}

SpectralResult combine_max(const std::vector<SpectralResult>& parts) {
    SpectralResult out;
    out.exact = true;
    out.exact_value = 0;
    out.lower = 0;
    out.upper = 0;
    if (parts.empty()) { // empty matrix family: radius 0 by convention
        out.value = 0;
        return out;
    }
    Rational lo(0), hi(0);
    bool first = true;
    for (const auto& p : parts) {
        Rational plo = p.exact ? p.exact_value : p.lower;
        Rational phi = p.exact ? p.exact_value : p.upper;
        if (first) { lo = plo; hi = phi; first = false; }
        else {
            if (plo > lo) lo = plo;
            if (phi > hi) hi = phi;
        }
    }
    out.lower = lo;
    out.upper = hi;
    out.exact = (lo == hi);
    if (out.exact) out.exact_value = lo;
    out.value = out.exact ? to_double(lo) : to_double((lo + hi) / 2);
    return out;
}

} // namespace

std::pair<Rational, Rational> collatz_wielandt_bounds(const RatMatrix& m,
                                                      const std::vector<Rational>& v) {
    if (v.size() != m.size() || v.empty())
        throw Error(ErrorKind::Argument, "collatz_wielandt_bounds: size mismatch");
    for (const auto& x : v)
        if (x <= 0) throw Error(ErrorKind::Argument, "collatz_wielandt_bounds: vector must be positive");
    std::vector<Rational> w = m * v;
    Rational lo = w[0] / v[0], hi = lo;
    for (std::size_t i = 1; i < v.size(); ++i) {
        Rational r = w[i] / v[i];
        if (r < lo) lo = r;
        if (r > hi) hi = r;
    }
    return {lo, hi};
}

FrobeniusForm frobenius_normal_form(const RatMatrix& m, const SpectralOptions& opt) {
    if (m.size() == 0) throw Error(ErrorKind::Argument, "frobenius_normal_form: empty matrix");
    if (!m.nonnegative()) throw Error(ErrorKind::Argument, "frobenius_normal_form: negative entry");
    FrobeniusForm f;
    f.block_original_indices = transition_components(m);
    std::vector<SpectralResult> spectra;
    for (const auto& blk : f.block_original_indices) {
        RatMatrix sub = m.submatrix(blk);
        spectra.push_back(irreducible_block_spectrum(sub, opt).result);
        for (std::size_t idx : blk) f.permutation.push_back(idx);
    }
    f.block_spectra = spectra;
    f.overall = combine_max(spectra);
    return f;
}

SpectralResult spectral_radius(const RatMatrix& m, const SpectralOptions& opt) {
    if (m.size() == 0) throw Error(ErrorKind::Argument, "spectral_radius: empty matrix");
    if (!m.nonnegative()) throw Error(ErrorKind::Argument, "spectral_radius: negative entry");
    auto comps = transition_components(m);
    std::vector<SpectralResult> parts;
    parts.reserve(comps.size());
    for (const auto& blk : comps)
        parts.push_back(irreducible_block_spectrum(m.submatrix(blk), opt).result);
    return combine_max(parts);
}

PerronVector leading_eigenvector(const RatMatrix& m, const SpectralOptions& opt) {
    if (!is_irreducible(m))
        throw Error(ErrorKind::Precondition,
                    "leading_eigenvector: matrix is reducible; decompose with "
                    "frobenius_normal_form first");
    BlockSpectrum bs = irreducible_block_spectrum(m, opt);
    PerronVector out;
    out.approx = bs.approx_vector;
    out.exact = bs.exact_vector;
    // residual check ||Mv - lambda v|| <= tol under sup norm
    const std::size_t n = m.size();
    std::vector<double> mv(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mv[i] += to_double(m.at(i, j)) * out.approx[j];
    double resid = 0;
    for (std::size_t i = 0; i < n; ++i)
        resid = std::max(resid, std::abs(mv[i] - bs.result.value * out.approx[i]));
    if (resid > 1e-8)
        throw Error(ErrorKind::Budget, "leading_eigenvector: residual " + std::to_string(resid) +
                                            " above tolerance");
    return out;
}

int smallest_halving_power(const RatMatrix& m, int cap, const SpectralOptions& opt) {
    SpectralResult sr = spectral_radius(m, opt);
    if (!sr.below_one())
        throw Error(ErrorKind::Precondition,
                    "smallest_halving_power: spectral radius is not certified < 1");
    const Rational half(1, 2);
    RatMatrix p = m;
    for (int e = 1; e <= cap; ++e) {
        if (max_norm(p) < half) return e;
        p = p * m;
    }
    throw Error(ErrorKind::Budget, "smallest_halving_power: cap " + std::to_string(cap) +
                                        " exceeded");
}

BetaResult beta_over_family(const std::vector<RatMatrix>& family, const SpectralOptions& opt) {
    if (family.empty()) throw Error(ErrorKind::Argument, "beta_over_family: empty family");
    BetaResult out;
    out.exact = Rational(1);
    out.value = 1.0;
    bool all_exact = true;
    for (std::size_t k = 0; k < family.size(); ++k) {
        const RatMatrix& m = family[k];
        if (!is_irreducible(m))
            throw Error(ErrorKind::Precondition,
                        "beta_over_family: member " + std::to_string(k) + " is reducible");
        SpectralResult sr = spectral_radius(m, opt);
        if (!sr.at_least_one())
            throw Error(ErrorKind::Precondition, "beta_over_family: member " + std::to_string(k) +
                                                      " has spectral radius < 1");
        PerronVector v = leading_eigenvector(m, opt);
        double smallest = 1.0;
        for (double x : v.approx) smallest = std::min(smallest, x);
        out.value = std::min(out.value, smallest);
        if (v.exact && all_exact) {
            Rational s = (*v.exact)[0];
            for (const auto& x : *v.exact)
                if (x < s) s = x;
            if (!out.exact || s < *out.exact) out.exact = s;
        } else {
            all_exact = false;
        }
    }
    if (!all_exact) out.exact.reset();
    if (out.exact) out.value = to_double(*out.exact);
    return out;
}

BetaResult beta_universal(int degree, int cardinality, const SpectralOptions& opt) {
    if (degree != 2 || cardinality < 4 || cardinality > 5)
        throw Error(ErrorKind::Argument,
                    "beta_universal: exhaustive enumeration supported only for d = 2, 4 <= p <= 5");
    const int max_curves = cardinality - 3;

    // Realizable columns for d = 2: the full preimage of a curve is either a
    // single component of degree 2 or two components of degree 1, and any
    // component may land on a basis curve, a peripheral class, or a trivial one.
    auto columns_for = [&](int n) {
        std::vector<std::vector<Rational>> cols;
        std::vector<Rational> zero(n, Rational(0));
        cols.push_back(zero); // everything peripheral/trivial
        for (int i = 0; i < n; ++i) {
            auto c = zero;
            c[i] = Rational(1, 2); // one component of degree 2
            cols.push_back(c);
            c = zero;
            c[i] = Rational(1); // degree 1 + unlisted degree-1 component
            cols.push_back(c);
            c = zero;
            c[i] = Rational(2); // both degree-1 components on the same curve
            cols.push_back(c);
            for (int j = i + 1; j < n; ++j) {
                c = zero;
                c[i] = Rational(1);
                c[j] = Rational(1);
                cols.push_back(c);
            }
        }
        return cols;
    };

    std::vector<RatMatrix> family;
    for (int n = 1; n <= max_curves; ++n) {
        auto cols = columns_for(n);
        std::vector<std::size_t> choice(n, 0);
        while (true) {
            RatMatrix m(n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) m.at(i, j) = cols[choice[j]][i];
            if (is_irreducible(m) && spectral_radius(m, opt).at_least_one())
                family.push_back(m);
            int pos = n - 1;
            while (pos >= 0 && ++choice[pos] == cols.size()) choice[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return beta_over_family(family, opt);
}

} // namespace thurston
