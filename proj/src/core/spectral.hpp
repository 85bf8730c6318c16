#pragma once

#include "rat_matrix.hpp"
#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace thurston {

struct SpectralOptions {
    double tolerance = 1e-11;   // required enclosure width
    int power_budget = 200000;  // double-precision iteration cap
    int exact_refine_rounds = 80;
};

// Spectral radius with a certified Collatz-Wielandt enclosure. `exact` is set
// when the value is certified as a rational number (then lower==upper==value).
struct SpectralResult {
    double value = 0.0;
    Rational lower{0};
    Rational upper{0};
    bool exact = false;
    Rational exact_value{0};

    bool at_least_one() const;  // decisive lambda >= 1 test
    bool below_one() const;     // decisive lambda < 1 test
    bool decisive_vs_one() const;
};

struct PerronVector {
    std::vector<double> approx;                    // sup-norm normalized, > 0
    std::optional<std::vector<Rational>> exact;    // set when certified
};

struct FrobeniusForm {
    // permutation[k] = original index occupying position k of the reordered
    // basis; blocks partition 0..n-1 of the *reordered* positions.
    std::vector<std::size_t> permutation;
    std::vector<std::vector<std::size_t>> block_original_indices;
    std::vector<SpectralResult> block_spectra;
    SpectralResult overall;
};

bool is_irreducible(const RatMatrix& m);

// Strongly connected components of the lifting digraph (edge j -> i whenever
// entry (i,j) > 0), condensed and topologically ordered so that the permuted
// matrix is block lower-triangular. Ties broken by smallest original index.
std::vector<std::vector<std::size_t>> transition_components(const RatMatrix& m);

FrobeniusForm frobenius_normal_form(const RatMatrix& m, const SpectralOptions& opt = {});

SpectralResult spectral_radius(const RatMatrix& m, const SpectralOptions& opt = {});

// Requires an irreducible matrix; throws a precondition error otherwise.
PerronVector leading_eigenvector(const RatMatrix& m, const SpectralOptions& opt = {});

// Exact Collatz-Wielandt sandwich for a positive rational test vector.
std::pair<Rational, Rational> collatz_wielandt_bounds(const RatMatrix& m,
                                                      const std::vector<Rational>& v);

// Least m >= 1 with ||M^m|| < 1/2 in the max-row-sum norm (exact powering).
// Requires lambda(M) < 1 certified; capped by `cap`.
int smallest_halving_power(const RatMatrix& m, int cap = 4096,
                           const SpectralOptions& opt = {});

struct BetaResult {
    double value = 1.0;
    std::optional<Rational> exact;
};

// Smallest coordinate of the normalized Perron vector, minimized over the
// family. Every member must be irreducible with lambda >= 1.
BetaResult beta_over_family(const std::vector<RatMatrix>& family,
                            const SpectralOptions& opt = {});

// Exhaustive enumeration of realizable transition columns for degree d and
// marked-set cardinality p (multicurves of at most p-3 curves). Only small
// universes are supported: d <= 2 and p <= 5.
BetaResult beta_universal(int degree, int cardinality, const SpectralOptions& opt = {});

} // namespace thurston
