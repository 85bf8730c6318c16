#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/rat_matrix.hpp"
#include "core/rat_poly.hpp"
#include "core/spectral.hpp"
#include "oracles.hpp"

#include <random>

using namespace thurston;

namespace {

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RatMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

const RatMatrix kSwapMatrix = from_rows({{0, 1}, {1, 0}});

} // namespace

TEST_CASE("max norm of vectors and matrices") {
    CHECK(max_norm(std::vector<Rational>{1, -3, 2}) == Rational(3));
    CHECK(max_norm(RatMatrix::identity(3)) == Rational(1));
    CHECK(max_norm(kSwapMatrix) == Rational(1));
    CHECK(max_norm(from_rows({{0, Rational(1, 2)}, {Rational(3, 2), 0}})) == Rational(3, 2));
    CHECK_THROWS_AS(max_norm(std::vector<Rational>{}), Error);
}

TEST_CASE("characteristic polynomial and rational roots") {
    RatPoly chi = characteristic_polynomial(kSwapMatrix); // x^2 - 1
    REQUIRE(chi.coeffs.size() == 3);
    CHECK(chi.coeffs[0] == Rational(-1));
    CHECK(chi.coeffs[1] == Rational(0));
    CHECK(chi.coeffs[2] == Rational(1));
    auto roots = rational_roots(chi);
    REQUIRE(roots.has_value());
    CHECK(roots->size() == 2);

    RatPoly sf = square_free_part(chi);
    CHECK(sturm_count(sf, Rational(0), Rational(2)) == 1);
    CHECK(sturm_count(sf, Rational(-2), Rational(2)) == 2);
}

TEST_CASE("spectral radius of the antidiagonal swap matrix is exactly 1") {
    SpectralResult r = spectral_radius(kSwapMatrix);
    REQUIRE(r.exact);
    CHECK(r.exact_value == Rational(1));
    CHECK(is_irreducible(kSwapMatrix));
}

TEST_CASE("spectral radius trivial cases") {
    CHECK(spectral_radius(RatMatrix(3)).exact_value == Rational(0));
    RatMatrix two(1);
    two.at(0, 0) = 2;
    SpectralResult r = spectral_radius(two);
    REQUIRE(r.exact);
    CHECK(r.exact_value == Rational(2));
}

TEST_CASE("spectral radius matches the power-norm oracle on random matrices") {
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 60; ++trial) {
        RatMatrix m = oracle::random_grid_matrix(rng, 5);
        SpectralResult r = spectral_radius(m);
        double expect = oracle::power_norm_radius(m);
        CHECK(r.value == doctest::Approx(expect).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("Collatz-Wielandt sandwich holds for random positive vectors") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.05, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        RatMatrix m = oracle::random_grid_matrix(rng, 4, 0.35);
        SpectralResult r = spectral_radius(m);
        std::vector<Rational> v(4);
        for (auto& x : v) x = Rational(unif(rng));
        auto [lo, hi] = collatz_wielandt_bounds(m, v);
        CHECK(to_double(lo) <= r.value + 1e-9);
        CHECK(to_double(hi) >= r.value - 1e-9);
    }
}

TEST_CASE("exact path agrees with char-poly root bounding on small grids") {
    // all 2x2 matrices over the grid, then random 3x3 and 4x4 samples
    const Rational values[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                               Rational(2)};
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    RatMatrix m = from_rows({{values[a], values[b]}, {values[c], values[d]}});
                    double expect = oracle::charpoly_max_root(m);
                    CHECK(spectral_radius(m).value == doctest::Approx(expect).epsilon(1e-9));
                }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 3 + (trial % 2);
        RatMatrix m = oracle::random_grid_matrix(rng, n, 0.45);
        double expect = oracle::charpoly_max_root(m);
        CHECK(spectral_radius(m).value == doctest::Approx(expect).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("irreducibility examples and reachability oracle") {
    CHECK(is_irreducible(kSwapMatrix));
    CHECK_FALSE(is_irreducible(from_rows({{1, 0}, {1, 1}})));
    RatMatrix zero1(1);
    CHECK_FALSE(is_irreducible(zero1)); // 1x1 zero counts as a zero block
    RatMatrix one1(1);
    one1.at(0, 0) = 1;
    CHECK(is_irreducible(one1));

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        RatMatrix m = oracle::random_grid_matrix(rng, 6, 0.75);
        CHECK(is_irreducible(m) == oracle::reachability_irreducible(m));
    }
}

TEST_CASE("frobenius normal form structure") {
    SUBCASE("irreducible input is a single block with identity permutation") {
        FrobeniusForm f = frobenius_normal_form(kSwapMatrix);
        REQUIRE(f.block_original_indices.size() == 1);
        CHECK(f.permutation == std::vector<std::size_t>{0, 1});
        CHECK(f.overall.exact_value == Rational(1));
    }
    SUBCASE("lower-triangular 2x2 splits into two 1x1 blocks") {
        FrobeniusForm f = frobenius_normal_form(from_rows({{1, 0}, {1, 1}}));
        REQUIRE(f.block_original_indices.size() == 2);
        CHECK(f.block_spectra[0].exact_value == Rational(1));
        CHECK(f.block_spectra[1].exact_value == Rational(1));
        CHECK(f.overall.exact_value == Rational(1));
    }
    SUBCASE("permuted matrix is block lower-triangular and blocks are irreducible or zero") {
        std::mt19937_64 rng(424242);
        for (int trial = 0; trial < 80; ++trial) {
            RatMatrix m = oracle::random_grid_matrix(rng, 7, 0.7);
            FrobeniusForm f = frobenius_normal_form(m);
            // entries strictly above the block diagonal vanish after permutation
            std::vector<std::size_t> block_of(m.size());
            {
                std::size_t pos = 0;
                for (std::size_t b = 0; b < f.block_original_indices.size(); ++b)
                    for (std::size_t k = 0; k < f.block_original_indices[b].size(); ++k)
                        block_of[pos++] = b;
            }
            for (std::size_t r = 0; r < m.size(); ++r)
                for (std::size_t c = 0; c < m.size(); ++c)
                    if (block_of[r] < block_of[c])
                        CHECK(m.at(f.permutation[r], f.permutation[c]) == 0);
            for (const auto& blk : f.block_original_indices) {
                RatMatrix sub = m.submatrix(blk);
                if (blk.size() == 1 && sub.at(0, 0) == 0) continue;
                CHECK(oracle::reachability_irreducible(sub));
            }
            // lambda(A) = max_j lambda(A_jj)
            double whole = spectral_radius(m).value;
            double best = 0;
            for (const auto& s : f.block_spectra) best = std::max(best, s.value);
            CHECK(whole == doctest::Approx(best).epsilon(1e-9).scale(1.0));
            CHECK(whole == doctest::Approx(oracle::power_norm_radius(m)).epsilon(1e-8).scale(1.0));
        }
    }
}

TEST_CASE("leading eigenvector") {
    SUBCASE("swap matrix has eigenvector (1,1)") {
        PerronVector v = leading_eigenvector(kSwapMatrix);
        REQUIRE(v.exact.has_value());
        CHECK((*v.exact)[0] == Rational(1));
        CHECK((*v.exact)[1] == Rational(1));
    }
    SUBCASE("1x1") {
        RatMatrix two(1);
        two.at(0, 0) = 2;
        PerronVector v = leading_eigenvector(two);
        REQUIRE(v.exact.has_value());
        CHECK((*v.exact)[0] == Rational(1));
    }
    SUBCASE("3-cycle permutation matrix has eigenvector (1,1,1)") {
        RatMatrix m(3);
        m.at(1, 0) = 1;
        m.at(2, 1) = 1;
        m.at(0, 2) = 1;
        PerronVector v = leading_eigenvector(m);
        REQUIRE(v.exact.has_value());
        for (const auto& x : *v.exact) CHECK(x == Rational(1));
        // verify M v = v directly
        std::vector<Rational> mv = m * *v.exact;
        CHECK(mv == *v.exact);
    }
    SUBCASE("reducible input is rejected") {
        CHECK_THROWS_AS(leading_eigenvector(from_rows({{1, 0}, {1, 1}})), Error);
    }
    SUBCASE("Mv is close to lambda v in general") {
        std::mt19937_64 rng(31337);
        for (int trial = 0; trial < 40; ++trial) {
            RatMatrix m = oracle::random_grid_matrix(rng, 5, 0.2);
            if (!is_irreducible(m)) continue;
            SpectralResult r = spectral_radius(m);
            PerronVector v = leading_eigenvector(m);
            double vmax = 0;
            for (double x : v.approx) {
                CHECK(x > 0);
                vmax = std::max(vmax, x);
            }
            CHECK(vmax == doctest::Approx(1.0));
            for (std::size_t i = 0; i < 5; ++i) {
                double mv = 0;
                for (std::size_t j = 0; j < 5; ++j) mv += to_double(m.at(i, j)) * v.approx[j];
                CHECK(mv == doctest::Approx(r.value * v.approx[i]).epsilon(1e-7).scale(1.0));
            }
        }
    }
}

TEST_CASE("smallest halving power") {
    auto single = [](const Rational& x) {
        RatMatrix m(1);
        m.at(0, 0) = x;
        return m;
    };
    CHECK(smallest_halving_power(single(Rational(1, 4))) == 1);
    // exact powering oracle: 3/4 >= 1/2, 9/16 >= 1/2, 27/64 < 1/2
    CHECK(smallest_halving_power(single(Rational(3, 4))) == 3);
    RatMatrix half_swap = from_rows({{0, Rational(1, 2)}, {Rational(1, 2), 0}});
    CHECK(smallest_halving_power(half_swap) == 2);

    SUBCASE("the returned power is minimal, exactly") {
        std::mt19937_64 rng(51);
        std::uniform_int_distribution<int> num(1, 9);
        for (int trial = 0; trial < 30; ++trial) {
            RatMatrix m(2);
            m.at(0, 0) = Rational(num(rng), 20);
            m.at(0, 1) = Rational(num(rng), 20);
            m.at(1, 0) = Rational(num(rng), 20);
            m.at(1, 1) = Rational(num(rng), 20);
            if (!spectral_radius(m).below_one()) continue;
            int p = smallest_halving_power(m);
            CHECK(max_norm(m.pow(p)) < Rational(1, 2));
            if (p > 1) CHECK(max_norm(m.pow(p - 1)) >= Rational(1, 2));
        }
    }
    SUBCASE("precondition and budget errors") {
        CHECK_THROWS_AS(smallest_halving_power(single(Rational(1))), Error);
        CHECK_THROWS_AS(smallest_halving_power(single(Rational(9999, 10000)), 3), Error);
    }
}

TEST_CASE("beta over a family of irreducible matrices") {
    SUBCASE("swap matrix gives beta = 1") {
        BetaResult b = beta_over_family({kSwapMatrix});
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == Rational(1));
    }
    SUBCASE("[[1]] gives beta = 1") {
        RatMatrix one(1);
        one.at(0, 0) = 1;
        CHECK(*beta_over_family({one}).exact == Rational(1));
    }
    SUBCASE("[[0,2],[1/2,0]] has normalized eigenvector (1, 1/2)") {
        RatMatrix m = from_rows({{0, 2}, {Rational(1, 2), 0}});
        BetaResult b = beta_over_family({m});
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == Rational(1, 2));
    }
    SUBCASE("members violating the preconditions are named") {
        RatMatrix reducible = from_rows({{1, 0}, {1, 1}});
        CHECK_THROWS_WITH_AS(beta_over_family({kSwapMatrix, reducible}),
                             doctest::Contains("member 1"), Error);
        RatMatrix small = from_rows({{0, Rational(1, 2)}, {Rational(1, 2), 0}});
        CHECK_THROWS_WITH_AS(beta_over_family({small}), doctest::Contains("member 0"), Error);
    }
    SUBCASE("exhaustive universal beta for degree 2") {
        BetaResult b4 = beta_universal(2, 4);
        CHECK(b4.value == doctest::Approx(1.0));
        BetaResult b5 = beta_universal(2, 5);
        CHECK(b5.value == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(b5.value > 0);
        CHECK(b5.value <= 1.0);
        CHECK_THROWS_AS(beta_universal(3, 5), Error);
    }
}
