#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace thurston {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string rational_str(const Rational& q) { return q.str(); }

// Nearest rational with denominator <= max_den, by continued fractions.
// Used to recognize exact eigendata behind a converged floating-point vector.
inline std::optional<Rational> snap_to_rational(double x, std::uint64_t max_den = 1'000'000,
                                                double tol = 1e-9) {
    if (!std::isfinite(x)) return std::nullopt;
    bool neg = x < 0;
    double v = neg ? -x : x;
    std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9e18) return std::nullopt;
        auto a = static_cast<std::uint64_t>(fl);
        if (p1 > (UINT64_MAX - p0) / (a ? a : 1) || q1 > (UINT64_MAX - q0) / (a ? a : 1))
            break;
        std::uint64_t p2 = a * p1 + p0;
        std::uint64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - v) > tol * std::max(1.0, v)) return std::nullopt;
    Rational r{BigInt(p1), BigInt(q1)};
    if (neg) r = -r;
    return r;
}

} // namespace thurston
