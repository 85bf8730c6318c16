#pragma once

#include "rat_matrix.hpp"
#include "rational.hpp"

#include <vector>

namespace thurston {

// Polynomial with rational coefficients, coeffs[k] on x^k.
struct RatPoly {
    std::vector<Rational> coeffs;

    int degree() const;
    Rational eval(const Rational& x) const;
    RatPoly derivative() const;
    void trim();
};

RatPoly poly_remainder(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(RatPoly a, RatPoly b);
RatPoly square_free_part(const RatPoly& p);

// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const RatPoly& square_free, const Rational& a, const Rational& b);

// All rational roots, each listed once. Denominator/numerator candidate
// enumeration is capped; nullopt when the cap is hit.
std::optional<std::vector<Rational>> rational_roots(const RatPoly& p);

// Monic characteristic polynomial det(xI - A) via Faddeev-LeVerrier.
RatPoly characteristic_polynomial(const RatMatrix& a);

} // namespace thurston
