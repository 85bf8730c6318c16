#pragma once

#include "errors.hpp"

#include <complex>
#include <vector>

namespace thurston {

using Complex = std::complex<double>;

// Point on the Riemann sphere: a finite complex value or the point at infinity.
struct SpherePoint {
    Complex z{0.0, 0.0};
    bool inf = false;

    static SpherePoint infinity() { return SpherePoint{Complex(0, 0), true}; }
    static SpherePoint at(Complex value) { return SpherePoint{value, false}; }

    bool operator==(const SpherePoint& o) const {
        return inf == o.inf && (inf || z == o.z);
    }
};

// Chordal metric on the sphere of diameter 2 (image of stereographic
// projection onto the unit sphere).
double chordal(const SpherePoint& a, const SpherePoint& b);

// Euclidean offset t > 0 with chordal(z, z + t) = r; the planar radius that
// realizes a chordal radius r around a finite center.
double euclidean_radius(const SpherePoint& center, double chordal_r);

// Mobius transformation z -> (az + b) / (cz + d).
struct Mobius {
    Complex a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};

    SpherePoint apply(const SpherePoint& p) const;
    // |derivative| measured chordal-to-chordal at p
    double spherical_scale(const SpherePoint& p) const;
    // |derivative| in the plane (p finite, image finite)
    double planar_scale(const SpherePoint& p) const;

    static Mobius identity() { return {}; }
    // the unique transformation sending (p0, p1, pinf) to (0, 1, infinity)
    static Mobius to_standard_triple(const SpherePoint& p0, const SpherePoint& p1,
                                     const SpherePoint& pinf);
};

// Cross-ratio (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)) with infinity limits.
Complex cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
                    const SpherePoint& z4);

// Smallest enclosing circle of finite points (Welzl's algorithm).
struct Circle {
    Complex center{0, 0};
    double radius = 0;
};
Circle smallest_enclosing_circle(std::vector<Complex> points);

} // namespace thurston
