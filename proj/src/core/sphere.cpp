#include "sphere.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace thurston {

double chordal(const SpherePoint& a, const SpherePoint& b) {
    if (a.inf && b.inf) return 0.0;
    if (a.inf) return 2.0 / std::sqrt(1.0 + std::norm(b.z));
    if (b.inf) return 2.0 / std::sqrt(1.0 + std::norm(a.z));
    return 2.0 * std::abs(a.z - b.z) /
           std::sqrt((1.0 + std::norm(a.z)) * (1.0 + std::norm(b.z)));
}

double euclidean_radius(const SpherePoint& center, double chordal_r) {
    if (center.inf)
        throw Error(ErrorKind::Degenerate, "euclidean_radius: disk centered at infinity");
    if (chordal_r <= 0) return 0.0;
    // chordal(z, z+t) is increasing in t up to the antipode; bisect
    double lo = 0.0, hi = chordal_r * (1.0 + std::norm(center.z)); // first guess bracket
    while (chordal(center, SpherePoint::at(center.z + hi)) < chordal_r) {
        hi *= 2.0;
        if (hi > 1e12) throw Error(ErrorKind::Degenerate, "euclidean_radius: radius too large");
    }
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if (chordal(center, SpherePoint::at(center.z + mid)) < chordal_r)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SpherePoint Mobius::apply(const SpherePoint& p) const {
    if (p.inf) {
        if (std::abs(c) == 0.0) return SpherePoint::infinity();
        return SpherePoint::at(a / c);
    }
    Complex num = a * p.z + b;
    Complex den = c * p.z + d;
    if (std::abs(den) == 0.0) return SpherePoint::infinity();
    return SpherePoint::at(num / den);
}

double Mobius::planar_scale(const SpherePoint& p) const {
    Complex den = c * p.z + d;
    Complex det = a * d - b * c;
    return std::abs(det) / std::norm(den);
}

double Mobius::spherical_scale(const SpherePoint& p) const {
    SpherePoint q = apply(p);
    if (p.inf || q.inf) {
        // evaluate at a nearby finite point; adequate for radius bookkeeping
        SpherePoint probe = p.inf ? SpherePoint::at(Complex(1e8, 0)) : p;
        SpherePoint probe_img = apply(probe);
        if (probe_img.inf) return 1.0;
        double dp = planar_scale(probe);
        return dp * (1.0 + std::norm(probe.z)) / (1.0 + std::norm(probe_img.z));
    }
    return planar_scale(p) * (1.0 + std::norm(p.z)) / (1.0 + std::norm(q.z));
}

Mobius Mobius::to_standard_triple(const SpherePoint& p0, const SpherePoint& p1,
                                  const SpherePoint& pinf) {
    // m(z) = ((z - p0)(p1 - pinf)) / ((z - pinf)(p1 - p0)), with limits
    if (!p0.inf && !p1.inf && !pinf.inf) {
        Complex k = (p1.z - pinf.z);
        Complex l = (p1.z - p0.z);
        return Mobius{k, -p0.z * k, l, -pinf.z * l};
    }
    if (pinf.inf) { // affine
        if (p0.inf || p1.inf)
            throw Error(ErrorKind::Degenerate, "to_standard_triple: coincident infinities");
        Complex l = p1.z - p0.z;
        return Mobius{Complex(1, 0), -p0.z, Complex(0, 0), l};
    }
    if (p0.inf) { // m(z) = (p1 - pinf) / (z - pinf)
        Complex k = p1.z - pinf.z;
        return Mobius{Complex(0, 0), k, Complex(1, 0), -pinf.z};
    }
    // p1.inf: m(z) = (z - p0) / (z - pinf)
    return Mobius{Complex(1, 0), -p0.z, Complex(1, 0), -pinf.z};
}

Complex cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
                    const SpherePoint& z4) {
    auto diff = [](const SpherePoint& a, const SpherePoint& b) -> Complex {
        return a.z - b.z; // callers handle infinity by cancellation below
    };
    // handle infinity by dropping the two factors it appears in
    if (z1.inf) return diff(z2, z4) / diff(z2, z3);
    if (z2.inf) return diff(z1, z3) / diff(z1, z4);
    if (z3.inf) return diff(z2, z4) / diff(z1, z4);
    if (z4.inf) return diff(z1, z3) / diff(z2, z3);
    return (diff(z1, z3) * diff(z2, z4)) / (diff(z1, z4) * diff(z2, z3));
}

namespace {

Circle circle_from(const Complex& a, const Complex& b) {
    Complex c = 0.5 * (a + b);
    return {c, std::abs(a - c)};
}

Circle circle_from(const Complex& a, const Complex& b, const Complex& c) {
    // circumcircle via perpendicular bisector intersection
    double ax = a.real(), ay = a.imag();
    double bx = b.real(), by = b.imag();
    double cx = c.real(), cy = c.imag();
    double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (std::abs(d) < 1e-14) {
        // nearly collinear: fall back to the widest pair
        Circle c1 = circle_from(a, b), c2 = circle_from(a, c), c3 = circle_from(b, c);
        Circle best = c1;
        if (c2.radius > best.radius) best = c2;
        if (c3.radius > best.radius) best = c3;
        return best;
    }
    double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                 (cx * cx + cy * cy) * (ay - by)) /
                d;
    double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                 (cx * cx + cy * cy) * (bx - ax)) /
                d;
    Complex center(ux, uy);
    return {center, std::abs(a - center)};
}

bool inside(const Circle& c, const Complex& p) {
    return std::abs(p - c.center) <= c.radius * (1.0 + 1e-12) + 1e-15;
}

} // namespace

Circle smallest_enclosing_circle(std::vector<Complex> points) {
    if (points.empty()) throw Error(ErrorKind::Argument, "smallest_enclosing_circle: no points");
    std::mt19937_64 rng(0x5eed);
    std::shuffle(points.begin(), points.end(), rng);
    Circle c{points[0], 0.0};
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (inside(c, points[i])) continue;
        c = {points[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside(c, points[j])) continue;
            c = circle_from(points[i], points[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (inside(c, points[k])) continue;
                c = circle_from(points[i], points[j], points[k]);
            }
        }
    }
    return c;
}

} // namespace thurston
