#pragma once

// Plane and Poincare-disk geometry used by the constant-curvature realizations.
// Hyperbolic isometries are stored as SU(1,1)-type Mobius coefficients with an
// optional conjugation flag for orientation-reversing maps.

#include "cutloci/multigraph.hpp"

#include <cmath>
#include <complex>

namespace cutloci {

using Pt = std::complex<double>;

enum class Geometry { sphere, projective_plane, euclidean, hyperbolic };

inline double hyp_dist(Pt z, Pt w) {
    double r = std::abs((z - w) / (1.0 - std::conj(w) * z));
    return 2.0 * std::atanh(r);
}

inline double model_dist(Geometry geo, Pt z, Pt w) {
    return geo == Geometry::hyperbolic ? hyp_dist(z, w) : std::abs(z - w);
}

/// z -> (z - p) / (1 - conj(p) z), the disk motion sending p to the origin.
inline Pt to_origin(Pt p, Pt z) { return (z - p) / (1.0 - std::conj(p) * z); }

/// Rigid motion of the model. Euclidean: z -> a*z' + b with |a| = 1.
/// Hyperbolic: z -> (a*z' + b) / (conj(b)*z' + conj(a)). z' = conj(z) when
/// reversing is set (orientation-reversing map).
struct Isometry {
    Geometry geo = Geometry::euclidean;
    Pt a{1.0, 0.0};
    Pt b{0.0, 0.0};
    bool reversing = false;

    Pt operator()(Pt z) const {
        Pt w = reversing ? std::conj(z) : z;
        if (geo == Geometry::hyperbolic)
            return (a * w + b) / (std::conj(b) * w + std::conj(a));
        return a * w + b;
    }
};

namespace detail {

// 2x2 matrices of the shape [[a, b], [conj(b), conj(a)]] are closed under
// products and model the orientation-preserving disk motions.
struct Su11 {
    Pt a, b;
    Su11 operator*(const Su11& o) const {
        return {a * o.a + b * std::conj(o.b), a * o.b + b * std::conj(o.a)};
    }
};

inline Su11 translate_to_origin(Pt p) { return {Pt(1, 0), -p}; }
inline Su11 translate_from_origin(Pt p) { return {Pt(1, 0), p}; }
inline Su11 rotation(Pt unit) {
    double half = std::arg(unit) / 2.0;
    return {std::polar(1.0, half), Pt(0, 0)};
}

} // namespace detail

/// The orientation-preserving motion with p1 -> q1 and p2 -> q2; the point
/// pairs must be at equal model distance. reversing = true instead builds the
/// orientation-reversing motion with the same interpolation data.
inline Isometry isometry_from_pairs(Geometry geo, Pt p1, Pt p2, Pt q1, Pt q2,
                                    bool reversing) {
    Isometry iso;
    iso.geo = geo;
    iso.reversing = reversing;
    if (reversing) {
        p1 = std::conj(p1);
        p2 = std::conj(p2);
    }
    if (geo == Geometry::euclidean) {
        iso.a = (q2 - q1) / (p2 - p1);
        iso.a /= std::abs(iso.a);
        iso.b = q1 - iso.a * p1;
        return iso;
    }
    Pt w1 = to_origin(p1, p2);
    Pt w2 = to_origin(q1, q2);
    detail::Su11 M = detail::translate_from_origin(q1) *
                     detail::rotation(w2 / w1) * detail::translate_to_origin(p1);
    iso.a = M.a;
    iso.b = M.b;
    return iso;
}

/// Point at arclength fraction t along the geodesic segment from z1 to z2.
inline Pt geodesic_point(Geometry geo, Pt z1, Pt z2, double t) {
    if (geo == Geometry::euclidean) return z1 + t * (z2 - z1);
    Pt w = to_origin(z1, z2);
    double d = 2.0 * std::atanh(std::abs(w));
    Pt p = std::tanh(t * d / 2.0) * (w / std::abs(w));
    // inverse of to_origin(z1, .)
    return (p + z1) / (1.0 + std::conj(z1) * p);
}

/// Interior angle at apex between the geodesics apex->u and apex->v.
inline double angle_at(Geometry geo, Pt apex, Pt u, Pt v) {
    Pt du, dv;
    if (geo == Geometry::euclidean) {
        du = u - apex;
        dv = v - apex;
    } else {
        du = to_origin(apex, u);
        dv = to_origin(apex, v);
    }
    double ang = std::abs(std::arg(du / dv));
    return ang;
}

} // namespace cutloci
