#pragma once

// Data-parallel grid kernels for the torus lab, in scalar reference form plus
// an AVX2 variant selected at runtime. Both variants keep the exact same
// per-point operation order (no FMA contraction), so outputs agree bitwise
// and the equivalence tests can compare exactly.

#include <cstddef>

namespace cutloci::kernels {

/// Grid-to-lattice data for the flat distance field. The grid samples
/// p(i,j) = (i/nx)*b1 + (j/ny)*b2; r1/r2 is the Lagrange-reduced basis and
/// inv* its inverse matrix, used to wrap p - x into the central cell before
/// the nine-translate minimum.
struct FlatFieldParams {
    double b1x, b1y, b2x, b2y;
    double r1x, r1y, r2x, r2y;
    double inv00, inv01, inv10, inv11;
    double x0, x1; // base point
};

/// out[j*nx + i] = torus distance from x to p(i,j) under the flat metric.
void flat_distance_field(double* out, int nx, int ny, const FlatFieldParams& p);

/// Kink indicator of a periodic field: the largest negative second difference
/// per unit step over the four grid directions (x, y, both diagonals).
/// Large values mark the ridge where the distance gradient jumps.
void kink_indicator(double* out, const double* u, int nx, int ny, double hx, double hy);

enum class Backend { scalar, avx2 };

Backend active_backend();
bool avx2_compiled();
bool avx2_supported();
/// Force a backend (tests); ignored when the requested one is unavailable.
void set_backend(Backend b);

namespace detail {
void flat_distance_field_scalar(double* out, int nx, int ny, const FlatFieldParams& p);
void kink_indicator_scalar(double* out, const double* u, int nx, int ny, double hx, double hy);
#ifdef CUTLOCI_HAVE_AVX2
void flat_distance_field_avx2(double* out, int nx, int ny, const FlatFieldParams& p);
void kink_indicator_avx2(double* out, const double* u, int nx, int ny, double hx, double hy);
#endif
} // namespace detail

} // namespace cutloci::kernels
