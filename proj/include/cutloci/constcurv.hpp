#pragma once

#include "cutloci/geom.hpp"
#include "cutloci/ribbon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cutloci {

struct PolygonParameters {
    Geometry geometry;
    int m = 0; // edge count of the base graph; polygon has 2m sides
    int k = 0; // constant order
    double corner_angle = 0;
    double side_length = 0;
    double circumradius = 0;
    double apothem = 0;
};

/// Regular-polygon data for a cyclic constant-order-k graph with m edges.
/// m = 0 is the sphere point case, k = 2 the projective-plane cycle case;
/// otherwise the 2m-gon with interior angle 2pi/k, Euclidean exactly for
/// (m,k) = (2,4) and (3,3), hyperbolic whenever 2pi/k is smaller than the
/// Euclidean regular angle, and an error when no such polygon exists.
PolygonParameters polygon_parameters(int m, int k);

struct SidePairing {
    int source = -1;
    int target = -1;
    Isometry iso;          // carries side `source` onto side `target`
    bool reversing = false; // true when the edge's two walk traversals agree
};

/// A CL-structure laid out on an identified regular 2m-gon. Corner i sits at
/// vertex_coords[i]; side i runs from corner i to corner i+1 and realizes the
/// dart walk[i]. corner_classes are the orbits of the side pairings.
struct PolygonRealization {
    Geometry geometry;
    MultiGraph graph;
    int m = 0;
    int k = 0;
    double corner_angle = 0;
    double side_length = 0;
    double circumradius = 0;
    double apothem = 0;
    /// Input metric length, when one was prescribed. Hyperbolic polygons force
    /// their own side length; flat ones are scaled to honor it.
    std::optional<double> prescribed_length;
    std::vector<Pt> vertex_coords;
    std::vector<int> walk;
    std::vector<int> side_map;   // side -> edge of the graph
    std::vector<int> corner_map; // corner -> vertex of the graph
    std::vector<SidePairing> pairings;
    std::vector<std::vector<int>> corner_classes;
};

/// Lays the boundary walk of a one-face scheme along a regular 2m-gon and
/// computes the side-pairing isometries. Requires: the scheme is a
/// CL-structure, its base graph is cyclic of constant order, and any metric
/// lengths are all equal (unequal prescribed lengths are refused since the
/// polygon forces one side length).
PolygonRealization realize(const MultiGraph& g, const EmbeddingScheme& scheme);

struct VerificationItem {
    std::string name;
    double error = 0;
    double tolerance = 0;
    bool pass = true;
};

struct VerificationReport {
    bool pass = true;
    std::vector<VerificationItem> items;
    void add(std::string name, double error, double tolerance);
};

/// Checks corner-class angle sums against 2pi, the Gauss-Bonnet area against
/// -2pi*chi (hyperbolic case), center-equidistance of sampled identified
/// boundary points, and realized side lengths. Failures produce a failed
/// report, not an exception.
VerificationReport verify_realization(const PolygonRealization& r, int samples,
                                      double tol_flat = 1e-9, double tol_hyp = 1e-7,
                                      std::uint64_t seed = 12345);

} // namespace cutloci
