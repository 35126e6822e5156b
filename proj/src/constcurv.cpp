#include "cutloci/constcurv.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cutloci {

PolygonParameters polygon_parameters(int m, int k) {
    PolygonParameters p;
    p.m = m;
    p.k = k;
    if (m == 0) {
        p.geometry = Geometry::sphere;
        return p;
    }
    if (k == 2) {
        p.geometry = Geometry::projective_plane;
        return p;
    }
    if (k < 2) throw Error("constant order must be at least 2 when edges exist");
    if ((2 * m) % k != 0)
        throw Error("no graph: k*n = 2m has no integer solution for m=" +
                    std::to_string(m) + ", k=" + std::to_string(k));

    const double pi = std::acos(-1.0);
    p.corner_angle = 2.0 * pi / k;
    double euclid_angle = pi * (2.0 * m - 2.0) / (2.0 * m);
    double gap = p.corner_angle - euclid_angle;
    if (std::abs(gap) < 1e-12) {
        // only (m,k) = (2,4) and (3,3): the square and the regular hexagon
        p.geometry = Geometry::euclidean;
        p.side_length = 1.0;
        p.circumradius = 1.0 / (2.0 * std::sin(pi / (2 * m)));
        p.apothem = 1.0 / (2.0 * std::tan(pi / (2 * m)));
        return p;
    }
    if (gap > 0)
        throw Error("no hyperbolic 2m-gon with corner angle 2pi/k: requires "
                    "2pi/k < pi(2m-2)/(2m) (chi = n-m+1 < 0)");

    p.geometry = Geometry::hyperbolic;
    // right-triangle identities of the regular hyperbolic polygon, right angle
    // at the edge midpoint
    double A = pi / (2 * m); // half central angle
    double B = pi / k;       // half corner angle
    p.circumradius = std::acosh(1.0 / (std::tan(A) * std::tan(B)));
    p.apothem = std::acosh(std::cos(B) / std::sin(A));
    p.side_length = 2.0 * std::acosh(std::cos(A) / std::sin(B));
    return p;
}

namespace {

void check_cyclic_constant_order(const MultiGraph& g, int& k_out) {
    auto prof = degree_profile(g);
    if (!prof.constant_order)
        throw Error("realize needs a graph of constant order");
    int k = *prof.constant_order;
    if (k == 1) throw Error("graph is not cyclic: pendant vertex present");
    k_out = k;
}

} // namespace

PolygonRealization realize(const MultiGraph& g, const EmbeddingScheme& scheme) {
    if (scheme.base.ends != g.ends || scheme.base.n != g.n)
        throw Error("scheme does not live on the given graph");
    if (g.is_metric()) {
        for (double l : g.lengths)
            if (std::abs(l - g.lengths[0]) > 1e-12)
                throw Error("polygon realization forces equal edge lengths; "
                            "refusing unequal prescribed lengths");
    }

    PolygonRealization r;
    r.graph = g;
    r.m = g.edge_count();

    if (g.edge_count() == 0) {
        r.geometry = Geometry::sphere;
        r.k = 0;
        return r;
    }
    check_cyclic_constant_order(g, r.k);
    if (r.k == 2) {
        // cycles (including the one-loop vertex): the standard projective plane
        r.geometry = Geometry::projective_plane;
        return r;
    }

    if (!is_cl_structure(scheme)) throw Error("scheme is not a CL-structure (face count != 1)");

    auto params = polygon_parameters(r.m, r.k);
    r.geometry = params.geometry;
    r.corner_angle = params.corner_angle;
    r.side_length = params.side_length;
    r.circumradius = params.circumradius;
    r.apothem = params.apothem;

    if (g.is_metric()) {
        r.prescribed_length = g.lengths[0];
        if (r.geometry == Geometry::euclidean) {
            // flat polygons are free to honor the metric
            r.side_length *= g.lengths[0];
            r.circumradius *= g.lengths[0];
            r.apothem *= g.lengths[0];
        }
    }

    r.walk = boundary_walk(scheme);
    const int sides = 2 * r.m;
    const double pi = std::acos(-1.0);
    double rim = r.geometry == Geometry::hyperbolic ? std::tanh(r.circumradius / 2.0)
                                                    : r.circumradius;
    for (int i = 0; i < sides; ++i)
        r.vertex_coords.push_back(std::polar(rim, 2.0 * pi * i / sides));

    r.side_map.resize(sides);
    r.corner_map.resize(sides);
    for (int i = 0; i < sides; ++i) {
        r.side_map[i] = MultiGraph::dart_edge(r.walk[i]);
        r.corner_map[i] = g.dart_vertex(r.walk[i]);
    }

    // Side pairings: each edge occurs at two walk positions i < j. Opposite
    // traversal directions glue corner i to corner j+1 (an
    // orientation-preserving motion); equal directions need a reflection.
    std::vector<std::vector<int>> occurrence(r.m);
    for (int i = 0; i < sides; ++i) occurrence[r.side_map[i]].push_back(i);
    std::vector<int> corner_parent(sides);
    std::iota(corner_parent.begin(), corner_parent.end(), 0);
    auto find = [&](int x) {
        while (corner_parent[x] != x) x = corner_parent[x] = corner_parent[corner_parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) corner_parent[std::max(x, y)] = std::min(x, y);
    };

    for (int e = 0; e < r.m; ++e) {
        if (occurrence[e].size() != 2)
            throw Error("internal: boundary walk does not visit edge twice");
        int i = occurrence[e][0], j = occurrence[e][1];
        SidePairing sp;
        sp.source = i;
        sp.target = j;
        int i1 = (i + 1) % sides, j1 = (j + 1) % sides;
        if (r.walk[j] == MultiGraph::dart_partner(r.walk[i])) {
            sp.reversing = false;
            sp.iso = isometry_from_pairs(r.geometry, r.vertex_coords[i], r.vertex_coords[i1],
                                         r.vertex_coords[j1], r.vertex_coords[j], false);
            unite(i, j1);
            unite(i1, j);
        } else {
            sp.reversing = true;
            sp.iso = isometry_from_pairs(r.geometry, r.vertex_coords[i], r.vertex_coords[i1],
                                         r.vertex_coords[j], r.vertex_coords[j1], true);
            unite(i, j);
            unite(i1, j1);
        }
        r.pairings.push_back(sp);
    }

    // Corner classes are the pairing orbits; each graph vertex must collect
    // exactly k corners for the glued surface to be smooth.
    std::vector<int> root_class(sides, -1);
    for (int i = 0; i < sides; ++i) {
        int root = find(i);
        if (root_class[root] == -1) {
            root_class[root] = static_cast<int>(r.corner_classes.size());
            r.corner_classes.push_back({});
        }
        r.corner_classes[root_class[root]].push_back(i);
    }
    if (static_cast<int>(r.corner_classes.size()) != g.n)
        throw Error("internal: corner classes do not match graph vertices");
    for (const auto& cls : r.corner_classes) {
        if (static_cast<int>(cls.size()) != r.k)
            throw Error("internal: corner class size differs from the constant order");
        for (int c : cls)
            if (r.corner_map[c] != r.corner_map[cls[0]])
                throw Error("internal: corner class spans several graph vertices");
    }
    return r;
}

void VerificationReport::add(std::string name, double error, double tolerance) {
    bool ok = error <= tolerance;
    items.push_back({std::move(name), error, tolerance, ok});
    pass = pass && ok;
}

VerificationReport verify_realization(const PolygonRealization& r, int samples,
                                      double tol_flat, double tol_hyp, std::uint64_t seed) {
    VerificationReport report;
    if (r.geometry == Geometry::sphere || r.geometry == Geometry::projective_plane) {
        report.add("degenerate base case (no polygon data)", 0.0, 1.0);
        return report;
    }
    const double pi = std::acos(-1.0);
    const double tol = r.geometry == Geometry::hyperbolic ? tol_hyp : tol_flat;
    const int sides = 2 * r.m;
    auto corner = [&](int i) { return r.vertex_coords[((i % sides) + sides) % sides]; };

    // (a) measured corner angles of every class sum to 2pi
    double total_angle = 0;
    for (std::size_t c = 0; c < r.corner_classes.size(); ++c) {
        double sum = 0;
        for (int i : r.corner_classes[c]) {
            double ang = angle_at(r.geometry, corner(i), corner(i - 1), corner(i + 1));
            sum += ang;
            total_angle += ang;
        }
        report.add("corner class " + std::to_string(c) + " angle sum", std::abs(sum - 2 * pi),
                   tol);
    }

    // (b) Gauss-Bonnet: hyperbolic polygon area equals -2pi*chi
    if (r.geometry == Geometry::hyperbolic) {
        double area = (sides - 2) * pi - total_angle;
        int chi = r.graph.n - r.m + 1;
        report.add("Gauss-Bonnet area vs -2pi*chi", std::abs(area - (-2.0 * pi * chi)), tol);
    }

    // (c) equidistance of identified boundary points from the center
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> tdist(0.02, 0.98);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(r.pairings.size()) - 1);
    double worst_dist = 0, worst_image = 0;
    for (int s = 0; s < samples; ++s) {
        const SidePairing& sp = r.pairings[pick(rng)];
        double t = tdist(rng);
        Pt p = geodesic_point(r.geometry, corner(sp.source), corner(sp.source + 1), t);
        Pt q = sp.iso(p);
        Pt expected = sp.reversing
                          ? geodesic_point(r.geometry, corner(sp.target), corner(sp.target + 1), t)
                          : geodesic_point(r.geometry, corner(sp.target), corner(sp.target + 1),
                                           1.0 - t);
        worst_image = std::max(worst_image, std::abs(q - expected));
        worst_dist = std::max(worst_dist, std::abs(model_dist(r.geometry, {0, 0}, p) -
                                                   model_dist(r.geometry, {0, 0}, q)));
    }
    report.add("identified images land on their paired side", worst_image, tol);
    report.add("center equidistance over " + std::to_string(samples) + " samples", worst_dist,
               tol);

    // (d) realized side lengths
    double worst_len = 0;
    for (int i = 0; i < sides; ++i)
        worst_len = std::max(worst_len, std::abs(model_dist(r.geometry, corner(i), corner(i + 1)) -
                                                 r.side_length));
    report.add("side lengths match the polygon parameter", worst_len, tol);

    // pairing endpoints map exactly
    double worst_end = 0;
    for (const auto& sp : r.pairings) {
        Pt a = sp.iso(corner(sp.source));
        Pt b = sp.iso(corner(sp.source + 1));
        Pt ta = sp.reversing ? corner(sp.target) : corner(sp.target + 1);
        Pt tb = sp.reversing ? corner(sp.target + 1) : corner(sp.target);
        worst_end = std::max({worst_end, std::abs(a - ta), std::abs(b - tb)});
    }
    report.add("pairing isometries match side endpoints", worst_end, tol);
    return report;
}

} // namespace cutloci
