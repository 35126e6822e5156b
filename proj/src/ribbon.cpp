#include "cutloci/ribbon.hpp"

#include <algorithm>

namespace cutloci {

EmbeddingScheme::EmbeddingScheme(MultiGraph g, std::vector<std::vector<int>> rot,
                                 std::vector<std::uint8_t> sig)
    : base(std::move(g)), rotation(std::move(rot)), signature(std::move(sig)) {
    validate();
}

void EmbeddingScheme::validate() const {
    if (static_cast<int>(rotation.size()) != base.n)
        throw Error("rotation list does not cover every vertex");
    if (static_cast<int>(signature.size()) != base.edge_count())
        throw Error("signature must assign a bit to every edge");
    std::vector<int> owner(base.dart_count(), -1);
    for (int v = 0; v < base.n; ++v) {
        for (int d : rotation[v]) {
            if (d < 0 || d >= base.dart_count())
                throw Error("rotation refers to an unknown dart");
            if (base.dart_vertex(d) != v)
                throw Error("rotation at a vertex lists a dart of another vertex");
            if (owner[d] != -1) throw Error("dart appears twice in the rotation system");
            owner[d] = v;
        }
    }
    for (int d = 0; d < base.dart_count(); ++d)
        if (owner[d] == -1) throw Error("dart missing from the rotation system");
}

namespace {

// Flag trace tables: rot_next/rot_prev give the cyclic successor/predecessor
// of a dart inside its vertex rotation.
struct TraceTables {
    std::vector<int> next, prev;

    explicit TraceTables(const EmbeddingScheme& s)
        : next(s.base.dart_count()), prev(s.base.dart_count()) {
        for (const auto& rot : s.rotation) {
            int k = static_cast<int>(rot.size());
            for (int i = 0; i < k; ++i) {
                next[rot[i]] = rot[(i + 1) % k];
                prev[rot[i]] = rot[(i + k - 1) % k];
            }
        }
    }
};

inline int flag_id(int dart, int side) { return dart * 2 + side; }

} // namespace

std::vector<Face> face_trace(const EmbeddingScheme& s) {
    s.validate();
    const MultiGraph& g = s.base;
    if (g.edge_count() == 0) {
        if (g.n != 1) throw Error("edgeless scheme must be a single point");
        return {Face{}};
    }

    TraceTables t(s);
    auto cross = [&](int dart, int side) -> FaceStep {
        // s0: continue along the edge band to the partner dart; an untwisted
        // band swaps the side, a twisted one keeps it.
        int d2 = MultiGraph::dart_partner(dart);
        int side2 = side ^ 1 ^ s.signature[MultiGraph::dart_edge(dart)];
        return {d2, side2};
    };
    auto corner = [&](FaceStep f) -> FaceStep {
        // s1: pivot through the corner at the dart's vertex.
        return f.side == 0 ? FaceStep{t.next[f.dart], 1} : FaceStep{t.prev[f.dart], 0};
    };

    std::vector<char> visited(g.dart_count() * 2, 0);
    std::vector<Face> faces;
    for (int start = 0; start < g.dart_count() * 2; ++start) {
        if (visited[start]) continue;
        Face walk;
        FaceStep f{start / 2, start % 2};
        do {
            visited[flag_id(f.dart, f.side)] = 1;
            FaceStep mirror = cross(f.dart, f.side);
            visited[flag_id(mirror.dart, mirror.side)] = 1;
            walk.push_back(f);
            f = corner(mirror);
        } while (flag_id(f.dart, f.side) != start);
        faces.push_back(std::move(walk));
    }

    std::size_t total = 0;
    for (const auto& w : faces) total += w.size();
    if (total != static_cast<std::size_t>(2 * g.edge_count()))
        throw Error("face trace lost or duplicated an edge side");
    return faces;
}

int face_count(const EmbeddingScheme& s) { return static_cast<int>(face_trace(s).size()); }

bool is_cl_structure(const EmbeddingScheme& s) { return face_count(s) == 1; }

SurfaceInvariants surface_invariants(const EmbeddingScheme& s) {
    SurfaceInvariants inv{};
    inv.faces = face_count(s);
    inv.euler_characteristic = s.base.n - s.base.edge_count() + inv.faces;

    // Orientable iff the signature is switching-equivalent to all-zero:
    // propagate a local-orientation bit over a spanning tree and check that
    // every non-tree edge closes an even cycle. Twisted loops are odd cycles.
    const MultiGraph& g = s.base;
    inv.orientable = true;
    SpanningTree tree = spanning_tree(g);
    std::vector<int> pot(g.n, -1);
    pot[0] = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e : tree.tree_edges) {
            int a = g.ends[e][0], b = g.ends[e][1];
            if (pot[a] >= 0 && pot[b] < 0) {
                pot[b] = pot[a] ^ s.signature[e];
                grew = true;
            } else if (pot[b] >= 0 && pot[a] < 0) {
                pot[a] = pot[b] ^ s.signature[e];
                grew = true;
            }
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (tree.in_tree[e]) continue;
        int a = g.ends[e][0], b = g.ends[e][1];
        if ((pot[a] ^ pot[b] ^ s.signature[e]) != 0) {
            inv.orientable = false;
            break;
        }
    }
    inv.genus = inv.orientable ? (2 - inv.euler_characteristic) / 2
                               : 2 - inv.euler_characteristic;
    return inv;
}

std::vector<int> boundary_walk(const EmbeddingScheme& s) {
    auto faces = face_trace(s);
    if (faces.size() != 1)
        throw Error("not a strip: scheme has " + std::to_string(faces.size()) + " faces");
    std::vector<int> walk;
    walk.reserve(faces[0].size());
    for (const auto& step : faces[0]) walk.push_back(step.dart);
    return walk;
}

void switch_vertex(EmbeddingScheme& s, int v) {
    std::reverse(s.rotation[v].begin(), s.rotation[v].end());
    for (int e = 0; e < s.base.edge_count(); ++e) {
        bool at0 = s.base.ends[e][0] == v, at1 = s.base.ends[e][1] == v;
        if (at0 != at1) s.signature[e] ^= 1;
    }
}

StripDecomposition StripDecomposition::canonical(const EmbeddingScheme& s) {
    StripDecomposition d;
    d.scheme = &s;
    d.vertex_face.assign(s.base.n, 0);
    d.edge_face.assign(s.base.edge_count(), 0);
    d.attach.assign(s.base.dart_count(), 0);
    for (int e = 0; e < s.base.edge_count(); ++e) d.attach[2 * e + 1] = s.signature[e];
    return d;
}

void StripDecomposition::flip_vertex_face(int v) {
    vertex_face[v] ^= 1;
    for (int d = 0; d < scheme->base.dart_count(); ++d)
        if (scheme->base.dart_vertex(d) == v) attach[d] ^= 1;
}

void StripDecomposition::flip_edge_face(int e) {
    edge_face[e] ^= 1;
    attach[2 * e] ^= 1;
    attach[2 * e + 1] ^= 1;
}

bool StripDecomposition::invariant_holds() const {
    for (int e = 0; e < scheme->base.edge_count(); ++e) {
        int v = scheme->base.ends[e][0], w = scheme->base.ends[e][1];
        int lhs = attach[2 * e] ^ attach[2 * e + 1] ^ vertex_face[v] ^ vertex_face[w];
        if (lhs != scheme->signature[e]) return false;
    }
    return true;
}

CompanionFunction companion_function(const StripDecomposition& d) {
    CompanionFunction f;
    int m = d.scheme->base.edge_count();
    f.values.resize(m);
    for (int e = 0; e < m; ++e) f.values[e] = d.attach[2 * e] ^ d.attach[2 * e + 1];
    return f;
}

CompanionFunction companion_function(const EmbeddingScheme& s) {
    return companion_function(StripDecomposition::canonical(s));
}

bool equivalent(const CompanionFunction& a, const CompanionFunction& b, const MultiGraph& g) {
    if (a.values.size() != b.values.size() ||
        a.values.size() != static_cast<std::size_t>(g.edge_count()))
        throw Error("companion functions must share the graph's edge set");
    for (const auto& block : two_connected_components(g)) {
        bool all_equal = true, all_flipped = true;
        for (int e : block) {
            if (a.values[e] != b.values[e]) all_equal = false;
            if (a.values[e] == b.values[e]) all_flipped = false;
        }
        if (!all_equal && !all_flipped) return false;
    }
    return true;
}

} // namespace cutloci
