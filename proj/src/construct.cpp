#include "cutloci/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cutloci {

namespace {

// Face walk over a partial scheme: only the darts listed in the rotations are
// traced. Returns the walks as dart/side steps; assumes rotations are
// structurally sound (internal use by the incremental construction).
std::vector<Face> trace_partial(const MultiGraph& g,
                                const std::vector<std::vector<int>>& rotation,
                                const std::vector<std::uint8_t>& signature) {
    std::vector<int> next(g.dart_count(), -1), prev(g.dart_count(), -1);
    std::vector<char> active(g.dart_count(), 0);
    for (const auto& rot : rotation) {
        int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) {
            next[rot[i]] = rot[(i + 1) % k];
            prev[rot[i]] = rot[(i + k - 1) % k];
            active[rot[i]] = 1;
        }
    }
    std::vector<char> visited(g.dart_count() * 2, 0);
    std::vector<Face> faces;
    for (int d = 0; d < g.dart_count(); ++d) {
        if (!active[d]) continue;
        for (int side = 0; side < 2; ++side) {
            int start = d * 2 + side;
            if (visited[start]) continue;
            Face walk;
            FaceStep f{d, side};
            do {
                visited[f.dart * 2 + f.side] = 1;
                int d2 = MultiGraph::dart_partner(f.dart);
                int s2 = f.side ^ 1 ^ signature[MultiGraph::dart_edge(f.dart)];
                visited[d2 * 2 + s2] = 1;
                walk.push_back(f);
                f = s2 == 0 ? FaceStep{next[d2], 1} : FaceStep{prev[d2], 0};
            } while (f.dart * 2 + f.side != start);
            faces.push_back(std::move(walk));
        }
    }
    if (faces.empty()) faces.push_back(Face{}); // edgeless point
    return faces;
}

int count_faces_partial(const MultiGraph& g, const std::vector<std::vector<int>>& rotation,
                        const std::vector<std::uint8_t>& signature) {
    return static_cast<int>(trace_partial(g, rotation, signature).size());
}

void insert_after(std::vector<int>& rot, int anchor, int dart) {
    if (anchor < 0) {
        rot.push_back(dart);
        return;
    }
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, dart);
}

} // namespace

EmbeddingScheme tree_strip(const MultiGraph& tree) {
    if (generating_cycle_count(tree) != 0)
        throw Error("tree_strip requires a tree (q = 0)");
    std::vector<std::vector<int>> rotation(tree.n);
    for (int v = 0; v < tree.n; ++v) rotation[v] = tree.darts_at(v);
    EmbeddingScheme s(tree, std::move(rotation),
                      std::vector<std::uint8_t>(tree.edge_count(), 0));
    return s;
}

EmbeddingScheme one_face_embedding(const MultiGraph& g) {
    SpanningTree tree = spanning_tree(g);

    std::vector<std::vector<int>> rotation(g.n);
    std::vector<std::uint8_t> signature(g.edge_count(), 0);
    for (int v = 0; v < g.n; ++v)
        for (int d : g.darts_at(v))
            if (tree.in_tree[MultiGraph::dart_edge(d)]) rotation[v].push_back(d);

    for (int e : tree.non_tree_edges) {
        // Anchor each new dart right after the first face-walk visit of its
        // endpoint; the single face visits every vertex, so a visit exists
        // whenever the vertex already carries a dart.
        auto faces = trace_partial(g, rotation, signature);
        const Face& walk = faces[0];
        int u = g.ends[e][0], v = g.ends[e][1];
        int anchor_u = -1, anchor_v = -1;
        for (const auto& step : walk) {
            int tail = g.dart_vertex(step.dart);
            if (anchor_u < 0 && tail == u) anchor_u = step.dart;
            if (tail == v && (anchor_v < 0) && (u != v || step.dart != anchor_u))
                anchor_v = step.dart;
            if (anchor_u >= 0 && anchor_v >= 0) break;
        }
        insert_after(rotation[u], anchor_u, 2 * e);
        if (u == v && anchor_v < 0) anchor_v = 2 * e; // lone corner: keep darts adjacent
        insert_after(rotation[v], anchor_v, 2 * e + 1);

        bool placed = false;
        for (int bit = 0; bit <= 1 && !placed; ++bit) {
            signature[e] = static_cast<std::uint8_t>(bit);
            placed = count_faces_partial(g, rotation, signature) == 1;
        }
        if (!placed) throw Error("internal: twisted-band insertion failed to keep one face");
    }

    EmbeddingScheme s(g, std::move(rotation), std::move(signature));
    return s;
}

namespace {

std::vector<int> normalize_cycle(std::vector<int> rot) {
    if (rot.empty()) return rot;
    auto mn = std::min_element(rot.begin(), rot.end());
    std::rotate(rot.begin(), mn, rot.end());
    return rot;
}

// Scheme fingerprint: normalized rotations then signature bits.
std::vector<int> encode(const std::vector<std::vector<int>>& rotation,
                        const std::vector<std::uint8_t>& signature) {
    std::vector<int> code;
    for (const auto& rot : rotation) {
        auto nr = normalize_cycle(rot);
        code.push_back(-1);
        code.insert(code.end(), nr.begin(), nr.end());
    }
    code.push_back(-2);
    for (auto b : signature) code.push_back(b);
    return code;
}

// Minimal fingerprint over all 2^n vertex-switch subsets.
std::vector<int> switching_canonical(const MultiGraph& g,
                                     const std::vector<std::vector<int>>& rotation,
                                     const std::vector<std::uint8_t>& signature,
                                     std::vector<std::vector<int>>* best_rot = nullptr,
                                     std::vector<std::uint8_t>* best_sig = nullptr) {
    std::vector<int> best;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        auto rot = rotation;
        auto sig = signature;
        for (int v = 0; v < g.n; ++v) {
            if (!(mask >> v & 1)) continue;
            std::reverse(rot[v].begin(), rot[v].end());
            for (int e = 0; e < g.edge_count(); ++e) {
                bool at0 = g.ends[e][0] == v, at1 = g.ends[e][1] == v;
                if (at0 != at1) sig[e] ^= 1;
            }
        }
        auto code = encode(rot, sig);
        if (best.empty() || code < best) {
            best = code;
            if (best_rot) *best_rot = rot;
            if (best_sig) *best_sig = sig;
        }
    }
    return best;
}

} // namespace

Census enumerate_cl_structures(const MultiGraph& g, unsigned long long limit) {
    auto profile = degree_profile(g);
    unsigned long long space = 1;
    bool overflow = false;
    auto mul = [&](unsigned long long k) {
        if (overflow || space > limit / std::max(1ull, k)) overflow = true;
        else space *= k;
    };
    for (int d : profile.degrees)
        for (int k = 2; k < d; ++k) mul(static_cast<unsigned long long>(k));
    for (int e = 0; e < g.edge_count(); ++e) mul(2);
    if (overflow || space > limit || g.n >= 24)
        throw Error("census search space " +
                    (overflow ? std::string("overflows") : std::to_string(space)) +
                    " (limit " + std::to_string(limit) + ")");

    Census census;
    census.search_space = space;

    // Per-vertex rotation candidates: first dart pinned, rest permuted.
    std::vector<std::vector<std::vector<int>>> vertex_rotations(g.n);
    for (int v = 0; v < g.n; ++v) {
        auto darts = g.darts_at(v);
        if (darts.size() <= 2) {
            vertex_rotations[v].push_back(darts);
            continue;
        }
        std::vector<int> rest(darts.begin() + 1, darts.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> rot{darts[0]};
            rot.insert(rot.end(), rest.begin(), rest.end());
            vertex_rotations[v].push_back(rot);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    std::map<std::vector<int>, int> seen; // canonical code -> scheme index
    std::vector<int> choice(g.n, 0);
    bool done = false;
    while (!done) {
        std::vector<std::vector<int>> rotation(g.n);
        for (int v = 0; v < g.n; ++v) rotation[v] = vertex_rotations[v][choice[v]];

        unsigned long long sig_count = 1ull << g.edge_count();
        for (unsigned long long bits = 0; bits < sig_count; ++bits) {
            std::vector<std::uint8_t> signature(g.edge_count());
            for (int e = 0; e < g.edge_count(); ++e)
                signature[e] = static_cast<std::uint8_t>(bits >> e & 1);
            if (count_faces_partial(g, rotation, signature) != 1) continue;
            ++census.one_face_total;
            std::vector<std::vector<int>> crot;
            std::vector<std::uint8_t> csig;
            auto code = switching_canonical(g, rotation, signature, &crot, &csig);
            if (seen.emplace(code, census.schemes.size()).second) {
                EmbeddingScheme s(g, std::move(crot), std::move(csig));
                census.companions.push_back(companion_function(s));
                census.schemes.push_back(std::move(s));
            }
        }

        // Odometer over vertex rotation choices.
        done = true;
        for (int v = 0; v < g.n; ++v) {
            if (++choice[v] < static_cast<int>(vertex_rotations[v].size())) {
                done = false;
                break;
            }
            choice[v] = 0;
        }
    }

    // Group by companion equivalence (Definition-level, per block).
    std::vector<int> cls(census.schemes.size(), -1);
    for (std::size_t i = 0; i < census.schemes.size(); ++i) {
        if (cls[i] != -1) continue;
        cls[i] = static_cast<int>(census.equivalence_classes.size());
        census.equivalence_classes.push_back({static_cast<int>(i)});
        for (std::size_t j = i + 1; j < census.schemes.size(); ++j) {
            if (cls[j] == -1 && equivalent(census.companions[i], census.companions[j], g)) {
                cls[j] = cls[i];
                census.equivalence_classes[cls[i]].push_back(static_cast<int>(j));
            }
        }
    }
    return census;
}

CubicResolution cubic_resolution(const MultiGraph& g) {
    auto profile = degree_profile(g);
    for (int v = 0; v < g.n; ++v)
        if (profile.degrees[v] < 3)
            throw Error("cubic_resolution needs minimum degree 3; take cyclic_part first");

    CubicResolution out;
    std::vector<std::vector<int>> dart_owner(g.dart_count()); // unused slots
    std::vector<int> dart_new_vertex(g.dart_count(), -1);
    int nv = 0;
    std::vector<std::array<int, 2>> path_edges;

    for (int v = 0; v < g.n; ++v) {
        auto darts = g.darts_at(v);
        int d = static_cast<int>(darts.size());
        if (d == 3) {
            for (int dart : darts) dart_new_vertex[dart] = nv;
            out.vertex_origin.push_back(v);
            ++nv;
            continue;
        }
        // Caterpillar: w_0..w_{d-3}; endpoints take two original darts each.
        int internal = d - 2;
        int base = nv;
        for (int i = 0; i < internal; ++i) out.vertex_origin.push_back(v);
        nv += internal;
        for (int i = 0; i + 1 < internal; ++i) path_edges.push_back({base + i, base + i + 1});
        dart_new_vertex[darts[0]] = base;
        dart_new_vertex[darts[1]] = base;
        for (int i = 2; i < d - 2; ++i) dart_new_vertex[darts[i]] = base + (i - 1);
        dart_new_vertex[darts[d - 2]] = base + internal - 1;
        dart_new_vertex[darts[d - 1]] = base + internal - 1;
    }

    std::vector<std::array<int, 2>> ends;
    std::vector<double> lengths;
    for (int e = 0; e < g.edge_count(); ++e) {
        ends.push_back({dart_new_vertex[2 * e], dart_new_vertex[2 * e + 1]});
        if (g.is_metric()) lengths.push_back(g.lengths[e]);
    }
    int first_inserted = static_cast<int>(ends.size());
    for (auto& pe : path_edges) {
        ends.push_back(pe);
        if (g.is_metric()) lengths.push_back(1.0); // nominal length for inserted tree edges
    }
    out.graph = MultiGraph(nv, std::move(ends), std::move(lengths));
    for (std::size_t i = 0; i < path_edges.size(); ++i)
        out.inserted_edges.push_back(first_inserted + static_cast<int>(i));
    return out;
}

} // namespace cutloci
