#include "cutloci/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cutloci {

namespace {

void check_connected(const MultiGraph& g) {
    if (g.n <= 0) throw Error("graph must have at least one vertex");
    std::vector<char> seen(g.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e = 0; e < g.edge_count(); ++e) {
            for (int side = 0; side < 2; ++side) {
                if (g.ends[e][side] == v) {
                    int w = g.ends[e][side ^ 1];
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    if (reached != g.n) throw Error("graph is not connected");
}

} // namespace

MultiGraph::MultiGraph(int vertex_count, std::vector<std::array<int, 2>> edge_ends,
                       std::vector<double> edge_lengths)
    : n(vertex_count), ends(std::move(edge_ends)), lengths(std::move(edge_lengths)) {
    for (const auto& e : ends)
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n)
            throw Error("edge endpoint out of range");
    if (!lengths.empty()) {
        if (lengths.size() != ends.size())
            throw Error("length list does not match edge list");
        for (double l : lengths)
            if (!(l > 0)) throw Error("edge lengths must be strictly positive");
    }
    check_connected(*this);
}

int MultiGraph::degree(int vertex) const {
    int d = 0;
    for (const auto& e : ends) d += (e[0] == vertex) + (e[1] == vertex);
    return d;
}

std::vector<int> MultiGraph::darts_at(int vertex) const {
    std::vector<int> out;
    for (int dart = 0; dart < dart_count(); ++dart)
        if (dart_vertex(dart) == vertex) out.push_back(dart);
    return out;
}

double MultiGraph::total_length() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0.0);
}

namespace {

// Mutable surgery view: darts carry explicit partners so degree-2 smoothing
// can re-partner them without reindexing edges mid-pass.
struct Surgery {
    std::vector<int> dart_vertex;  // -1 = dead dart
    std::vector<int> partner;
    std::vector<std::vector<int>> trail; // original edges merged into the dart's edge
    std::vector<double> length;          // per dart, same value on both partners
    std::vector<char> vertex_alive;
    bool metric;

    explicit Surgery(const MultiGraph& g)
        : dart_vertex(g.dart_count()), partner(g.dart_count()),
          trail(g.dart_count()), length(g.dart_count(), 0.0),
          vertex_alive(g.n, 1), metric(g.is_metric()) {
        for (int d = 0; d < g.dart_count(); ++d) {
            dart_vertex[d] = g.dart_vertex(d);
            partner[d] = MultiGraph::dart_partner(d);
            trail[d] = {MultiGraph::dart_edge(d)};
            if (metric) length[d] = g.lengths[MultiGraph::dart_edge(d)];
        }
    }

    int degree(int v) const {
        int d = 0;
        for (int x : dart_vertex) d += (x == v);
        return d;
    }

    std::vector<int> darts_at(int v) const {
        std::vector<int> out;
        for (int d = 0; d < static_cast<int>(dart_vertex.size()); ++d)
            if (dart_vertex[d] == v) out.push_back(d);
        return out;
    }

    void kill_edge(int dart) {
        dart_vertex[dart] = -1;
        dart_vertex[partner[dart]] = -1;
    }
};

} // namespace

CyclicPart cyclic_part(const MultiGraph& g) {
    Surgery s(g);

    // Phase 1: peel pendant vertices until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!s.vertex_alive[v] || s.degree(v) != 1) continue;
            int d = s.darts_at(v)[0];
            s.kill_edge(d);
            s.vertex_alive[v] = 0;
            changed = true;
        }
    }

    int alive = std::count(s.vertex_alive.begin(), s.vertex_alive.end(), 1);
    int live_darts = 0;
    for (int x : s.dart_vertex) live_darts += (x >= 0);

    if (live_darts == 0) {
        // Forest: everything peeled except possibly one survivor; collapse to a point.
        CyclicPart out;
        out.graph = MultiGraph(1, {});
        out.vertex_image.assign(g.n, 0);
        return out;
    }
    (void)alive;

    // Phase 2: smooth degree-2 vertices whose two darts belong to distinct edges.
    changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!s.vertex_alive[v] || s.degree(v) != 2) continue;
            auto at = s.darts_at(v);
            int d1 = at[0], d2 = at[1];
            if (s.partner[d1] == d2) continue; // lone loop-vertex, keep
            int p1 = s.partner[d1], p2 = s.partner[d2];
            // Merge: p1 and p2 become partners; trail runs p1-side edges then d2's.
            std::vector<int> merged = s.trail[p1];
            merged.insert(merged.end(), s.trail[d2].begin(), s.trail[d2].end());
            double len = s.length[d1] + s.length[d2];
            s.partner[p1] = p2;
            s.partner[p2] = p1;
            s.trail[p1] = merged;
            std::vector<int> rev(merged.rbegin(), merged.rend());
            s.trail[p2] = rev;
            s.length[p1] = s.length[p2] = len;
            s.dart_vertex[d1] = s.dart_vertex[d2] = -1;
            s.vertex_alive[v] = 0;
            changed = true;
        }
    }

    // Compact into a fresh MultiGraph.
    CyclicPart out;
    std::vector<int> vmap(g.n, -1);
    int nv = 0;
    for (int v = 0; v < g.n; ++v)
        if (s.vertex_alive[v]) vmap[v] = nv++;

    std::vector<std::array<int, 2>> new_ends;
    std::vector<double> new_lengths;
    std::vector<char> dart_done(s.dart_vertex.size(), 0);
    for (int d = 0; d < static_cast<int>(s.dart_vertex.size()); ++d) {
        if (s.dart_vertex[d] < 0 || dart_done[d]) continue;
        int p = s.partner[d];
        dart_done[d] = dart_done[p] = 1;
        new_ends.push_back({vmap[s.dart_vertex[d]], vmap[s.dart_vertex[p]]});
        if (s.metric) new_lengths.push_back(s.length[d]);
        out.edge_paths.push_back(s.trail[d]);
    }
    out.graph = MultiGraph(nv, std::move(new_ends), std::move(new_lengths));
    out.vertex_image = std::move(vmap);
    return out;
}

int generating_cycle_count(const MultiGraph& g) {
    return g.edge_count() - g.vertex_count() + 1;
}

std::vector<int> DegreeProfile::sorted() const {
    auto s = degrees;
    std::sort(s.begin(), s.end());
    return s;
}

DegreeProfile degree_profile(const MultiGraph& g) {
    DegreeProfile p;
    p.degrees.assign(g.n, 0);
    for (const auto& e : g.ends) {
        p.degrees[e[0]]++;
        p.degrees[e[1]]++;
    }
    p.is_cubic = !p.degrees.empty() &&
                 std::all_of(p.degrees.begin(), p.degrees.end(), [](int d) { return d == 3; });
    if (std::adjacent_find(p.degrees.begin(), p.degrees.end(), std::not_equal_to<>()) ==
        p.degrees.end())
        p.constant_order = p.degrees.empty() ? 0 : p.degrees[0];
    return p;
}

namespace {

struct BlockFinder {
    const MultiGraph& g;
    std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (edge, other end)
    std::vector<int> disc, low;
    std::vector<char> edge_seen;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockFinder(const MultiGraph& graph) : g(graph) {
        adj.resize(g.n);
        disc.assign(g.n, 0);
        low.assign(g.n, 0);
        edge_seen.assign(g.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.is_loop(e)) {
                blocks.push_back({e});
                edge_seen[e] = 1;
                continue;
            }
            adj[g.ends[e][0]].push_back({e, g.ends[e][1]});
            adj[g.ends[e][1]].push_back({e, g.ends[e][0]});
        }
    }

    void dfs(int u) {
        disc[u] = low[u] = ++timer;
        for (auto [e, w] : adj[u]) {
            if (edge_seen[e]) continue;
            edge_seen[e] = 1;
            edge_stack.push_back(e);
            if (!disc[w]) {
                dfs(w);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<int> block;
                    int top;
                    do {
                        top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                    } while (top != e);
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

} // namespace

std::vector<std::vector<int>> two_connected_components(const MultiGraph& g) {
    BlockFinder f(g);
    for (int v = 0; v < g.n; ++v)
        if (!f.disc[v]) f.dfs(v);
    std::sort(f.blocks.begin(), f.blocks.end());
    return f.blocks;
}

SpanningTree spanning_tree(const MultiGraph& g) {
    SpanningTree t;
    t.in_tree.assign(g.edge_count(), 0);
    std::vector<char> seen(g.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e = 0; e < g.edge_count(); ++e) {
            for (int side = 0; side < 2; ++side) {
                if (g.ends[e][side] != v) continue;
                int w = g.ends[e][side ^ 1];
                if (!seen[w]) {
                    seen[w] = 1;
                    t.in_tree[e] = 1;
                    t.tree_edges.push_back(e);
                    queue.push_back(w);
                }
            }
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!t.in_tree[e]) t.non_tree_edges.push_back(e);
    return t;
}

std::pair<MultiGraph, std::vector<int>> contract_edges(const MultiGraph& g,
                                                       const std::vector<int>& edges) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> contracted(g.edge_count(), 0);
    for (int e : edges) {
        contracted[e] = 1;
        int a = find(g.ends[e][0]), b = find(g.ends[e][1]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> vmap(g.n, -1);
    int nv = 0;
    for (int v = 0; v < g.n; ++v)
        if (find(v) == v) vmap[v] = nv++;
    for (int v = 0; v < g.n; ++v) vmap[v] = vmap[find(v)];

    std::vector<std::array<int, 2>> new_ends;
    std::vector<double> new_lengths;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (contracted[e]) continue;
        new_ends.push_back({vmap[g.ends[e][0]], vmap[g.ends[e][1]]});
        if (g.is_metric()) new_lengths.push_back(g.lengths[e]);
    }
    return {MultiGraph(nv, std::move(new_ends), std::move(new_lengths)), vmap};
}

namespace {

struct IsoState {
    const MultiGraph &a, &b;
    bool respect_lengths;
    std::vector<int> map;  // a-vertex -> b-vertex or -1
    std::vector<char> used;

    // Multiset of (multiplicity-of-pair) checks done incrementally via full compare.
    bool adjacency_consistent() const {
        // Compare edge multisets restricted to mapped vertices.
        std::map<std::pair<int, int>, std::vector<double>> ea, eb;
        for (int e = 0; e < a.edge_count(); ++e) {
            int u = map[a.ends[e][0]], v = map[a.ends[e][1]];
            if (u < 0 || v < 0) continue;
            auto key = std::minmax(u, v);
            ea[{key.first, key.second}].push_back(respect_lengths && a.is_metric()
                                                      ? a.lengths[e]
                                                      : 1.0);
        }
        std::vector<char> mapped_b(b.n, 0);
        for (int v = 0; v < a.n; ++v)
            if (map[v] >= 0) mapped_b[map[v]] = 1;
        for (int e = 0; e < b.edge_count(); ++e) {
            int u = b.ends[e][0], v = b.ends[e][1];
            if (!mapped_b[u] || !mapped_b[v]) continue;
            auto key = std::minmax(u, v);
            eb[{key.first, key.second}].push_back(respect_lengths && b.is_metric()
                                                      ? b.lengths[e]
                                                      : 1.0);
        }
        if (ea.size() != eb.size()) return false;
        for (auto& [k, va] : ea) {
            auto it = eb.find(k);
            if (it == eb.end() || it->second.size() != va.size()) return false;
            auto vb = it->second;
            std::sort(va.begin(), va.end());
            std::sort(vb.begin(), vb.end());
            for (size_t i = 0; i < va.size(); ++i)
                if (std::abs(va[i] - vb[i]) > 1e-12) return false;
        }
        return true;
    }

    bool extend(int v, const std::vector<int>& deg_a, const std::vector<int>& deg_b) {
        if (v == a.n) return true;
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || deg_a[v] != deg_b[w]) continue;
            map[v] = w;
            used[w] = 1;
            if (adjacency_consistent() && extend(v + 1, deg_a, deg_b)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

} // namespace

bool isomorphic(const MultiGraph& a, const MultiGraph& b, bool respect_lengths) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    auto da = degree_profile(a).sorted();
    auto db = degree_profile(b).sorted();
    if (da != db) return false;
    IsoState st{a, b, respect_lengths, std::vector<int>(a.n, -1), std::vector<char>(b.n, 0)};
    return st.extend(0, degree_profile(a).degrees, degree_profile(b).degrees);
}

} // namespace cutloci
