#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutloci {

/// Domain error thrown by graph and geometry operations.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Finite connected multigraph with loops and parallel edges, stored as darts.
///
/// Edge e owns darts 2e ("e+") and 2e+1 ("e-"); the partner of dart d is d^1.
/// ends[e][0] / ends[e][1] are the vertices holding dart 2e / 2e+1; a loop has
/// ends[e][0] == ends[e][1]. Vertices are 0..n-1. lengths is empty for a purely
/// combinatorial graph, otherwise one positive length per edge.
struct MultiGraph {
    int n = 0;
    std::vector<std::array<int, 2>> ends;
    std::vector<double> lengths;

    MultiGraph() = default;
    MultiGraph(int vertex_count, std::vector<std::array<int, 2>> edge_ends,
               std::vector<double> edge_lengths = {});

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(ends.size()); }
    int dart_count() const { return 2 * edge_count(); }

    int dart_vertex(int dart) const { return ends[dart >> 1][dart & 1]; }
    static int dart_edge(int dart) { return dart >> 1; }
    static int dart_partner(int dart) { return dart ^ 1; }
    bool is_loop(int edge) const { return ends[edge][0] == ends[edge][1]; }
    bool is_metric() const { return !lengths.empty(); }

    int degree(int vertex) const;
    /// Darts owned by a vertex, in edge-index order (dart 2e before 2e+1).
    std::vector<int> darts_at(int vertex) const;
    double total_length() const;
};

/// Result of contracting a graph to its cyclic part. vertex_image maps an
/// original vertex to its vertex in the cyclic part, or -1 if it was deleted
/// or smoothed away. edge_paths lists, for each cyclic-part edge, the original
/// edges merged into it, in path order.
struct CyclicPart {
    MultiGraph graph;
    std::vector<int> vertex_image;
    std::vector<std::vector<int>> edge_paths;
};

/// Deletes pendant vertices until none remain, then smooths every remaining
/// degree-2 vertex by merging its incident edges (lengths add). A forest
/// collapses to a single point; a cycle becomes one vertex with a loop.
CyclicPart cyclic_part(const MultiGraph& g);

/// q = m - n + 1 for a connected graph.
int generating_cycle_count(const MultiGraph& g);

struct DegreeProfile {
    std::vector<int> degrees;
    bool is_cubic = false;
    std::optional<int> constant_order;
    /// Sorted degree multiset, for comparisons across graphs.
    std::vector<int> sorted() const;
};

DegreeProfile degree_profile(const MultiGraph& g);

/// Block decomposition: every edge in exactly one block, loops alone in theirs.
std::vector<std::vector<int>> two_connected_components(const MultiGraph& g);

struct SpanningTree {
    std::vector<int> tree_edges;     // n-1 edges, in discovery order
    std::vector<int> non_tree_edges; // q edges, in index order
    std::vector<char> in_tree;       // per-edge flag
};

/// Deterministic BFS spanning tree; ties broken by edge index.
SpanningTree spanning_tree(const MultiGraph& g);

/// Contracts the given edges (loops among them are simply deleted).
/// Returns the quotient graph and the vertex map old -> new.
std::pair<MultiGraph, std::vector<int>> contract_edges(const MultiGraph& g,
                                                       const std::vector<int>& edges);

/// Backtracking multigraph isomorphism for small graphs (n <= ~12).
/// Compares loop/parallel multiplicities; lengths are compared when
/// respect_lengths is set and both graphs are metric.
bool isomorphic(const MultiGraph& a, const MultiGraph& b, bool respect_lengths = false);

} // namespace cutloci
