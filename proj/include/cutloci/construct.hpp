#pragma once

#include "cutloci/ribbon.hpp"

#include <cstdint>
#include <vector>

namespace cutloci {

/// Strip of a tree: any rotation with zero signature has exactly one face.
/// Throws Error if the input has a cycle.
EmbeddingScheme tree_strip(const MultiGraph& tree);

/// Builds a one-face scheme on any connected multigraph: a spanning-tree strip
/// grown by inserting the non-tree edges one at a time, each placed at the
/// first face-walk visit of its endpoints with the signature that keeps the
/// face count at 1. The result always satisfies is_cl_structure.
EmbeddingScheme one_face_embedding(const MultiGraph& g);

/// Census of one-face schemes, reported modulo vertex switching.
struct Census {
    /// Canonical representative of each switching class.
    std::vector<EmbeddingScheme> schemes;
    /// Companion function of each representative.
    std::vector<CompanionFunction> companions;
    /// Groups of scheme indices whose companion functions are equivalent.
    std::vector<std::vector<int>> equivalence_classes;
    unsigned long long search_space = 0;
    unsigned long long one_face_total = 0; // before switching reduction
};

/// Exhaustive search over all (rotation, signature) pairs. Throws Error when
/// the search space prod (deg(v)-1)! * 2^m exceeds the limit.
Census enumerate_cl_structures(const MultiGraph& g, unsigned long long limit = 2'000'000);

/// Blow-up of every vertex of degree d > 3 into a caterpillar of d-2 cubic
/// vertices. inserted_edges are the caterpillar path edges; contracting them
/// recovers the input.
struct CubicResolution {
    MultiGraph graph;
    std::vector<int> inserted_edges;
    std::vector<int> vertex_origin; // new vertex -> original vertex
};

/// Requires minimum degree 3 (take the cyclic part first otherwise).
CubicResolution cubic_resolution(const MultiGraph& g);

} // namespace cutloci
