#pragma once

#include "cutloci/multigraph.hpp"

#include <cstdint>
#include <vector>

namespace cutloci {

/// One step of a facial walk: the dart being traversed and the side flag of
/// the two-sided trace (0/1).
struct FaceStep {
    int dart;
    int side;
    bool operator==(const FaceStep&) const = default;
};

using Face = std::vector<FaceStep>;

/// Rotation system plus Z2 edge signature. rotation[v] lists the darts at v in
/// cyclic order; signature[e] = 1 marks a twisted edge-band. Together these
/// determine a (possibly non-orientable) embedding of the base graph.
struct EmbeddingScheme {
    MultiGraph base;
    std::vector<std::vector<int>> rotation;
    std::vector<std::uint8_t> signature;

    EmbeddingScheme() = default;
    EmbeddingScheme(MultiGraph g, std::vector<std::vector<int>> rot,
                    std::vector<std::uint8_t> sig);

    /// Throws Error on missing/duplicate darts or bad signature size.
    void validate() const;
};

/// Traces all faces of the scheme. Every (dart, side) incidence lands in
/// exactly one face; across all faces every edge is traversed exactly twice.
/// A single vertex with no edges yields one empty face (the disk).
std::vector<Face> face_trace(const EmbeddingScheme& s);

int face_count(const EmbeddingScheme& s);

/// True iff the scheme has exactly one face, i.e. it is the combinatorial form
/// of a strip whose boundary is a single circle.
bool is_cl_structure(const EmbeddingScheme& s);

struct SurfaceInvariants {
    int faces;
    int euler_characteristic;
    bool orientable;
    int genus; // orientable genus, or crosscap number when non-orientable
};

SurfaceInvariants surface_invariants(const EmbeddingScheme& s);

/// The single face of a CL-structure, projected to the base graph: a closed
/// walk of 2m darts in which every edge appears exactly twice and every vertex
/// v appears deg(v) times. Throws Error if the face count differs from 1.
std::vector<int> boundary_walk(const EmbeddingScheme& s);

/// Reverses the rotation at v and flips the signature of every non-loop edge
/// at v. Preserves the face count.
void switch_vertex(EmbeddingScheme& s, int v);

/// Map E -> Z2; the per-edge switch extracted from a strip decomposition.
struct CompanionFunction {
    std::vector<std::uint8_t> values;
    bool operator==(const CompanionFunction&) const = default;
};

/// Elementary-strip decomposition bookkeeping: a distinguished-face label for
/// each point-strip and edge-strip, and an agreement bit per dart (incidence).
/// Invariant: attach(d) ^ attach(d') ^ vertex_face(v) ^ vertex_face(v') equals
/// the scheme signature of the edge, i.e. the attach bits XOR to the signature
/// once all distinguished faces are normalized to 0.
struct StripDecomposition {
    const EmbeddingScheme* scheme = nullptr;
    std::vector<std::uint8_t> vertex_face;
    std::vector<std::uint8_t> edge_face;
    std::vector<std::uint8_t> attach;

    /// Canonical decomposition: all distinguished faces 0, attach bits 0 on
    /// the "+" dart and equal to the signature on the "-" dart.
    static StripDecomposition canonical(const EmbeddingScheme& s);

    void flip_vertex_face(int v);
    void flip_edge_face(int e);
    bool invariant_holds() const;
};

CompanionFunction companion_function(const StripDecomposition& d);

/// Companion function of a scheme under the canonical decomposition (equals
/// the signature).
CompanionFunction companion_function(const EmbeddingScheme& s);

/// Equivalence of companion functions: on every 2-connected component the
/// restrictions agree either exactly or after complementing every bit.
bool equivalent(const CompanionFunction& a, const CompanionFunction& b, const MultiGraph& g);

} // namespace cutloci
