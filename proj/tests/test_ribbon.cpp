#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutloci/construct.hpp"
#include "cutloci/ribbon.hpp"
#include "corpus.hpp"
#include "graphs.hpp"

#include <random>

using namespace cutloci;
namespace tg = testgraphs;

namespace {

EmbeddingScheme scheme_with(const MultiGraph& g, std::vector<std::uint8_t> sig) {
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v) rot[v] = g.darts_at(v);
    return EmbeddingScheme(g, std::move(rot), std::move(sig));
}

} // namespace

TEST_CASE("face counts on the hand-traced schemes") {
    // 3-cycle, all signatures 0: annulus picture, two faces
    CHECK(face_count(scheme_with(tg::cycle(3), {0, 0, 0})) == 2);
    // one twisted edge: Mobius band, one face
    CHECK(face_count(scheme_with(tg::cycle(3), {1, 0, 0})) == 1);
    CHECK(face_count(scheme_with(tg::cycle(3), {1, 1, 1})) == 1);
    CHECK(face_count(scheme_with(tg::cycle(3), {1, 1, 0})) == 2);

    // rose with two loops, interleaved rotation = torus square, one face
    auto rose = tg::rose(2);
    EmbeddingScheme torus(rose, {{0, 2, 1, 3}}, {0, 0});
    CHECK(face_count(torus) == 1);
    // nested rotation, untwisted: sphere, three faces
    EmbeddingScheme nested(rose, {{0, 1, 2, 3}}, {0, 0});
    CHECK(face_count(nested) == 3);

    // single loop: planar = 2 faces, twisted = 1 face
    CHECK(face_count(scheme_with(tg::rose(1), {0})) == 2);
    CHECK(face_count(scheme_with(tg::rose(1), {1})) == 1);

    // a single edge bounds a disk
    auto edge = tg::path(2);
    auto faces = face_trace(scheme_with(edge, {0}));
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].size() == 2);
}

TEST_CASE("edgeless point traces one empty face") {
    auto faces = face_trace(scheme_with(tg::point(), {}));
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].empty());
    CHECK(is_cl_structure(scheme_with(tg::point(), {})));
}

TEST_CASE("face trace covers every edge exactly twice") {
    std::mt19937 rng(7);
    testcorpus::for_each_connected(4, [&](const MultiGraph& g) {
        std::vector<std::vector<int>> rot(g.n);
        for (int v = 0; v < g.n; ++v) {
            rot[v] = g.darts_at(v);
            std::shuffle(rot[v].begin(), rot[v].end(), rng);
        }
        std::vector<std::uint8_t> sig(g.edge_count());
        for (auto& b : sig) b = rng() & 1;
        auto faces = face_trace(EmbeddingScheme(g, rot, sig));
        std::vector<int> edge_visits(g.edge_count(), 0);
        for (auto& f : faces)
            for (auto& step : f) edge_visits[MultiGraph::dart_edge(step.dart)]++;
        for (int c : edge_visits) CHECK(c == 2);
    });
}

TEST_CASE("face count is invariant under rotation re-rooting and vertex switching") {
    std::mt19937 rng(11);
    testcorpus::for_each_connected(3, [&](const MultiGraph& g) {
        std::vector<std::vector<int>> rot(g.n);
        for (int v = 0; v < g.n; ++v) {
            rot[v] = g.darts_at(v);
            std::shuffle(rot[v].begin(), rot[v].end(), rng);
        }
        std::vector<std::uint8_t> sig(g.edge_count());
        for (auto& b : sig) b = rng() & 1;
        EmbeddingScheme s(g, rot, sig);
        int f = face_count(s);

        // re-root the cyclic order at each vertex
        auto rot2 = rot;
        for (auto& r : rot2)
            if (!r.empty()) std::rotate(r.begin(), r.begin() + (rng() % r.size()), r.end());
        CHECK(face_count(EmbeddingScheme(g, rot2, sig)) == f);

        // switching any vertex preserves faces and chi
        for (int v = 0; v < g.n; ++v) {
            EmbeddingScheme sw = s;
            switch_vertex(sw, v);
            CHECK(face_count(sw) == f);
        }
    });
}

TEST_CASE("rotation validation errors") {
    auto g = tg::theta();
    std::vector<std::vector<int>> missing{{0, 2}, {1, 3, 5}}; // dart 4 missing
    CHECK_THROWS_AS(EmbeddingScheme(g, missing, {0, 0, 0}), Error);
    std::vector<std::vector<int>> dup{{0, 2, 4, 4}, {1, 3, 5}};
    CHECK_THROWS_AS(EmbeddingScheme(g, dup, {0, 0, 0}), Error);
    std::vector<std::vector<int>> wrong{{0, 2, 1}, {4, 3, 5}}; // dart 1 lives at vertex 1
    CHECK_THROWS_AS(EmbeddingScheme(g, wrong, {0, 0, 0}), Error);
    std::vector<std::vector<int>> ok{{0, 2, 4}, {1, 3, 5}};
    CHECK_THROWS_AS(EmbeddingScheme(g, ok, {0, 0}), Error); // signature size
}

TEST_CASE("surface invariants") {
    EmbeddingScheme torus(tg::rose(2), {{0, 2, 1, 3}}, {0, 0});
    auto ti = surface_invariants(torus);
    CHECK(ti.euler_characteristic == 0);
    CHECK(ti.orientable);
    CHECK(ti.genus == 1);

    auto mobius = scheme_with(tg::cycle(3), {1, 0, 0});
    auto mi = surface_invariants(mobius);
    CHECK(mi.euler_characteristic == 1);
    CHECK_FALSE(mi.orientable);
    CHECK(mi.genus == 1); // projective plane once capped

    auto planar = scheme_with(tg::cycle(3), {0, 0, 0});
    auto pi = surface_invariants(planar);
    CHECK(pi.euler_characteristic == 2);
    CHECK(pi.orientable);
    CHECK(pi.genus == 0);

    // one-face scheme on K4: chi = 4 - 6 + 1 = -1
    auto k4 = one_face_embedding(tg::complete(4));
    auto ki = surface_invariants(k4);
    CHECK(ki.faces == 1);
    CHECK(ki.euler_characteristic == -1);
    if (!ki.orientable) CHECK(ki.genus == 3);
}

TEST_CASE("Euler formula and orientability, exhaustively on tiny graphs") {
    for (const auto& g : testcorpus::connected_up_to_iso(3)) {
        if (g.edge_count() == 0) continue;
        // all rotations (first dart pinned) x all signatures
        std::vector<std::vector<std::vector<int>>> rots(g.n);
        for (int v = 0; v < g.n; ++v) {
            auto darts = g.darts_at(v);
            if (darts.size() <= 2) {
                rots[v].push_back(darts);
                continue;
            }
            std::vector<int> rest(darts.begin() + 1, darts.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> r{darts[0]};
                r.insert(r.end(), rest.begin(), rest.end());
                rots[v].push_back(r);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        std::vector<int> choice(g.n, 0);
        bool done = false;
        while (!done) {
            std::vector<std::vector<int>> rot(g.n);
            for (int v = 0; v < g.n; ++v) rot[v] = rots[v][choice[v]];
            for (unsigned bits = 0; bits < (1u << g.edge_count()); ++bits) {
                std::vector<std::uint8_t> sig(g.edge_count());
                for (int e = 0; e < g.edge_count(); ++e) sig[e] = bits >> e & 1;
                auto inv = surface_invariants(EmbeddingScheme(g, rot, sig));
                CHECK(inv.euler_characteristic == g.n - g.edge_count() + inv.faces);
                CHECK(inv.euler_characteristic <= 2);
                if (inv.orientable) {
                    CHECK(inv.euler_characteristic % 2 == 0);
                    CHECK(inv.euler_characteristic == 2 - 2 * inv.genus);
                } else {
                    CHECK(inv.euler_characteristic == 2 - inv.genus);
                }
            }
            done = true;
            for (int v = 0; v < g.n; ++v) {
                if (++choice[v] < static_cast<int>(rots[v].size())) {
                    done = false;
                    break;
                }
                choice[v] = 0;
            }
        }
    }
}

TEST_CASE("boundary walk") {
    auto mobius = scheme_with(tg::cycle(3), {1, 0, 0});
    auto walk = boundary_walk(mobius);
    CHECK(walk.size() == 6);
    std::vector<int> visits(3, 0);
    for (int d : walk) visits[MultiGraph::dart_edge(d)]++;
    CHECK(visits == std::vector<int>{2, 2, 2});

    EmbeddingScheme torus(tg::rose(2), {{0, 2, 1, 3}}, {0, 0});
    auto tw = boundary_walk(torus);
    CHECK(tw.size() == 4);

    auto theta_scheme = one_face_embedding(tg::theta());
    auto thw = boundary_walk(theta_scheme);
    CHECK(thw.size() == 6);
    int at0 = 0, at1 = 0;
    for (int d : thw) (theta_scheme.base.dart_vertex(d) == 0 ? at0 : at1)++;
    CHECK(at0 == 3); // each vertex appears deg(v) times
    CHECK(at1 == 3);

    CHECK_THROWS_AS(boundary_walk(scheme_with(tg::cycle(3), {0, 0, 0})), Error);
}

TEST_CASE("companion function from decompositions") {
    auto g = tg::theta();
    auto s = one_face_embedding(g);
    auto d = StripDecomposition::canonical(s);
    CHECK(d.invariant_holds());
    CHECK(companion_function(d).values ==
          std::vector<std::uint8_t>(s.signature.begin(), s.signature.end()));

    // flipping an edge face never changes the companion function
    auto before = companion_function(d);
    d.flip_edge_face(1);
    CHECK(d.invariant_holds());
    CHECK(companion_function(d) == before);

    // flipping a vertex face flips exactly the non-loop edges at that vertex
    d.flip_vertex_face(0);
    CHECK(d.invariant_holds());
    auto after = companion_function(d);
    for (int e = 0; e < 3; ++e) CHECK(after.values[e] == (before.values[e] ^ 1));

    // all-zero attach bits: identically zero companion function
    EmbeddingScheme flat = scheme_with(g, {0, 0, 0});
    auto dz = StripDecomposition::canonical(flat);
    CHECK(companion_function(dz).values == std::vector<std::uint8_t>{0, 0, 0});

    // loop case: both attach bits live at the same vertex, XOR still applies
    auto rose = tg::rose(2);
    EmbeddingScheme rs(rose, {{0, 2, 1, 3}}, {1, 0});
    auto dr = StripDecomposition::canonical(rs);
    CHECK(companion_function(dr).values == std::vector<std::uint8_t>{1, 0});
    dr.flip_vertex_face(0); // loops are immune
    CHECK(companion_function(dr).values == std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("companion equivalence") {
    auto g = tg::theta();
    CompanionFunction a{{0, 1, 0}};
    CompanionFunction b{{0, 1, 0}};
    CHECK(equivalent(a, b, g));
    CompanionFunction c{{1, 0, 1}}; // global complement on a 2-connected graph
    CHECK(equivalent(a, c, g));
    CompanionFunction d{{0, 1, 1}}; // differs on exactly one edge
    CHECK_FALSE(equivalent(a, d, g));

    CompanionFunction bad{{0, 1}};
    CHECK_THROWS_AS(equivalent(a, bad, g), Error);

    // blockwise: tadpole = triangle block + bridge block
    auto tad = tg::tadpole();
    CompanionFunction t1{{0, 0, 0, 0}};
    CompanionFunction t2{{1, 1, 1, 0}}; // complement the triangle only
    CHECK(equivalent(t1, t2, tad));
    CompanionFunction t3{{1, 0, 0, 0}};
    CHECK_FALSE(equivalent(t1, t3, tad));
}

TEST_CASE("companion equivalence is an equivalence relation") {
    std::mt19937 rng(23);
    auto g = tg::tadpole();
    auto random_fn = [&]() {
        CompanionFunction f;
        f.values.resize(g.edge_count());
        for (auto& b : f.values) b = rng() & 1;
        return f;
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_fn(), b = random_fn(), c = random_fn();
        CHECK(equivalent(a, a, g));
        CHECK(equivalent(a, b, g) == equivalent(b, a, g));
        if (equivalent(a, b, g) && equivalent(b, c, g)) CHECK(equivalent(a, c, g));
    }
}
