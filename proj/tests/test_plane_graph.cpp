#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "phi/catalog.hpp"
#include "phi/plane_graph.hpp"
#include "phi/verify.hpp"

using namespace phi;

namespace {

PlaneGraph raw(std::string name, std::vector<std::string> vs, std::string root,
               std::vector<std::string> outer, std::vector<std::vector<std::string>> faces) {
    PlaneGraph g;
    g.name = std::move(name);
    g.vertices = std::move(vs);
    g.root = std::move(root);
    g.outer_face = std::move(outer);
    g.bounded_faces = std::move(faces);
    return g;
}

std::set<std::pair<std::string, std::string>> abstract_edges(const PlaneGraph& g) {
    auto es = edge_list(g);
    return {es.begin(), es.end()};
}

// Brute-force abstract-graph isomorphism (small graphs only).
bool isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.vertices.size() != b.vertices.size()) return false;
    auto ea = abstract_edges(a);
    auto eb = abstract_edges(b);
    if (ea.size() != eb.size()) return false;
    std::vector<std::string> perm = b.vertices;
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        std::map<std::string, std::string> m;
        for (size_t i = 0; i < a.vertices.size(); ++i) m[a.vertices[i]] = perm[i];
        for (const auto& [u, v] : ea)
            if (!eb.count(make_edge(m[u], m[v]))) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("validate accepts the section-5 graph and polygons") {
    PlaneGraph p3 = polygon(3);
    CHECK(p3.vertices.size() == 3);
    CHECK(edge_list(p3).size() == 3);
    CHECK(p3.bounded_faces.size() == 1);

    PlaneGraph l8a7 = catalog("L8a7");
    CHECK(l8a7.vertices.size() == 6);
    CHECK(edge_list(l8a7).size() == 8);
    CHECK(l8a7.bounded_faces.size() == 3);
}

TEST_CASE("validate rejects malformed inputs") {
    // An edge used by three cycles.
    CHECK_THROWS_AS(validate(raw("bad", {"a", "b", "c", "d"}, "a", {"a", "b", "c", "d"},
                                 {{"a", "b", "c"}, {"a", "b", "d"}})),
                    EdgeIncidenceError);
    CHECK_THROWS_AS(validate(raw("badroot", {"a", "b", "c", "d"}, "d", {"a", "b", "c"},
                                 {{"a", "b", "d"}, {"b", "c", "d"}, {"a", "d", "c"}})),
                    RootNotOnOuterFace);
    // Doubled edge presented as a bigon face.
    CHECK_THROWS_AS(validate(raw("bigon", {"a", "b", "c"}, "a", {"a", "b", "c"},
                                 {{"a", "b", "c"}, {"a", "b"}})),
                    NonSimple);
    // Vertex never met by any face.
    CHECK_THROWS_AS(validate(raw("euler", {"a", "b", "c", "d"}, "a", {"a", "b", "c"},
                                 {{"a", "b", "c"}})),
                    EulerViolation);
}

TEST_CASE("polygon") {
    PlaneGraph p2 = polygon(2);
    CHECK(p2.vertices.size() == 2);
    CHECK(edge_list(p2).size() == 1);
    CHECK(p2.bounded_faces.empty());
    CHECK_THROWS_AS(polygon(1), BadArity);
    GraphStats s5 = stats(polygon(5));
    CHECK(s5.c1 == 5);
    CHECK(s5.c2 == 5);
    CHECK(s5.c3 == 0);
}

TEST_CASE("edge_connect") {
    PlaneGraph t2 = edge_connect(polygon(3), make_edge("v1", "v2"), polygon(3), make_edge("v1", "v2"));
    CHECK(t2.vertices.size() == 4);
    CHECK(edge_list(t2).size() == 5);
    CHECK(t2.bounded_faces.size() == 2);

    // Tait graph of the knot 6_2: P3.P4.
    PlaneGraph g62 = edge_connect(polygon(3), make_edge("v1", "v2"), polygon(4), make_edge("v1", "v2"));
    CHECK(g62.vertices.size() == 5);
    CHECK(edge_list(g62).size() == 6);

    // Gluing a bare edge changes nothing.
    PlaneGraph same = edge_connect(polygon(2), make_edge("v1", "v2"), polygon(5), make_edge("v2", "v3"));
    CHECK(same.vertices.size() == 5);
    CHECK(edge_list(same).size() == 5);
    CHECK(same.bounded_faces.size() == 1);

    CHECK_THROWS_AS(
        edge_connect(catalog("G6_1"), make_edge("b", "d"), polygon(3), make_edge("v1", "v2")),
        EdgeNotOnOuterFace);

    // Stats law c1 = c1' + c1'' - 2, c2 = c2' + c2'' - 1, and Euler holds via validate.
    for (int r1 : {3, 4, 5})
        for (int r2 : {3, 4}) {
            PlaneGraph g = edge_connect(polygon(r1), make_edge("v1", "v2"), polygon(r2),
                                        make_edge("v1", "v2"));
            GraphStats s = stats(g);
            CHECK(s.c1 == r1 + r2 - 2);
            CHECK(s.c2 == r1 + r2 - 1);
        }
}

TEST_CASE("reduce") {
    // Triangle with one doubled edge, the doubling shown as a bigon face.
    PlaneGraph doubled = raw("doubled", {"a", "b", "c"}, "a", {"a", "b", "c"},
                             {{"a", "b"}, {"a", "b", "c"}});
    PlaneGraph r = reduce(doubled);
    CHECK(r.bounded_faces.size() == 1);
    CHECK(edge_list(r).size() == 3);

    // Loop at a vertex: face [c] paired with the doubled visit on the outer walk.
    PlaneGraph looped = raw("looped", {"a", "b", "c"}, "a", {"a", "b", "c", "c"},
                            {{"a", "b", "c"}, {"c"}});
    PlaneGraph r2 = reduce(looped);
    CHECK(edge_list(r2).size() == 3);
    CHECK(r2.bounded_faces.size() == 1);

    // Idempotent on every catalog graph.
    for (const auto& name : catalog_names()) {
        PlaneGraph g = catalog(name);
        PlaneGraph once = reduce(g);
        CHECK(to_json(once) == to_json(reduce(once)));
        CHECK(to_json(once) == to_json(g));
    }
}

TEST_CASE("split_bridges") {
    // Two triangles joined by a bridge.
    PlaneGraph g = raw("bridge", {"a", "b", "c", "d", "e", "f"}, "a",
                       {"a", "b", "c", "d", "e", "f", "d", "c"},
                       {{"a", "b", "c"}, {"d", "e", "f"}});
    auto factors = split_bridges(g);
    REQUIRE(factors.size() == 2);
    for (const auto& f : factors) {
        CHECK(f.vertices.size() == 3);
        CHECK(edge_list(f).size() == 3);
    }

    auto same = split_bridges(catalog("G6_2"));
    REQUIRE(same.size() == 1);
    CHECK(to_json(same[0]) == to_json(catalog("G6_2")));

    // A path is all bridges; everything dissolves.
    PlaneGraph path = raw("path", {"a", "b", "c"}, "a", {"a", "b", "c", "b"}, {});
    CHECK(split_bridges(path).empty());
}

TEST_CASE("split_bridges factors are 2-edge-connected") {
    // Edge-cut search: a factor re-split must come back whole.
    std::vector<PlaneGraph> inputs;
    for (const auto& name : catalog_names()) inputs.push_back(catalog(name));
    inputs.push_back(raw("bridge2", {"a", "b", "c", "d", "e", "f"}, "a",
                         {"a", "b", "c", "d", "e", "f", "d", "c"},
                         {{"a", "b", "c"}, {"d", "e", "f"}}));
    for (const auto& g : inputs) {
        if (edge_list(g).size() > 12) continue;
        for (const auto& f : split_bridges(g)) {
            auto again = split_bridges(f);
            REQUIRE(again.size() == 1);
            CHECK(to_json(again[0]) == to_json(f));
        }
    }
}

TEST_CASE("stats and theorem1_prefix") {
    GraphStats s3 = stats(polygon(3));
    CHECK(s3.c1 == 3);
    CHECK(s3.c2 == 3);
    CHECK(s3.c3 == 1);
    GraphStats s4 = stats(polygon(4));
    CHECK(s4.c3 == 0);
    GraphStats l8 = stats(catalog("L8a7"));
    CHECK(l8.c1 == 6);
    CHECK(l8.c2 == 8);
    CHECK(l8.c3 == 0);
    CHECK(stats(catalog("G6_1")).c3 == 4);

    auto p3 = theorem1_prefix(polygon(3));
    CHECK(p3 == std::array<long long, 3>{1, -1, -1});
    auto p2 = theorem1_prefix(polygon(2));
    CHECK(p2 == std::array<long long, 3>{1, 0, 0});
    auto l = theorem1_prefix(catalog("L8a7"));
    CHECK(l == std::array<long long, 3>{1, -3, 3});
}

TEST_CASE("catalog fixtures are consistent with the reference table") {
    for (const auto& name : catalog_names()) CHECK_NOTHROW(validate(catalog(name)));
    CHECK_THROWS_AS(catalog("nope"), UnknownGraph);

    // Edge count matches the superscript in the name.
    for (const auto& [name, row] : golden_series_21()) {
        PlaneGraph g = catalog(name);
        CHECK(static_cast<long long>(edge_list(g).size()) == name[1] - '0');
        auto pre = theorem1_prefix(g);
        CHECK(pre[0] == row[0]);
        CHECK(pre[1] == row[1]);
        CHECK(pre[2] == row[2]);
    }
    for (const auto& [name, row] : golden_prefix_9edge()) {
        PlaneGraph g = catalog(name);
        CHECK(edge_list(g).size() == 9);
        CHECK(g.vertices.size() == 7);
        auto pre = theorem1_prefix(g);
        CHECK(pre[1] == row[1]);
        CHECK(pre[2] == row[2]);
    }

    // Aliases: G3_0..G8_0 are the polygons, P7 is polygon(7).
    CHECK(to_json(catalog("G6_0")) == to_json(polygon(6)));
    CHECK(to_json(catalog("P7")) == to_json(polygon(7)));

    // The named G8_2 is the L8a7 graph up to relabeling.
    CHECK(isomorphic(catalog("G8_2"), catalog("L8a7")));
    // The two flype-related triple graphs are genuinely different graphs.
    CHECK(!isomorphic(catalog("G1_triple"), catalog("G2_triple")));
}

TEST_CASE("json round trip and canonical form") {
    for (const std::string name : {"G8_2", "G6_2", "P2"}) {
        PlaneGraph g = catalog(name);
        PlaneGraph back = validate(graph_from_json(to_json(g)));
        CHECK(to_json(back) == to_json(g));
    }

    // Rotating/reversing cycles and renaming vertices preserves the key.
    PlaneGraph g = catalog("G8_2");
    PlaneGraph h = g;
    std::rotate(h.outer_face.begin(), h.outer_face.begin() + 2, h.outer_face.end());
    std::reverse(h.bounded_faces[0].begin(), h.bounded_faces[0].end());
    std::swap(h.bounded_faces[1], h.bounded_faces[2]);
    for (auto* part : {&h.vertices, &h.outer_face})
        for (auto& v : *part) v = "n_" + v;
    for (auto& f : h.bounded_faces)
        for (auto& v : f) v = "n_" + v;
    h.root = "n_" + h.root;
    CHECK(canonical_form(validate(h)) == canonical_form(g));
    CHECK(canonical_form(catalog("G8_3")) != canonical_form(g));
}
