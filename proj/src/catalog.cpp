#include "phi/catalog.hpp"

#include <map>

namespace phi {

namespace {

PlaneGraph mk(std::string name, std::vector<std::string> vertices, std::string root,
              std::vector<std::string> outer, std::vector<std::vector<std::string>> faces) {
    PlaneGraph g;
    g.name = std::move(name);
    g.vertices = std::move(vertices);
    g.root = std::move(root);
    g.outer_face = std::move(outer);
    g.bounded_faces = std::move(faces);
    return validate(g);
}

// The irreducible graphs are pinned by their combinatorial type:
//   G6_1 = K4                      G6_2 = theta(2,2,2)
//   G7_1 = K4, one edge subdivided G7_2 = theta(2,2,3)
//   G8_1 = W4 (wheel)              G8_2 = K4, two opposite edges subdivided
//   G8_3 = K4, one edge subdivided twice
//   G8_4 = K4, two adjacent edges subdivided
//   G8_5 = K_{2,4}                 G8_6 = theta(2,2,4)
//   G8_7 = theta(2,3,3)
// The names follow the 21-term series table; the theta assignments for
// G8_6/G8_7 and the 9-edge trio are fixed by low-order series matching.
PlaneGraph build(const std::string& name) {
    if (name.size() == 2 && name[0] == 'P' && name[1] >= '2' && name[1] <= '9')
        return polygon(name[1] - '0');
    // G3_0 .. G8_0 are the polygons with that many edges.
    if (name.size() == 4 && name[0] == 'G' && name.substr(2) == "_0" && name[1] >= '3' && name[1] <= '8')
        return polygon(name[1] - '0');

    if (name == "G6_1")
        return mk(name, {"a", "b", "c", "d"}, "a", {"a", "b", "c"},
                  {{"a", "b", "d"}, {"b", "c", "d"}, {"a", "d", "c"}});
    if (name == "G6_2")
        return mk(name, {"u", "m1", "m2", "m3", "w"}, "u", {"u", "m1", "w", "m3"},
                  {{"u", "m1", "w", "m2"}, {"u", "m2", "w", "m3"}});
    if (name == "G7_1")
        return mk(name, {"a", "b", "c", "d", "x"}, "a", {"a", "b", "c"},
                  {{"a", "b", "d", "x"}, {"a", "x", "d", "c"}, {"b", "c", "d"}});
    if (name == "G7_2")
        return mk(name, {"u", "m1", "m2", "x1", "x2", "w"}, "u", {"u", "m1", "w", "x2", "x1"},
                  {{"u", "m1", "w", "m2"}, {"u", "m2", "w", "x2", "x1"}});
    if (name == "G8_1")
        return mk(name, {"h", "r1", "r2", "r3", "r4"}, "r1", {"r1", "r2", "r3", "r4"},
                  {{"r1", "r2", "h"}, {"r2", "r3", "h"}, {"r3", "r4", "h"}, {"r4", "r1", "h"}});
    if (name == "G8_2")
        return mk(name, {"a", "b", "c", "d", "x", "y"}, "a", {"a", "x", "b", "c"},
                  {{"a", "x", "b", "d"}, {"b", "c", "y", "d"}, {"a", "d", "y", "c"}});
    if (name == "L8a7")
        return mk(name, {"b1", "b2", "b3", "b4", "b5", "b6"}, "b1", {"b1", "b2", "b3", "b4"},
                  {{"b1", "b6", "b5", "b4"}, {"b3", "b4", "b5", "b6"}, {"b1", "b2", "b3", "b6"}});
    if (name == "G8_3")
        return mk(name, {"a", "b", "c", "d", "x", "y"}, "a", {"a", "x", "y", "b", "c"},
                  {{"a", "x", "y", "b", "d"}, {"b", "c", "d"}, {"a", "d", "c"}});
    if (name == "G8_4")
        return mk(name, {"a", "b", "c", "d", "x", "y"}, "a", {"a", "x", "b", "c", "y"},
                  {{"a", "x", "b", "d"}, {"a", "d", "c", "y"}, {"b", "c", "d"}});
    if (name == "G8_5")
        return mk(name, {"u", "m1", "m2", "m3", "m4", "w"}, "u", {"u", "m1", "w", "m4"},
                  {{"u", "m1", "w", "m2"}, {"u", "m2", "w", "m3"}, {"u", "m3", "w", "m4"}});
    if (name == "G8_6")
        return mk(name, {"u", "m1", "m2", "x1", "x2", "x3", "w"}, "u", {"u", "m1", "w", "x3", "x2", "x1"},
                  {{"u", "m1", "w", "m2"}, {"u", "m2", "w", "x3", "x2", "x1"}});
    if (name == "G8_7")
        return mk(name, {"u", "m", "y1", "y2", "z1", "z2", "w"}, "u", {"u", "m", "w", "z2", "z1"},
                  {{"u", "m", "w", "y2", "y1"}, {"u", "y1", "y2", "w", "z2", "z1"}});

    // Triple figure: a square with two triangles attached, on opposite edges
    // (G1) and on adjacent edges (G2); G3 is the triangle-triangle-square
    // chain. All three have the same series h_4 h_3^2.
    if (name == "G1_triple")
        return mk(name, {"s1", "s2", "s3", "s4", "t1", "t2"}, "s1", {"s1", "t1", "s2", "s3", "t2", "s4"},
                  {{"s1", "s2", "s3", "s4"}, {"s2", "s1", "t1"}, {"s4", "s3", "t2"}});
    if (name == "G2_triple")
        return mk(name, {"s1", "s2", "s3", "s4", "t1", "t2"}, "s1", {"s1", "t1", "s2", "t2", "s3", "s4"},
                  {{"s1", "s2", "s3", "s4"}, {"s2", "s1", "t1"}, {"s3", "s2", "t2"}});
    if (name == "G3_triple")
        return mk(name, {"t", "a", "b", "c", "d", "e"}, "t", {"t", "a", "c", "d", "e", "b"},
                  {{"t", "a", "b"}, {"a", "b", "c"}, {"b", "c", "d", "e"}});

    // 9-edge remark trio: 7 vertices, 9 edges, two square and two pentagonal
    // faces each, distinguished only from q^3 on.
    //   G9_10 = K4 with one edge subdivided twice and the opposite edge once
    //   G9_12 = K4 with a 3-edge path subdivided once per edge
    //   G9_16 = two parallel-path pairs chained through a middle vertex,
    //           closed by one edge
    if (name == "G9_10")
        return mk(name, {"a", "b", "c", "d", "x", "y", "z"}, "a", {"a", "x", "y", "b", "c"},
                  {{"a", "x", "y", "b", "d"}, {"a", "d", "z", "c"}, {"b", "c", "z", "d"}});
    if (name == "G9_12")
        return mk(name, {"a", "b", "c", "d", "x", "y", "z"}, "a", {"a", "x", "b", "z", "c"},
                  {{"a", "x", "b", "d", "y"}, {"a", "y", "d", "c"}, {"b", "z", "c", "d"}});
    if (name == "G9_16")
        return mk(name, {"a", "x1", "x2", "b", "y1", "y2", "c"}, "a", {"a", "x2", "b", "y2", "c"},
                  {{"a", "x1", "b", "x2"}, {"b", "y1", "c", "y2"}, {"a", "x1", "b", "y1", "c"}});

    throw UnknownGraph("catalog: unknown graph '" + name + "'");
}

}  // namespace

PlaneGraph catalog(const std::string& name) { return build(name); }

std::vector<std::string> catalog_names() {
    return {"P2",   "P3",   "P4",   "P5",   "P6",   "P7",   "P8",   "P9",   "G6_1", "G6_2",
            "G7_1", "G7_2", "G8_1", "G8_2", "G8_3", "G8_4", "G8_5", "G8_6", "G8_7", "L8a7",
            "G1_triple", "G2_triple", "G3_triple", "G9_10", "G9_12", "G9_16"};
}

}  // namespace phi
