#ifndef PHI_PLANE_GRAPH_HPP
#define PHI_PLANE_GRAPH_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phi {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EulerViolation : GraphError {
    using GraphError::GraphError;
};
struct EdgeIncidenceError : GraphError {
    using GraphError::GraphError;
};
struct RootNotOnOuterFace : GraphError {
    using GraphError::GraphError;
};
struct NonSimple : GraphError {
    using GraphError::GraphError;
};
struct BadArity : GraphError {
    using GraphError::GraphError;
};
struct EdgeNotOnOuterFace : GraphError {
    using GraphError::GraphError;
};
struct UnknownGraph : GraphError {
    using GraphError::GraphError;
};
struct ParityError : GraphError {
    using GraphError::GraphError;
};

// Combinatorial plane map: vertices, a root vertex on the outer face, the
// outer face walk and the bounded face cycles. Edges are implied by cyclic
// adjacency in the face lists; every undirected edge occurs exactly twice
// across all cycles (outer included).
//
// Bounded face cycles have length >= 3 and distinct vertices. The outer walk
// may repeat vertices (cut vertices, bridges). P_2 (two vertices, one edge)
// is admitted with outer_face = [v1, v2] carrying both incidences.
struct PlaneGraph {
    std::string name;
    std::vector<std::string> vertices;
    std::string root;
    std::vector<std::string> outer_face;
    std::vector<std::vector<std::string>> bounded_faces;
};

// c3 counts 3-cycles of the abstract graph, not triangular faces.
struct GraphStats {
    long long c1 = 0;  // vertices
    long long c2 = 0;  // edges
    long long c3 = 0;  // 3-cycles
};

using Edge = std::pair<std::string, std::string>;  // normalized: first < second

Edge make_edge(const std::string& a, const std::string& b);

// Undirected edge multiset derived from the face cycles, with incidence
// counts (a valid graph has every count equal to 2).
std::map<Edge, int> edge_incidences(const PlaneGraph& g);

// Distinct undirected edges.
std::vector<Edge> edge_list(const PlaneGraph& g);

// Full validation; returns the graph unchanged on success.
// Throws EulerViolation, EdgeIncidenceError, RootNotOnOuterFace, NonSimple.
PlaneGraph validate(const PlaneGraph& raw);

// P_r: polygon with r edges for r >= 3; the single-edge graph for r = 2.
PlaneGraph polygon(int r);

// Edge connected sum: glue g1 and g2 along outer edges e1, e2 (endpoints
// identified pairwise, one shared edge). Throws EdgeNotOnOuterFace.
PlaneGraph edge_connect(const PlaneGraph& g1, const Edge& e1, const PlaneGraph& g2, const Edge& e2);

// Removes loops and collapses parallel-edge classes (presented as bigon
// faces) to single edges; validates the result. Idempotent on simple maps.
PlaneGraph reduce(const PlaneGraph& raw);

// Cuts every bridge; returns the 2-edge-connected factors. Isolated vertices
// left by the cuts are dropped, so a tree yields an empty list.
std::vector<PlaneGraph> split_bridges(const PlaneGraph& g);

GraphStats stats(const PlaneGraph& g);

// (1, c1-c2-1, ((c1-c2)^2 - 2*c3 - c1 + c2)/2); ParityError if the third
// expression is not an integer (which would indicate a stats bug).
std::array<long long, 3> theorem1_prefix(const PlaneGraph& g);

std::string to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const std::string& text);

// Canonical serialization, identical for presentations that differ by
// rotation/reflection of the face cycles and by vertex relabeling.
std::string canonical_form(const PlaneGraph& g);

}  // namespace phi

#endif
