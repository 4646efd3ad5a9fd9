#ifndef PHI_CATALOG_HPP
#define PHI_CATALOG_HPP

#include <string>
#include <vector>

#include "phi/plane_graph.hpp"

namespace phi {

// Named fixture graphs: polygons P2..P9, the irreducible graphs with at
// most 8 edges (G6_1 .. G8_7, with G3_0..G8_0 aliasing the polygons), the
// L8a7 presentation, the triple-figure graphs G1/G2/G3, and the three
// 9-edge graphs from the face-profile remark. Throws UnknownGraph.
PlaneGraph catalog(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace phi

#endif
