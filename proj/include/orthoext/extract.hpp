#pragma once

#include "orthoext/embedding.hpp"
#include "orthoext/instance.hpp"

namespace orthoext {

// Embedding of the predrawn subgraph in its drawing: rotations follow the
// geometric port order at each vertex, nesting comes from exact
// point-in-polygon tests over traced face walks.
Embedding extract_embedding(const Instance& ins);

// Geometric closed polyline of a traced face walk (includes bend points).
// Empty for virtual faces of dartless components.
std::vector<Point> face_walk_polygon(const Instance& ins, const FaceStructure& fs, int face);

// Outer face of each component of the predrawing: the unique traced walk with
// non-positive enclosed area (trees and isolated vertices included).
std::vector<int> geometric_outer_faces(const Instance& ins, const FaceStructure& fs);

}  // namespace orthoext
