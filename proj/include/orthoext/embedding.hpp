#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthoext/graph.hpp"

namespace orthoext {

// Directed edge, encoded as 2*e + dir (dir 0 runs u(e)->v(e)).
using DartId = int;

inline DartId make_dart(EdgeId e, int dir) { return 2 * e + dir; }
inline EdgeId dart_edge(DartId d) { return d >> 1; }
inline int dart_dir(DartId d) { return d & 1; }
inline DartId dart_reverse(DartId d) { return d ^ 1; }

inline VertexId dart_tail(const Graph& g, DartId d) {
    return dart_dir(d) == 0 ? g.u(dart_edge(d)) : g.v(dart_edge(d));
}
inline VertexId dart_head(const Graph& g, DartId d) {
    return dart_dir(d) == 0 ? g.v(dart_edge(d)) : g.u(dart_edge(d));
}
inline DartId dart_from(const Graph& g, EdgeId e, VertexId tail) {
    return make_dart(e, g.u(e) == tail ? 0 : 1);
}

// Position of one connected component in the plane relative to the others.
//   outer_dart: a dart on the component's outer face walk (-1 for a dartless
//               component, i.e. an isolated vertex).
//   parent_dart: a dart of another component whose face (to the left of the
//               dart) immediately contains this component; kRoot when the
//               component sits in the unbounded face.
struct Placement {
    static constexpr DartId kRoot = -2;
    DartId outer_dart = -1;
    DartId parent_dart = kRoot;
};

// Combinatorial plane embedding of a subgraph: clockwise rotations plus a
// component nesting forest. Rotation order is the library-global N,W,S,E.
struct Embedding {
    SubgraphMask sub;
    std::vector<std::vector<EdgeId>> rotation;   // per vertex, cyclic
    std::map<VertexId, Placement> placement;     // keyed by component representative
};

// Faces traced from a rotation system. Face ids are canonical for a given
// rotation system (walks discovered in increasing dart order, then one
// virtual face per dartless component).
struct FaceStructure {
    const Graph* g = nullptr;
    SubgraphMask sub;
    Components comps;
    std::vector<int> face_of_dart;               // indexed by dart id, -1 absent
    std::vector<std::vector<DartId>> walk;       // face id -> dart cycle (empty for virtual)
    std::vector<int> comp_of_face;
    std::vector<std::vector<int>> faces_of_comp;
    std::vector<int> virtual_face_of_comp;       // -1 unless the component is dartless

    int face_count() const { return int(walk.size()); }
    int comp_of_vertex(VertexId v) const { return comps.comp_of_vertex[v]; }
    // Face lying in the corner before `next_edge` in the rotation at v, i.e.
    // the face entered when leaving v along next_edge's dart.
    int face_at_dart_from(VertexId v, EdgeId next_edge) const;
    DartId canonical_dart(int face) const;       // min dart on walk, -1 for virtual
};

FaceStructure trace_faces(const Graph& g, const SubgraphMask& sub,
                          const std::vector<std::vector<EdgeId>>& rotation);

// Plane regions: classes of faces glued by the nesting forest, plus the
// unbounded region. Every region other than the unbounded one has exactly one
// defining face (a bounded face of the innermost component around it).
struct Regions {
    std::vector<int> region_of_face;
    int region_count = 0;
    int outer_region = -1;
    std::vector<int> defining_face;              // per region; -1 for the unbounded one
};

Regions build_regions(const FaceStructure& fs, const Embedding& emb);

// Euler check per component plus nesting-forest sanity.
bool embedding_is_plane(const Graph& g, const Embedding& emb, std::string* why = nullptr);

// Normalize placement darts to canonical representatives (min dart per walk).
Embedding normalized(const Graph& g, const Embedding& emb);

bool embedding_equal(const Graph& g, const Embedding& a, const Embedding& b);

// Induced plane embedding of a subgraph of the embedded graph.
Embedding restrict_embedding(const Graph& g, const Embedding& eg, const SubgraphMask& target);

// True when `eg` extends `eh`: the restriction of eg to eh's subgraph equals
// eh (rotations, outer faces, and component nesting all agree).
bool embedding_extends(const Graph& g, const Embedding& eg, const Embedding& eh);

// Map from each region of `eg` to the face id of `target`-restricted
// structure it lies in, expressed per target component: result[c][r] is the
// face of component c (in `fs_target`) containing region r of eg.
std::vector<std::vector<int>> region_to_component_face(
    const Graph& g, const Embedding& eg, const FaceStructure& fs_g, const Regions& regions,
    const SubgraphMask& target, const FaceStructure& fs_target);

}  // namespace orthoext
