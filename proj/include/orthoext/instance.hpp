#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthoext/geometry.hpp"
#include "orthoext/graph.hpp"
#include "orthoext/ortho_path.hpp"

namespace orthoext {

struct InstanceError : std::runtime_error {
    std::string code;
    InstanceError(std::string c, const std::string& m)
        : std::runtime_error(m), code(std::move(c)) {}
};

// A graph together with a predrawn subgraph: H-vertices carry grid points and
// H-edges carry orthogonal paths; everything else is combinatorial only.
struct Instance {
    Graph g;
    SubgraphMask h;                       // the predrawn subgraph
    std::vector<Point> h_point;           // indexed by vertex, valid when h.vertices[v]
    std::vector<OrthoPath> h_path;        // indexed by edge, valid when h.edges[e]

    bool in_h_vertex(VertexId v) const { return h.has_vertex(v); }
    bool in_h_edge(EdgeId e) const { return h.has_edge(e); }
    int deg_h(VertexId v) const { return subgraph_degree(g, h, v); }
    int h_vertex_count() const;
    int h_edge_count() const;

    // Throws InstanceError when an invariant is violated (H not a subgraph,
    // degree above four, malformed or non-planar predrawing, ...).
    void validate() const;

    Instance scaled(Coord s) const;
};

// A complete drawing of G: every vertex has a point, every edge an axis path.
// `scale` declares that this drawing lives on a grid refined by that factor;
// it extends Gamma_H scaled by the same factor.
struct OrthoDrawing {
    std::vector<Point> vertex_point;
    std::vector<OrthoPath> edge_path;
    Coord scale = 1;

    PortDir port_of(EdgeId e, VertexId at) const {
        return edge_path[e].port_at(vertex_point[at]);
    }
};

// Drawing of the predrawn part alone (used by validators on Gamma_H itself).
OrthoDrawing h_only_drawing(const Instance& ins);

}  // namespace orthoext
