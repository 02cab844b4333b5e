#include "orthoext/instance.hpp"

#include "orthoext/checks.hpp"

namespace orthoext {

int Instance::h_vertex_count() const {
    int n = 0;
    for (char c : h.vertices) n += c ? 1 : 0;
    return n;
}

int Instance::h_edge_count() const {
    int n = 0;
    for (char c : h.edges) n += c ? 1 : 0;
    return n;
}

void Instance::validate() const {
    if (int(h.vertices.size()) != g.vertex_count() || int(h.edges.size()) != g.edge_count())
        throw InstanceError("bad-mask", "subgraph mask sizes do not match the graph");
    if (int(h_point.size()) != g.vertex_count())
        throw InstanceError("bad-points", "point table size mismatch");
    if (int(h_path.size()) != g.edge_count())
        throw InstanceError("bad-paths", "path table size mismatch");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!h.has_edge(e)) continue;
        if (!h.has_vertex(g.u(e)) || !h.has_vertex(g.v(e)))
            throw InstanceError("h-not-subgraph",
                                "predrawn edge " + std::to_string(e) +
                                    " has an endpoint outside the predrawn vertex set");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 4)
            throw InstanceError("degree",
                                "vertex " + std::to_string(v) + " has degree above four");
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!h.has_edge(e)) continue;
        const OrthoPath& p = h_path[e];
        if (auto err = p.validate())
            throw InstanceError("bad-path", "edge " + std::to_string(e) + ": " + *err);
        const Point pu = h_point[g.u(e)], pv = h_point[g.v(e)];
        if (!((p.front() == pu && p.back() == pv) || (p.front() == pv && p.back() == pu)))
            throw InstanceError("path-endpoints",
                                "edge " + std::to_string(e) +
                                    ": path endpoints do not match vertex points");
    }
    std::string violation;
    if (!check_planar_drawing(view_of_h(*this), &violation))
        throw InstanceError("planarity", "predrawing is not planar: " + violation);
}

Instance Instance::scaled(Coord s) const {
    Instance out = *this;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (h.has_vertex(v)) out.h_point[v] = h_point[v] * s;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (h.has_edge(e)) out.h_path[e] = h_path[e].scaled(s);
    return out;
}

OrthoDrawing h_only_drawing(const Instance& ins) {
    OrthoDrawing d;
    d.vertex_point.assign(ins.g.vertex_count(), Point{});
    d.edge_path.assign(ins.g.edge_count(), OrthoPath{});
    for (VertexId v = 0; v < ins.g.vertex_count(); ++v)
        if (ins.in_h_vertex(v)) d.vertex_point[v] = ins.h_point[v];
    for (EdgeId e = 0; e < ins.g.edge_count(); ++e)
        if (ins.in_h_edge(e)) d.edge_path[e] = ins.h_path[e];
    return d;
}

}  // namespace orthoext
