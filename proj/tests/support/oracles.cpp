#include "support/oracles.hpp"

#include <set>

namespace orthoext::testsupport {

namespace {

struct Feat {
    Segment seg;
    EdgeId edge;
    int idx;
    VertexId vertex;
};

std::vector<Feat> features(const DrawingView& view) {
    std::vector<Feat> out;
    for (EdgeId e = 0; e < view.g->edge_count(); ++e) {
        if (!view.path[e]) continue;
        for (int i = 0; i < view.path[e]->segment_count(); ++i)
            out.push_back({view.path[e]->segment(i), e, i, -1});
    }
    for (VertexId v = 0; v < view.g->vertex_count(); ++v)
        if (view.point[v]) out.push_back({Segment{*view.point[v], *view.point[v]}, -1, -1, v});
    return out;
}

}  // namespace

bool planar_drawing_oracle(const DrawingView& view) {
    const Graph& g = *view.g;
    std::vector<Feat> fs = features(view);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const Feat& a = fs[i];
            const Feat& b = fs[j];
            SegIntersection is = intersect_axis_segments(a.seg, b.seg);
            if (is.kind == SegContact::None) continue;
            if (is.kind == SegContact::Overlap) return false;
            Point p = is.at;
            if (a.edge >= 0 && b.edge >= 0 && a.edge == b.edge) {
                if (std::abs(a.idx - b.idx) != 1) return false;
                continue;
            }
            if (a.edge >= 0 && b.edge >= 0) {
                // Must be a common graph vertex drawn at p, terminal for both.
                bool ok = false;
                for (VertexId w = 0; w < g.vertex_count(); ++w) {
                    if (!view.point[w] || !(*view.point[w] == p)) continue;
                    if (!g.incident(a.edge, w) || !g.incident(b.edge, w)) continue;
                    if (view.path[a.edge]->front() == p || view.path[a.edge]->back() == p)
                        if (view.path[b.edge]->front() == p || view.path[b.edge]->back() == p)
                            ok = true;
                }
                if (!ok) return false;
                continue;
            }
            if (a.edge < 0 && b.edge < 0) return false;  // coincident vertices
            const Feat& vf = a.edge < 0 ? a : b;
            const Feat& ef = a.edge < 0 ? b : a;
            if (!g.incident(ef.edge, vf.vertex)) return false;
            if (!(view.path[ef.edge]->front() == p || view.path[ef.edge]->back() == p))
                return false;
        }
    }
    return true;
}

int port_gap_oracle(const Instance& ins, VertexId v, PortDir from, PortDir to) {
    std::set<int> occupied;
    for (EdgeId e : ins.g.edges_at(v))
        if (ins.in_h_edge(e)) occupied.insert(int(ins.h_path[e].port_at(ins.h_point[v])));
    int count = 0;
    int cur = (int(from) + 1) % 4;
    while (cur != int(to)) {
        if (!occupied.count(cur)) ++count;
        cur = (cur + 1) % 4;
    }
    return count;
}

}  // namespace orthoext::testsupport
