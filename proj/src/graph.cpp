#include "orthoext/graph.hpp"

#include <algorithm>

namespace orthoext {

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loops are not allowed");
    if (has_edge(u, v)) throw GraphError("parallel edge in simple graph");
    EdgeId e = EdgeId(ends_.size());
    ends_.emplace_back(u, v);
    adj_[u].push_back(e);
    adj_[v].push_back(e);
    return e;
}

bool Graph::has_edge(VertexId a, VertexId b) const { return find_edge(a, b) >= 0; }

EdgeId Graph::find_edge(VertexId a, VertexId b) const {
    if (a < 0 || a >= vertex_count()) return -1;
    for (EdgeId e : adj_[a]) {
        if (other(e, a) == b) return e;
    }
    return -1;
}

Components subgraph_components(const Graph& g, const SubgraphMask& m) {
    Components out;
    out.comp_of_vertex.assign(g.vertex_count(), -1);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (!m.has_vertex(s) || out.comp_of_vertex[s] >= 0) continue;
        int c = out.count++;
        out.rep.push_back(s);
        stack.push_back(s);
        out.comp_of_vertex[s] = c;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.edges_at(v)) {
                if (!m.has_edge(e)) continue;
                VertexId w = g.other(e, v);
                if (!m.has_vertex(w))
                    throw GraphError("subgraph edge with endpoint outside subgraph");
                if (out.comp_of_vertex[w] < 0) {
                    out.comp_of_vertex[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

int subgraph_degree(const Graph& g, const SubgraphMask& m, VertexId v) {
    int d = 0;
    for (EdgeId e : g.edges_at(v))
        if (m.has_edge(e)) ++d;
    return d;
}

}  // namespace orthoext
