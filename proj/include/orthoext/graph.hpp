#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthoext {

using VertexId = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& m) : std::runtime_error(m) {}
};

// Simple undirected graph with stable integer ids. Adjacency lists store edge
// ids; endpoint order inside an edge is fixed at insertion.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return int(adj_.size()); }
    int edge_count() const { return int(ends_.size()); }

    VertexId add_vertex() {
        adj_.emplace_back();
        return VertexId(adj_.size() - 1);
    }

    EdgeId add_edge(VertexId u, VertexId v);

    VertexId u(EdgeId e) const { return ends_[e].first; }
    VertexId v(EdgeId e) const { return ends_[e].second; }
    VertexId other(EdgeId e, VertexId w) const {
        return ends_[e].first == w ? ends_[e].second : ends_[e].first;
    }
    bool incident(EdgeId e, VertexId w) const {
        return ends_[e].first == w || ends_[e].second == w;
    }

    const std::vector<EdgeId>& edges_at(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return int(adj_[v].size()); }

    bool has_edge(VertexId a, VertexId b) const;
    EdgeId find_edge(VertexId a, VertexId b) const;  // -1 when absent

private:
    std::vector<std::vector<EdgeId>> adj_;
    std::vector<std::pair<VertexId, VertexId>> ends_;
};

// Vertex/edge inclusion masks defining a subgraph of a host graph.
struct SubgraphMask {
    std::vector<char> vertices;
    std::vector<char> edges;

    SubgraphMask() = default;
    SubgraphMask(int n, int m) : vertices(n, 0), edges(m, 0) {}
    static SubgraphMask full(const Graph& g) {
        SubgraphMask m(g.vertex_count(), g.edge_count());
        std::fill(m.vertices.begin(), m.vertices.end(), 1);
        std::fill(m.edges.begin(), m.edges.end(), 1);
        return m;
    }
    bool has_vertex(VertexId v) const { return v >= 0 && v < int(vertices.size()) && vertices[v]; }
    bool has_edge(EdgeId e) const { return e >= 0 && e < int(edges.size()) && edges[e]; }
};

// Connected components of a subgraph. Component ids are canonical: the
// component containing the smallest included vertex gets id 0, and so on.
struct Components {
    std::vector<int> comp_of_vertex;  // -1 for vertices outside the subgraph
    std::vector<VertexId> rep;        // minimum vertex per component
    int count = 0;
};

Components subgraph_components(const Graph& g, const SubgraphMask& m);

int subgraph_degree(const Graph& g, const SubgraphMask& m, VertexId v);

}  // namespace orthoext
