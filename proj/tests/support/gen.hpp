#pragma once

#include <random>
#include <vector>

#include "orthoext/instance.hpp"

namespace orthoext::testsupport {

// Convenience builder for hand-made instances.
class InstanceBuilder {
public:
    VertexId h_vertex(Coord x, Coord y) {
        VertexId v = ins_.g.add_vertex();
        ins_.h.vertices.push_back(1);
        ins_.h_point.push_back(Point{x, y});
        return v;
    }
    VertexId g_vertex() {
        VertexId v = ins_.g.add_vertex();
        ins_.h.vertices.push_back(0);
        ins_.h_point.push_back(Point{});
        return v;
    }
    // Predrawn edge along the given polyline (endpoints included).
    EdgeId h_edge(VertexId u, VertexId v, std::vector<Point> pts) {
        EdgeId e = ins_.g.add_edge(u, v);
        ins_.h.edges.push_back(1);
        ins_.h_path.push_back(OrthoPath{std::move(pts)});
        return e;
    }
    // Predrawn straight edge between the stored endpoints.
    EdgeId h_edge(VertexId u, VertexId v) {
        return h_edge(u, v, {ins_.h_point[u], ins_.h_point[v]});
    }
    EdgeId g_edge(VertexId u, VertexId v) {
        EdgeId e = ins_.g.add_edge(u, v);
        ins_.h.edges.push_back(0);
        ins_.h_path.push_back(OrthoPath{});
        return e;
    }
    Instance take() { return std::move(ins_); }
    const Instance& peek() const { return ins_; }

private:
    Instance ins_;
};

// Random instance drawn on a coarse grid: vertices on grid points, predrawn
// edges are unit grid segments, free edges join grid-adjacent vertices. All
// generated instances have a planar predrawing; free parts may or may not be
// extendable.
struct RandomInstanceOptions {
    int max_vertices = 8;
    int grid = 4;
    double h_edge_prob = 0.55;       // chance a chosen grid edge is predrawn
    double extra_edge_prob = 0.35;   // chance of free edges
    bool allow_free_vertices = true;
};

Instance random_grid_instance(std::mt19937_64& rng, const RandomInstanceOptions& opt);

// Predrawn rectangle with vertices scattered inside and outside plus random
// free edges; reliably produces both feasible and infeasible instances
// (edges may have to cross the cycle or exhaust a corner's free ports).
Instance random_trap_instance(std::mt19937_64& rng, int max_vertices = 8);

// Instance whose predrawing is a full drawing of G restricted to a subset:
// returns the instance plus the full drawing it was carved from (a YES
// witness by construction).
struct CarvedInstance {
    Instance instance;
    OrthoDrawing witness;
};
CarvedInstance random_yes_instance(std::mt19937_64& rng, int target_vertices, int max_h_vertices);

}  // namespace orthoext::testsupport
