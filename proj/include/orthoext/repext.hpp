#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orthoext/embedding.hpp"
#include "orthoext/instance.hpp"
#include "orthoext/port_constraints.hpp"

namespace orthoext {

// Embedding-extension instance: a graph, a subgraph, and a plane embedding of
// the subgraph. No degree cap is assumed here.
struct RepExtTopInstance {
    Graph g;
    SubgraphMask h;
    Embedding eh;
};

// How one original edge is represented in the reduced graph: a path of
// reduced edges from u(e) to v(e). `forward` marks pieces whose stored
// endpoint order follows that path direction.
struct EdgeTrace {
    std::vector<EdgeId> pieces;
    std::vector<char> forward;
};

// Per-vertex gadget bookkeeping, enough to reconstruct the original graph
// and to pull an embedding of it back from an embedding of the reduced graph.
struct VertexGadget {
    enum class Tag { Subdivide, Merge, Cross };  // cases 1, 2a, 2b
    Tag tag = Tag::Subdivide;
    VertexId v = -1;
    VertexId w_prime = -1;                      // cases 1/2a
    EdgeId stub = -1;                           // reduced edge v-w'
    std::map<EdgeId, EdgeId> spoke_to_orig;     // reduced spoke edge -> original edge
    // case 2b only:
    VertexId z_prime = -1, w1_prime = -1, w2_prime = -1;
    EdgeId arm_w = -1, arm_z = -1, arm_w1 = -1, arm_w2 = -1;  // reduced v-w', v-z', v-w1', v-w2'
    EdgeId orig_e = -1, orig_estar = -1, orig_e1 = -1, orig_e2 = -1;
};

struct GadgetRecord {
    std::vector<VertexGadget> entries;
    std::vector<EdgeTrace> trace;          // per original edge
    std::vector<EdgeId> internal_edges;    // reduced edges with no original counterpart
    int touch_count = 0;                   // vertices examined during reduction
};

struct ReduceResult {
    RepExtTopInstance top;
    GadgetRecord record;
};

// Port-constraint elimination: rebuilds the instance so that plain embedding
// extension on the result is equivalent to port-constrained extension on the
// input. Throws InstanceError for infeasible degrees or malformed constraints.
ReduceResult reduce(const Instance& ins, const Embedding& eh, const PortConstraintSet& p);

// Complete backtracking tester for embedding extension. Returns a plane
// embedding of r.g extending r.eh, or nullopt when none exists.
std::optional<Embedding> test_embedding_extension(const RepExtTopInstance& r);

// Pull an embedding of the reduced graph back to the original graph.
// Asserts the structural read-off facts it relies on.
Embedding lift(const Instance& ins, const Embedding& e_gp, const RepExtTopInstance& top,
               const GadgetRecord& rec);

// Full decision pipeline: extract, reduce, test, lift, certify.
std::optional<Embedding> test_extension(const Instance& ins);

// Exhaustive oracle: enumerates rotation systems extending the predrawing's
// rotations together with all nesting choices, filtering by the Euler/face
// check and (unless ignore_ports) the port constraints.
struct BruteForceOptions {
    int vertex_cap = 10;
    bool ignore_ports = false;
};
std::optional<Embedding> brute_force_extension(const Instance& ins,
                                               const BruteForceOptions& opt = {});

// Same enumeration for a bare embedding-extension instance (test use).
std::optional<Embedding> brute_force_top(const RepExtTopInstance& r, int vertex_cap = 10);

}  // namespace orthoext
