#pragma once

#include <string>
#include <vector>

#include "orthoext/embedding.hpp"
#include "orthoext/instance.hpp"

namespace orthoext {

// Free-port counts between consecutive predrawn edges at a vertex. For a
// vertex with a single predrawn edge e the entry is (e, e, 3); a vertex with
// no predrawn edges has no entries and four free ports.
struct PortGap {
    EdgeId after = -1;   // gap starts clockwise after this edge
    EdgeId before = -1;  // and ends at this edge
    int free_ports = 0;
};

struct PortConstraintSet {
    std::vector<std::vector<PortGap>> at;  // per vertex, in rotation order
    std::vector<int> free_total;           // 4 - deg_H(v)

    int total_free(VertexId v) const { return free_total[v]; }
};

PortConstraintSet extract_port_constraints(const Instance& ins);

// True iff, in the rotation of `eg` at each vertex, the number of non-predrawn
// edges lying strictly between each consecutive predrawn pair is at most the
// gap's free-port count. Throws InstanceError when `eg` does not restrict to
// the predrawing's rotations.
bool check_port_feasible(const Instance& ins, const Embedding& eg, const PortConstraintSet& p,
                         std::string* why = nullptr);

}  // namespace orthoext
