#include "orthoext/port_constraints.hpp"

#include <algorithm>

#include "orthoext/extract.hpp"

namespace orthoext {

namespace {

int clockwise_gap(PortDir from, PortDir to) {
    // Number of port slots strictly between `from` and `to` in N,W,S,E order.
    int steps = (int(to) - int(from) + 4) % 4;
    return steps == 0 ? 3 : steps - 1;
}

}  // namespace

PortConstraintSet extract_port_constraints(const Instance& ins) {
    ins.validate();
    Embedding eh = extract_embedding(ins);
    PortConstraintSet out;
    out.at.assign(ins.g.vertex_count(), {});
    out.free_total.assign(ins.g.vertex_count(), 4);
    for (VertexId v = 0; v < ins.g.vertex_count(); ++v) {
        if (!ins.in_h_vertex(v)) continue;
        const std::vector<EdgeId>& rot = eh.rotation[v];
        out.free_total[v] = 4 - int(rot.size());
        if (rot.empty()) continue;
        if (rot.size() == 1) {
            out.at[v].push_back(PortGap{rot[0], rot[0], 3});
            continue;
        }
        for (std::size_t i = 0; i < rot.size(); ++i) {
            EdgeId a = rot[i];
            EdgeId b = rot[(i + 1) % rot.size()];
            PortDir pa = ins.h_path[a].port_at(ins.h_point[v]);
            PortDir pb = ins.h_path[b].port_at(ins.h_point[v]);
            out.at[v].push_back(PortGap{a, b, clockwise_gap(pa, pb)});
        }
    }
    return out;
}

bool check_port_feasible(const Instance& ins, const Embedding& eg, const PortConstraintSet& p,
                         std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    for (VertexId v = 0; v < ins.g.vertex_count(); ++v) {
        if (!ins.in_h_vertex(v)) continue;
        const std::vector<EdgeId>& rot = eg.rotation[v];
        int g_edges = 0;
        for (EdgeId e : rot)
            if (!ins.in_h_edge(e)) ++g_edges;
        if (p.at[v].size() <= 1) {
            if (g_edges > p.free_total[v])
                return fail("vertex " + std::to_string(v) + ": " + std::to_string(g_edges) +
                            " free edges exceed " + std::to_string(p.free_total[v]) +
                            " free ports");
            continue;
        }
        // Locate predrawn edges inside the rotation and verify their cyclic
        // order matches the predrawing.
        std::vector<std::pair<int, EdgeId>> h_pos;
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (ins.in_h_edge(rot[i])) h_pos.push_back({int(i), rot[i]});
        if (h_pos.size() != p.at[v].size())
            throw InstanceError("mismatch", "embedding is missing predrawn edges at vertex " +
                                                std::to_string(v));
        int start = -1;
        for (std::size_t i = 0; i < h_pos.size(); ++i)
            if (h_pos[i].second == p.at[v][0].after) start = int(i);
        if (start < 0)
            throw InstanceError("mismatch", "predrawn edge absent from rotation at vertex " +
                                                std::to_string(v));
        for (std::size_t i = 0; i < h_pos.size(); ++i) {
            if (h_pos[(start + i) % h_pos.size()].second != p.at[v][i].after)
                throw InstanceError("mismatch",
                                    "rotation order of predrawn edges changed at vertex " +
                                        std::to_string(v));
        }
        for (std::size_t i = 0; i < p.at[v].size(); ++i) {
            int ia = h_pos[(start + i) % h_pos.size()].first;
            int ib = h_pos[(start + i + 1) % h_pos.size()].first;
            int between = (ib - ia - 1 + int(rot.size())) % int(rot.size());
            if (between > p.at[v][i].free_ports)
                return fail("vertex " + std::to_string(v) + ": " + std::to_string(between) +
                            " edges in a gap with " + std::to_string(p.at[v][i].free_ports) +
                            " free ports");
        }
    }
    return true;
}

}  // namespace orthoext
