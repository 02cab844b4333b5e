#include <algorithm>
#include <cassert>
#include <map>

#include "orthoext/repext.hpp"

namespace orthoext {

namespace {

// Mutable graph used only while applying the vertex gadgets. Edges are never
// reused; killed edges keep their slot so ids stay stable until compaction.
struct WorkGraph {
    struct WEdge {
        VertexId a, b;
        bool alive = true;
        bool in_h = false;
    };
    int nverts = 0;
    std::vector<WEdge> edges;
    std::vector<char> vertex_in_h;
    std::vector<std::vector<int>> hrot;  // H'-rotation per vertex (alive H edges)

    int add_vertex(bool in_h) {
        vertex_in_h.push_back(in_h);
        hrot.emplace_back();
        return nverts++;
    }
    int add_edge(VertexId a, VertexId b, bool in_h) {
        edges.push_back({a, b, true, in_h});
        return int(edges.size()) - 1;
    }
    VertexId other(int e, VertexId w) const { return edges[e].a == w ? edges[e].b : edges[e].a; }
    void replace_in_rotation(VertexId v, int old_e, int new_e) {
        for (int& e : hrot[v])
            if (e == old_e) {
                e = new_e;
                return;
            }
        throw InstanceError("internal", "rotation entry to replace not found");
    }
    void insert_after(VertexId v, int after_e, int new_e) {
        for (std::size_t i = 0; i < hrot[v].size(); ++i) {
            if (hrot[v][i] == after_e) {
                hrot[v].insert(hrot[v].begin() + i + 1, new_e);
                return;
            }
        }
        throw InstanceError("internal", "rotation anchor not found");
    }
};

// Working-id piece chains per original edge, kept oriented u(e) -> v(e).
struct Chains {
    std::vector<std::vector<int>> pieces;
    std::vector<std::vector<char>> forward;

    // Replace the chain piece incident to an endpoint of the original edge by
    // near (endpoint side) then far.
    void split_end(EdgeId orig, int old_we, bool at_is_start, int near_we, int far_we) {
        auto& ps = pieces[orig];
        auto& fw = forward[orig];
        std::size_t idx = at_is_start ? 0 : ps.size() - 1;
        if (ps[idx] != old_we) throw InstanceError("internal", "chain end mismatch");
        if (at_is_start) {
            // New pieces are stored (endpoint, new vertex) and (new vertex,
            // far), both along the path direction.
            ps[0] = far_we;
            fw[0] = 1;
            ps.insert(ps.begin(), near_we);
            fw.insert(fw.begin(), 1);
        } else {
            // Here both new pieces are stored against the path direction.
            ps[idx] = far_we;
            fw[idx] = 0;
            ps.push_back(near_we);
            fw.push_back(0);
        }
    }
};

}  // namespace

ReduceResult reduce(const Instance& ins, const Embedding& eh, const PortConstraintSet& p) {
    const Graph& g = ins.g;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 4)
            throw InstanceError("infeasible-degree",
                                "vertex " + std::to_string(v) + " has degree above four");
        if (ins.in_h_vertex(v) && ins.deg_h(v) >= 2) {
            int sum = 0;
            for (const PortGap& gap : p.at[v]) sum += gap.free_ports;
            if (sum != 4 - ins.deg_h(v))
                throw InstanceError("malformed-constraint",
                                    "port gaps at vertex " + std::to_string(v) +
                                        " violate the sum rule");
        }
    }

    WorkGraph w;
    for (VertexId v = 0; v < g.vertex_count(); ++v) w.add_vertex(ins.in_h_vertex(v));
    Chains chains;
    chains.pieces.resize(g.edge_count());
    chains.forward.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int we = w.add_edge(g.u(e), g.v(e), ins.in_h_edge(e));
        chains.pieces[e] = {we};
        chains.forward[e] = {1};
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (ins.in_h_vertex(v))
            for (EdgeId e : eh.rotation[v]) w.hrot[v].push_back(e);

    GadgetRecord rec;
    std::vector<int> internal_work_edges;
    std::vector<VertexGadget> work_entries;

    // The chain piece of `orig` currently incident to its original endpoint.
    auto end_piece = [&](EdgeId orig, VertexId at) -> std::pair<int, bool> {
        bool at_start = (g.u(orig) == at);
        int we = at_start ? chains.pieces[orig].front() : chains.pieces[orig].back();
        return {we, at_start};
    };

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ++rec.touch_count;
        if (!ins.in_h_vertex(v)) continue;
        int dh = ins.deg_h(v);
        int dg = g.degree(v);
        if (!(1 < dh && dh < dg)) continue;

        std::vector<EdgeId> g_edges;
        for (EdgeId e : g.edges_at(v))
            if (!ins.in_h_edge(e)) g_edges.push_back(e);

        if (dh == 3) {
            // Case 1: a single free edge that must use the one-port gap.
            EdgeId e = g_edges[0];
            const PortGap* gap = nullptr;
            for (const PortGap& pg : p.at[v])
                if (pg.free_ports == 1) gap = &pg;
            if (!gap) throw InstanceError("malformed-constraint", "no unit gap at degree-3 vertex");
            auto [we, at_start] = end_piece(e, v);
            w.edges[we].alive = false;
            VertexId far = w.other(we, v);
            int wp = w.add_vertex(true);
            int stub = w.add_edge(v, wp, true);
            int spoke = w.add_edge(wp, far, false);
            chains.split_end(e, we, at_start, stub, spoke);
            w.insert_after(v, end_piece(gap->after, v).first, stub);
            w.hrot[wp] = {stub};

            VertexGadget vg;
            vg.tag = VertexGadget::Tag::Subdivide;
            vg.v = v;
            vg.w_prime = wp;
            vg.stub = stub;
            vg.spoke_to_orig[spoke] = e;
            work_entries.push_back(vg);
            continue;
        }

        // deg_H(v) == 2 from here on.
        const PortGap* two_gap = nullptr;
        bool balanced = false;
        for (const PortGap& pg : p.at[v]) {
            if (pg.free_ports == 2) two_gap = &pg;
            if (pg.free_ports == 1) balanced = true;
        }
        if (two_gap) {
            // Case 2a: every free edge must land in the two-port gap; merge
            // them through one new vertex.
            int wp = w.add_vertex(true);
            int stub = w.add_edge(v, wp, true);
            VertexGadget vg;
            vg.tag = VertexGadget::Tag::Merge;
            vg.v = v;
            vg.w_prime = wp;
            vg.stub = stub;
            for (EdgeId e : g_edges) {
                auto [we, at_start] = end_piece(e, v);
                w.edges[we].alive = false;
                VertexId far = w.other(we, v);
                int spoke = w.add_edge(wp, far, false);
                chains.split_end(e, we, at_start, stub, spoke);
                vg.spoke_to_orig[spoke] = e;
            }
            w.insert_after(v, end_piece(two_gap->after, v).first, stub);
            w.hrot[wp] = {stub};
            work_entries.push_back(vg);
            continue;
        }
        if (!balanced)
            throw InstanceError("malformed-constraint", "degree-2 vertex without usable gaps");
        if (int(g_edges.size()) == 1) continue;  // one free edge, either side works

        // Case 2b: two free edges that must leave on opposite sides of the
        // predrawn path through v.
        EdgeId e = g_edges[0], estar = g_edges[1];
        EdgeId e1 = p.at[v][0].after, e2 = p.at[v][1].after;
        auto [we, e_start] = end_piece(e, v);
        auto [wstar, estar_start] = end_piece(estar, v);
        auto [we1, e1_start] = end_piece(e1, v);
        auto [we2, e2_start] = end_piece(e2, v);
        VertexId far_w = w.other(we, v), far_z = w.other(wstar, v);
        VertexId far_w1 = w.other(we1, v), far_w2 = w.other(we2, v);
        w.edges[we].alive = false;
        w.edges[wstar].alive = false;
        w.edges[we1].alive = false;
        w.edges[we2].alive = false;

        int wp = w.add_vertex(false);
        int zp = w.add_vertex(false);
        int w1p = w.add_vertex(true);
        int w2p = w.add_vertex(true);
        int arm_w = w.add_edge(v, wp, false);
        int arm_z = w.add_edge(v, zp, false);
        int arm_w1 = w.add_edge(v, w1p, true);
        int arm_w2 = w.add_edge(v, w2p, true);
        int out_w = w.add_edge(wp, far_w, false);
        int out_z = w.add_edge(zp, far_z, false);
        int out_w1 = w.add_edge(w1p, far_w1, true);
        int out_w2 = w.add_edge(w2p, far_w2, true);
        int ring1 = w.add_edge(wp, w1p, false);
        int ring2 = w.add_edge(w1p, zp, false);
        int ring3 = w.add_edge(zp, w2p, false);
        int ring4 = w.add_edge(w2p, wp, false);
        for (int r : {ring1, ring2, ring3, ring4}) internal_work_edges.push_back(r);

        chains.split_end(e, we, e_start, arm_w, out_w);
        chains.split_end(estar, wstar, estar_start, arm_z, out_z);
        chains.split_end(e1, we1, e1_start, arm_w1, out_w1);
        chains.split_end(e2, we2, e2_start, arm_w2, out_w2);

        // Far ends keep the old rotation positions; the new vertices and v
        // itself have H'-degree two, so their order carries no constraint.
        w.replace_in_rotation(far_w1, we1, out_w1);
        w.replace_in_rotation(far_w2, we2, out_w2);
        w.hrot[v] = {arm_w1, arm_w2};
        w.hrot[w1p] = {arm_w1, out_w1};
        w.hrot[w2p] = {arm_w2, out_w2};

        VertexGadget vg;
        vg.tag = VertexGadget::Tag::Cross;
        vg.v = v;
        vg.w_prime = wp;
        vg.z_prime = zp;
        vg.w1_prime = w1p;
        vg.w2_prime = w2p;
        vg.arm_w = arm_w;
        vg.arm_z = arm_z;
        vg.arm_w1 = arm_w1;
        vg.arm_w2 = arm_w2;
        vg.orig_e = e;
        vg.orig_estar = estar;
        vg.orig_e1 = e1;
        vg.orig_e2 = e2;
        work_entries.push_back(vg);
    }

    // Compaction: alive working edges become the reduced graph.
    ReduceResult out;
    std::vector<EdgeId> work_to_final(w.edges.size(), -1);
    for (int i = 0; i < w.nverts; ++i) out.top.g.add_vertex();
    out.top.h.vertices.assign(w.vertex_in_h.begin(), w.vertex_in_h.end());
    for (int e = 0; e < int(w.edges.size()); ++e) {
        if (!w.edges[e].alive) continue;
        work_to_final[e] = out.top.g.add_edge(w.edges[e].a, w.edges[e].b);
        out.top.h.edges.push_back(w.edges[e].in_h);
    }
    auto remap = [&](int we) {
        EdgeId f = work_to_final[we];
        if (f < 0) throw InstanceError("internal", "dead edge referenced after reduction");
        return f;
    };

    out.top.eh.sub = out.top.h;
    out.top.eh.rotation.assign(w.nverts, {});
    for (VertexId v = 0; v < w.nverts; ++v)
        for (int we : w.hrot[v]) out.top.eh.rotation[v].push_back(remap(we));

    out.record.trace.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (std::size_t i = 0; i < chains.pieces[e].size(); ++i) {
            out.record.trace[e].pieces.push_back(remap(chains.pieces[e][i]));
            out.record.trace[e].forward.push_back(chains.forward[e][i]);
        }
    }
    for (int we : internal_work_edges) out.record.internal_edges.push_back(remap(we));
    for (VertexGadget vg : work_entries) {
        if (vg.stub >= 0) vg.stub = remap(vg.stub);
        if (vg.arm_w >= 0) vg.arm_w = remap(vg.arm_w);
        if (vg.arm_z >= 0) vg.arm_z = remap(vg.arm_z);
        if (vg.arm_w1 >= 0) vg.arm_w1 = remap(vg.arm_w1);
        if (vg.arm_w2 >= 0) vg.arm_w2 = remap(vg.arm_w2);
        // Spokes recorded during the sweep may have been re-subdivided by a
        // later gadget at their far end; recover the live spoke as the trace
        // piece at the inner vertex.
        std::map<EdgeId, EdgeId> spokes;
        for (auto [sp, orig] : vg.spoke_to_orig) {
            (void)sp;
            EdgeId found = -1;
            for (EdgeId piece : out.record.trace[orig].pieces) {
                if (piece != vg.stub && out.top.g.incident(piece, vg.w_prime)) {
                    found = piece;
                    break;
                }
            }
            if (found < 0)
                throw InstanceError("internal", "merged edge lost its spoke after reduction");
            spokes[found] = orig;
        }
        vg.spoke_to_orig = std::move(spokes);
        out.record.entries.push_back(vg);
    }
    out.record.touch_count = rec.touch_count;

    // Placements carry over; darts on subdivided predrawn edges move to the
    // piece that kept the referenced endpoint.
    auto map_h_dart = [&](DartId d) -> DartId {
        EdgeId e = dart_edge(d);
        const EdgeTrace& tr = out.record.trace[e];
        if (dart_dir(d) == 0) {
            EdgeId piece = tr.pieces.front();
            return make_dart(piece, tr.forward.front() ? 0 : 1);
        }
        EdgeId piece = tr.pieces.back();
        return make_dart(piece, tr.forward.back() ? 1 : 0);
    };
    for (const auto& [rep, pl] : eh.placement) {
        Placement np = pl;
        if (np.outer_dart >= 0) np.outer_dart = map_h_dart(np.outer_dart);
        if (np.parent_dart != Placement::kRoot) np.parent_dart = map_h_dart(np.parent_dart);
        out.top.eh.placement[rep] = np;
    }

    std::string why;
    if (!embedding_is_plane(out.top.g, out.top.eh, &why))
        throw InstanceError("internal", "reduced embedding invalid: " + why);
    return out;
}

}  // namespace orthoext
