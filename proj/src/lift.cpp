#include <algorithm>
#include <map>

#include "orthoext/repext.hpp"

namespace orthoext {

namespace {

// Where a reduced edge came from.
struct PieceInfo {
    EdgeId orig = -1;   // unique owner, -1 when ambiguous or internal
    bool forward = true;
    bool shared_stub = false;  // first piece of several merged chains
    bool internal = false;     // gadget ring edge
};

std::vector<PieceInfo> build_piece_map(const Graph& gp, const GadgetRecord& rec) {
    std::vector<PieceInfo> info(gp.edge_count());
    std::vector<int> owners(gp.edge_count(), 0);
    for (EdgeId orig = 0; orig < EdgeId(rec.trace.size()); ++orig) {
        const EdgeTrace& tr = rec.trace[orig];
        for (std::size_t i = 0; i < tr.pieces.size(); ++i) {
            EdgeId p = tr.pieces[i];
            ++owners[p];
            info[p].orig = orig;
            info[p].forward = tr.forward[i];
        }
    }
    for (EdgeId e = 0; e < gp.edge_count(); ++e) {
        if (owners[e] > 1) {
            info[e].shared_stub = true;
            info[e].orig = -1;
        }
    }
    for (EdgeId e : rec.internal_edges) {
        info[e].internal = true;
        info[e].orig = -1;
    }
    return info;
}

}  // namespace

Embedding lift(const Instance& ins, const Embedding& e_gp, const RepExtTopInstance& top,
               const GadgetRecord& rec) {
    const Graph& g = ins.g;
    const Graph& gp = top.g;
    std::vector<PieceInfo> info = build_piece_map(gp, rec);

    // Reduced dart -> original dart, defined for clean pieces.
    auto map_clean_dart = [&](DartId d) -> DartId {
        const PieceInfo& pi = info[dart_edge(d)];
        int orig_dir = ((dart_dir(d) == 0) == bool(pi.forward)) ? 0 : 1;
        return make_dart(pi.orig, orig_dir);
    };

    // Rotations at original vertices: map pieces, expand merge stubs through
    // the rotation at their inner vertex.
    Embedding out;
    out.sub = SubgraphMask::full(g);
    out.rotation.assign(g.vertex_count(), {});
    std::map<EdgeId, const VertexGadget*> stub_entry;
    for (const VertexGadget& vg : rec.entries)
        if (vg.stub >= 0) stub_entry[vg.stub] = &vg;

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (EdgeId ep : e_gp.rotation[v]) {
            auto it = stub_entry.find(ep);
            if (it != stub_entry.end() && it->second->v == v) {
                const VertexGadget& vg = *it->second;
                // Replace the stub by the merged edges, ordered by the
                // rotation at the inner vertex after the stub.
                const std::vector<EdgeId>& wrot = e_gp.rotation[vg.w_prime];
                int pos = -1;
                for (std::size_t i = 0; i < wrot.size(); ++i)
                    if (wrot[i] == vg.stub) pos = int(i);
                if (pos < 0)
                    throw InstanceError("internal", "stub missing from inner rotation");
                for (std::size_t k = 1; k < wrot.size(); ++k) {
                    EdgeId spoke = wrot[(pos + k) % wrot.size()];
                    auto so = vg.spoke_to_orig.find(spoke);
                    if (so == vg.spoke_to_orig.end())
                        throw InstanceError("internal", "unexpected edge at merge vertex");
                    out.rotation[v].push_back(so->second);
                }
                continue;
            }
            const PieceInfo& pi = info[ep];
            if (pi.internal)
                throw InstanceError("internal", "ring edge attached to an original vertex");
            if (pi.orig < 0) throw InstanceError("internal", "unmapped edge at original vertex");
            out.rotation[v].push_back(pi.orig);
        }
    }

    // Structural read-off check for the crossing gadgets: around v the four
    // arms alternate predrawn/free, i.e. cyclic order (e, e1, e*, e2) up to
    // rotation and reversal.
    for (const VertexGadget& vg : rec.entries) {
        if (vg.tag != VertexGadget::Tag::Cross) continue;
        const std::vector<EdgeId>& rot = out.rotation[vg.v];
        if (rot.size() != 4)
            throw InstanceError("internal", "crossing gadget vertex without four edges");
        int pos_e = -1;
        for (int i = 0; i < 4; ++i)
            if (rot[i] == vg.orig_e) pos_e = i;
        if (pos_e < 0) throw InstanceError("internal", "crossing gadget lost its free edge");
        bool fwd = rot[(pos_e + 1) % 4] == vg.orig_e1 && rot[(pos_e + 2) % 4] == vg.orig_estar &&
                   rot[(pos_e + 3) % 4] == vg.orig_e2;
        bool rev = rot[(pos_e + 1) % 4] == vg.orig_e2 && rot[(pos_e + 2) % 4] == vg.orig_estar &&
                   rot[(pos_e + 3) % 4] == vg.orig_e1;
        if (!fwd && !rev)
            throw InstanceError("internal",
                                "crossing gadget arms are not in the guaranteed cyclic order");
    }

    // Placements: components keep their representatives (new vertices have
    // larger ids). Map each placement dart by walking its face to a cleanly
    // mapped dart.
    FaceStructure fsp = trace_faces(gp, e_gp.sub, e_gp.rotation);
    auto map_face_dart = [&](DartId d) -> DartId {
        int f = fsp.face_of_dart[d];
        for (DartId cand : fsp.walk[f]) {
            const PieceInfo& pi = info[dart_edge(cand)];
            if (pi.orig >= 0 && !pi.shared_stub) return map_clean_dart(cand);
        }
        throw InstanceError("internal", "face without a mappable dart");
    };

    for (const auto& [rep, pl] : e_gp.placement) {
        if (rep >= g.vertex_count()) {
            // A component made purely of gadget vertices cannot exist: every
            // gadget vertex attaches to its original vertex.
            throw InstanceError("internal", "component represented by a gadget vertex");
        }
        Placement np;
        np.outer_dart = pl.outer_dart < 0 ? -1 : map_face_dart(pl.outer_dart);
        np.parent_dart =
            pl.parent_dart == Placement::kRoot ? Placement::kRoot : map_face_dart(pl.parent_dart);
        out.placement[rep] = np;
    }
    out = normalized(g, out);

    std::string why;
    if (!embedding_is_plane(g, out, &why))
        throw InstanceError("internal", "lifted embedding is not plane: " + why);
    return out;
}

}  // namespace orthoext
