#include "orthoext/extract.hpp"
#include "orthoext/repext.hpp"

namespace orthoext {

std::optional<Embedding> test_extension(const Instance& ins) {
    ins.validate();
    Embedding eh = extract_embedding(ins);
    PortConstraintSet p = extract_port_constraints(ins);

    // Necessary condition: every vertex must have enough free ports.
    for (VertexId v = 0; v < ins.g.vertex_count(); ++v) {
        if (!ins.in_h_vertex(v)) continue;
        int free_edges = ins.g.degree(v) - ins.deg_h(v);
        if (free_edges > p.free_total[v]) return std::nullopt;
    }

    ReduceResult rr = reduce(ins, eh, p);
    std::optional<Embedding> sol = test_embedding_extension(rr.top);
    if (!sol) return std::nullopt;

    Embedding eg = lift(ins, *sol, rr.top, rr.record);
    // The lifted embedding is guaranteed to satisfy both conditions; a
    // failure here is an implementation fault, never a legal verdict.
    if (!embedding_extends(ins.g, eg, eh))
        throw InstanceError("internal", "lifted embedding does not extend the predrawing");
    std::string why;
    if (!check_port_feasible(ins, eg, p, &why))
        throw InstanceError("internal", "lifted embedding violates port constraints: " + why);
    return eg;
}

}  // namespace orthoext
