#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "orthoext/repext.hpp"

namespace orthoext {

namespace {

struct SearchState {
    SubgraphMask sub;
    std::vector<std::vector<EdgeId>> rot;
    std::map<VertexId, Placement> place;
};

struct StateView {
    FaceStructure fs;
    Regions rg;
};

StateView derive(const Graph& g, const SearchState& st) {
    StateView v;
    v.fs = trace_faces(g, st.sub, st.rot);
    Embedding tmp;
    tmp.sub = st.sub;
    tmp.rotation = st.rot;
    tmp.placement = st.place;
    v.rg = build_regions(v.fs, tmp);
    return v;
}

// Gap at a touched vertex where a new dart can be inserted.
struct Corner {
    VertexId v = -1;
    int insert_pos = 0;  // index into rot[v] where the new edge goes
    int face = -1;       // face of the gap (virtual face for isolated vertices)
};

std::vector<Corner> corners_of(const Graph& /*g*/, const SearchState& st, const StateView& view,
                               VertexId v) {
    std::vector<Corner> out;
    const auto& rot = st.rot[v];
    if (rot.empty()) {
        int comp = view.fs.comp_of_vertex(v);
        out.push_back({v, 0, view.fs.virtual_face_of_comp[comp]});
        return out;
    }
    for (int i = 0; i < int(rot.size()); ++i) {
        EdgeId next = rot[(i + 1) % rot.size()];
        out.push_back({v, i + 1, view.fs.face_at_dart_from(v, next)});
    }
    return out;
}

int position_region(const StateView& view, const Placement& pl) {
    if (pl.parent_dart == Placement::kRoot) return view.rg.outer_region;
    return view.rg.region_of_face[view.fs.face_of_dart[pl.parent_dart]];
}

struct BaseMove {
    enum class Kind { Floating, Pendant, SameComp, MergeComps } kind = Kind::Floating;
    EdgeId e = -1;
    int region = -1;  // Floating only
    Corner cu{}, cv{};
};

std::vector<BaseMove> moves_for_edge(const Graph& g, const SearchState& st, const StateView& view,
                                     EdgeId e) {
    std::vector<BaseMove> out;
    VertexId u = g.u(e), v = g.v(e);
    bool tu = st.sub.has_vertex(u), tv = st.sub.has_vertex(v);
    if (!tu && !tv) {
        for (int r = 0; r < view.rg.region_count; ++r)
            out.push_back({BaseMove::Kind::Floating, e, r, {}, {}});
        return out;
    }
    if (tu != tv) {
        VertexId t = tu ? u : v;
        for (const Corner& c : corners_of(g, st, view, t))
            out.push_back({BaseMove::Kind::Pendant, e, -1, c, {}});
        return out;
    }
    int comp_u = view.fs.comp_of_vertex(u);
    int comp_v = view.fs.comp_of_vertex(v);
    for (const Corner& cu : corners_of(g, st, view, u)) {
        for (const Corner& cv : corners_of(g, st, view, v)) {
            if (comp_u == comp_v) {
                if (cu.face == cv.face)
                    out.push_back({BaseMove::Kind::SameComp, e, -1, cu, cv});
            } else {
                if (view.rg.region_of_face[cu.face] == view.rg.region_of_face[cv.face])
                    out.push_back({BaseMove::Kind::MergeComps, e, -1, cu, cv});
            }
        }
    }
    return out;
}

void insert_rot(SearchState& st, VertexId v, int pos, EdgeId e) {
    st.rot[v].insert(st.rot[v].begin() + pos, e);
}

// Applies a base move, expanding its secondary choices (side assignment of
// components affected by a face split, outer-face choice) into successors.
std::vector<SearchState> successors(const Graph& g, const SearchState& st, const StateView& view,
                                    const BaseMove& m) {
    std::vector<SearchState> out;
    VertexId u = g.u(m.e), v = g.v(m.e);

    if (m.kind == BaseMove::Kind::Floating) {
        SearchState next = st;
        next.sub.vertices[u] = next.sub.vertices[v] = 1;
        next.sub.edges[m.e] = 1;
        next.rot[u] = {m.e};
        next.rot[v] = {m.e};
        Placement pl;
        pl.outer_dart = make_dart(m.e, 0);
        pl.parent_dart = m.region == view.rg.outer_region
                             ? Placement::kRoot
                             : view.fs.canonical_dart(view.rg.defining_face[m.region]);
        next.place[std::min(u, v)] = pl;
        out.push_back(std::move(next));
        return out;
    }

    if (m.kind == BaseMove::Kind::Pendant) {
        VertexId t = m.cu.v;
        VertexId fresh = (t == u) ? v : u;
        SearchState next = st;
        next.sub.vertices[fresh] = 1;
        next.sub.edges[m.e] = 1;
        insert_rot(next, t, m.cu.insert_pos, m.e);
        next.rot[fresh] = {m.e};
        int comp = view.fs.comp_of_vertex(t);
        VertexId rep = view.fs.comps.rep[comp];
        Placement pl = next.place.at(rep);
        if (pl.outer_dart < 0) pl.outer_dart = make_dart(m.e, 0);  // was an isolated vertex
        next.place.erase(rep);
        next.place[std::min(rep, fresh)] = pl;
        out.push_back(std::move(next));
        return out;
    }

    if (m.kind == BaseMove::Kind::MergeComps) {
        int comp_u = view.fs.comp_of_vertex(u);
        int comp_v = view.fs.comp_of_vertex(v);
        VertexId rep_u = view.fs.comps.rep[comp_u], rep_v = view.fs.comps.rep[comp_v];
        const Placement& pu = st.place.at(rep_u);
        const Placement& pv = st.place.at(rep_v);
        int outer_u = pu.outer_dart < 0 ? view.fs.virtual_face_of_comp[comp_u]
                                        : view.fs.face_of_dart[pu.outer_dart];
        int outer_v = pv.outer_dart < 0 ? view.fs.virtual_face_of_comp[comp_v]
                                        : view.fs.face_of_dart[pv.outer_dart];
        bool u_bounded = (m.cu.face != outer_u);
        bool v_bounded = (m.cv.face != outer_v);
        if (u_bounded && v_bounded)
            throw GraphError("two bounded corner faces in one region");
        SearchState next = st;
        next.sub.edges[m.e] = 1;
        insert_rot(next, u, m.cu.insert_pos, m.e);
        insert_rot(next, v, m.cv.insert_pos, m.e);
        // Keep the placement of the side whose corner was a bounded face; a
        // component attached through its outer face dissolves into it.
        Placement keep = u_bounded ? pu : (v_bounded ? pv : pu);
        if (keep.outer_dart < 0)
            keep.outer_dart = (!u_bounded && pv.outer_dart >= 0) ? pv.outer_dart
                                                                 : make_dart(m.e, 0);
        next.place.erase(rep_u);
        next.place.erase(rep_v);
        next.place[std::min(rep_u, rep_v)] = keep;
        out.push_back(std::move(next));
        return out;
    }

    // SameComp: the insertion splits the corner face in two.
    int comp = view.fs.comp_of_vertex(u);
    VertexId rep = view.fs.comps.rep[comp];
    int f = m.cu.face;
    const Placement& pc = st.place.at(rep);
    int outer_f = pc.outer_dart < 0 ? view.fs.virtual_face_of_comp[comp]
                                    : view.fs.face_of_dart[pc.outer_dart];
    bool splitting_outer = (f == outer_f);
    int region_f = view.rg.region_of_face[f];

    std::vector<VertexId> affected;
    for (const auto& [r, pl] : st.place) {
        if (r == rep) continue;
        if (position_region(view, pl) == region_f) affected.push_back(r);
    }

    SearchState base = st;
    base.sub.edges[m.e] = 1;
    insert_rot(base, u, m.cu.insert_pos, m.e);
    insert_rot(base, v, m.cv.insert_pos, m.e);
    FaceStructure fs2 = trace_faces(g, base.sub, base.rot);
    int f1 = fs2.face_of_dart[make_dart(m.e, 0)];
    int f2 = fs2.face_of_dart[make_dart(m.e, 1)];
    if (f1 == f2) throw GraphError("face split produced a single face");

    std::vector<int> outer_choices = splitting_outer ? std::vector<int>{f1, f2}
                                                     : std::vector<int>{-1};
    for (int oc : outer_choices) {
        SearchState withouter = base;
        if (oc >= 0) {
            Placement pl = withouter.place.at(rep);
            pl.outer_dart = fs2.canonical_dart(oc);
            withouter.place[rep] = pl;
        }
        int pocket = splitting_outer ? ((oc == f1) ? f2 : f1) : -1;
        int k = int(affected.size());
        for (int maskbits = 0; maskbits < (1 << k); ++maskbits) {
            SearchState next = withouter;
            for (int i = 0; i < k; ++i) {
                bool alt = (maskbits >> i) & 1;
                Placement pl = next.place.at(affected[i]);
                if (splitting_outer) {
                    if (alt) pl.parent_dart = fs2.canonical_dart(pocket);
                } else {
                    pl.parent_dart = fs2.canonical_dart(alt ? f2 : f1);
                }
                next.place[affected[i]] = pl;
            }
            out.push_back(std::move(next));
        }
    }
    return out;
}

std::string memo_key(const Graph& g, const SearchState& st, const StateView& view) {
    std::ostringstream os;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (EdgeId e : st.rot[v]) os << e << ',';
        os << ';';
    }
    os << '|';
    for (const auto& [rep, pl] : st.place) {
        int od =
            pl.outer_dart < 0 ? -1 : view.fs.canonical_dart(view.fs.face_of_dart[pl.outer_dart]);
        int pd = pl.parent_dart == Placement::kRoot
                     ? -2
                     : view.fs.canonical_dart(view.fs.face_of_dart[pl.parent_dart]);
        os << rep << ':' << od << ':' << pd << ';';
    }
    return os.str();
}

struct Searcher {
    const Graph& g;
    std::vector<EdgeId> free_edges;
    std::unordered_set<std::string> failed;
    std::optional<SearchState> found;

    explicit Searcher(const Graph& gr) : g(gr) {}

    bool dfs(const SearchState& st) {
        std::vector<EdgeId> remaining;
        for (EdgeId e : free_edges)
            if (!st.sub.has_edge(e)) remaining.push_back(e);
        if (remaining.empty()) {
            found = st;
            return true;
        }
        StateView view = derive(g, st);
        std::string key = memo_key(g, st, view);
        if (failed.count(key)) return false;

        // Most-constrained edge first, preferring edges that touch the
        // current structure (floating edges have the widest fan-out).
        EdgeId best = -1;
        bool best_touching = false;
        std::vector<BaseMove> best_moves;
        for (EdgeId e : remaining) {
            auto mv = moves_for_edge(g, st, view, e);
            if (mv.empty()) {
                failed.insert(key);
                return false;
            }
            bool touching = st.sub.has_vertex(g.u(e)) || st.sub.has_vertex(g.v(e));
            bool better = best < 0 || (touching && !best_touching) ||
                          (touching == best_touching && mv.size() < best_moves.size());
            if (better) {
                best = e;
                best_touching = touching;
                best_moves = std::move(mv);
            }
        }
        for (const BaseMove& m : best_moves) {
            for (SearchState& next : successors(g, st, view, m)) {
                if (dfs(next)) return true;
            }
        }
        failed.insert(key);
        return false;
    }
};

}  // namespace

std::optional<Embedding> test_embedding_extension(const RepExtTopInstance& r) {
    const Graph& g = r.g;
    std::string why;
    if (!embedding_is_plane(g, r.eh, &why))
        throw InstanceError("bad-embedding", "input embedding invalid: " + why);

    // Cheap density reject per component of the full graph.
    Components comps = subgraph_components(g, SubgraphMask::full(g));
    {
        std::vector<int> vs(comps.count, 0), es(comps.count, 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v) ++vs[comps.comp_of_vertex[v]];
        for (EdgeId e = 0; e < g.edge_count(); ++e) ++es[comps.comp_of_vertex[g.u(e)]];
        for (int c = 0; c < comps.count; ++c)
            if (vs[c] >= 3 && es[c] > 3 * vs[c] - 6) return std::nullopt;
    }

    SearchState st;
    st.sub = r.h;
    st.rot = r.eh.rotation;
    st.place = r.eh.placement;

    Searcher searcher(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!r.h.has_edge(e)) searcher.free_edges.push_back(e);

    if (!searcher.dfs(st)) return std::nullopt;

    SearchState res = *searcher.found;
    Embedding out;
    out.sub = res.sub;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!out.sub.vertices[v]) {
            out.sub.vertices[v] = 1;  // leftover isolated vertex
            res.place[v] = Placement{-1, Placement::kRoot};
        }
    }
    out.rotation = res.rot;
    out.placement = res.place;
    out = normalized(g, out);

    if (!embedding_is_plane(g, out, &why))
        throw InstanceError("internal", "search produced a non-plane embedding: " + why);
    if (!embedding_extends(g, out, r.eh))
        throw InstanceError("internal", "search result does not extend the input embedding");
    return out;
}

}  // namespace orthoext
