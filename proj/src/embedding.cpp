#include "orthoext/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orthoext {

namespace {

int rotation_index(const std::vector<EdgeId>& rot, EdgeId e) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == e) return int(i);
    return -1;
}

// Walk successor: entering v along d, leave along the rotation successor of
// the reverse dart. Faces traced this way lie to the right of their darts
// (y-up); bounded faces come out as clockwise walks.
DartId next_dart(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation, DartId d) {
    VertexId v = dart_head(g, d);
    const std::vector<EdgeId>& rot = rotation[v];
    int idx = rotation_index(rot, dart_edge(d));
    if (idx < 0) throw GraphError("rotation does not contain incident edge");
    EdgeId succ = rot[(idx + 1) % rot.size()];
    return dart_from(g, succ, v);
}

std::vector<EdgeId> cyclic_normalized(const std::vector<EdgeId>& rot) {
    if (rot.empty()) return rot;
    auto it = std::min_element(rot.begin(), rot.end());
    std::vector<EdgeId> out;
    out.reserve(rot.size());
    out.insert(out.end(), it, rot.end());
    out.insert(out.end(), rot.begin(), it);
    return out;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int FaceStructure::face_at_dart_from(VertexId v, EdgeId next_edge) const {
    return face_of_dart[dart_from(*g, next_edge, v)];
}

DartId FaceStructure::canonical_dart(int face) const {
    if (walk[face].empty()) return -1;
    return *std::min_element(walk[face].begin(), walk[face].end());
}

FaceStructure trace_faces(const Graph& g, const SubgraphMask& sub,
                          const std::vector<std::vector<EdgeId>>& rotation) {
    FaceStructure fs;
    fs.g = &g;
    fs.sub = sub;
    fs.comps = subgraph_components(g, sub);
    fs.face_of_dart.assign(2 * g.edge_count(), -1);
    fs.virtual_face_of_comp.assign(fs.comps.count, -1);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!sub.has_edge(e)) continue;
        for (int dir = 0; dir < 2; ++dir) {
            DartId d0 = make_dart(e, dir);
            if (fs.face_of_dart[d0] >= 0) continue;
            int f = fs.face_count();
            fs.walk.emplace_back();
            DartId d = d0;
            do {
                fs.face_of_dart[d] = f;
                fs.walk[f].push_back(d);
                d = next_dart(g, rotation, d);
            } while (d != d0);
            fs.comp_of_face.push_back(fs.comps.comp_of_vertex[dart_tail(g, d0)]);
        }
    }
    for (int c = 0; c < fs.comps.count; ++c) {
        if (subgraph_degree(g, sub, fs.comps.rep[c]) == 0) {
            int f = fs.face_count();
            fs.walk.emplace_back();
            fs.comp_of_face.push_back(c);
            fs.virtual_face_of_comp[c] = f;
        }
    }
    fs.faces_of_comp.assign(fs.comps.count, {});
    for (int f = 0; f < fs.face_count(); ++f) fs.faces_of_comp[fs.comp_of_face[f]].push_back(f);
    return fs;
}

namespace {

// Outer face id of a component given its placement.
int outer_face_of_comp(const FaceStructure& fs, const Embedding& emb, int comp) {
    VertexId rep = fs.comps.rep[comp];
    auto it = emb.placement.find(rep);
    if (it == emb.placement.end()) throw GraphError("component without placement");
    if (it->second.outer_dart < 0) {
        int vf = fs.virtual_face_of_comp[comp];
        if (vf < 0) throw GraphError("dartless placement for component with darts");
        return vf;
    }
    int f = fs.face_of_dart[it->second.outer_dart];
    if (f < 0 || fs.comp_of_face[f] != comp) throw GraphError("outer dart not on component");
    return f;
}

}  // namespace

Regions build_regions(const FaceStructure& fs, const Embedding& emb) {
    const int nf = fs.face_count();
    UnionFind uf(nf + 1);
    const int r0 = nf;
    for (int c = 0; c < fs.comps.count; ++c) {
        int outer = outer_face_of_comp(fs, emb, c);
        const Placement& pl = emb.placement.at(fs.comps.rep[c]);
        if (pl.parent_dart == Placement::kRoot) {
            uf.unite(outer, r0);
        } else {
            int pf = fs.face_of_dart[pl.parent_dart];
            if (pf < 0) throw GraphError("parent dart not in structure");
            uf.unite(outer, pf);
        }
    }
    Regions rg;
    rg.region_of_face.assign(nf, -1);
    std::vector<int> id_of_root(nf + 1, -1);
    for (int f = 0; f <= nf; ++f) {
        int root = uf.find(f);
        if (id_of_root[root] < 0) id_of_root[root] = rg.region_count++;
        if (f < nf) rg.region_of_face[f] = id_of_root[root];
        else rg.outer_region = id_of_root[root];
    }
    rg.defining_face.assign(rg.region_count, -1);
    std::vector<int> outer_of_comp(fs.comps.count);
    for (int c = 0; c < fs.comps.count; ++c) outer_of_comp[c] = outer_face_of_comp(fs, emb, c);
    for (int f = 0; f < nf; ++f) {
        int c = fs.comp_of_face[f];
        bool is_outer = (f == outer_of_comp[c]);
        if (!is_outer) {
            int r = rg.region_of_face[f];
            if (r == rg.outer_region)
                throw GraphError("bounded face glued into the unbounded region");
            if (rg.defining_face[r] >= 0)
                throw GraphError("region with two defining faces (invalid nesting)");
            rg.defining_face[r] = f;
        }
    }
    return rg;
}

bool embedding_is_plane(const Graph& g, const Embedding& emb, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (int(emb.rotation.size()) != g.vertex_count()) return fail("rotation size mismatch");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<EdgeId> want;
        if (emb.sub.has_vertex(v)) {
            for (EdgeId e : g.edges_at(v))
                if (emb.sub.has_edge(e)) want.insert(e);
        }
        std::set<EdgeId> got(emb.rotation[v].begin(), emb.rotation[v].end());
        if (emb.rotation[v].size() != got.size()) return fail("duplicate edge in rotation");
        if (got != want) return fail("rotation content mismatch at vertex");
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (emb.sub.has_edge(e) && (!emb.sub.has_vertex(g.u(e)) || !emb.sub.has_vertex(g.v(e))))
            return fail("edge present without endpoint");
    }
    FaceStructure fs;
    try {
        fs = trace_faces(g, emb.sub, emb.rotation);
    } catch (const GraphError& ex) {
        return fail(ex.what());
    }
    // Euler per component.
    std::vector<int> vcnt(fs.comps.count, 0), ecnt(fs.comps.count, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (emb.sub.has_vertex(v)) ++vcnt[fs.comps.comp_of_vertex[v]];
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (emb.sub.has_edge(e)) ++ecnt[fs.comps.comp_of_vertex[g.u(e)]];
    for (int c = 0; c < fs.comps.count; ++c) {
        int f = int(fs.faces_of_comp[c].size());
        if (vcnt[c] - ecnt[c] + f != 2) return fail("euler check failed (nonplanar rotation)");
    }
    // Placement forest.
    if (int(emb.placement.size()) != fs.comps.count) return fail("placement count mismatch");
    std::vector<int> parent(fs.comps.count, -1);
    for (int c = 0; c < fs.comps.count; ++c) {
        VertexId rep = fs.comps.rep[c];
        auto it = emb.placement.find(rep);
        if (it == emb.placement.end()) return fail("missing placement for component");
        const Placement& pl = it->second;
        bool dartless = fs.virtual_face_of_comp[c] >= 0;
        if (dartless != (pl.outer_dart < 0)) return fail("outer dart presence mismatch");
        if (pl.outer_dart >= 0) {
            if (pl.outer_dart >= int(fs.face_of_dart.size()) || fs.face_of_dart[pl.outer_dart] < 0)
                return fail("outer dart absent from structure");
            if (fs.comp_of_face[fs.face_of_dart[pl.outer_dart]] != c)
                return fail("outer dart on wrong component");
        }
        if (pl.parent_dart != Placement::kRoot) {
            if (pl.parent_dart < 0 || pl.parent_dart >= int(fs.face_of_dart.size()) ||
                fs.face_of_dart[pl.parent_dart] < 0)
                return fail("parent dart absent from structure");
            int pf = fs.face_of_dart[pl.parent_dart];
            int pc = fs.comp_of_face[pf];
            if (pc == c) return fail("component nested into itself");
            if (pf == outer_face_of_comp(fs, emb, pc))
                return fail("component nested into an outer face");
            parent[c] = pc;
        }
    }
    for (int c = 0; c < fs.comps.count; ++c) {
        int steps = 0, cur = c;
        while (parent[cur] >= 0) {
            cur = parent[cur];
            if (++steps > fs.comps.count) return fail("nesting forest has a cycle");
        }
    }
    try {
        build_regions(fs, emb);
    } catch (const GraphError& ex) {
        return fail(ex.what());
    }
    return true;
}

Embedding normalized(const Graph& g, const Embedding& emb) {
    FaceStructure fs = trace_faces(g, emb.sub, emb.rotation);
    Embedding out = emb;
    for (auto& [rep, pl] : out.placement) {
        (void)rep;
        if (pl.outer_dart >= 0) pl.outer_dart = fs.canonical_dart(fs.face_of_dart[pl.outer_dart]);
        if (pl.parent_dart != Placement::kRoot)
            pl.parent_dart = fs.canonical_dart(fs.face_of_dart[pl.parent_dart]);
    }
    return out;
}

bool embedding_equal(const Graph& g, const Embedding& a, const Embedding& b) {
    if (a.sub.vertices != b.sub.vertices || a.sub.edges != b.sub.edges) return false;
    if (a.rotation.size() != b.rotation.size()) return false;
    for (std::size_t v = 0; v < a.rotation.size(); ++v) {
        if (cyclic_normalized(a.rotation[v]) != cyclic_normalized(b.rotation[v])) return false;
    }
    Embedding na = normalized(g, a);
    Embedding nb = normalized(g, b);
    if (na.placement.size() != nb.placement.size()) return false;
    for (const auto& [rep, pl] : na.placement) {
        auto it = nb.placement.find(rep);
        if (it == nb.placement.end()) return false;
        if (pl.outer_dart != it->second.outer_dart || pl.parent_dart != it->second.parent_dart)
            return false;
    }
    return true;
}

std::vector<std::vector<int>> region_to_component_face(
    const Graph& g, const Embedding& eg, const FaceStructure& fs_g, const Regions& regions,
    const SubgraphMask& target, const FaceStructure& fs_target) {
    const int nr = regions.region_count;
    std::vector<std::vector<int>> result(fs_target.comps.count);

    // Region adjacency arcs, labelled by the crossing edge.
    struct Arc {
        int other;
        EdgeId via;
    };
    std::vector<std::vector<Arc>> adj(nr);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!eg.sub.has_edge(e)) continue;
        int r1 = regions.region_of_face[fs_g.face_of_dart[make_dart(e, 0)]];
        int r2 = regions.region_of_face[fs_g.face_of_dart[make_dart(e, 1)]];
        adj[r1].push_back({r2, e});
        adj[r2].push_back({r1, e});
    }

    for (int c = 0; c < fs_target.comps.count; ++c) {
        auto& rf = result[c];
        rf.assign(nr, -1);
        if (fs_target.virtual_face_of_comp[c] >= 0) {
            std::fill(rf.begin(), rf.end(), fs_target.virtual_face_of_comp[c]);
            continue;
        }
        std::deque<int> queue;
        // Seed every region adjacent to the component through its own darts.
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!target.has_edge(e)) continue;
            if (fs_target.comps.comp_of_vertex[g.u(e)] != c) continue;
            for (int dir = 0; dir < 2; ++dir) {
                DartId d = make_dart(e, dir);
                int r = regions.region_of_face[fs_g.face_of_dart[d]];
                int h = fs_target.face_of_dart[d];
                if (rf[r] >= 0 && rf[r] != h)
                    throw GraphError("inconsistent face seed during restriction");
                if (rf[r] < 0) {
                    rf[r] = h;
                    queue.push_back(r);
                }
            }
        }
        while (!queue.empty()) {
            int r = queue.front();
            queue.pop_front();
            for (const Arc& a : adj[r]) {
                // Crossing an edge of this component switches faces; any other
                // edge keeps the containing face of the component.
                bool own = target.has_edge(a.via) &&
                           fs_target.comps.comp_of_vertex[g.u(a.via)] == c;
                if (own) continue;
                if (rf[a.other] < 0) {
                    rf[a.other] = rf[r];
                    queue.push_back(a.other);
                } else if (rf[a.other] != rf[r]) {
                    throw GraphError("inconsistent face propagation during restriction");
                }
            }
        }
        for (int r = 0; r < nr; ++r)
            if (rf[r] < 0) throw GraphError("unreached region during restriction");
    }
    return result;
}

Embedding restrict_embedding(const Graph& g, const Embedding& eg, const SubgraphMask& target) {
    for (std::size_t v = 0; v < target.vertices.size(); ++v)
        if (target.vertices[v] && !eg.sub.has_vertex(int(v)))
            throw GraphError("restriction target vertex not embedded");
    for (std::size_t e = 0; e < target.edges.size(); ++e)
        if (target.edges[e] && !eg.sub.has_edge(int(e)))
            throw GraphError("restriction target edge not embedded");

    Embedding out;
    out.sub = target;
    out.rotation.assign(g.vertex_count(), {});
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!target.has_vertex(v)) continue;
        for (EdgeId e : eg.rotation[v])
            if (target.has_edge(e)) out.rotation[v].push_back(e);
    }

    FaceStructure fs_g = trace_faces(g, eg.sub, eg.rotation);
    Regions regions = build_regions(fs_g, eg);
    FaceStructure fs_t = trace_faces(g, target, out.rotation);
    auto rtf = region_to_component_face(g, eg, fs_g, regions, target, fs_t);

    // Probe region per target component: a region of eg adjacent to it.
    std::vector<int> probe(fs_t.comps.count, -1);
    for (int c = 0; c < fs_t.comps.count; ++c) {
        VertexId rep = fs_t.comps.rep[c];
        if (fs_t.virtual_face_of_comp[c] < 0) {
            for (EdgeId e : g.edges_at(rep)) {
                if (target.has_edge(e)) {
                    probe[c] = regions.region_of_face[fs_g.face_of_dart[dart_from(g, e, rep)]];
                    break;
                }
            }
        } else if (!eg.rotation[rep].empty()) {
            EdgeId e = eg.rotation[rep].front();
            probe[c] = regions.region_of_face[fs_g.face_of_dart[dart_from(g, e, rep)]];
        } else {
            // Isolated in the host embedding too: use its placement.
            const Placement& pl = eg.placement.at(rep);
            probe[c] = pl.parent_dart == Placement::kRoot
                           ? regions.outer_region
                           : regions.region_of_face[fs_g.face_of_dart[pl.parent_dart]];
        }
        if (probe[c] < 0) throw GraphError("no probe region for component");
    }

    std::vector<int> outer_face(fs_t.comps.count);
    for (int c = 0; c < fs_t.comps.count; ++c) outer_face[c] = rtf[c][regions.outer_region];

    // containing[c] = components whose bounded face holds c (with that face).
    std::vector<std::vector<std::pair<int, int>>> containing(fs_t.comps.count);
    for (int c = 0; c < fs_t.comps.count; ++c) {
        for (int d = 0; d < fs_t.comps.count; ++d) {
            if (d == c) continue;
            int f = rtf[d][probe[c]];
            if (f != outer_face[d]) containing[c].push_back({d, f});
        }
    }
    for (int c = 0; c < fs_t.comps.count; ++c) {
        Placement pl;
        pl.outer_dart = fs_t.canonical_dart(outer_face[c]);
        pl.parent_dart = Placement::kRoot;
        if (!containing[c].empty()) {
            // The innermost container is the one that is itself contained in
            // every other container of c.
            std::size_t best = 0;
            for (std::size_t i = 1; i < containing[c].size(); ++i) {
                if (containing[containing[c][i].first].size() >
                    containing[containing[c][best].first].size())
                    best = i;
            }
            pl.parent_dart = fs_t.canonical_dart(containing[c][best].second);
        }
        out.placement[fs_t.comps.rep[c]] = pl;
    }
    return out;
}

bool embedding_extends(const Graph& g, const Embedding& eg, const Embedding& eh) {
    for (std::size_t v = 0; v < eh.sub.vertices.size(); ++v)
        if (eh.sub.vertices[v] && !eg.sub.has_vertex(int(v))) return false;
    for (std::size_t e = 0; e < eh.sub.edges.size(); ++e)
        if (eh.sub.edges[e] && !eg.sub.has_edge(int(e))) return false;
    Embedding r = restrict_embedding(g, eg, eh.sub);
    return embedding_equal(g, r, eh);
}

}  // namespace orthoext
