#include <algorithm>
#include <functional>

#include "orthoext/extract.hpp"
#include "orthoext/repext.hpp"

namespace orthoext {

namespace {

// All distinct cyclic orders of the incident edges (first entry fixed).
std::vector<std::vector<EdgeId>> cyclic_orders(std::vector<EdgeId> edges) {
    std::vector<std::vector<EdgeId>> out;
    if (edges.empty()) return {{}};
    std::sort(edges.begin(), edges.end());
    std::vector<EdgeId> rest(edges.begin() + 1, edges.end());
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<EdgeId> rot{edges[0]};
        rot.insert(rot.end(), rest.begin(), rest.end());
        out.push_back(rot);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

bool cyclic_subsequence_matches(const std::vector<EdgeId>& rot, const std::vector<EdgeId>& want) {
    std::vector<EdgeId> got;
    for (EdgeId e : rot)
        if (std::find(want.begin(), want.end(), e) != want.end()) got.push_back(e);
    if (got.size() != want.size()) return false;
    if (want.size() <= 2) return true;
    auto it = std::find(got.begin(), got.end(), want[0]);
    if (it == got.end()) return false;
    int start = int(it - got.begin());
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[(start + i) % got.size()] != want[i]) return false;
    return true;
}

struct Enumerator {
    const Graph& g;
    const Embedding& eh;          // embedding to extend
    const Instance* ins;          // non-null when port constraints apply
    const PortConstraintSet* p;
    std::optional<Embedding> found;

    bool try_rotation_system(const std::vector<std::vector<EdgeId>>& rot) {
        SubgraphMask full = SubgraphMask::full(g);
        FaceStructure fs = trace_faces(g, full, rot);
        // Euler per component.
        std::vector<int> vcnt(fs.comps.count, 0), ecnt(fs.comps.count, 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v) ++vcnt[fs.comps.comp_of_vertex[v]];
        for (EdgeId e = 0; e < g.edge_count(); ++e) ++ecnt[fs.comps.comp_of_vertex[g.u(e)]];
        for (int c = 0; c < fs.comps.count; ++c)
            if (vcnt[c] - ecnt[c] + int(fs.faces_of_comp[c].size()) != 2) return false;

        // Outer-face and parent choices per component.
        int k = fs.comps.count;
        std::vector<int> outer(k);
        std::function<bool(int)> choose_outer = [&](int c) -> bool {
            if (c == k) return choose_parents(rot, fs, outer);
            for (int f : fs.faces_of_comp[c]) {
                outer[c] = f;
                if (choose_outer(c + 1)) return true;
            }
            return false;
        };
        return choose_outer(0);
    }

    bool choose_parents(const std::vector<std::vector<EdgeId>>& rot, const FaceStructure& fs,
                        const std::vector<int>& outer) {
        int k = fs.comps.count;
        // Parent options: root, or any bounded face of another component.
        std::vector<std::pair<int, int>> bounded;  // (comp, face)
        for (int c = 0; c < k; ++c)
            for (int f : fs.faces_of_comp[c])
                if (f != outer[c] && !fs.walk[f].empty()) bounded.push_back({c, f});

        std::vector<int> parent(k, -1);  // index into bounded, -1 root
        std::function<bool(int)> rec = [&](int c) -> bool {
            if (c == k) {
                // Acyclicity.
                for (int s = 0; s < k; ++s) {
                    int cur = s, steps = 0;
                    while (parent[cur] >= 0) {
                        cur = bounded[parent[cur]].first;
                        if (++steps > k) return false;
                    }
                }
                Embedding cand;
                cand.sub = SubgraphMask::full(g);
                cand.rotation = rot;
                for (int c2 = 0; c2 < k; ++c2) {
                    Placement pl;
                    pl.outer_dart = fs.canonical_dart(outer[c2]);
                    pl.parent_dart = parent[c2] < 0
                                         ? Placement::kRoot
                                         : fs.canonical_dart(bounded[parent[c2]].second);
                    cand.placement[fs.comps.rep[c2]] = pl;
                }
                if (!embedding_is_plane(g, cand)) return false;
                if (!embedding_extends(g, cand, eh)) return false;
                if (ins && p && !check_port_feasible(*ins, cand, *p)) return false;
                found = cand;
                return true;
            }
            parent[c] = -1;
            if (rec(c + 1)) return true;
            for (int b = 0; b < int(bounded.size()); ++b) {
                if (bounded[b].first == c) continue;
                parent[c] = b;
                if (rec(c + 1)) return true;
            }
            parent[c] = -1;
            return false;
        };
        return rec(0);
    }

    std::optional<Embedding> run() {
        std::vector<std::vector<std::vector<EdgeId>>> cand(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<EdgeId> edges(g.edges_at(v).begin(), g.edges_at(v).end());
            for (auto& rot : cyclic_orders(edges)) {
                if (eh.sub.has_vertex(v)) {
                    if (!cyclic_subsequence_matches(rot, eh.rotation[v])) continue;
                }
                cand[v].push_back(rot);
            }
            if (cand[v].empty()) return std::nullopt;
        }
        std::vector<std::vector<EdgeId>> rot(g.vertex_count());
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == g.vertex_count()) return try_rotation_system(rot);
            for (const auto& r : cand[v]) {
                rot[v] = r;
                if (rec(v + 1)) return true;
            }
            return false;
        };
        if (!rec(0)) return std::nullopt;
        return found;
    }
};

}  // namespace

std::optional<Embedding> brute_force_extension(const Instance& ins, const BruteForceOptions& opt) {
    ins.validate();
    if (ins.g.vertex_count() > opt.vertex_cap)
        throw InstanceError("cap-exceeded", "instance above the oracle vertex cap");
    Embedding eh = extract_embedding(ins);
    PortConstraintSet p = extract_port_constraints(ins);
    Enumerator en{ins.g, eh, opt.ignore_ports ? nullptr : &ins,
                  opt.ignore_ports ? nullptr : &p, std::nullopt};
    return en.run();
}

std::optional<Embedding> brute_force_top(const RepExtTopInstance& r, int vertex_cap) {
    if (r.g.vertex_count() > vertex_cap)
        throw InstanceError("cap-exceeded", "instance above the oracle vertex cap");
    Enumerator en{r.g, r.eh, nullptr, nullptr, std::nullopt};
    return en.run();
}

}  // namespace orthoext
