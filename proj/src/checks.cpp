#include "orthoext/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace orthoext {

namespace {

// A drawn feature: either one segment of an edge path, or a vertex point
// (treated as a degenerate segment).
struct Feature {
    Segment seg;
    EdgeId edge = -1;    // -1 for a vertex feature
    int seg_index = -1;
    VertexId vertex = -1;
};

std::string describe(const Feature& f) {
    std::ostringstream os;
    if (f.edge >= 0)
        os << "edge " << f.edge << " segment " << f.seg_index << " (" << f.seg.a.x << ","
           << f.seg.a.y << ")-(" << f.seg.b.x << "," << f.seg.b.y << ")";
    else
        os << "vertex " << f.vertex << " (" << f.seg.a.x << "," << f.seg.a.y << ")";
    return os.str();
}

// Validates the contact between two features; returns false and fills
// `violation` when the contact is illegal.
bool contact_ok(const DrawingView& view, const Feature& fa, const Feature& fb,
                std::string* violation) {
    SegIntersection is = intersect_axis_segments(fa.seg, fb.seg);
    if (is.kind == SegContact::None) return true;
    auto fail = [&](const char* what) {
        if (violation)
            *violation = std::string(what) + ": " + describe(fa) + " vs " + describe(fb);
        return false;
    };
    const Graph& g = *view.g;
    if (fa.edge >= 0 && fb.edge >= 0 && fa.edge == fb.edge) {
        // Same edge: consecutive segments share exactly the bend point.
        if (std::abs(fa.seg_index - fb.seg_index) == 1) {
            if (is.kind == SegContact::Overlap) return fail("overlapping consecutive segments");
            return true;  // perpendicular neighbours meet once, at the bend
        }
        return fail("edge self-intersection");
    }
    if (is.kind == SegContact::Overlap) return fail("collinear overlap");
    const Point p = is.at;
    if (fa.edge >= 0 && fb.edge >= 0) {
        // Distinct edges: legal only at a shared endpoint vertex.
        const OrthoPath& pa = *view.path[fa.edge];
        const OrthoPath& pb = *view.path[fb.edge];
        bool end_a = (p == pa.front() || p == pa.back());
        bool end_b = (p == pb.front() || p == pb.back());
        if (!end_a || !end_b) return fail("edges sharing an interior point");
        VertexId shared = -1;
        for (VertexId w : {g.u(fa.edge), g.v(fa.edge)}) {
            if (g.incident(fb.edge, w) && view.point[w] && *view.point[w] == p) shared = w;
        }
        if (shared < 0) return fail("edges touching at a non-shared point");
        return true;
    }
    if (fa.edge < 0 && fb.edge < 0) {
        return fail("two vertices at the same point");
    }
    const Feature& vf = fa.edge < 0 ? fa : fb;
    const Feature& ef = fa.edge < 0 ? fb : fa;
    const OrthoPath& pe = *view.path[ef.edge];
    if (!g.incident(ef.edge, vf.vertex)) return fail("vertex lying on a foreign edge");
    bool at_end = (p == pe.front() || p == pe.back());
    if (!at_end) return fail("edge passing through its endpoint's vertex point");
    return true;
}

std::vector<Feature> collect_features(const DrawingView& view) {
    std::vector<Feature> fs;
    const Graph& g = *view.g;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!view.path[e]) continue;
        const OrthoPath& p = *view.path[e];
        for (int i = 0; i < p.segment_count(); ++i)
            fs.push_back(Feature{p.segment(i), e, i, -1});
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!view.point[v]) continue;
        fs.push_back(Feature{Segment{*view.point[v], *view.point[v]}, -1, -1, v});
    }
    return fs;
}

}  // namespace

DrawingView view_of_h(const Instance& ins) {
    DrawingView v;
    v.g = &ins.g;
    v.point.assign(ins.g.vertex_count(), nullptr);
    v.path.assign(ins.g.edge_count(), nullptr);
    for (VertexId w = 0; w < ins.g.vertex_count(); ++w)
        if (ins.in_h_vertex(w)) v.point[w] = &ins.h_point[w];
    for (EdgeId e = 0; e < ins.g.edge_count(); ++e)
        if (ins.in_h_edge(e)) v.path[e] = &ins.h_path[e];
    return v;
}

DrawingView view_of(const Graph& g, const OrthoDrawing& d) {
    DrawingView v;
    v.g = &g;
    v.point.assign(g.vertex_count(), nullptr);
    v.path.assign(g.edge_count(), nullptr);
    for (VertexId w = 0; w < g.vertex_count(); ++w) v.point[w] = &d.vertex_point[w];
    for (EdgeId e = 0; e < g.edge_count(); ++e) v.path[e] = &d.edge_path[e];
    return v;
}

bool check_planar_drawing_naive(const DrawingView& view, std::string* violation) {
    std::vector<Feature> fs = collect_features(view);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (!contact_ok(view, fs[i], fs[j], violation)) return false;
    return true;
}

bool check_planar_drawing(const DrawingView& view, std::string* violation) {
    std::vector<Feature> fs = collect_features(view);

    // Horizontal features (including points) grouped by y; verticals by x.
    // Collinear contacts are found inside groups, crossings by an x-sweep.
    std::vector<int> horiz, vert;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Segment& s = fs[i].seg;
        if (s.a.x > s.b.x || (s.a.x == s.b.x && s.a.y > s.b.y)) std::swap(s.a, s.b);
        if (s.horizontal()) horiz.push_back(int(i));
        if (s.vertical() && !s.degenerate()) vert.push_back(int(i));
    }

    {
        std::map<Coord, std::vector<int>> by_y;
        for (int i : horiz) by_y[fs[i].seg.a.y].push_back(i);
        for (auto& [y, group] : by_y) {
            (void)y;
            std::sort(group.begin(), group.end(), [&](int a, int b) {
                return fs[a].seg.a.x < fs[b].seg.a.x;
            });
            // Active members whose x-interval may still touch later starters.
            std::vector<int> active;
            for (int i : group) {
                std::vector<int> keep;
                for (int j : active) {
                    if (fs[j].seg.b.x >= fs[i].seg.a.x) {
                        keep.push_back(j);
                        if (!contact_ok(view, fs[j], fs[i], violation)) return false;
                    }
                }
                keep.push_back(i);
                active.swap(keep);
            }
        }
    }
    {
        std::map<Coord, std::vector<int>> by_x;
        for (int i : vert) by_x[fs[i].seg.a.x].push_back(i);
        for (std::size_t k = 0; k < fs.size(); ++k)
            if (fs[k].seg.degenerate()) by_x[fs[k].seg.a.x].push_back(int(k));
        for (auto& [x, group] : by_x) {
            (void)x;
            std::sort(group.begin(), group.end(), [&](int a, int b) {
                return fs[a].seg.a.y < fs[b].seg.a.y;
            });
            std::vector<int> active;
            for (int i : group) {
                std::vector<int> keep;
                for (int j : active) {
                    if (fs[j].seg.b.y >= fs[i].seg.a.y) {
                        keep.push_back(j);
                        if (!contact_ok(view, fs[j], fs[i], violation)) return false;
                    }
                }
                keep.push_back(i);
                active.swap(keep);
            }
        }
    }

    // x-sweep: verticals and points against active horizontals.
    struct Event {
        Coord x;
        int type;  // 0 add horizontal, 1 probe (vertical/point), 2 remove horizontal
        int idx;
    };
    std::vector<Event> events;
    for (int i : horiz) {
        if (fs[i].seg.degenerate()) continue;
        events.push_back({fs[i].seg.a.x, 0, i});
        events.push_back({fs[i].seg.b.x, 2, i});
    }
    for (int i : vert) events.push_back({fs[i].seg.a.x, 1, i});
    for (std::size_t k = 0; k < fs.size(); ++k)
        if (fs[k].seg.degenerate()) events.push_back({fs[k].seg.a.x, 1, int(k)});
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.type < b.type;
    });
    std::multimap<Coord, int> active;  // y -> horizontal feature index
    for (const Event& ev : events) {
        if (ev.type == 0) {
            active.insert({fs[ev.idx].seg.a.y, ev.idx});
        } else if (ev.type == 2) {
            auto range = active.equal_range(fs[ev.idx].seg.a.y);
            for (auto it = range.first; it != range.second; ++it) {
                if (it->second == ev.idx) {
                    active.erase(it);
                    break;
                }
            }
        } else {
            Coord ylo = fs[ev.idx].seg.a.y, yhi = fs[ev.idx].seg.b.y;
            for (auto it = active.lower_bound(ylo); it != active.end() && it->first <= yhi; ++it) {
                if (!contact_ok(view, fs[it->second], fs[ev.idx], violation)) return false;
            }
        }
    }
    return true;
}

bool check_extension(const OrthoDrawing& d, const Instance& ins, std::string* violation) {
    auto fail = [&](const std::string& m) {
        if (violation) *violation = m;
        return false;
    };
    const Graph& g = ins.g;
    if (int(d.vertex_point.size()) != g.vertex_count() ||
        int(d.edge_path.size()) != g.edge_count())
        return fail("drawing does not cover the graph");
    if (d.scale < 1) return fail("drawing scale must be positive");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const OrthoPath& p = d.edge_path[e];
        if (auto err = p.validate()) return fail("edge " + std::to_string(e) + ": " + *err);
        const Point pu = d.vertex_point[g.u(e)], pv = d.vertex_point[g.v(e)];
        if (!((p.front() == pu && p.back() == pv) || (p.front() == pv && p.back() == pu)))
            return fail("edge " + std::to_string(e) + ": path endpoints mismatch");
        if (p.front() == p.back()) return fail("degenerate edge path");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (ins.in_h_vertex(v) && !(d.vertex_point[v] == ins.h_point[v] * d.scale))
            return fail("vertex " + std::to_string(v) + " moved off its predrawn point");
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!ins.in_h_edge(e)) continue;
        OrthoPath want = ins.h_path[e].scaled(d.scale);
        const OrthoPath& got = d.edge_path[e];
        if (!(got.points == want.points || got.points == want.reversed().points))
            return fail("edge " + std::to_string(e) + " deviates from its predrawn path");
    }
    // Port uniqueness (also implied by planarity; reported separately).
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool used[4] = {false, false, false, false};
        for (EdgeId e : g.edges_at(v)) {
            int p = int(d.edge_path[e].port_at(d.vertex_point[v]));
            if (used[p])
                return fail("two edges on one port at vertex " + std::to_string(v));
            used[p] = true;
        }
    }
    DrawingView view = view_of(g, d);
    std::string sub;
    if (!check_planar_drawing(view, &sub)) return fail("drawing not planar: " + sub);
    return true;
}

}  // namespace orthoext
