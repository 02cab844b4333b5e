#include "orthoext/extract.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace orthoext {

namespace {

// Clockwise rotation at a drawn vertex: edges ordered by their first-segment
// port in the global N,W,S,E order.
std::vector<EdgeId> geometric_rotation(const Instance& ins, VertexId v) {
    std::array<EdgeId, 4> by_port{-1, -1, -1, -1};
    for (EdgeId e : ins.g.edges_at(v)) {
        if (!ins.in_h_edge(e)) continue;
        PortDir d = ins.h_path[e].port_at(ins.h_point[v]);
        if (by_port[int(d)] != -1)
            throw InstanceError("port-conflict", "two predrawn edges on one port at vertex " +
                                                     std::to_string(v));
        by_port[int(d)] = e;
    }
    std::vector<EdgeId> rot;
    for (int i = 0; i < 4; ++i)
        if (by_port[i] >= 0) rot.push_back(by_port[i]);
    return rot;
}

}  // namespace

std::vector<Point> face_walk_polygon(const Instance& ins, const FaceStructure& fs, int face) {
    std::vector<Point> poly;
    for (DartId d : fs.walk[face]) {
        EdgeId e = dart_edge(d);
        const OrthoPath& p = ins.h_path[e];
        VertexId t = dart_tail(ins.g, d);
        if (p.front() == ins.h_point[t]) {
            poly.insert(poly.end(), p.points.begin(), p.points.end() - 1);
        } else {
            poly.insert(poly.end(), p.points.rbegin(), p.points.rend() - 1);
        }
    }
    return poly;
}

std::vector<int> geometric_outer_faces(const Instance& ins, const FaceStructure& fs) {
    // Traced faces lie to the right of their darts, so bounded face walks
    // run clockwise (negative shoelace) and the outer walk is the unique one
    // with non-negative area (zero for trees).
    std::vector<int> outer(fs.comps.count, -1);
    for (int c = 0; c < fs.comps.count; ++c) {
        if (fs.virtual_face_of_comp[c] >= 0) {
            outer[c] = fs.virtual_face_of_comp[c];
            continue;
        }
        for (int f : fs.faces_of_comp[c]) {
            Wide a2 = polygon_signed_area2(face_walk_polygon(ins, fs, f));
            if (a2 >= 0) {
                if (outer[c] >= 0)
                    throw InstanceError("faces", "component with two non-negative-area walks");
                outer[c] = f;
            }
        }
        if (outer[c] < 0) throw InstanceError("faces", "component without an outer walk");
    }
    return outer;
}

Embedding extract_embedding(const Instance& ins) {
    ins.validate();
    Embedding emb;
    emb.sub = ins.h;
    emb.rotation.assign(ins.g.vertex_count(), {});
    for (VertexId v = 0; v < ins.g.vertex_count(); ++v)
        if (ins.in_h_vertex(v)) emb.rotation[v] = geometric_rotation(ins, v);

    FaceStructure fs = trace_faces(ins.g, ins.h, emb.rotation);
    std::vector<int> outer = geometric_outer_faces(ins, fs);

    // Bounded-face polygons, for containment tests.
    std::vector<std::vector<Point>> poly(fs.face_count());
    std::vector<Wide> area2(fs.face_count(), 0);
    for (int f = 0; f < fs.face_count(); ++f) {
        if (fs.walk[f].empty()) continue;
        poly[f] = face_walk_polygon(ins, fs, f);
        area2[f] = polygon_signed_area2(poly[f]);
    }

    for (int c = 0; c < fs.comps.count; ++c) {
        Placement pl;
        pl.outer_dart = fs.walk[outer[c]].empty() ? -1 : fs.canonical_dart(outer[c]);
        pl.parent_dart = Placement::kRoot;
        Point probe = ins.h_point[fs.comps.rep[c]];
        int best_face = -1;
        for (int f = 0; f < fs.face_count(); ++f) {
            if (fs.comp_of_face[f] == c || fs.walk[f].empty()) continue;
            if (f == outer[fs.comp_of_face[f]]) continue;  // only bounded faces contain
            if (!point_strictly_inside(probe, poly[f])) continue;
            // Bounded areas are negative; the innermost container encloses
            // the least area, i.e. has the largest signed value.
            if (best_face < 0 || area2[f] > area2[best_face]) best_face = f;
        }
        if (best_face >= 0) pl.parent_dart = fs.canonical_dart(best_face);
        emb.placement[fs.comps.rep[c]] = pl;
    }
    return emb;
}

}  // namespace orthoext
