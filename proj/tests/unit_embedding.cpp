#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orthoext/embedding.hpp"
#include "orthoext/extract.hpp"
#include "support/gen.hpp"

using namespace orthoext;
using namespace orthoext::testsupport;

namespace {

Instance unit_square() {
    InstanceBuilder b;
    VertexId a = b.h_vertex(0, 0);
    VertexId c = b.h_vertex(1, 0);
    VertexId d = b.h_vertex(1, 1);
    VertexId e = b.h_vertex(0, 1);
    b.h_edge(a, c);
    b.h_edge(c, d);
    b.h_edge(d, e);
    b.h_edge(e, a);
    return b.take();
}

}  // namespace

TEST_CASE("unit square rotation order matches the geometric clockwise order") {
    Instance ins = unit_square();
    Embedding emb = extract_embedding(ins);
    // At (0,0): the edge to (0,1) (north) comes before the edge to (1,0)
    // (east) in clockwise order.
    EdgeId north = ins.g.find_edge(0, 3);
    EdgeId east = ins.g.find_edge(0, 1);
    REQUIRE(emb.rotation[0].size() == 2);
    CHECK(emb.rotation[0][0] == north);
    CHECK(emb.rotation[0][1] == east);
}

TEST_CASE("square faces: one bounded, one outer") {
    Instance ins = unit_square();
    Embedding emb = extract_embedding(ins);
    FaceStructure fs = trace_faces(ins.g, ins.h, emb.rotation);
    REQUIRE(fs.comps.count == 1);
    REQUIRE(fs.face_count() == 2);
    std::vector<int> outer = geometric_outer_faces(ins, fs);
    int of = outer[0];
    int inner = of == 0 ? 1 : 0;
    CHECK(polygon_signed_area2(face_walk_polygon(ins, fs, inner)) < 0);
    CHECK(polygon_signed_area2(face_walk_polygon(ins, fs, of)) > 0);
    CHECK(emb.placement.at(0).outer_dart == fs.canonical_dart(of));
    CHECK(emb.placement.at(0).parent_dart == Placement::kRoot);
    std::string why;
    CHECK(embedding_is_plane(ins.g, emb, &why));
}

TEST_CASE("isolated vertex nests in the unbounded face next to a path") {
    InstanceBuilder b;
    VertexId u = b.h_vertex(0, 0);
    VertexId v = b.h_vertex(1, 0);
    VertexId w = b.h_vertex(1, 1);
    VertexId z = b.h_vertex(5, 5);
    b.h_edge(u, v);
    b.h_edge(v, w);
    Instance ins = b.take();
    Embedding emb = extract_embedding(ins);
    REQUIRE(emb.placement.count(z));
    CHECK(emb.placement.at(z).parent_dart == Placement::kRoot);
    CHECK(emb.placement.at(z).outer_dart == -1);
    CHECK(embedding_is_plane(ins.g, emb));
}

TEST_CASE("component inside a square face is nested there") {
    InstanceBuilder b;
    VertexId a = b.h_vertex(0, 0);
    VertexId c = b.h_vertex(10, 0);
    VertexId d = b.h_vertex(10, 10);
    VertexId e = b.h_vertex(0, 10);
    b.h_edge(a, c);
    b.h_edge(c, d);
    b.h_edge(d, e);
    b.h_edge(e, a);
    VertexId in1 = b.h_vertex(4, 4);
    VertexId in2 = b.h_vertex(6, 4);
    b.h_edge(in1, in2);
    VertexId out1 = b.h_vertex(20, 0);
    Instance ins = b.take();
    (void)out1;
    Embedding emb = extract_embedding(ins);
    FaceStructure fs = trace_faces(ins.g, ins.h, emb.rotation);
    // in1's component parent must be the bounded square face.
    const Placement& pl = emb.placement.at(in1);
    REQUIRE(pl.parent_dart != Placement::kRoot);
    int pf = fs.face_of_dart[pl.parent_dart];
    CHECK(fs.comp_of_face[pf] == fs.comps.comp_of_vertex[a]);
    CHECK(polygon_signed_area2(face_walk_polygon(ins, fs, pf)) < 0);
    // out1 stays a root.
    CHECK(emb.placement.at(out1).parent_dart == Placement::kRoot);
    CHECK(embedding_is_plane(ins.g, emb));
}

TEST_CASE("embedding invariant under translation and positive scaling") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        RandomInstanceOptions opt;
        Instance ins = random_grid_instance(rng, opt);
        Embedding base = extract_embedding(ins);
        Instance moved = ins;
        for (VertexId v = 0; v < moved.g.vertex_count(); ++v)
            if (moved.in_h_vertex(v)) moved.h_point[v] = moved.h_point[v] + Point{13, -7};
        for (EdgeId e = 0; e < moved.g.edge_count(); ++e)
            if (moved.in_h_edge(e))
                for (Point& p : moved.h_path[e].points) p = p + Point{13, -7};
        CHECK(embedding_equal(ins.g, base, extract_embedding(moved)));
        Instance scaled = ins.scaled(3);
        CHECK(embedding_equal(ins.g, base, extract_embedding(scaled)));
    }
}

TEST_CASE("restriction of an embedding to itself is the identity") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 40; ++it) {
        RandomInstanceOptions opt;
        Instance ins = random_grid_instance(rng, opt);
        Embedding emb = extract_embedding(ins);
        Embedding r = restrict_embedding(ins.g, emb, ins.h);
        CHECK(embedding_equal(ins.g, emb, r));
        CHECK(embedding_extends(ins.g, emb, emb));
    }
}

TEST_CASE("restriction forgets a free part but keeps nesting") {
    // Square with a predrawn chord-ish inner component and the full drawing
    // as host embedding; restricting to the square alone keeps the inner
    // component nested.
    InstanceBuilder b;
    VertexId a = b.h_vertex(0, 0);
    VertexId c = b.h_vertex(8, 0);
    VertexId d = b.h_vertex(8, 8);
    VertexId e = b.h_vertex(0, 8);
    b.h_edge(a, c);
    b.h_edge(c, d);
    b.h_edge(d, e);
    b.h_edge(e, a);
    VertexId p = b.h_vertex(3, 3);
    VertexId q = b.h_vertex(5, 3);
    EdgeId pq = b.h_edge(p, q);
    Instance ins = b.take();
    Embedding emb = extract_embedding(ins);

    SubgraphMask square = ins.h;
    square.vertices[p] = 0;
    square.vertices[q] = 0;
    square.edges[pq] = 0;
    Embedding rs = restrict_embedding(ins.g, emb, square);
    CHECK(rs.placement.size() == 1);

    SubgraphMask inner = ins.h;
    for (VertexId v : {a, c, d, e}) inner.vertices[v] = 0;
    for (EdgeId ed = 0; ed < ins.g.edge_count(); ++ed)
        if (ed != pq) inner.edges[ed] = 0;
    Embedding ri = restrict_embedding(ins.g, emb, inner);
    CHECK(ri.placement.at(p).parent_dart == Placement::kRoot);
}
