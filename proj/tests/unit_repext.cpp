#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orthoext/extract.hpp"
#include "orthoext/repext.hpp"
#include "support/gen.hpp"

using namespace orthoext;
using namespace orthoext::testsupport;

namespace {

ReduceResult reduce_of(const Instance& ins) {
    Embedding eh = extract_embedding(ins);
    PortConstraintSet p = extract_port_constraints(ins);
    return reduce(ins, eh, p);
}

}  // namespace

TEST_CASE("reduce is the identity when nothing is free") {
    std::mt19937_64 rng(3);
    RandomInstanceOptions opt;
    opt.h_edge_prob = 1.0;
    opt.extra_edge_prob = 0.0;
    opt.allow_free_vertices = false;
    Instance ins = random_grid_instance(rng, opt);
    ReduceResult rr = reduce_of(ins);
    CHECK(rr.top.g.vertex_count() == ins.g.vertex_count());
    CHECK(rr.top.g.edge_count() == ins.g.edge_count());
    CHECK(rr.record.entries.empty());
    CHECK(rr.record.touch_count == ins.g.vertex_count());
}

TEST_CASE("degree-three vertex grows by one subdivision vertex") {
    InstanceBuilder b;
    VertexId v = b.h_vertex(0, 0);
    VertexId n = b.h_vertex(0, 2);
    VertexId e = b.h_vertex(2, 0);
    VertexId s = b.h_vertex(0, -2);
    VertexId far = b.h_vertex(-2, 0);
    b.h_edge(v, n);
    b.h_edge(v, e);
    b.h_edge(v, s);
    b.g_edge(v, far);
    Instance ins = b.take();
    ReduceResult rr = reduce_of(ins);
    CHECK(rr.top.g.vertex_count() == ins.g.vertex_count() + 1);
    CHECK(rr.top.g.edge_count() == ins.g.edge_count() + 1);
    REQUIRE(rr.record.entries.size() == 1);
    CHECK(rr.record.entries[0].tag == VertexGadget::Tag::Subdivide);
    EdgeId stub = rr.record.entries[0].stub;
    CHECK(rr.top.h.has_edge(stub));
    CHECK(rr.top.g.incident(stub, v));
}

TEST_CASE("crossing gadget counts: four new vertices, twelve new edges") {
    InstanceBuilder b;
    VertexId a = b.h_vertex(0, 0);
    VertexId v = b.h_vertex(2, 0);
    VertexId c = b.h_vertex(4, 0);
    VertexId p = b.h_vertex(2, 4);
    VertexId q = b.h_vertex(2, -4);
    b.h_edge(a, v);
    b.h_edge(v, c);
    b.g_edge(v, p);
    b.g_edge(v, q);
    Instance ins = b.take();
    ReduceResult rr = reduce_of(ins);
    REQUIRE(rr.record.entries.size() == 1);
    CHECK(rr.record.entries[0].tag == VertexGadget::Tag::Cross);
    CHECK(rr.top.g.vertex_count() == ins.g.vertex_count() + 4);
    CHECK(rr.top.g.edge_count() == ins.g.edge_count() - 4 + 12);
    int h_edges = 0;
    for (EdgeId e2 = 0; e2 < rr.top.g.edge_count(); ++e2)
        if (rr.top.h.has_edge(e2)) ++h_edges;
    CHECK(h_edges == ins.h_edge_count() - 2 + 4);
}

TEST_CASE("reduction size stays linear") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        Instance ins = random_grid_instance(rng, RandomInstanceOptions{});
        ReduceResult rr = reduce_of(ins);
        CHECK(rr.top.g.vertex_count() <= 5 * ins.g.vertex_count());
        CHECK(rr.record.touch_count <= ins.g.vertex_count());
    }
}

TEST_CASE("embedding extension tester on fixed instances") {
    {
        std::mt19937_64 rng(31);
        RandomInstanceOptions opt;
        opt.h_edge_prob = 1.0;
        opt.extra_edge_prob = 0.0;
        opt.allow_free_vertices = false;
        Instance ins = random_grid_instance(rng, opt);
        ReduceResult rr = reduce_of(ins);
        auto sol = test_embedding_extension(rr.top);
        REQUIRE(sol.has_value());
        CHECK(embedding_extends(rr.top.g, *sol, rr.top.eh));
    }
    {
        RepExtTopInstance r;
        for (int i = 0; i < 5; ++i) r.g.add_vertex();
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) r.g.add_edge(i, j);
        r.h = SubgraphMask(5, r.g.edge_count());
        r.eh.sub = r.h;
        r.eh.rotation.assign(5, {});
        CHECK(!test_embedding_extension(r).has_value());
    }
    {
        RepExtTopInstance r;
        for (int i = 0; i < 4; ++i) r.g.add_vertex();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) r.g.add_edge(i, j);
        r.h = SubgraphMask(4, r.g.edge_count());
        r.eh.sub = r.h;
        r.eh.rotation.assign(4, {});
        auto sol = test_embedding_extension(r);
        REQUIRE(sol.has_value());
        CHECK(embedding_is_plane(r.g, *sol));
    }
}

TEST_CASE("square plus chord: tester agrees with exhaustive enumeration") {
    InstanceBuilder b;
    VertexId p0 = b.h_vertex(0, 0);
    VertexId p1 = b.h_vertex(2, 0);
    VertexId p2 = b.h_vertex(2, 2);
    VertexId p3 = b.h_vertex(0, 2);
    b.h_edge(p0, p1);
    b.h_edge(p1, p2);
    b.h_edge(p2, p3);
    b.h_edge(p3, p0);
    b.g_edge(p0, p2);
    Instance ins = b.take();
    ReduceResult rr = reduce_of(ins);
    auto fast = test_embedding_extension(rr.top);
    auto slow = brute_force_top(rr.top, 12);
    CHECK(fast.has_value() == slow.has_value());
    REQUIRE(fast.has_value());
    CHECK(embedding_extends(rr.top.g, *fast, rr.top.eh));
}

namespace {

// Predrawn box with v interior on its bottom side and two isolated predrawn
// vertices inside; free edges from v to both. The interior corner at v has a
// single free port, so only one edge can enter the box.
Instance boxed_instance(int targets) {
    InstanceBuilder b;
    VertexId c0 = b.h_vertex(0, 0);
    VertexId v = b.h_vertex(4, 0);
    VertexId c1 = b.h_vertex(8, 0);
    VertexId c2 = b.h_vertex(8, 6);
    VertexId c3 = b.h_vertex(0, 6);
    b.h_edge(c0, v);
    b.h_edge(v, c1);
    b.h_edge(c1, c2);
    b.h_edge(c2, c3);
    b.h_edge(c3, c0);
    VertexId r0 = b.h_vertex(3, 3);
    b.g_edge(v, r0);
    if (targets >= 2) {
        VertexId r1 = b.h_vertex(5, 3);
        b.g_edge(v, r1);
    }
    Instance ins = b.take();
    ins.validate();
    return ins;
}

}  // namespace

TEST_CASE("separation: plane extension exists but ports forbid it") {
    Instance ins = boxed_instance(2);
    RepExtTopInstance raw{ins.g, ins.h, extract_embedding(ins)};
    CHECK(test_embedding_extension(raw).has_value());
    CHECK(!test_extension(ins).has_value());
    BruteForceOptions blind;
    blind.ignore_ports = true;
    CHECK(brute_force_extension(ins, blind).has_value());
    CHECK(!brute_force_extension(ins).has_value());
}

TEST_CASE("port-feasible variant of the separation instance is accepted") {
    Instance ins = boxed_instance(1);
    auto sol = test_extension(ins);
    REQUIRE(sol.has_value());
    CHECK(check_port_feasible(ins, *sol, extract_port_constraints(ins)));
    CHECK(brute_force_extension(ins).has_value());
}

TEST_CASE("pipeline agrees with the oracle on random instances") {
    std::mt19937_64 rng(4242);
    int yes = 0, no = 0;
    for (int it = 0; it < 150; ++it) {
        Instance ins;
        if (it % 2 == 0) {
            RandomInstanceOptions opt;
            opt.max_vertices = 7;
            ins = random_grid_instance(rng, opt);
        } else {
            ins = random_trap_instance(rng, 8);
        }
        auto fast = test_extension(ins);
        auto slow = brute_force_extension(ins);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            ++yes;
            Embedding eh = extract_embedding(ins);
            PortConstraintSet p = extract_port_constraints(ins);
            CHECK(embedding_extends(ins.g, *fast, eh));
            CHECK(check_port_feasible(ins, *fast, p));
        } else {
            ++no;
        }
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}
