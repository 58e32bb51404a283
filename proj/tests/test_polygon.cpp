#include "test_util.h"

#include "kmodem/errors.h"
#include "kmodem/generators.h"

#include <doctest.h>

using namespace kmodem;
using tu::P;
using tu::poly;

TEST_CASE("labeling: orthogonal tie rule on the unit square") {
    Polygon sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, PolygonClass::MonotoneOrthogonal);
    const VertexLabeling& lab = validate(sq);
    CHECK(sq.vertex(lab.order[0]) == P(0, 1)); // v_1: upper at the tied x
    CHECK(sq.vertex(lab.order[1]) == P(0, 0));
    CHECK(sq.vertex(lab.order[2]) == P(1, 1));
    CHECK(sq.vertex(lab.order[3]) == P(1, 0));
}

TEST_CASE("labeling: triangle") {
    Polygon tr = poly({{0, 0}, {2, 0}, {1, 1}}, PolygonClass::Monotone);
    const VertexLabeling& lab = validate(tr);
    CHECK(tr.vertex(lab.order[0]) == P(0, 0));
    CHECK(tr.vertex(lab.order[1]) == P(1, 1));
    CHECK(tr.vertex(lab.order[2]) == P(2, 0));
}

TEST_CASE("validate rejects bad polygons") {
    CHECK_THROWS_AS(validate(poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), Error);
    // duplicate x in a non-orthogonal monotone polygon
    std::vector<Point> v = {P(0, 0), P(1, -2), P(1, 2), P(3, 0)};
    CHECK_THROWS_WITH_AS(validate(Polygon(std::move(v), PolygonClass::Monotone)), doctest::Contains("DuplicateX"),
                         Error);
    // orthogonal hint on a slanted polygon
    CHECK_THROWS_AS(validate(poly({{0, 0}, {2, 0}, {1, 1}}, PolygonClass::MonotoneOrthogonal)), Error);
    // non-monotone zigzag: upper chain x goes backwards
    std::vector<Point> w = {P(0, 0), P(4, 0), P(3, 3), P(2, 1), P(1, 3)};
    bool threw = false;
    try {
        validate(Polygon(std::move(w), PolygonClass::Monotone));
    } catch (const Error& e) {
        threw = true;
        CHECK((e.code() == Errc::NotMonotone || e.code() == Errc::NotSimple));
    }
    CHECK(threw);
}

TEST_CASE("point location on a monotone polygon") {
    Polygon pent = poly({{0, 0}, {4, 0}, {4, 2}, {2, 3}, {0, 2}});
    CHECK(pent.locate(tu::Pr("2", "1")) == PointLocation::Interior);
    CHECK(pent.locate(P(0, 0)) == PointLocation::Boundary);
    CHECK(pent.locate(tu::Pr("2", "3")) == PointLocation::Boundary);
    CHECK(pent.locate(tu::Pr("2", "7/2")) == PointLocation::Outside);
    CHECK(pent.locate(tu::Pr("-1", "1")) == PointLocation::Outside);
    CHECK(pent.locate(tu::Pr("3", "5/2")) == PointLocation::Boundary); // on edge (4,2)-(2,3)
}

TEST_CASE("simple vertical split: pentagon at v_3") {
    Polygon pent = poly({{0, 0}, {4, 0}, {4, 2}, {2, 3}, {0, 2}});
    const VertexLabeling& lab = validate(pent);
    SplitParts sp = simple_vertical_split(pent, lab, 3);
    // left keeps 3 polygon edges plus the cut, right keeps 3 plus the cut
    CHECK(sp.left.size() == 4);
    CHECK(sp.right.size() == 4);
    CHECK(sp.left.has_aux());
    CHECK(sp.right.has_aux());
    CHECK(sp.cut.a == P(2, 3));
    CHECK(sp.cut.b == P(2, 0));
    Scalar total = sp.left.area_2() + sp.right.area_2();
    CHECK(total == pent.area_2());
}

TEST_CASE("simple vertical split: triangle at v_2") {
    Polygon tr = poly({{0, 0}, {2, 0}, {1, 1}});
    SplitParts sp = simple_vertical_split(tr, validate(tr), 2);
    CHECK(sp.left.size() == 3);
    CHECK(sp.right.size() == 3);
}

TEST_CASE("simple vertical split: random 12-gon recombines exactly") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        Polygon p = gen_random_monotone(12, seed);
        SplitParts sp = simple_vertical_split(p, validate(p), 7);
        CHECK(sp.left.size() == 8);
        CHECK(sp.right.size() == 12 - 7 + 2);
        CHECK(sp.left.area_2() + sp.right.area_2() == p.area_2());
    }
}

TEST_CASE("split label range errors") {
    Polygon tr = poly({{0, 0}, {2, 0}, {1, 1}});
    CHECK_THROWS_AS(simple_vertical_split(tr, validate(tr), 1), Error);
    CHECK_THROWS_AS(simple_vertical_split(tr, validate(tr), 3), Error);
}

TEST_CASE("extremal edges") {
    Polygon sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, PolygonClass::MonotoneOrthogonal);
    ExtremalEdges e = extremal_edges(sq);
    CHECK(e.top != e.bottom);
    CHECK(sq.edge_a(e.top).y == Scalar(1));
    CHECK(sq.edge_a(e.bottom).y == Scalar(0));
    CHECK(sq.edge_a(e.left).x == Scalar(0));
    CHECK(sq.edge_a(e.right).x == Scalar(1));

    // two topmost edges: the leftmost wins
    Polygon twin = poly({{0, 0}, {8, 0}, {8, 3}, {6, 3}, {6, 2}, {4, 2}, {4, 3}, {2, 3}, {2, 2}, {0, 2}},
                        PolygonClass::MonotoneOrthogonal);
    ExtremalEdges et = extremal_edges(twin);
    CHECK(std::min(twin.edge_a(et.top).x, twin.edge_b(et.top).x) == Scalar(0));
    CHECK(twin.edge_a(et.top).y == Scalar(3));

    // brute-force oracle on the L-shaped hexagon, frozen expectations
    Polygon ell = poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, PolygonClass::MonotoneOrthogonal);
    ExtremalEdges el = extremal_edges(ell);
    auto edge_is = [&](size_t e, Point a, Point b) {
        return (ell.edge_a(e) == a && ell.edge_b(e) == b) || (ell.edge_a(e) == b && ell.edge_b(e) == a);
    };
    CHECK(edge_is(el.top, P(1, 2), P(0, 2)));
    CHECK(edge_is(el.bottom, P(0, 0), P(2, 0)));
    CHECK(edge_is(el.left, P(0, 2), P(0, 0)));
    CHECK(edge_is(el.right, P(2, 0), P(2, 1)));
    CHECK_THROWS_AS(extremal_edges(poly({{0, 0}, {2, 0}, {1, 1}})), Error);
}

TEST_CASE("chains") {
    Polygon pent = poly({{0, 0}, {4, 0}, {4, 2}, {2, 3}, {0, 2}});
    Chains ch = chains(pent, validate(pent));
    // both run from v_1 to v_n
    CHECK(pent.vertex(ch.upper.front()) == P(0, 0));
    CHECK(pent.vertex(ch.upper.back()) == P(4, 0));
    CHECK(pent.vertex(ch.lower.front()) == P(0, 0));
    CHECK(pent.vertex(ch.lower.back()) == P(4, 0));
    CHECK(ch.upper.size() + ch.lower.size() == pent.size() + 2);
    bool upper_has_apex = false;
    for (size_t i : ch.upper)
        if (pent.vertex(i) == P(2, 3)) upper_has_apex = true;
    CHECK(upper_has_apex);

    Polygon tr = poly({{0, 0}, {2, 0}, {1, 1}});
    Chains ct = chains(tr, validate(tr));
    CHECK(ct.lower.size() == 2); // single floor edge
    CHECK(ct.upper.size() == 3);

    Polygon sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, PolygonClass::MonotoneOrthogonal);
    Chains cs = chains(sq, validate(sq));
    CHECK(cs.upper.size() + cs.lower.size() == 6);
}

TEST_CASE("chain x-coordinates increase and chains partition the edges") {
    for (uint64_t seed : {11u, 12u, 13u, 14u}) {
        Polygon p = gen_random_monotone(20, seed);
        Chains ch = p.boundary_chains();
        for (const auto* c : {&ch.upper, &ch.lower})
            for (size_t i = 0; i + 1 < c->size(); ++i)
                CHECK(p.vertex((*c)[i]).x < p.vertex((*c)[i + 1]).x);
        CHECK(ch.upper.size() + ch.lower.size() == p.size() + 2);
    }
}

TEST_CASE("split parts recombine for random sizes") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 8; ++it) {
        int n = 6 + int(rng() % 12);
        Polygon p = gen_random_monotone(n, rng());
        int i = 2 + int(rng() % (n - 2));
        SplitParts sp = simple_vertical_split(p, validate(p), i);
        CHECK(sp.left.size() == size_t(i) + 1);
        CHECK(sp.right.size() == size_t(n - i) + 1);
        CHECK(sp.left.area_2() + sp.right.area_2() == p.area_2());
    }
}

TEST_CASE("mirrors") {
    Polygon pent = poly({{0, 0}, {4, 0}, {4, 2}, {2, 3}, {0, 2}});
    Polygon mx = mirror_x(pent);
    CHECK(mx.size() == pent.size());
    CHECK(mx.area_2() == pent.area_2());
    CHECK(mirror_y(mx).area_2() == pent.area_2());
}
