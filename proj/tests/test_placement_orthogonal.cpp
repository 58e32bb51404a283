#include "test_util.h"

#include "kmodem/errors.h"
#include "kmodem/generators.h"
#include "kmodem/placement_orthogonal.h"
#include "kmodem/verification.h"

#include <doctest.h>

using namespace kmodem;
using tu::P;
using tu::poly;

TEST_CASE("orthogonal split: counts and areas") {
    // staircase 8-gon
    Polygon st = poly({{0, 0}, {6, 0}, {6, 2}, {4, 2}, {4, 4}, {2, 4}, {2, 6}, {0, 6}},
                      PolygonClass::MonotoneOrthogonal);
    OrthoSplitOutcome out = ortho_split(st, 4);
    CHECK(out.left.size() == 4);
    CHECK(out.right.size() == 6);
    CHECK(out.left.area_2() + out.right.area_2() == st.area_2());

    Polygon ell = poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, PolygonClass::MonotoneOrthogonal);
    OrthoSplitOutcome oe = ortho_split(ell, 4);
    CHECK(oe.left.size() == 4);
    CHECK(oe.right.size() == 4);
    CHECK(oe.left.area_2() + oe.right.area_2() == ell.area_2());

    CHECK_THROWS_AS(ortho_split(st, 3), Error); // odd label
    CHECK_THROWS_AS(ortho_split(st, 8), Error); // out of range
}

TEST_CASE("orthogonal split on random instances") {
    std::mt19937_64 rng(222);
    for (int it = 0; it < 10; ++it) {
        int n = 8 + 2 * int(rng() % 10);
        Polygon p = gen_random_ortho_monotone(n, rng());
        int i = 4 + 2 * int(rng() % ((n - 6) / 2 + 1));
        OrthoSplitOutcome out = ortho_split(p, i);
        CHECK(out.left.size() == size_t(i));
        CHECK(out.right.size() == size_t(n - i + 2));
        CHECK(out.left.area_2() + out.right.area_2() == p.area_2());
        CHECK(out.left.orthogonal_shape());
        CHECK(out.right.orthogonal_shape());
    }
}

TEST_CASE("placement outside for tiny orthogonal polygons") {
    Polygon rect = poly({{0, 0}, {3, 0}, {3, 2}, {0, 2}}, PolygonClass::MonotoneOrthogonal);
    Modem m = place_outside_k3(rect, 1, P(-5, -5));
    for (const Point& corner : rect.vertices())
        CHECK(is_point_illuminated(rect, std::vector<Modem>{m}, corner));
    // also from inside
    Modem mi = place_outside_k3(rect, 1, P(1, 1));
    CHECK(is_point_illuminated(rect, std::vector<Modem>{mi}, P(0, 0)));
    // precondition boundary
    Polygon hex = poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, PolygonClass::MonotoneOrthogonal);
    CHECK_THROWS_AS(place_outside_k3(hex, 1, P(0, 0)), Error); // n = 6 > k+3
}

TEST_CASE("edge placement for (k+5)-gons") {
    Polygon rect = poly({{0, 0}, {3, 0}, {3, 2}, {0, 2}}, PolygonClass::MonotoneOrthogonal);
    Modem m = place_edge_k5(rect, 2, Side::Left);
    CHECK(m.position.x == Scalar(0));
    CHECK(is_valid_modem_position(rect, m.position, 2));

    // n = k+5 staircases, k odd: the chosen point is on the requested edge
    std::mt19937_64 rng(5);
    for (int k : {1, 3, 5}) {
        for (int it = 0; it < 6; ++it) {
            Polygon p = gen_random_ortho_monotone(k + 5, rng());
            Modem ml = place_edge_k5(p, k, Side::Left);
            CHECK(ml.position.x == p.min_x());
            CHECK(is_valid_modem_position(p, ml.position, k));
            Modem mr = place_edge_k5(p, k, Side::Right);
            CHECK(mr.position.x == p.max_x());
            CHECK(is_valid_modem_position(p, mr.position, k));
        }
    }
    CHECK_THROWS_AS(place_edge_k5(gen_random_ortho_monotone(10, 1), 3, Side::Left), Error);
}

TEST_CASE("edge placement coordinates: n=8, k=3 staircase") {
    Polygon st = poly({{0, 0}, {6, 0}, {6, 5}, {4, 5}, {4, 3}, {2, 3}, {2, 1}, {0, 1}},
                      PolygonClass::MonotoneOrthogonal);
    REQUIRE(st.size() == 8);
    Modem m = place_edge_k5(st, 3, Side::Left);
    // e_l is x=0, its non-extremal incident horizontal edge is y=1
    CHECK(m.position == P(0, 1));
}

TEST_CASE("stair end classification") {
    Polygon sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, PolygonClass::MonotoneOrthogonal);
    auto cls = classify_stair_end(sq);
    CHECK(cls.size() == 4);

    // upper-right: v_{n-3}v_{n-1} is an edge
    Polygon ur = gen_stair_end_case(3, 1, 1);
    auto c2 = classify_stair_end(ur);
    CHECK(std::find(c2.begin(), c2.end(), StairEndSide::UpperRight) != c2.end());

    // both ends lack the near-end edges entirely
    Polygon zig = poly({{0, 0}, {2, 0}, {2, -3}, {6, -3}, {6, 2}, {8, 2}, {8, 5}, {4, 5}, {4, 8}, {0, 8}},
                       PolygonClass::MonotoneOrthogonal);
    CHECK_THROWS_AS(classify_stair_end(zig), Error);
}

TEST_CASE("stair end placement hits each dispatch case") {
    std::mt19937_64 rng(31);
    for (int k : {3, 5}) {
        for (int cid : {1, 2, 3, 5}) {
            for (int it = 0; it < 5; ++it) {
                Polygon p = gen_stair_end_case(k, cid, rng());
                Modem m = place_stair_end_k7(p, k, StairEndSide::UpperRight);
                CHECK(m.note == "k7:case" + std::to_string(cid));
                CHECK(is_valid_modem_position(p, m.position, k));
                // right-sided: the point is on the rightmost edge
                CHECK(m.position.x == p.max_x());
            }
        }
    }
    // case 4 is realizable only from k = 7 on
    for (int it = 0; it < 5; ++it) {
        Polygon p = gen_stair_end_case(7, 4, 100 + uint64_t(it));
        Modem m = place_stair_end_k7(p, 7, StairEndSide::UpperRight);
        CHECK(m.note == "k7:case4");
        CHECK(is_valid_modem_position(p, m.position, 7));
    }
    CHECK_THROWS_AS(place_stair_end_k7(gen_stair_end_case(3, 1, 1), 2, {}), Error); // even k
}

TEST_CASE("mirrored stair ends work through the same core") {
    std::mt19937_64 rng(41);
    for (int k : {3, 5}) {
        Polygon p = gen_stair_end_case(k, 2, rng());
        for (auto [mirror, side] : {std::pair{0, StairEndSide::UpperRight}, std::pair{1, StairEndSide::UpperLeft},
                                    std::pair{2, StairEndSide::LowerRight}, std::pair{3, StairEndSide::LowerLeft}}) {
            Polygon q = p;
            if (mirror == 1 || mirror == 3) q = mirror_x(q);
            if (mirror == 2 || mirror == 3) q = mirror_y(q);
            Modem m = place_stair_end_k7(q, k, side);
            CHECK(is_valid_modem_position(q, m.position, k));
        }
    }
}

TEST_CASE("single modem for (2k+6)-gons") {
    std::mt19937_64 rng(51);
    // even k: the split vertex
    for (int k : {0, 2, 4}) {
        for (int it = 0; it < 6; ++it) {
            int n = 2 * k + 6;
            Polygon p = gen_random_ortho_monotone(n, rng());
            Modem m = place_single_2k6(p, k);
            CHECK(m.position == p.labeled(size_t(k) + 4));
            CHECK(verify_full_coverage(p, ModemPlan{k, {m}}).covered);
        }
    }
    // odd k: a point on the splitting edge
    for (int it = 0; it < 6; ++it) {
        Polygon p = gen_random_ortho_monotone(8, rng());
        Modem m = place_single_2k6(p, 1);
        CHECK(m.position.x == p.labeled(4).x);
        CHECK(verify_full_coverage(p, ModemPlan{1, {m}}).covered);
    }
    // rectangles degenerate to a vertex
    Polygon rect = poly({{0, 0}, {3, 0}, {3, 2}, {0, 2}}, PolygonClass::MonotoneOrthogonal);
    for (int k : {0, 1, 2, 5}) CHECK(is_valid_modem_position(rect, place_single_2k6(rect, k).position, k));
}

TEST_CASE("single modem for (2k+8)-gons, all four middle configurations") {
    std::mt19937_64 rng(61);
    for (int k : {3, 5}) {
        for (int cid : {1, 2, 3, 4}) {
            for (int it = 0; it < 4; ++it) {
                Polygon p = gen_ortho_2k8_case(k, cid, rng());
                Modem m = place_single_2k8(p, k);
                CHECK(m.note.substr(0, 9) == "2k8:case" + std::to_string(cid));
                CHECK(verify_full_coverage(p, ModemPlan{k, {m}}).covered);
            }
        }
    }
    // delegation for smaller inputs
    Polygon small = gen_random_ortho_monotone(12, 7);
    Modem m = place_single_2k8(small, 3);
    CHECK(m.note.substr(0, 3) != "2k8");
    CHECK_THROWS_AS(place_single_2k8(gen_random_ortho_monotone(14, 7), 2), Error); // even k
    CHECK_THROWS_AS(place_single_2k8(gen_random_ortho_monotone(10, 7), 1), Error); // k = 1
}

TEST_CASE("full orthogonal placement: bounds and tightness") {
    // corridor family, even k: exactly t modems
    for (int k : {0, 2}) {
        InstanceFamily fam = gen_ortho_corridors(k, 3);
        ModemPlan plan = place_orthogonal(fam.polygon, k);
        size_t denom = 2 * size_t(k) + 4;
        size_t bound = (fam.polygon.size() - 2 + denom - 1) / denom;
        CHECK(plan.modems.size() == bound);
        CHECK(plan.modems.size() == 3);
        CHECK(verify_full_coverage(fam.polygon, plan).covered);
    }
    // boxes family, k = 1
    InstanceFamily boxes = gen_ortho_boxes_k1(3);
    ModemPlan bp = place_orthogonal(boxes.polygon, 1);
    CHECK(bp.modems.size() == 3);
    CHECK(verify_full_coverage(boxes.polygon, bp).covered);
    // random odd k >= 3
    std::mt19937_64 rng(71);
    Polygon p50 = gen_random_ortho_monotone(50, rng());
    ModemPlan plan = place_orthogonal(p50, 3);
    CHECK(plan.modems.size() <= 4);
    CHECK(verify_full_coverage(p50, plan).covered);
}

TEST_CASE("extremal edge crossing bound") {
    std::mt19937_64 rng(81);
    for (int it = 0; it < 10; ++it) {
        Polygon p = gen_random_ortho_monotone(12 + 2 * int(rng() % 8), rng());
        ExtremalEdges ext = extremal_edges(p);
        for (int probe = 0; probe < 30; ++probe) {
            Point q = tu::random_interior(p, rng);
            long dx = long(rng() % 41) - 20, dy = long(rng() % 41) - 20;
            if (dx == 0 && dy == 0) continue;
            int hits = 0;
            for (size_t e : {ext.top, ext.bottom, ext.left, ext.right}) {
                auto r = ray_segment_crossing_class(q, Direction(Scalar(dx), Scalar(dy)),
                                                    Segment(p.edge_a(e), p.edge_b(e)));
                if (r.kind == CrossKind::Proper) ++hits;
            }
            CHECK(hits <= 1);
        }
    }
}

TEST_CASE("any point of a small orthogonal polygon is valid") {
    std::mt19937_64 rng(91);
    for (int k : {0, 1, 2, 3}) {
        int n = k + 4 - ((k + 4) % 2);
        for (int it = 0; it < 5; ++it) {
            Polygon p = gen_random_ortho_monotone(std::max(4, n), rng());
            for (int probe = 0; probe < 10; ++probe)
                CHECK(is_valid_modem_position(p, tu::random_interior(p, rng), k));
        }
    }
}
