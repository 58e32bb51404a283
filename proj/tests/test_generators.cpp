#include "test_util.h"

#include "kmodem/errors.h"
#include "kmodem/generators.h"
#include "kmodem/io.h"
#include "kmodem/placement_orthogonal.h"
#include "kmodem/verification.h"

#include <doctest.h>

#include <cstdlib>

using namespace kmodem;

TEST_CASE("spike family vertex counts") {
    CHECK(gen_monotone_spikes(2, 3).polygon.size() == 17);
    CHECK(gen_monotone_spikes(3, 2).polygon.size() == 12);
    CHECK(gen_monotone_spikes(0, 4).polygon.size() == 12);
    for (int k = 0; k <= 4; ++k)
        for (int t = 2; t <= 5; ++t) {
            InstanceFamily f = gen_monotone_spikes(k, t);
            CHECK(f.polygon.size() == size_t(t) * size_t(2 * k + 3) - size_t(2 * k));
            CHECK(f.witnesses.size() == size_t(t));
            for (const Point& w : f.witnesses) CHECK(f.polygon.locate(w) == PointLocation::Interior);
            CHECK_FALSE(f.polygon.has_parallel_cross_chain_edges());
        }
    CHECK_THROWS_AS(gen_monotone_spikes(-1, 2), Error);
    CHECK_THROWS_AS(gen_monotone_spikes(0, 1), Error);
}

TEST_CASE("spike family witness regions are pairwise disjoint (small grid)") {
    for (int k = 0; k <= 2; ++k)
        for (int t = 2; t <= 3; ++t) {
            InstanceFamily f = gen_monotone_spikes(k, t);
            CHECK(witness_lower_bound(f.polygon, k, f.witnesses) == t);
        }
}

TEST_CASE("corridor family: counts and spacing") {
    CHECK(gen_ortho_corridors(2, 2).polygon.size() == 12);
    for (int k = 0; k <= 4; ++k)
        for (int t = 2; t <= 4; ++t) {
            InstanceFamily f = gen_ortho_corridors(k, t);
            int spacing = (k % 2 == 0) ? k + 2 : k + 3;
            CHECK(f.polygon.size() == size_t(2 * (1 + spacing * (t - 1)) + 2));
            CHECK(f.witnesses.size() == size_t(t));
            CHECK(f.polygon.orthogonal_shape());
        }
    // odd-k spacing is k+3 corridors
    InstanceFamily f32 = gen_ortho_corridors(3, 2);
    CHECK(f32.polygon.size() == size_t(2 * (1 + 6) + 2));
}

TEST_CASE("corridor family witness regions are pairwise disjoint (k even, small)") {
    for (int k : {0, 2})
        for (int t = 2; t <= 3; ++t) {
            InstanceFamily f = gen_ortho_corridors(k, t);
            CHECK(witness_lower_bound(f.polygon, k, f.witnesses) == t);
        }
}

TEST_CASE("witness box family: counts") {
    for (int t = 2; t <= 5; ++t) {
        InstanceFamily f = gen_ortho_boxes_k1(t);
        CHECK(f.polygon.size() == size_t(6 * t + 2));
        CHECK(f.witnesses.size() == size_t(2 * t));
        CHECK(f.polygon.orthogonal_shape());
        auto rects = ortho_boxes_k1_rects(t);
        CHECK(rects.size() == size_t(t));
    }
    CHECK(gen_ortho_boxes_k1(4).polygon.size() == 26);
}

namespace {

// Membership of a point in box i (1-based), ties to the smaller index.
int box_of(const std::vector<std::pair<Point, Point>>& rects, const Point& q) {
    for (size_t i = 0; i < rects.size(); ++i) {
        const auto& [lo, hi] = rects[i];
        if (q.x >= lo.x && q.x <= hi.x && q.y >= lo.y && q.y <= hi.y) return int(i) + 1;
    }
    return 0;
}

} // namespace

TEST_CASE("witness box family: reachability structure") {
    const int t = 3;
    InstanceFamily f = gen_ortho_boxes_k1(t);
    auto rects = ortho_boxes_k1_rects(t);
    RefinedArrangementSamples rs = refined_arrangement_samples(f.polygon, f.witnesses);
    std::vector<Point> samples;
    samples.insert(samples.end(), rs.vertices.begin(), rs.vertices.end());
    samples.insert(samples.end(), rs.edge_points.begin(), rs.edge_points.end());
    samples.insert(samples.end(), rs.cell_points.begin(), rs.cell_points.end());

    auto covers = [&](const Point& q, const Point& w) {
        WallCounter wc(f.polygon, q);
        return wc.count_to(w) <= 1;
    };
    auto p_r = [&](int i) { return f.witnesses[2 * (i - 1)]; };
    auto p_b = [&](int i) { return f.witnesses[2 * (i - 1) + 1]; };

    bool a1 = true, a2 = true, a3 = true;
    bool pos_pair = false, pos_back = false;
    for (const Point& q : samples) {
        int b = box_of(rects, q);
        if (b == 0) continue;
        for (int i = 1; i <= t; ++i) {
            bool cr = covers(q, p_r(i)), cb = covers(q, p_b(i));
            if (i == b + 1 && cr && cb) a1 = false;                         // next box: never both
            if (i == b - 1 && cr) a2 = false;                               // previous p_r unreachable
            if (std::abs(i - b) >= 2 && (cr || cb)) a3 = false;             // distance two unreachable
            if (i == b && cr && cb) pos_pair = true;                        // own pair coverable
            if (i == b - 1 && cb) pos_back = true;                          // previous p_b reachable
        }
    }
    CHECK(a1);
    CHECK(a2);
    CHECK(a3);
    CHECK(pos_pair);
    CHECK(pos_back);
}

TEST_CASE("random generators: validity and determinism") {
    CHECK(gen_random_monotone(3, 5).size() == 3);
    Polygon a = gen_random_monotone(40, 7);
    Polygon b = gen_random_monotone(40, 7);
    CHECK(write_polygon_json(a) == write_polygon_json(b));
    CHECK(a.size() == 40);
    CHECK_FALSE(a.has_parallel_cross_chain_edges());

    Polygon c = gen_random_ortho_monotone(24, 9);
    CHECK(c.size() == 24);
    CHECK(c.orthogonal_shape());
    CHECK(write_polygon_json(c) == write_polygon_json(gen_random_ortho_monotone(24, 9)));

    CHECK_THROWS_AS(gen_random_ortho_monotone(11, 1), Error);
    CHECK_THROWS_AS(gen_random_monotone(2, 1), Error);
}

TEST_CASE("case-targeted stair end instances") {
    std::mt19937_64 rng(3);
    for (int k : {3, 5})
        for (int cid : {1, 2, 3, 5}) {
            Polygon p = gen_stair_end_case(k, cid, rng());
            CHECK(p.size() == size_t(k) + 7);
            auto cls = classify_stair_end(p);
            CHECK(std::find(cls.begin(), cls.end(), StairEndSide::UpperRight) != cls.end());
        }
    CHECK_THROWS_AS(gen_stair_end_case(3, 4, 1), Error); // case 4 needs k >= 7
    CHECK(gen_stair_end_case(7, 4, 1).size() == 14);
}

TEST_CASE("case-targeted 2k+8 instances") {
    std::mt19937_64 rng(4);
    for (int k : {3, 5})
        for (int cid : {1, 2, 3, 4}) {
            Polygon p = gen_ortho_2k8_case(k, cid, rng());
            CHECK(p.size() == size_t(2 * k + 8));
            CHECK(p.orthogonal_shape());
        }
}
