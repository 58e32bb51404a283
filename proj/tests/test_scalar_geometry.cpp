#include "test_util.h"

#include "kmodem/errors.h"

#include <doctest.h>

using namespace kmodem;
using tu::P;
using tu::Pr;

TEST_CASE("scalar parsing and canonical form") {
    CHECK(scalar_str(scalar_parse("2/4")) == "1/2");
    CHECK(scalar_str(scalar_parse("-6/4")) == "-3/2");
    CHECK(scalar_str(scalar_parse("7")) == "7");
    CHECK(scalar_parse("1/3") == scalar(2, 6));
    CHECK(scalar_parse("1/3").get_den() > 0);
    CHECK_THROWS_AS(scalar_parse("1/0"), Error);
    CHECK_THROWS_AS(scalar_parse("abc"), Error);
    CHECK_THROWS_AS(scalar_parse(""), Error);
}

TEST_CASE("orientation examples") {
    CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::Left);
    CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
    CHECK(orientation(P(0, 0), P(1, 0), Pr("1", "-1/3")) == Orientation::Right);
}

TEST_CASE("orientation antisymmetry and translation invariance") {
    std::mt19937_64 rng(42);
    auto rnd = [&]() -> Scalar {
        return scalar(long(rng() % 2000) - 1000, long(1 + rng() % 40));
    };
    for (int it = 0; it < 200; ++it) {
        Point a{rnd(), rnd()}, b{rnd(), rnd()}, c{rnd(), rnd()};
        int s1 = orientation_sign(a, b, c);
        int s2 = orientation_sign(a, c, b);
        CHECK(s1 == -s2);
        Point d{rnd(), rnd()};
        Point a2{a.x + d.x, a.y + d.y}, b2{b.x + d.x, b.y + d.y}, c2{c.x + d.x, c.y + d.y};
        CHECK(orientation_sign(a2, b2, c2) == s1);
    }
}

TEST_CASE("segment crossing classification examples") {
    Segment s(P(0, 0), P(2, 0));
    CHECK(segment_crossing_class(s, Segment(P(1, -1), P(1, 1))).kind == CrossKind::Proper);
    auto te = segment_crossing_class(s, Segment(P(2, 0), P(2, 1)));
    CHECK(te.kind == CrossKind::AtEndpoint);
    CHECK(te.at_s_b);
    CHECK(te.at_t_a);
    CHECK(segment_crossing_class(s, Segment(P(1, 0), P(3, 0))).kind == CrossKind::CollinearOverlap);
    CHECK(segment_crossing_class(s, Segment(P(5, 5), P(6, 5))).kind == CrossKind::None);
    // endpoint of t interior to s
    auto tj = segment_crossing_class(s, Segment(P(1, 0), P(1, 2)));
    CHECK(tj.kind == CrossKind::AtEndpoint);
    CHECK(tj.at_t_a);
}

TEST_CASE("segment crossing classification is symmetric") {
    std::mt19937_64 rng(7);
    auto rp = [&]() { return tu::P(long(rng() % 9) - 4, long(rng() % 9) - 4); };
    int checked = 0;
    while (checked < 300) {
        Point a = rp(), b = rp(), c = rp(), d = rp();
        if (a == b || c == d) continue;
        ++checked;
        auto r1 = segment_crossing_class(Segment(a, b), Segment(c, d));
        auto r2 = segment_crossing_class(Segment(c, d), Segment(a, b));
        CHECK(r1.kind == r2.kind);
        CHECK(r1.at_s_a == r2.at_t_a);
        CHECK(r1.at_s_b == r2.at_t_b);
        CHECK(r1.at_t_a == r2.at_s_a);
    }
}

TEST_CASE("ray segment crossing examples") {
    CHECK(ray_segment_crossing_class(P(0, 0), Direction(Scalar(1), Scalar(0)), Segment(P(1, -1), P(1, 1))).kind ==
          CrossKind::Proper);
    CHECK(ray_segment_crossing_class(P(0, 0), Direction(Scalar(1), Scalar(0)), Segment(P(-2, -1), P(-2, 1))).kind ==
          CrossKind::None);
    auto r = ray_segment_crossing_class(P(0, 0), Direction(Scalar(1), Scalar(1)), Segment(P(2, 2), P(3, 1)));
    CHECK(r.kind == CrossKind::AtEndpoint);
    CHECK(r.at_t_a);
}

TEST_CASE("predicates agree with a guarded floating-point evaluation") {
    std::mt19937_64 rng(99);
    auto rp = [&]() { return tu::P(long(rng() % 2001) - 1000, long(rng() % 2001) - 1000); };
    int compared = 0;
    for (int it = 0; it < 2000 && compared < 500; ++it) {
        Point a = rp(), b = rp(), c = rp();
        double cross = (to_double(b.x) - to_double(a.x)) * (to_double(c.y) - to_double(a.y)) -
                       (to_double(b.y) - to_double(a.y)) * (to_double(c.x) - to_double(a.x));
        if (std::abs(cross) < 1e-3) continue; // too close to degenerate for doubles
        ++compared;
        int exact = orientation_sign(a, b, c);
        CHECK((cross > 0 ? 1 : -1) == exact);
    }
    CHECK(compared >= 400);
}

TEST_CASE("constructor invariants") {
    CHECK_THROWS_AS(Direction(Scalar(0), Scalar(0)), Error);
    CHECK_THROWS_AS(Segment(P(1, 1), P(1, 1)), Error);
}

TEST_CASE("angular order") {
    std::vector<IntDir> ds = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    std::sort(ds.begin(), ds.end(), angular_less);
    CHECK(ds.front() == IntDir{1, 0});
    for (size_t i = 0; i + 1 < ds.size(); ++i) CHECK(angular_less(ds[i], ds[i + 1]));
}
