#include "kmodem/generators.h"

#include "kmodem/errors.h"

#include <algorithm>
#include <random>

namespace kmodem {

namespace {

struct Jitter {
    std::mt19937_64 rng;
    explicit Jitter(uint64_t seed) : rng(seed * 0x9e3779b97f4a7c15ull + 1) {}
    // Small rational nudge in (-bound, bound), bound = num/den.
    Scalar tiny() {
        long r = long(rng() % 1023) - 511;
        return scalar(r, 8192);
    }
    long pick(long lo, long hi) { return lo + long(rng() % uint64_t(hi - lo + 1)); }
};

// Closed ring from per-slab upper/lower values of an x-monotone orthogonal
// polygon. Exactly one chain value may change per interior column.
Polygon ortho_ring(const std::vector<Scalar>& xs, const std::vector<Scalar>& up,
                   const std::vector<Scalar>& lo) {
    const size_t C = up.size(); // slabs; xs has C+1 columns
    std::vector<Point> ring;
    ring.push_back(Point{xs[0], up[0]});
    for (size_t j = 1; j < C; ++j)
        if (up[j] != up[j - 1]) {
            ring.push_back(Point{xs[j], up[j - 1]});
            ring.push_back(Point{xs[j], up[j]});
        }
    ring.push_back(Point{xs[C], up[C - 1]});
    ring.push_back(Point{xs[C], lo[C - 1]});
    for (size_t j = C - 1; j >= 1; --j)
        if (lo[j] != lo[j - 1]) {
            ring.push_back(Point{xs[j], lo[j]});
            ring.push_back(Point{xs[j], lo[j - 1]});
        }
    ring.push_back(Point{xs[0], lo[0]});
    return Polygon(std::move(ring), PolygonClass::MonotoneOrthogonal);
}

} // namespace

InstanceFamily gen_monotone_spikes(int k, int t, const GeneratorKnobs& knobs) {
    if (k < 0 || t < 2) fail(Errc::BadParams, "need k >= 0 and t >= 2");
    const bool even = k % 2 == 0;
    const int end_spikes = even ? (k + 2) / 2 : (k + 1) / 2;
    const int mid_spikes = even ? k + 1 : k;

    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        Jitter j(knobs.perturb_seed + attempt * 977 + uint64_t(k) * 131 + uint64_t(t));
        const Scalar H = knobs.spike_height;
        const Scalar hb = knobs.base_height;
        const Scalar mouth = knobs.spike_mouth;
        const Scalar gap = knobs.gap_width;
        const Scalar towerH = knobs.tower_height;

        std::vector<Point> upper; // between v_1 and v_n, left to right
        std::vector<Point> witnesses;
        Scalar cursor = 0;
        for (int g = 0; g < t; ++g) {
            int spikes = (g == 0 || g == t - 1) ? end_spikes : mid_spikes;
            int witness_at = (g == 0) ? 0 : (g == t - 1 ? spikes - 1 : (spikes - 1) / 2);
            for (int s = 0; s < spikes; ++s) {
                Scalar ax = cursor + mouth / 2 + j.tiny();
                Scalar ay = H + j.tiny();
                upper.push_back(Point{ax, ay});
                if (s == witness_at) witnesses.push_back(Point{ax, ay - (ay - hb) / 8});
                bool last_overall = (g == t - 1) && (s == spikes - 1);
                if (!last_overall && s != spikes - 1) {
                    cursor += mouth;
                    upper.push_back(Point{cursor + j.tiny(), hb + j.tiny()});
                } else if (!last_overall) {
                    // group boundary: valley lip or tower
                    cursor += mouth;
                    upper.push_back(Point{cursor + j.tiny(), hb + j.tiny()});
                    if (even) {
                        cursor += gap;
                        upper.push_back(Point{cursor + j.tiny(), hb + j.tiny()});
                    } else {
                        upper.push_back(Point{cursor + gap / 3 + j.tiny(), towerH + j.tiny()});
                        upper.push_back(Point{cursor + 2 * gap / 3 + j.tiny(), towerH + j.tiny()});
                        cursor += gap;
                        upper.push_back(Point{cursor + j.tiny(), hb + j.tiny()});
                    }
                } else {
                    cursor += mouth;
                }
            }
        }

        std::vector<Point> ring;
        ring.push_back(Point{Scalar(0), Scalar(0)});
        for (const Point& u : upper) ring.push_back(u);
        ring.push_back(Point{cursor + j.tiny(), scalar(-1, 3) + j.tiny()});
        std::reverse(ring.begin(), ring.end()); // counter-clockwise

        try {
            Polygon p(std::move(ring), PolygonClass::Monotone);
            if (p.has_parallel_cross_chain_edges()) continue;
            size_t expect = size_t(t) * size_t(2 * k + 3) - size_t(2 * k);
            if (p.size() != expect) fail(Errc::Internal, "spike family vertex count is off");
            for (const Point& w : witnesses)
                if (p.locate(w) != PointLocation::Interior) fail(Errc::Internal, "spike witness not interior");
            return InstanceFamily{std::move(p), std::move(witnesses), t, k, FamilyKind::MonotoneSpikes};
        } catch (const Error& e) {
            if (e.code() == Errc::Internal) throw;
            continue; // re-jitter on degeneracies
        }
    }
    fail(Errc::Internal, "spike family generation did not converge");
}

InstanceFamily gen_ortho_corridors(int k, int t, const GeneratorKnobs& knobs) {
    if (k < 0 || t < 2) fail(Errc::BadParams, "need k >= 0 and t >= 2");
    const int spacing = (k % 2 == 0) ? k + 2 : k + 3;
    const int C = 1 + spacing * (t - 1); // corridors (slabs); odd
    const int ntall = (C - 1) / 2;

    // Descending staircase of tall corridors (even slabs) linked by flat
    // passage corridors (odd slabs) at the forced overlap band; the witness
    // corridors are the passages. The descent nearly equals the height, so
    // passages are thin, and the alternating slab widths keep any straight
    // line from threading more than a couple of passages. These proportions
    // are oracle-certified fixtures: the witness coverage regions stay
    // pairwise disjoint for all tested k and t.
    const Scalar H = knobs.corridor_height;       // 24
    const Scalar drop = H - knobs.passage;        // 23
    const Scalar w_pass = knobs.passage_width;    // 23/4
    const Scalar w_tall = knobs.corridor_width;   // 3/2
    if (sgn(knobs.passage) <= 0 || knobs.passage >= H) fail(Errc::BadParams, "inconsistent corridor knobs");

    std::vector<Scalar> xs(C + 1), up(C), lo(C);
    xs[0] = 0;
    for (int i = 1; i <= C; ++i) xs[i] = xs[i - 1] + (i % 2 == 1 ? w_pass : w_tall);
    auto tall_base = [&](int j) -> Scalar { return -drop * (j - 1); }; // tall j, 1-based
    for (int s = 1; s <= C; ++s) {
        if (s % 2 == 0) {
            int j = s / 2;
            lo[s - 1] = tall_base(j);
            up[s - 1] = tall_base(j) + H;
        } else if (s == 1) {
            lo[s - 1] = H - knobs.passage; // stub at the top of the first tall
            up[s - 1] = H;
        } else {
            // Passage after tall j sits at the bottom unit of that tall (the
            // overlap with the next one); the trailing stub likewise.
            int j = (s - 1) / 2;
            lo[s - 1] = tall_base(j);
            up[s - 1] = tall_base(j) + knobs.passage;
        }
    }
    Polygon p = ortho_ring(xs, up, lo);
    if (p.size() != size_t(2 * C + 2)) fail(Errc::Internal, "corridor family vertex count is off");

    std::vector<Point> witnesses;
    for (int i = 0; i < t; ++i) {
        int slab = 1 + i * spacing;
        Scalar midx = (xs[slab - 1] + xs[slab]) / 2;
        Scalar midy = (lo[slab - 1] + up[slab - 1]) / 2;
        midx.canonicalize();
        midy.canonicalize();
        witnesses.push_back(Point{midx, midy});
    }
    for (const Point& wp : witnesses)
        if (p.locate(wp) != PointLocation::Interior) fail(Errc::Internal, "corridor witness not interior");
    return InstanceFamily{std::move(p), std::move(witnesses), t, k, FamilyKind::OrthoCorridors};
}

namespace {

struct BoxLayout {
    Scalar B, c, g, drop;
    Scalar ax(int i) const { return (B - c) * (i - 1); }         // left x of box i (1-based)
    Scalar by(int i) const { return -(B - c) * (i - 1); }        // bottom y of box i
};

} // namespace

std::vector<std::pair<Point, Point>> ortho_boxes_k1_rects(int t, const GeneratorKnobs& knobs) {
    BoxLayout L{knobs.box_size, knobs.box_overlap, knobs.baffle_width, knobs.baffle_drop};
    std::vector<std::pair<Point, Point>> out;
    for (int i = 1; i <= t; ++i) {
        Scalar right = L.ax(i) + L.B;
        Scalar bottom = L.by(i);
        if (i == t) { // the terminal pocket behind the last baffle belongs here
            right = right + L.g;
            bottom = bottom - (L.B - L.c);
        }
        out.emplace_back(Point{L.ax(i), bottom}, Point{right, L.by(i) + L.B});
    }
    return out;
}

int ortho_boxes_k1_box_of(int t, const Point& q, const GeneratorKnobs& knobs) {
    // Overlapping box membership resolves to the smaller index (a modem in
    // the shared window counts for the left box).
    auto rects = ortho_boxes_k1_rects(t, knobs);
    for (size_t i = 0; i < rects.size(); ++i) {
        const auto& [lo, hi] = rects[i];
        if (q.x >= lo.x && q.x <= hi.x && q.y >= lo.y && q.y <= hi.y) return int(i) + 1;
    }
    return 0;
}

InstanceFamily gen_ortho_boxes_k1(int t, const GeneratorKnobs& knobs) {
    if (t < 2) fail(Errc::BadParams, "need t >= 2");
    BoxLayout L{knobs.box_size, knobs.box_overlap, knobs.baffle_width, knobs.baffle_drop};
    const Scalar step = L.B - L.c;
    if (sgn(L.c) <= 0 || L.c >= L.B || sgn(L.g) <= 0 || L.drop >= step)
        fail(Errc::BadParams, "inconsistent box knobs");

    // Union of square rooms descending to the right, overlapping in a c x c
    // opening at each bottom-right corner, with a baffle hanging from the
    // next room's ceiling just right of the opening. Each room contributes
    // three columns (lower drop, baffle start, baffle end).
    std::vector<Scalar> xs, up, lo;
    xs.push_back(Scalar(0));
    for (int i = 1; i <= t; ++i) {
        Scalar a = L.ax(i), b = L.by(i);
        xs.push_back(a + L.B - L.c);
        xs.push_back(a + L.B);
        xs.push_back(a + L.B + L.g);
        up.push_back(b + L.B);    // room ceiling
        up.push_back(b + L.B);    // over the opening
        up.push_back(b - L.drop); // under the baffle
        lo.push_back(b);          // room floor
        lo.push_back(b - step);   // dropped to the next room's floor
        lo.push_back(b - step);
    }
    Polygon p = ortho_ring(xs, up, lo);
    if (p.size() != size_t(6 * t + 2)) fail(Errc::Internal, "box family vertex count is off");

    std::vector<Point> witnesses;
    for (int i = 1; i <= t; ++i) {
        Scalar a = L.ax(i), b = L.by(i);
        // p_r sits in the room's left column just below the entry window,
        // shielded from everything right of the deep baffle; p_b sits in the
        // lower-right quadrant of the exit window.
        Scalar rx = a + L.c / 2;
        Scalar ry = b + L.B - L.c - scalar(3, 2);
        Scalar bx = a + L.B - L.c / 4;
        Scalar by = b + L.c / 4;
        rx.canonicalize(); ry.canonicalize(); bx.canonicalize(); by.canonicalize();
        witnesses.push_back(Point{rx, ry});
        witnesses.push_back(Point{bx, by});
    }
    for (const Point& wp : witnesses)
        if (p.locate(wp) != PointLocation::Interior) fail(Errc::Internal, "box witness not interior");
    return InstanceFamily{std::move(p), std::move(witnesses), t, 1, FamilyKind::OrthoBoxesK1};
}

Polygon gen_random_monotone(int n, uint64_t seed) {
    if (n < 3) fail(Errc::BadParams, "need n >= 3");
    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        Jitter j(seed * 31 + attempt);
        std::vector<Scalar> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = Scalar(i) + j.tiny() / 2 + scalar(1, 4);
        std::vector<Point> uppers, lowers;
        for (int i = 1; i + 1 < n; ++i) {
            Scalar y = Scalar(j.pick(2, 8)) + j.tiny();
            if (j.rng() & 1) uppers.push_back(Point{xs[i], y});
            else lowers.push_back(Point{xs[i], -y});
        }
        std::vector<Point> ring;
        ring.push_back(Point{xs[0], Scalar(0)});
        for (const Point& q : lowers) ring.push_back(q);
        ring.push_back(Point{xs[n - 1], j.tiny()});
        for (size_t i = uppers.size(); i > 0; --i) ring.push_back(uppers[i - 1]);
        try {
            Polygon p(std::move(ring), PolygonClass::Monotone);
            if (p.has_parallel_cross_chain_edges()) continue;
            return p;
        } catch (const Error&) {
            continue;
        }
    }
    fail(Errc::Internal, "random monotone generation did not converge");
}

Polygon gen_random_ortho_monotone(int n, uint64_t seed) {
    if (n < 4 || n % 2 != 0) fail(Errc::BadParams, "need even n >= 4");
    const int cols = n / 2;
    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        Jitter j(seed * 37 + attempt);
        std::vector<Scalar> xs(cols);
        xs[0] = 0;
        for (int i = 1; i < cols; ++i) xs[i] = xs[i - 1] + Scalar(j.pick(1, 4));
        std::vector<Scalar> up, lo;
        up.push_back(Scalar(j.pick(4, 12)));
        lo.push_back(Scalar(0));
        for (int c = 1; c + 1 < cols; ++c) {
            Scalar u = up.back(), l = lo.back();
            if (j.rng() & 1) {
                Scalar nu = l + Scalar(j.pick(1, 9));
                if (nu == u) nu = nu + 1;
                up.push_back(nu);
                lo.push_back(l);
            } else {
                Scalar nl = u - Scalar(j.pick(1, 9));
                if (nl == l) nl = nl - 1;
                up.push_back(u);
                lo.push_back(nl);
            }
        }
        try {
            Polygon p = ortho_ring(xs, up, lo);
            if (p.size() != size_t(n)) continue;
            return p;
        } catch (const Error&) {
            continue;
        }
    }
    fail(Errc::Internal, "random orthogonal generation did not converge");
}

Polygon gen_stair_end_case(int k, int case_id, uint64_t seed) {
    if (k < 3 || k % 2 == 0) fail(Errc::BadParams, "need odd k >= 3");
    if (case_id < 1 || case_id > 5) fail(Errc::BadParams, "case must be 1..5");
    if (case_id == 4 && k < 7) fail(Errc::BadParams, "case 4 needs k >= 7");
    const int h = (k + 7) / 2;
    const int extras = h - 3;

    Jitter j(seed * 101 + uint64_t(k) * 7 + uint64_t(case_id));
    Scalar y_f = 0;
    Scalar y_L = Scalar(10) + j.tiny();
    Scalar y_R = Scalar(20) + j.tiny();

    std::vector<Scalar> levels; // extra horizontal-edge heights, all > y_f
    auto high = [&](int i) -> Scalar { return Scalar(22 + 3 * i) + j.tiny(); };
    switch (case_id) {
        case 1:
            for (int i = 0; i < extras; ++i) levels.push_back(high(i));
            break;
        case 2:
            levels.push_back(Scalar(15) + j.tiny());
            for (int i = 1; i < extras; ++i) levels.push_back(high(i));
            break;
        case 3:
            levels.push_back(Scalar(5) + j.tiny());
            for (int i = 1; i < extras; ++i) levels.push_back(high(i));
            break;
        case 4:
            levels.push_back(Scalar(4) + j.tiny());
            levels.push_back(Scalar(7) + j.tiny());
            for (int i = 2; i < extras; ++i) levels.push_back(high(i));
            break;
        case 5:
            for (int i = 0; i < extras; ++i) levels.push_back(Scalar(1) + Scalar(8 * i + 4) / (extras + 1) / 2);
            break;
    }
    std::shuffle(levels.begin(), levels.end(), j.rng);
    // Adjacent equal levels would merge edges; nudge.
    for (auto& l : levels) l = l + j.tiny();

    std::vector<Point> ring;
    Scalar x = 0;
    ring.push_back(Point{x, levels[0]});
    for (int i = 0; i < extras; ++i) {
        Scalar nx = x + Scalar(j.pick(1, 3));
        Scalar next = (i + 1 < extras) ? levels[i + 1] : y_L;
        ring.push_back(Point{nx, levels[i]});
        ring.push_back(Point{nx, next});
        x = nx;
    }
    Scalar x_p = x + Scalar(j.pick(1, 3));
    Scalar W = x_p + Scalar(j.pick(2, 4));
    ring.push_back(Point{x_p, y_L});
    ring.push_back(Point{x_p, y_R});
    ring.push_back(Point{W, y_R});
    ring.push_back(Point{W, y_f});
    ring.push_back(Point{Scalar(0), y_f});
    Polygon p(std::move(ring), PolygonClass::MonotoneOrthogonal);
    p.labeling();
    if (p.size() != size_t(k + 7)) fail(Errc::Internal, "stair end case vertex count is off");
    return p;
}

Polygon gen_ortho_2k8_case(int k, int case_id, uint64_t seed) {
    if (k < 3 || k % 2 == 0) fail(Errc::BadParams, "need odd k >= 3");
    if (case_id < 1 || case_id > 4) fail(Errc::BadParams, "case must be 1..4");
    const int n = 2 * k + 8;
    const int cols = n / 2;
    const int c0 = (k + 5) / 2; // column of the middle pair (1-based)

    for (uint64_t attempt = 0; attempt < 256; ++attempt) {
        Jitter j(seed * 131 + attempt * 17 + uint64_t(k) * 3 + uint64_t(case_id));
        std::vector<Scalar> xs(cols);
        xs[0] = 0;
        for (int i = 1; i < cols; ++i) xs[i] = xs[i - 1] + Scalar(j.pick(1, 4));

        std::vector<Scalar> up(cols - 1), lo(cols - 1);
        up[0] = Scalar(j.pick(8, 16));
        lo[0] = 0;
        bool ok = true;
        for (int c = 1; c + 1 < cols && ok; ++c) {
            Scalar u = up[c - 1], l = lo[c - 1];
            bool do_upper;
            bool upward;
            if (c == c0 - 1) {
                // the middle column drives the case
                do_upper = (case_id == 1 || case_id == 4);
                upward = (case_id == 1 || case_id == 3);
            } else {
                do_upper = j.rng() & 1;
                upward = j.rng() & 1;
            }
            if (do_upper) {
                Scalar delta = Scalar(j.pick(1, 6));
                Scalar nu = upward ? Scalar(u + delta) : Scalar(u - delta);
                if (nu <= l) nu = l + 1;
                if (nu == u) {
                    ok = false;
                    break;
                }
                up[c] = nu;
                lo[c] = l;
            } else {
                Scalar delta = Scalar(j.pick(1, 6));
                Scalar nl = upward ? Scalar(l + delta) : Scalar(l - delta);
                if (nl >= u) nl = u - 1;
                if (nl == l) {
                    ok = false;
                    break;
                }
                up[c] = u;
                lo[c] = nl;
            }
        }
        if (!ok) continue;

        try {
            Polygon p = ortho_ring(xs, up, lo);
            if (p.size() != size_t(n)) continue;
            // Check the realized case.
            size_t v_hi = p.labeled_index(size_t(k + 4));
            size_t v_lo = p.labeled_index(size_t(k + 5));
            const Scalar& mx = p.vertex(v_lo).x;
            if (p.vertex(v_hi).x != mx) continue;
            auto horizontal_at = [&](size_t v) {
                size_t e1 = (v + p.size() - 1) % p.size(), e2 = v;
                return p.edge_a(e1).y == p.edge_b(e1).y ? e1 : e2;
            };
            auto goes_right = [&](size_t h) {
                return std::max(p.edge_a(h).x, p.edge_b(h).x) > mx;
            };
            bool attach_high = goes_right(horizontal_at(v_hi));
            size_t f = p.size();
            for (size_t e = 0; e < p.size(); ++e) {
                const Point& a = p.edge_a(e);
                const Point& b = p.edge_b(e);
                if (std::min(a.x, b.x) < mx && mx < std::max(a.x, b.x)) f = e;
            }
            if (f == p.size()) continue;
            bool f_above = p.edge_a(f).y > p.vertex(v_hi).y;
            int realized = attach_high ? (f_above ? 3 : 1) : (f_above ? 2 : 4);
            if (realized != case_id) continue;
            return p;
        } catch (const Error&) {
            continue;
        }
    }
    fail(Errc::Internal, "2k+8 case generation did not converge");
}

} // namespace kmodem
