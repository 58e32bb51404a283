#include "kmodem/placement_orthogonal.h"

#include "kmodem/errors.h"

#include <algorithm>

namespace kmodem {

namespace {

void require_ortho(const Polygon& p) {
    p.labeling();
    if (!p.orthogonal_shape()) fail(Errc::NotOrthogonal, "operation needs a monotone orthogonal polygon");
}

bool is_horizontal(const Polygon& p, size_t e) { return p.edge_a(e).y == p.edge_b(e).y; }

// The unique horizontal edge other than the vertical pair edge at a vertex.
size_t horizontal_edge_at(const Polygon& p, size_t v) {
    const size_t n = p.size();
    size_t e1 = (v + n - 1) % n, e2 = v;
    if (is_horizontal(p, e1)) return e1;
    if (is_horizontal(p, e2)) return e2;
    fail(Errc::Internal, "vertex without a horizontal edge");
}

size_t horizontal_edge_spanning(const Polygon& p, const Scalar& x) {
    const size_t n = p.size();
    for (size_t e = 0; e < n; ++e) {
        const Point& a = p.edge_a(e);
        const Point& b = p.edge_b(e);
        if (std::min(a.x, b.x) < x && x < std::max(a.x, b.x)) return e;
    }
    fail(Errc::Internal, "no horizontal edge spans the split line");
}

// Horizontal edges ordered top to bottom; equal heights put the left edge first.
std::vector<size_t> horizontal_edges_ordered(const Polygon& p) {
    std::vector<size_t> hs;
    for (size_t e = 0; e < p.size(); ++e)
        if (is_horizontal(p, e)) hs.push_back(e);
    std::sort(hs.begin(), hs.end(), [&](size_t a, size_t b) {
        if (p.edge_a(a).y != p.edge_a(b).y) return p.edge_a(a).y > p.edge_a(b).y;
        return std::min(p.edge_a(a).x, p.edge_b(a).x) < std::min(p.edge_a(b).x, p.edge_b(b).x);
    });
    return hs;
}

bool is_edge_between(const Polygon& p, size_t u, size_t v) {
    const size_t n = p.size();
    return (u + 1) % n == v || (v + 1) % n == u;
}

} // namespace

OrthoSplitOutcome ortho_split(const Polygon& p, int label) {
    require_ortho(p);
    const size_t n = p.size();
    if (label % 2 != 0) fail(Errc::OddLabel, "orthogonal split label must be even");
    if (label < 4 || size_t(label) > n - 2) fail(Errc::LabelOutOfRange, "split label " + std::to_string(label));

    size_t v_hi = p.labeled_index(size_t(label - 1)); // upper vertex of the pair
    size_t v_lo = p.labeled_index(size_t(label));     // lower vertex
    const Scalar& x = p.vertex(v_lo).x;
    if (p.vertex(v_hi).x != x) fail(Errc::Internal, "labels do not form a vertical pair");

    size_t f = horizontal_edge_spanning(p, x);
    Scalar fy = p.edge_a(f).y;
    Point p_cut{x, fy};

    auto goes_left = [&](size_t v) {
        size_t h = horizontal_edge_at(p, v);
        const Point& a = p.edge_a(h);
        const Point& b = p.edge_b(h);
        return std::min(a.x, b.x) < x;
    };
    size_t w_left = goes_left(v_hi) ? v_hi : v_lo;
    size_t w_right = (w_left == v_hi) ? v_lo : v_hi;
    if (goes_left(w_right)) fail(Errc::Internal, "both pair vertices attach leftward");

    auto build = [&](bool left_side) {
        std::vector<Point> ring;
        size_t keep_vtx = left_side ? w_left : w_right;
        size_t start = left_side ? p.labeled_index(n) : p.labeled_index(1);
        for (size_t step = 0; step < n; ++step) {
            size_t j = (start + step) % n;
            const Point& w = p.vertex(j);
            if (j == keep_vtx || (left_side ? w.x < x : w.x > x)) ring.push_back(w);
            if (j == f) ring.push_back(p_cut);
        }
        return Polygon(std::move(ring), PolygonClass::MonotoneOrthogonal);
    };

    OrthoSplitOutcome out{build(true), build(false), Segment(p.vertex(w_left), p_cut),
                          Segment(p.vertex(w_right), p_cut), p_cut};
    if (out.left.size() != size_t(label) || out.right.size() != n - size_t(label) + 2)
        fail(Errc::Internal, "orthogonal split part sizes are off");
    return out;
}

Modem place_outside_k3(const Polygon& p, int k, const Point& q) {
    require_ortho(p);
    if (k < 0) fail(Errc::BadParams, "negative k");
    if (p.size() > size_t(k) + 3) fail(Errc::TooManyVertices, "needs at most k+3 vertices");
    return Modem{q, k, "k3:anywhere"};
}

Modem place_edge_k5(const Polygon& p, int k, Side side) {
    require_ortho(p);
    if (k < 0) fail(Errc::BadParams, "negative k");
    const size_t n = p.size();
    if (n > size_t(k) + 5) fail(Errc::TooManyVertices, "needs at most k+5 vertices");

    if (side == Side::Right) {
        Modem m = place_edge_k5(mirror_x(p), k, Side::Left);
        m.position.x = -m.position.x;
        m.note = "k5:right";
        return m;
    }

    ExtremalEdges ext = extremal_edges(p);
    Point la = p.edge_a(ext.left), lb = p.edge_b(ext.left);
    if (n <= size_t(k) + 4) {
        Scalar my = (la.y + lb.y) / 2;
        my.canonicalize();
        return Modem{Point{la.x, my}, k, "k4:edge_mid"};
    }

    // n == k+5, k odd. Prefer a non-extremal horizontal edge incident to the
    // leftmost edge, the higher one first; otherwise the topmost non-extremal
    // horizontal edge of the polygon.
    size_t v_top = p.labeled_index(1), v_bot = p.labeled_index(2);
    size_t h_top = horizontal_edge_at(p, v_top);
    size_t h_bot = horizontal_edge_at(p, v_bot);
    size_t f = n;
    if (h_top != ext.top && h_top != ext.bottom) f = h_top;
    else if (h_bot != ext.top && h_bot != ext.bottom) f = h_bot;
    else {
        for (size_t e : horizontal_edges_ordered(p))
            if (e != ext.top && e != ext.bottom) {
                f = e;
                break;
            }
    }
    if (f == n) fail(Errc::Internal, "no non-extremal horizontal edge");

    Point q{la.x, p.edge_a(f).y};
    if (!is_valid_modem_position(p, q, k))
        fail(Errc::Internal, "edge placement rejected by the checker");
    return Modem{q, k, "k5:left"};
}

std::vector<StairEndSide> classify_stair_end(const Polygon& p) {
    require_ortho(p);
    const size_t n = p.size();
    std::vector<StairEndSide> out;
    auto lbl = [&](size_t l) { return p.labeled_index(l); };
    if (is_edge_between(p, lbl(1), lbl(3))) out.push_back(StairEndSide::UpperLeft);
    if (is_edge_between(p, lbl(2), lbl(4))) out.push_back(StairEndSide::LowerLeft);
    if (is_edge_between(p, lbl(n - 3), lbl(n - 1))) out.push_back(StairEndSide::UpperRight);
    if (is_edge_between(p, lbl(n - 2), lbl(n))) out.push_back(StairEndSide::LowerRight);
    if (out.empty()) fail(Errc::NotStairEnd, "no stair end defining edge");
    return out;
}

namespace {

// Upper-right core of the (k+7)-gon placement; returns the chosen point on
// the rightmost edge plus the dispatch case (1..5).
std::pair<Point, int> stair_end_upper_right(const Polygon& p) {
    const size_t n = p.size();
    size_t v_n3 = p.labeled_index(n - 3), v_n2 = p.labeled_index(n - 2);
    size_t v_n1 = p.labeled_index(n - 1), v_nn = p.labeled_index(n);
    if (!is_edge_between(p, v_n3, v_n1)) fail(Errc::NotStairEnd, "not upper right sided");

    size_t f = horizontal_edge_at(p, v_nn);
    size_t eR_edge = ((v_n3 + 1) % n == v_n1) ? v_n3 : v_n1;
    size_t e_L = horizontal_edge_at(p, v_n2);

    std::vector<size_t> hs = horizontal_edges_ordered(p);
    const size_t m = hs.size();
    if (m < 5) fail(Errc::Internal, "stair end with fewer than five horizontal edges");
    auto ord = [&](size_t edge) {
        for (size_t i = 0; i < m; ++i)
            if (hs[i] == edge) return i;
        fail(Errc::Internal, "edge missing from the horizontal order");
    };
    size_t e3t = hs[2], e3b = hs[m - 3];
    size_t o_R = ord(eR_edge), o_L = ord(e_L), o_f = ord(f);
    size_t o_3t = 2, o_3b = m - 3;

    if (!(o_R < o_L && o_L < o_f))
        fail(Errc::Internal, "stair end horizontal order violated");

    const Scalar& rx = p.vertex(v_nn).x;
    auto on_right_edge = [&](const Scalar& y) {
        if (y < p.vertex(v_nn).y || y > p.vertex(v_n1).y)
            fail(Errc::Internal, "stair end point off the rightmost edge");
        return Point{rx, y};
    };

    if (e3b == eR_edge) return {p.vertex(v_n1), 1};
    if (o_R < o_3b && o_3b < o_L) return {on_right_edge(p.edge_a(e3b).y), 2};
    if (e3b == e_L) return {on_right_edge(p.edge_a(e_L).y), 3};
    if (o_3b > o_L && o_3t < o_L) return {on_right_edge(p.edge_a(e_L).y), 4};
    if (o_L <= o_3t && o_3t <= o_f) return {on_right_edge(p.edge_a(e3t).y), 5};
    fail(Errc::Internal, "stair end case dispatch not exhaustive");
}

} // namespace

Modem place_stair_end_k7(const Polygon& p, int k, std::optional<StairEndSide> prefer) {
    require_ortho(p);
    if (k < 3 || k % 2 == 0) fail(Errc::EvenK, "needs odd k >= 3");
    if (p.size() != size_t(k) + 7) fail(Errc::WrongSize, "polygon is not a (k+7)-gon");

    std::vector<StairEndSide> classes = classify_stair_end(p);
    // Requested side first, Upper over Lower.
    std::vector<StairEndSide> order = {StairEndSide::UpperRight, StairEndSide::LowerRight,
                                       StairEndSide::UpperLeft, StairEndSide::LowerLeft};
    if (prefer && (*prefer == StairEndSide::UpperLeft || *prefer == StairEndSide::LowerLeft))
        order = {StairEndSide::UpperLeft, StairEndSide::LowerLeft, StairEndSide::UpperRight,
                 StairEndSide::LowerRight};
    if (prefer) {
        order.erase(std::remove(order.begin(), order.end(), *prefer), order.end());
        order.insert(order.begin(), *prefer);
    }
    StairEndSide side = classes.front();
    for (StairEndSide s : order)
        if (std::find(classes.begin(), classes.end(), s) != classes.end()) {
            side = s;
            break;
        }

    bool mx = side == StairEndSide::UpperLeft || side == StairEndSide::LowerLeft;
    bool my = side == StairEndSide::LowerRight || side == StairEndSide::LowerLeft;
    Polygon q = p;
    if (mx) q = mirror_x(q);
    if (my) q = mirror_y(q);
    auto [pt, case_id] = stair_end_upper_right(q);
    if (mx) pt.x = -pt.x;
    if (my) pt.y = -pt.y;

    if (!is_valid_modem_position(p, pt, k))
        fail(Errc::Internal, "stair end placement rejected by the checker");
    return Modem{pt, k, "k7:case" + std::to_string(case_id)};
}

Modem place_single_2k6(const Polygon& p, int k) {
    require_ortho(p);
    if (k < 0) fail(Errc::BadParams, "negative k");
    const size_t n = p.size();
    if (n > 2 * size_t(k) + 6) fail(Errc::WrongSize, "polygon larger than 2k+6 vertices");

    Modem m{p.labeled(1), k, "k4:vertex"};
    if (n > size_t(k) + 4) {
        if (k % 2 == 0) {
            // Splitting at v_{k+4} leaves two parts of at most k+4 vertices,
            // both seen from that vertex.
            m = Modem{p.labeled(size_t(k) + 4), k, "2k6:v_k4"};
        } else {
            OrthoSplitOutcome out = ortho_split(p, k + 3);
            Modem inner = place_edge_k5(out.right, k, Side::Left);
            m = Modem{inner.position, k, "2k6:" + inner.note};
        }
    }
    if (!is_valid_modem_position(p, m.position, k))
        fail(Errc::Internal, "2k+6 placement rejected by the checker");
    return m;
}

Modem place_single_2k8(const Polygon& p, int k) {
    require_ortho(p);
    if (k % 2 == 0 || k == 1) fail(Errc::EvenK, "needs odd k >= 3");
    const size_t n = p.size();
    if (n > 2 * size_t(k) + 8) fail(Errc::WrongSize, "polygon larger than 2k+8 vertices");
    if (n <= 2 * size_t(k) + 6) return place_single_2k6(p, k);

    const int m = k + 5;
    size_t v_hi = p.labeled_index(size_t(m - 1)); // upper vertex of the middle pair
    size_t v_lo = p.labeled_index(size_t(m));
    const Scalar& x = p.vertex(v_lo).x;

    size_t h_hi = horizontal_edge_at(p, v_hi);
    size_t h_lo = horizontal_edge_at(p, v_lo);
    auto goes_right = [&](size_t h) {
        return std::max(p.edge_a(h).x, p.edge_b(h).x) > x;
    };
    bool attach_high = goes_right(h_hi);
    if (attach_high == goes_right(h_lo)) fail(Errc::Internal, "middle pair attachment is ambiguous");

    size_t f = horizontal_edge_spanning(p, x);
    bool f_above = p.edge_a(f).y > p.vertex(v_hi).y;

    Modem inner{Point{Scalar(0), Scalar(0)}, k, ""};
    int case_id;
    if (attach_high && !f_above) {
        case_id = 1;
        OrthoSplitOutcome out = ortho_split(p, m + 2);
        inner = place_stair_end_k7(out.left, k, StairEndSide::UpperRight);
    } else if (!attach_high && f_above) {
        case_id = 2;
        OrthoSplitOutcome out = ortho_split(p, m + 2);
        inner = place_stair_end_k7(out.left, k, StairEndSide::LowerRight);
    } else if (attach_high && f_above) {
        case_id = 3;
        OrthoSplitOutcome out = ortho_split(p, m - 2);
        inner = place_stair_end_k7(out.right, k, StairEndSide::LowerLeft);
    } else {
        case_id = 4;
        OrthoSplitOutcome out = ortho_split(p, m - 2);
        inner = place_stair_end_k7(out.right, k, StairEndSide::UpperLeft);
    }

    Modem res{inner.position, k, "2k8:case" + std::to_string(case_id) + ":" + inner.note};
    if (!is_valid_modem_position(p, res.position, k))
        fail(Errc::Internal, "2k+8 placement rejected by the checker");
    return res;
}

ModemPlan place_orthogonal(const Polygon& p, int k) {
    require_ortho(p);
    if (k < 0) fail(Errc::BadParams, "negative k");
    const bool wide = (k % 2 == 1 && k >= 3);
    const size_t chunk = wide ? 2 * size_t(k) + 8 : 2 * size_t(k) + 6;

    ModemPlan plan;
    plan.k = k;
    Polygon rest = p;
    while (rest.size() > chunk) {
        OrthoSplitOutcome out = ortho_split(rest, int(chunk));
        plan.modems.push_back(wide ? place_single_2k8(out.left, k) : place_single_2k6(out.left, k));
        rest = out.right;
    }
    plan.modems.push_back(wide ? place_single_2k8(rest, k) : place_single_2k6(rest, k));

    size_t denom = chunk - 2;
    size_t bound = (p.size() - 2 + denom - 1) / denom;
    if (plan.modems.size() > bound) fail(Errc::Internal, "placement exceeded the chunk bound");
    return plan;
}

} // namespace kmodem
