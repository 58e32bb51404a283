#include "kmodem/placement_monotone.h"

#include "kmodem/errors.h"

#include <algorithm>

namespace kmodem {

namespace {

void require_plain_monotone(const Polygon& p) {
    p.labeling();
    if (p.orthogonal_shape()) fail(Errc::NotMonotone, "operation needs a non-orthogonal monotone polygon");
}

// The unique edge not incident to the given vertex whose x-range strictly
// spans x, or npos when the vertical line only grazes the boundary (tied cap
// columns).
size_t opposite_edge_spanning_opt(const Polygon& p, const Scalar& x, size_t avoid_vertex) {
    const size_t n = p.size();
    for (size_t e = 0; e < n; ++e) {
        if (e == avoid_vertex || (e + 1) % n == avoid_vertex) continue;
        const Point& a = p.edge_a(e);
        const Point& b = p.edge_b(e);
        if (std::min(a.x, b.x) < x && x < std::max(a.x, b.x)) return e;
    }
    return n;
}

size_t opposite_edge_spanning(const Polygon& p, const Scalar& x, size_t avoid_vertex) {
    size_t e = opposite_edge_spanning_opt(p, x, avoid_vertex);
    if (e == p.size()) fail(Errc::Internal, "no opposite edge spans the vertical line");
    return e;
}

Point point_on_edge_at_x(const Polygon& p, size_t e, const Scalar& x) {
    const Point& a = p.edge_a(e);
    const Point& b = p.edge_b(e);
    Scalar y = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
    y.canonicalize();
    return Point{x, y};
}

bool is_reflex(const Polygon& p, size_t v) {
    const size_t n = p.size();
    return orientation(p.vertex((v + n - 1) % n), p.vertex(v), p.vertex((v + 1) % n)) == Orientation::Right;
}

// Candidate construction around an arbitrary interior label m (3 <= m <= n-2).
CandidateSet2k5 candidates_at(const Polygon& p, int m) {
    const size_t n = p.size();
    if (m < 3 || size_t(m) > n - 2) fail(Errc::LabelOutOfRange, "median label " + std::to_string(m));
    CandidateSet2k5 c;
    c.m = m;
    size_t vm = p.labeled_index(size_t(m));
    c.v_m = p.vertex(vm);

    size_t prev = (vm + n - 1) % n, next = (vm + 1) % n;
    bool prev_is_left = p.vertex(prev).x < c.v_m.x;
    c.v_e_left = prev_is_left ? prev : next;
    c.v_e_right = prev_is_left ? next : prev;
    c.e_left = prev_is_left ? prev : vm;
    c.e_right = prev_is_left ? vm : prev;

    c.f = opposite_edge_spanning(p, c.v_m.x, vm);
    {
        const Point& a = p.edge_a(c.f);
        const Point& b = p.edge_b(c.f);
        bool a_left = a.x < b.x;
        c.v_f_left = a_left ? c.f : (c.f + 1) % n;
        c.v_f_right = a_left ? (c.f + 1) % n : c.f;
    }
    c.f_left = (c.v_f_left == c.f) ? (c.f + n - 1) % n : (c.f + 1) % n;
    c.f_right = (c.v_f_right == c.f) ? (c.f + n - 1) % n : (c.f + 1) % n;

    c.p_m = point_on_edge_at_x(p, c.f, c.v_m.x);
    c.v_m_above_f = c.v_m.y > c.p_m.y;

    const Scalar& x_prev = p.labeled(size_t(m - 1)).x;
    const Scalar& x_next = p.labeled(size_t(m + 1)).x;
    c.p_e_prev = point_on_edge_at_x(p, c.e_left, x_prev);
    c.p_f_prev = point_on_edge_at_x(p, c.f, x_prev);
    c.p_e_next = point_on_edge_at_x(p, c.e_right, x_next);
    c.p_f_next = point_on_edge_at_x(p, c.f, x_next);
    return c;
}

LemmaConditionReport conditions_impl(const Polygon& p, int k, bool want_even) {
    if (k < 0) fail(Errc::BadParams, "negative k");
    if ((k % 2 == 0) != want_even) fail(Errc::ParityMismatch, "k parity does not match the case lemma");
    require_plain_monotone(p);
    if (p.size() != size_t(2 * k + 5)) fail(Errc::WrongSize, "polygon is not a (2k+5)-gon");

    CandidateSet2k5 c = candidates_at(p, k + 3);
    LemmaConditionReport r;
    r.even_k = want_even;

    if (want_even) {
        // Supporting-line tests. z is the intersection of the carrier lines of
        // the median's side edge and of f; the conditions ask whether it hits
        // the other edge (and on which side of the vertical through v_m).
        auto line_hits = [&](size_t carrier, size_t target, int side_of_vm) {
            auto z = line_intersection(p.edge_a(carrier), p.edge_b(carrier), p.edge_a(target), p.edge_b(target));
            if (!z) return false; // parallel lines never intersect
            if (!point_on_segment(*z, p.edge_a(target), p.edge_b(target))) return false;
            if (side_of_vm < 0) return z->x < c.v_m.x;
            if (side_of_vm > 0) return z->x > c.v_m.x;
            return true;
        };
        r.cond_v_left = !line_hits(c.e_left, c.f, -1);
        r.cond_v_right = !line_hits(c.e_right, c.f, +1);
        r.cond_p_left = !line_hits(c.f, c.e_left, 0);
        r.cond_p_right = !line_hits(c.f, c.e_right, 0);

        r.v_m = CandidateCert{r.cond_v_left, r.cond_v_right, r.cond_v_left && r.cond_v_right};
        r.p_m = CandidateCert{r.cond_p_left, r.cond_p_right, r.cond_p_left && r.cond_p_right};
        r.p_f_prev.whole = !r.cond_v_right && !r.cond_p_left;
        r.p_f_next.whole = !r.cond_v_left && !r.cond_p_right;
    } else {
        size_t v1 = p.labeled_index(1), vn = p.labeled_index(p.size());
        auto convex = [&](size_t v) { return !is_reflex(p, v); };
        r.cond_v_left = is_reflex(p, c.v_e_left) || (convex(c.v_f_left) && c.v_f_left != v1);
        r.cond_p_left = is_reflex(p, c.v_f_left) || (convex(c.v_e_left) && c.v_e_left != v1);
        r.cond_v_right = is_reflex(p, c.v_e_right) || (convex(c.v_f_right) && c.v_f_right != vn);
        r.cond_p_right = is_reflex(p, c.v_f_right) || (convex(c.v_e_right) && c.v_e_right != vn);
        r.ray_left = orientation(c.p_f_next, c.v_m, p.vertex(c.v_e_left)) == Orientation::Left;
        r.ray_right = orientation(c.p_f_prev, c.v_m, p.vertex(c.v_e_right)) == Orientation::Right;

        r.v_m = CandidateCert{r.cond_v_left, r.cond_v_right, r.cond_v_left && r.cond_v_right};
        r.p_m = CandidateCert{r.cond_p_left, r.cond_p_right, r.cond_p_left && r.cond_p_right};
        r.p_f_next.whole = r.cond_p_left && r.ray_left;
        r.p_f_prev.whole = r.cond_p_right && r.ray_right;
        r.p_e_next.whole = !r.cond_v_right && !r.cond_p_left &&
                           orientation(c.p_f_prev, c.v_m, p.vertex(c.v_e_right)) == Orientation::Left;
        r.p_e_prev.whole = !r.cond_v_left && !r.cond_p_right &&
                           orientation(c.p_f_next, c.v_m, p.vertex(c.v_e_left)) == Orientation::Right;
    }
    return r;
}

} // namespace

CandidateSet2k5 candidates_2k5(const Polygon& p, int k) {
    if (k < 0) fail(Errc::BadParams, "negative k");
    require_plain_monotone(p);
    if (p.size() != size_t(2 * k + 5)) fail(Errc::WrongSize, "polygon is not a (2k+5)-gon");
    return candidates_at(p, k + 3);
}

LemmaConditionReport even_case_conditions(const Polygon& p, int k) { return conditions_impl(p, k, true); }
LemmaConditionReport odd_case_conditions(const Polygon& p, int k) { return conditions_impl(p, k, false); }

Modem place_single_2k5(const Polygon& p, int k) {
    if (k < 0) fail(Errc::BadParams, "negative k");
    p.labeling();
    const size_t n = p.size();
    if (n > size_t(2 * k + 5)) fail(Errc::WrongSize, "polygon larger than 2k+5 vertices");

    std::vector<std::pair<Point, const char*>> trial;
    if (n == size_t(2 * k + 5) && !p.orthogonal_shape()) {
        CandidateSet2k5 c = candidates_at(p, k + 3);
        trial = {{c.v_m, "2k5:v_m"},         {c.p_m, "2k5:p_m"},         {c.p_f_prev, "2k5:p_f_prev"},
                 {c.p_f_next, "2k5:p_f_next"}, {c.p_e_prev, "2k5:p_e_prev"}, {c.p_e_next, "2k5:p_e_next"}};
    } else {
        // Remainder sizes. v_{min(k+2, n-1)} handles every n <= 2k+3; for a
        // (2k+4)-gon one of v_m, p_m at m = k+3 always works; the vertex and
        // p_j scans keep the search exhaustive for skewed inputs.
        size_t lead = std::min(size_t(k) + 2, n - 1);
        trial.emplace_back(p.labeled(lead), "small:v_lead");
        if (!p.orthogonal_shape() && size_t(k) + 3 <= n - 2) {
            CandidateSet2k5 c = candidates_at(p, k + 3);
            trial.emplace_back(c.v_m, "small:v_m");
            trial.emplace_back(c.p_m, "small:p_m");
            trial.emplace_back(c.p_f_prev, "small:p_f_prev");
            trial.emplace_back(c.p_f_next, "small:p_f_next");
            trial.emplace_back(c.p_e_prev, "small:p_e_prev");
            trial.emplace_back(c.p_e_next, "small:p_e_next");
        }
        for (size_t l = 2; l <= n - 1; ++l) trial.emplace_back(p.labeled(l), "small:v_scan");
        if (!p.orthogonal_shape()) {
            for (size_t l = 2; l <= n - 1; ++l) {
                size_t vi = p.labeled_index(l);
                size_t f = n;
                for (size_t e = 0; e < n && f == n; ++e) {
                    if (e == vi || (e + 1) % n == vi) continue;
                    const Point& a = p.edge_a(e);
                    const Point& b = p.edge_b(e);
                    if (std::min(a.x, b.x) < p.vertex(vi).x && p.vertex(vi).x < std::max(a.x, b.x)) f = e;
                }
                if (f < n) trial.emplace_back(point_on_edge_at_x(p, f, p.vertex(vi).x), "small:p_scan");
            }
        }
    }

    const Scalar& zone_lo = p.labeled(2).x;
    const Scalar& zone_hi = p.labeled(n - 1).x;
    for (auto& [pt, note] : trial) {
        if (pt.x < zone_lo || pt.x > zone_hi) continue;
        if (is_valid_modem_position(p, pt, k)) return Modem{pt, k, note};
    }
    fail(Errc::NoValidCandidate, "no candidate position illuminates the polygon");
}

namespace {

// Splitting when the supporting lines of e (the edge leaving the anchor
// vertex rightward) and f (the opposite edge under/over it) meet to the right
// of the vertical through v_{i-1}. Returns nullopt when the configuration is
// mirrored.
std::optional<SplitOutcome> split_right_case(const Polygon& p, int i) {
    const size_t n = p.size();
    size_t anchor = p.labeled_index(size_t(i - 1));
    const Point& va = p.vertex(anchor);

    size_t prev = (anchor + n - 1) % n, next = (anchor + 1) % n;
    size_t right_nb = p.vertex(next).x > va.x ? next : prev;
    size_t e = (right_nb == next) ? anchor : prev; // edge (v_{i-1}, right neighbour)
    size_t f = opposite_edge_spanning_opt(p, va.x, anchor);
    if (f == n) return std::nullopt; // anchor on a tied cap column; mirror applies

    auto x = line_intersection(p.edge_a(e), p.edge_b(e), p.edge_a(f), p.edge_b(f));
    if (!x) fail(Errc::ParallelEdges, "the splitting edge pair is parallel");
    if (x->x <= va.x) return std::nullopt;
    if (x->x <= p.labeled(size_t(i)).x)
        fail(Errc::Internal, "supporting lines meet inside the splitting slab");

    const Chains& ch = p.boundary_chains();
    bool anchor_on_lower = std::find(ch.lower.begin(), ch.lower.end(), anchor) != ch.lower.end() &&
                           anchor != ch.lower.front() && anchor != ch.lower.back();
    // v_1/v_n cannot be the anchor (3 <= i <= n-1 puts it strictly inside).
    const std::vector<size_t>& cchain = anchor_on_lower ? ch.lower : ch.upper; // chain of v_{i-1}
    const std::vector<size_t>& ochain = anchor_on_lower ? ch.upper : ch.lower; // chain of f

    size_t v_f_left = p.edge_a(f).x < p.edge_b(f).x ? f : (f + 1) % n;
    size_t v_f_right = (v_f_left == f) ? (f + 1) % n : f;

    // Left part: chain of the anchor up to v_{i-1}, the extension point, and
    // the opposite chain up to f's left endpoint.
    std::vector<Point> left;
    for (size_t idx : ochain) {
        if (p.vertex(idx).x > p.vertex(v_f_left).x) break;
        left.push_back(p.vertex(idx));
    }
    left.push_back(*x);
    {
        std::vector<Point> back;
        for (size_t idx : cchain) {
            if (p.vertex(idx).x > va.x) break;
            back.push_back(p.vertex(idx));
        }
        // cchain starts at v_1 which ochain already contributed.
        for (size_t j = back.size(); j > 1; --j) left.push_back(back[j - 1]);
    }

    // Right part: two shapes depending on which chain v_i lives on.
    size_t vi = p.labeled_index(size_t(i));
    bool vi_on_cchain = std::find(cchain.begin(), cchain.end(), vi) != cchain.end();
    std::vector<Point> right;
    Point p_f_anchor = point_on_edge_at_x(p, f, va.x);
    if (vi_on_cchain) {
        // New edge from the point of f under v_{i-1} to v_i.
        right.push_back(p_f_anchor);
        bool started = false;
        for (size_t idx : cchain) {
            if (p.vertex(idx).x < p.vertex(vi).x) continue;
            right.push_back(p.vertex(idx));
            started = true;
        }
        (void)started;
        std::vector<Point> back;
        for (size_t idx : ochain)
            if (p.vertex(idx).x >= p.vertex(v_f_right).x && idx != ochain.back()) back.push_back(p.vertex(idx));
        for (size_t j = back.size(); j > 0; --j) right.push_back(back[j - 1]);
    } else {
        // New edge from v_{i-1} to v_i.
        right.push_back(va);
        for (size_t idx : cchain)
            if (p.vertex(idx).x > va.x) right.push_back(p.vertex(idx));
        std::vector<Point> back;
        for (size_t idx : ochain)
            if (p.vertex(idx).x >= p.vertex(vi).x && idx != ochain.back()) back.push_back(p.vertex(idx));
        for (size_t j = back.size(); j > 0; --j) right.push_back(back[j - 1]);
    }

    SplitOutcome out{Polygon(std::move(left), PolygonClass::Monotone),
                     Polygon(std::move(right), PolygonClass::Monotone), va.x, p.labeled(size_t(i)).x, *x};
    if (out.left.size() != size_t(i) || out.right.size() != n - size_t(i) + 2)
        fail(Errc::Internal, "split part sizes are off");
    return out;
}

} // namespace

SplitOutcome split_monotone(const Polygon& p, int label) {
    require_plain_monotone(p);
    const size_t n = p.size();
    if (label < 3 || size_t(label) > n - 1) fail(Errc::LabelOutOfRange, "split label " + std::to_string(label));

    if (auto out = split_right_case(p, label)) return *out;

    // Mirrored configuration: split the x-mirrored polygon at the mirrored
    // label and swap the parts back.
    Polygon q = mirror_x(p);
    auto out = split_right_case(q, int(n) - label + 2);
    if (!out) fail(Errc::Internal, "neither split orientation applies");
    SplitOutcome res{mirror_x(out->right), mirror_x(out->left), p.labeled(size_t(label - 1)).x,
                     p.labeled(size_t(label)).x, Point{-out->extension.x, out->extension.y}};
    if (res.left.size() != size_t(label) || res.right.size() != n - size_t(label) + 2)
        fail(Errc::Internal, "mirrored split part sizes are off");
    return res;
}

ModemPlan place_monotone(const Polygon& p, int k) {
    if (k < 0) fail(Errc::BadParams, "negative k");
    p.labeling();
    const size_t chunk = size_t(2 * k + 5);

    ModemPlan plan;
    plan.k = k;
    Polygon rest = p;
    std::optional<Scalar> zone_lo; // right-zone constraint inherited from the previous split
    while (rest.size() > chunk) {
        SplitOutcome out = split_monotone(rest, int(chunk));
        Modem m = place_single_2k5(out.left, k);
        if (m.position.x > out.left_zone_max_x)
            fail(Errc::Internal, "chunk modem violates the left zone contract");
        if (zone_lo && m.position.x < *zone_lo)
            fail(Errc::Internal, "chunk modem violates the inherited right zone contract");
        plan.modems.push_back(std::move(m));
        zone_lo = out.right_zone_min_x;
        rest = out.right;
    }
    Modem last = place_single_2k5(rest, k);
    if (zone_lo && last.position.x < *zone_lo)
        fail(Errc::Internal, "final modem violates the inherited right zone contract");
    plan.modems.push_back(std::move(last));

    size_t bound = (p.size() - 2 + (2 * size_t(k) + 2)) / (2 * size_t(k) + 3);
    if (plan.modems.size() > bound) fail(Errc::Internal, "placement exceeded the chunk bound");
    return plan;
}

} // namespace kmodem
