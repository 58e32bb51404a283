#include "kmodem/illumination.h"

#include "kmodem/errors.h"

#include <algorithm>

namespace kmodem {

WallCounter::WallCounter(const Polygon& p, Point source) : p_(&p), q_(std::move(source)) {
    const size_t n = p.size();
    p.labeling();
    excl_.assign(n, 0);
    for (size_t e = 0; e < n; ++e)
        if (point_on_segment(q_, p.edge_a(e), p.edge_b(e))) excl_[e] = 1;
    rx_.resize(n);
    ry_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        Scalar dx = p.vertex(i).x - q_.x;
        Scalar dy = p.vertex(i).y - q_.y;
        BigInt den = lcm(dx.get_den(), dy.get_den());
        rx_[i] = dx.get_num() * (den / dx.get_den());
        ry_[i] = dy.get_num() * (den / dy.get_den());
    }
    side_.assign(n, 0);
    side_stamp_.assign(n, 0);
    run_stamp_.assign(n, 0);
}

int WallCounter::side_of(size_t v) const {
    if (side_stamp_[v] == stamp_) return side_[v];
    // sign of cross(d, v - q) with positive scale factors dropped
    mpz_mul(t1_.get_mpz_t(), adx_.get_mpz_t(), ry_[v].get_mpz_t());
    mpz_mul(t2_.get_mpz_t(), ady_.get_mpz_t(), rx_[v].get_mpz_t());
    int c = mpz_cmp(t1_.get_mpz_t(), t2_.get_mpz_t());
    int8_t s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    side_[v] = s;
    side_stamp_[v] = stamp_;
    return s;
}

Scalar WallCounter::param_of(size_t v, const Scalar& ddx, const Scalar& ddy) const {
    const Point& pt = p_->vertex(v);
    Scalar r = (pt.x - q_.x) * ddx + (pt.y - q_.y) * ddy;
    r.canonicalize();
    return r;
}

int WallCounter::count_core(const Scalar& ddx, const Scalar& ddy, const Scalar* t_end,
                            std::vector<size_t>* touched) const {
    const size_t n = p_->size();
    if (++stamp_ == 0) {
        std::fill(side_stamp_.begin(), side_stamp_.end(), 0u);
        std::fill(run_stamp_.begin(), run_stamp_.end(), 0u);
        stamp_ = 1;
    }
    {
        BigInt dden = lcm(ddx.get_den(), ddy.get_den());
        adx_ = ddx.get_num() * (dden / ddx.get_den());
        ady_ = ddy.get_num() * (dden / ddy.get_den());
    }

    std::optional<Scalar> wlo, whi;
    if (t_end) {
        Scalar tx = q_.x + ddx;
        wlo = std::min(q_.x, tx);
        whi = std::max(q_.x, tx);
    } else {
        int s = sgn(ddx);
        if (s >= 0) wlo = q_.x;
        if (s <= 0) whi = q_.x;
    }

    int total = 0;

    // Evaluates a maximal collinear run once, given any vertex on the carrier line.
    auto process_run = [&](size_t v) {
        if (run_stamp_[v] == stamp_) return;
        size_t first = v, last = v;
        while (true) {
            size_t prev = (first + n - 1) % n;
            if (side_of(prev) != 0) break;
            first = prev;
        }
        while (true) {
            size_t next = (last + 1) % n;
            if (side_of(next) != 0) break;
            last = next;
        }
        bool excluded = false;
        std::vector<size_t> verts;
        for (size_t j = first;; j = (j + 1) % n) {
            run_stamp_[j] = stamp_;
            verts.push_back(j);
            if (j != last && excl_[j]) excluded = true; // edge j inside the run
            if (j == last) break;
        }
        size_t a = (first + n - 1) % n, b = (last + 1) % n;
        if (excl_[a] || excl_[last]) excluded = true; // boundary edges of the run

        std::optional<Scalar> pmax;
        for (size_t j : verts) {
            Scalar pj = param_of(j, ddx, ddy);
            if (!pmax || pj > *pmax) pmax = pj;
            if (touched && sgn(pj) > 0 && (!t_end || pj <= *t_end)) touched->push_back(j);
        }
        if (excluded) return;
        if (side_of(a) * side_of(b) >= 0) return; // graze
        if (sgn(*pmax) <= 0) return;
        if (t_end && *pmax >= *t_end) return; // ends on the wall, not through it
        ++total;
    };

    const Chains& ch = p_->boundary_chains();
    for (const std::vector<size_t>* chain : {&ch.lower, &ch.upper}) {
        const std::vector<size_t>& c = *chain;
        const size_t m = c.size();
        size_t jlo = 0, jhi = m - 1; // edge range [jlo, jhi)
        if (wlo) {
            size_t lo = 0, hi = m - 1;
            while (lo < hi) {
                size_t mid = (lo + hi) / 2;
                if (p_->vertex(c[mid + 1]).x < *wlo) lo = mid + 1;
                else hi = mid;
            }
            jlo = lo;
        }
        if (whi) {
            size_t lo = jlo, hi = m - 1;
            while (lo < hi) {
                size_t mid = (lo + hi) / 2;
                if (p_->vertex(c[mid]).x <= *whi) lo = mid + 1;
                else hi = mid;
            }
            jhi = lo;
        }
        for (size_t j = jlo; j < jhi; ++j) {
            size_t u = c[j], w = c[j + 1];
            int su = side_of(u), sw = side_of(w);
            if (su == 0) process_run(u);
            if (sw == 0) process_run(w);
            if (su * sw >= 0) continue;
            size_t e = ((u + 1) % n == w) ? u : w; // cycle edge index
            if (excl_[e]) continue;
            // Crossing parameter along d, exact.
            const Point& pu = p_->vertex(u);
            const Point& pw = p_->vertex(w);
            Scalar cu = ddx * (pu.y - q_.y) - ddy * (pu.x - q_.x);
            Scalar cw = ddx * (pw.y - q_.y) - ddy * (pw.x - q_.x);
            Scalar t = cu / (cu - cw);
            Scalar s = param_of(u, ddx, ddy) * (Scalar(1) - t) + param_of(w, ddx, ddy) * t;
            if (sgn(s) <= 0) continue;
            if (t_end && s >= *t_end) continue;
            ++total;
        }
    }
    return total;
}

int WallCounter::count_to(const Point& target, std::vector<size_t>* touched) const {
    if (target == q_) return 0;
    Scalar ddx = target.x - q_.x, ddy = target.y - q_.y;
    Scalar t_end = ddx * ddx + ddy * ddy;
    return count_core(ddx, ddy, &t_end, touched);
}

int WallCounter::count_ray(const Scalar& dx, const Scalar& dy) const {
    return count_core(dx, dy, nullptr, nullptr);
}

CrossingCount segment_wall_crossings(const Polygon& p, const Point& q, const Point& target) {
    if (p.locate(q) == PointLocation::Outside)
        fail(Errc::PointOutsidePolygon, "source point outside the polygon");
    if (p.locate(target) == PointLocation::Outside)
        fail(Errc::PointOutsidePolygon, "target point outside the polygon");
    WallCounter wc(p, q);
    CrossingCount r;
    r.count = wc.count_to(target, &r.touched_vertices);
    std::sort(r.touched_vertices.begin(), r.touched_vertices.end());
    return r;
}

bool is_point_illuminated(const Polygon& p, std::span<const Modem> modems, const Point& target) {
    if (p.locate(target) == PointLocation::Outside)
        fail(Errc::PointOutsidePolygon, "target point outside the polygon");
    for (const Modem& m : modems) {
        WallCounter wc(p, m.position);
        if (wc.count_to(target) <= m.k) return true;
    }
    return false;
}

RayMax max_ray_crossings(const Polygon& p, const Point& q) {
    if (p.locate(q) == PointLocation::Outside)
        fail(Errc::PointOutsidePolygon, "query point outside the polygon");
    WallCounter wc(p, q);

    std::vector<IntDir> dirs;
    dirs.reserve(p.size() + 4);
    for (size_t i = 0; i < p.size(); ++i) {
        const Point& v = p.vertex(i);
        if (v == q) continue;
        dirs.push_back(canonical_direction(v.x - q.x, v.y - q.y));
    }
    dirs.push_back(IntDir{1, 0});
    dirs.push_back(IntDir{0, 1});
    dirs.push_back(IntDir{-1, 0});
    dirs.push_back(IntDir{0, -1});
    std::sort(dirs.begin(), dirs.end(), angular_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    RayMax best{-1, Direction(Scalar(1), Scalar(0))};
    auto consider = [&](const BigInt& dx, const BigInt& dy) {
        int c = wc.count_ray(Scalar(dx), Scalar(dy));
        if (c > best.max_crossings) best = RayMax{c, Direction(Scalar(dx), Scalar(dy))};
    };
    const size_t m = dirs.size();
    for (size_t i = 0; i < m; ++i) {
        consider(dirs[i].dx, dirs[i].dy);
        const IntDir& u = dirs[i];
        const IntDir& v = dirs[(i + 1) % m];
        // With the axes injected every angular gap is below pi, so u+v lies
        // strictly inside the gap.
        consider(u.dx + v.dx, u.dy + v.dy);
    }
    return best;
}

bool is_valid_modem_position(const Polygon& p, const Point& q, int k) {
    if (k < 0) fail(Errc::BadParams, "negative k");
    return max_ray_crossings(p, q).max_crossings <= k + 1;
}

ParityReport ray_parity_check(const Polygon& p, const Point& q, const Direction& d) {
    PointLocation loc = p.locate(q);
    if (loc == PointLocation::Outside) fail(Errc::PointOutsidePolygon, "query point outside the polygon");
    if (loc != PointLocation::Boundary) fail(Errc::NotOnBoundary, "parity check needs a boundary point");

    const size_t n = p.size();
    size_t at_vertex = n;
    for (size_t i = 0; i < n; ++i)
        if (p.vertex(i) == q) at_vertex = i;

    for (size_t e = 0; e < n; ++e) {
        if (!point_on_segment(q, p.edge_a(e), p.edge_b(e))) continue;
        Point a = p.edge_a(e), b = p.edge_b(e);
        if (sgn(cross(d.dx, d.dy, b.x - a.x, b.y - a.y)) == 0)
            fail(Errc::TangentDirection, "direction collinear with an incident edge");
    }

    bool inward;
    if (at_vertex == n) {
        size_t e = n;
        for (size_t i = 0; i < n; ++i)
            if (point_on_segment(q, p.edge_a(i), p.edge_b(i))) e = i;
        Point a = p.edge_a(e), b = p.edge_b(e);
        inward = sgn(cross(b.x - a.x, b.y - a.y, d.dx, d.dy)) > 0; // interior is left of a CCW edge
    } else {
        const Point& v = p.vertex(at_vertex);
        const Point& u = p.vertex((at_vertex + n - 1) % n);
        const Point& w = p.vertex((at_vertex + 1) % n);
        Scalar ax = w.x - v.x, ay = w.y - v.y; // outgoing
        Scalar bx = u.x - v.x, by = u.y - v.y; // incoming reversed
        int cab = sgn(cross(ax, ay, bx, by));
        int cad = sgn(cross(ax, ay, d.dx, d.dy));
        int cdb = sgn(cross(d.dx, d.dy, bx, by));
        if (cab > 0) inward = cad > 0 && cdb > 0;
        else inward = cad > 0 || cdb > 0;
    }

    WallCounter wc(p, q);
    int c = wc.count_ray(d.dx, d.dy);
    bool odd = (c % 2) != 0;
    if (odd != inward) fail(Errc::Internal, "crossing parity disagrees with ray classification");
    return ParityReport{inward ? RayParity::OddInward : RayParity::EvenOutward, c};
}

} // namespace kmodem
