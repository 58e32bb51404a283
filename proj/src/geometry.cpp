#include "kmodem/geometry.h"

#include "kmodem/errors.h"

namespace kmodem {

Direction::Direction(Scalar dx_, Scalar dy_) : dx(std::move(dx_)), dy(std::move(dy_)) {
    if (sgn(dx) == 0 && sgn(dy) == 0) fail(Errc::ZeroDirection, "direction (0,0)");
}

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == b) fail(Errc::DegenerateSegment, "segment endpoints coincide");
}

Scalar cross(const Scalar& ax, const Scalar& ay, const Scalar& bx, const Scalar& by) {
    return ax * by - ay * bx;
}

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y));
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    int s = orientation_sign(a, b, c);
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

bool collinear(const Point& a, const Point& b, const Point& c) {
    return orientation_sign(a, b, c) == 0;
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation_sign(a, b, p) != 0) return false;
    if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x)) return false;
    if (p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y)) return false;
    return true;
}

namespace {

// 1D closed-interval overlap classification of collinear segments.
CrossClass collinear_overlap_class(const Segment& s, const Segment& t) {
    // Project onto the dominant axis of s.
    bool use_x = s.a.x != s.b.x;
    auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
    Scalar s_lo = std::min(key(s.a), key(s.b)), s_hi = std::max(key(s.a), key(s.b));
    Scalar t_lo = std::min(key(t.a), key(t.b)), t_hi = std::max(key(t.a), key(t.b));
    Scalar lo = std::max(s_lo, t_lo), hi = std::min(s_hi, t_hi);
    CrossClass r;
    if (lo > hi) return r; // disjoint
    if (lo < hi) {
        r.kind = CrossKind::CollinearOverlap;
        return r;
    }
    // Single shared point; it is an endpoint of at least one segment.
    Point p = key(s.a) == lo ? s.a : s.b;
    r.kind = CrossKind::AtEndpoint;
    r.at_s_a = (p == s.a);
    r.at_s_b = (p == s.b);
    r.at_t_a = (p == t.a);
    r.at_t_b = (p == t.b);
    return r;
}

} // namespace

CrossClass segment_crossing_class(const Segment& s, const Segment& t) {
    int o1 = orientation_sign(s.a, s.b, t.a);
    int o2 = orientation_sign(s.a, s.b, t.b);
    int o3 = orientation_sign(t.a, t.b, s.a);
    int o4 = orientation_sign(t.a, t.b, s.b);

    CrossClass r;
    if (o1 == 0 && o2 == 0) return collinear_overlap_class(s, t);

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        r.kind = CrossKind::Proper;
        return r;
    }
    // Touching cases: some endpoint lies on the other closed segment.
    auto touch = [&](const Point& p, bool s_side, bool is_a) {
        const Segment& host = s_side ? t : s;
        if (!point_on_segment(p, host.a, host.b)) return;
        r.kind = CrossKind::AtEndpoint;
        if (s_side) {
            (is_a ? r.at_s_a : r.at_s_b) = true;
            r.at_t_a = r.at_t_a || (p == t.a);
            r.at_t_b = r.at_t_b || (p == t.b);
        } else {
            (is_a ? r.at_t_a : r.at_t_b) = true;
            r.at_s_a = r.at_s_a || (p == s.a);
            r.at_s_b = r.at_s_b || (p == s.b);
        }
    };
    touch(s.a, true, true);
    touch(s.b, true, false);
    touch(t.a, false, true);
    touch(t.b, false, false);
    return r;
}

CrossClass ray_segment_crossing_class(const Point& origin, const Direction& d, const Segment& t) {
    Point tip{origin.x + d.dx, origin.y + d.dy};
    int o1 = orientation_sign(origin, tip, t.a);
    int o2 = orientation_sign(origin, tip, t.b);
    CrossClass r;

    auto ray_param_sign = [&](const Point& p) {
        // Sign of the ray parameter of a point on the supporting line.
        return sgn((p.x - origin.x) * d.dx + (p.y - origin.y) * d.dy);
    };

    if (o1 == 0 && o2 == 0) {
        // Segment lies on the ray's supporting line.
        int sa = ray_param_sign(t.a), sb = ray_param_sign(t.b);
        if (sa < 0 && sb < 0) return r;
        if (sa >= 0 && sb >= 0) {
            if (sa == 0 || sb == 0) {
                // One endpoint is the origin itself; still an overlap of positive length
                // unless the whole segment is behind (excluded above).
                r.kind = CrossKind::CollinearOverlap;
                return r;
            }
            r.kind = CrossKind::CollinearOverlap;
            return r;
        }
        // Straddles the origin: the forward part has positive length.
        r.kind = CrossKind::CollinearOverlap;
        return r;
    }
    if (o1 == 0 || o2 == 0) {
        // Supporting line passes through one endpoint of t.
        const Point& p = (o1 == 0) ? t.a : t.b;
        int sp = ray_param_sign(p);
        if (sp < 0) return r;
        r.kind = CrossKind::AtEndpoint;
        (o1 == 0 ? r.at_t_a : r.at_t_b) = true;
        r.at_s_a = (p == origin);
        return r;
    }
    if (o1 * o2 > 0) return r;
    // t straddles the line; find whether the crossing is on the forward side.
    auto x = line_intersection(origin, tip, t.a, t.b);
    if (!x) return r;
    int sp = ray_param_sign(*x);
    if (sp < 0) return r;
    if (sp == 0) {
        r.kind = CrossKind::AtEndpoint;
        r.at_s_a = true;
        return r;
    }
    r.kind = CrossKind::Proper;
    return r;
}

bool Line::operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

Scalar Line::y_at(const Scalar& x) const {
    return Scalar(Scalar(c) - Scalar(a) * x) / Scalar(b);
}

Scalar Line::x_at(const Scalar& y) const {
    return Scalar(Scalar(c) - Scalar(b) * y) / Scalar(a);
}

int Line::side(const Point& p) const {
    return sgn(Scalar(a) * p.x + Scalar(b) * p.y - Scalar(c));
}

Line line_through(const Point& p, const Point& q) {
    // a = qy - py, b = px - qx, c = a*px + b*py, cleared to integers.
    Scalar a = q.y - p.y;
    Scalar b = p.x - q.x;
    if (sgn(a) == 0 && sgn(b) == 0) fail(Errc::DegenerateSegment, "line through equal points");
    Scalar c = a * p.x + b * p.y;
    BigInt den = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
    BigInt ia = a.get_num() * (den / a.get_den());
    BigInt ib = b.get_num() * (den / b.get_den());
    BigInt ic = c.get_num() * (den / c.get_den());
    BigInt g = gcd(gcd(ia, ib), ic);
    if (g == 0) g = 1;
    ia /= g;
    ib /= g;
    ic /= g;
    if (ia < 0 || (ia == 0 && ib < 0)) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return Line{ia, ib, ic};
}

std::optional<Point> line_intersection(const Line& l, const Line& m) {
    BigInt det = l.a * m.b - l.b * m.a;
    if (det == 0) return std::nullopt;
    Scalar x = Scalar(l.c * m.b - l.b * m.c) / Scalar(det);
    Scalar y = Scalar(l.a * m.c - l.c * m.a) / Scalar(det);
    x.canonicalize();
    y.canonicalize();
    return Point{x, y};
}

std::optional<Point> line_intersection(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    return line_intersection(line_through(a1, a2), line_through(b1, b2));
}

IntDir canonical_direction(const Scalar& dx, const Scalar& dy) {
    if (sgn(dx) == 0 && sgn(dy) == 0) fail(Errc::ZeroDirection, "direction (0,0)");
    BigInt den = lcm(dx.get_den(), dy.get_den());
    BigInt ix = dx.get_num() * (den / dx.get_den());
    BigInt iy = dy.get_num() * (den / dy.get_den());
    BigInt g = gcd(ix, iy);
    if (g != 0) {
        ix /= g;
        iy /= g;
    }
    return IntDir{ix, iy};
}

bool angular_less(const IntDir& u, const IntDir& v) {
    auto half = [](const IntDir& d) {
        // 0: upper half plane including +x axis; 1: lower including -x axis.
        if (d.dy > 0) return 0;
        if (d.dy < 0) return 1;
        return d.dx > 0 ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    BigInt cr = u.dx * v.dy - u.dy * v.dx;
    return cr > 0;
}

Scalar signed_area_2(const std::vector<Point>& ring) {
    Scalar s = 0;
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

} // namespace kmodem
