#ifndef KMODEM_GEOMETRY_H
#define KMODEM_GEOMETRY_H

#include "kmodem/scalar.h"

#include <optional>
#include <vector>

namespace kmodem {

struct Point {
    Scalar x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Nonzero displacement; a ray is an origin Point plus a Direction.
struct Direction {
    Scalar dx, dy;
    Direction(Scalar dx_, Scalar dy_);
};

/// Closed segment with distinct endpoints.
struct Segment {
    Point a, b;
    Segment(Point a_, Point b_);
};

enum class Orientation { Left, Right, Collinear };

/// Sign of cross(b - a, c - a), computed exactly. Left is the CCW side.
Orientation orientation(const Point& a, const Point& b, const Point& c);
int orientation_sign(const Point& a, const Point& b, const Point& c);

Scalar cross(const Scalar& ax, const Scalar& ay, const Scalar& bx, const Scalar& by);

enum class CrossKind { None, Proper, AtEndpoint, CollinearOverlap };

/// Exact classification of a closed intersection. For AtEndpoint the flags say
/// which endpoints coincide with the intersection point (for rays, at_s_a
/// means the ray origin).
struct CrossClass {
    CrossKind kind = CrossKind::None;
    bool at_s_a = false, at_s_b = false;
    bool at_t_a = false, at_t_b = false;
};

CrossClass segment_crossing_class(const Segment& s, const Segment& t);
CrossClass ray_segment_crossing_class(const Point& origin, const Direction& d, const Segment& t);

/// Line a*x + b*y = c with primitive integer coefficients and a canonical sign,
/// so equal lines compare equal.
struct Line {
    BigInt a, b, c;
    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Line& o) const;
    bool vertical() const { return b == 0; }
    Scalar y_at(const Scalar& x) const; // requires !vertical()
    Scalar x_at(const Scalar& y) const; // requires a != 0
    int side(const Point& p) const;     // sign of a*x + b*y - c
};

Line line_through(const Point& p, const Point& q);
std::optional<Point> line_intersection(const Line& l, const Line& m);
std::optional<Point> line_intersection(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

bool collinear(const Point& a, const Point& b, const Point& c);
bool point_on_segment(const Point& p, const Point& a, const Point& b); // closed

/// Primitive integer direction used for exact angular sweeps.
struct IntDir {
    BigInt dx, dy;
    bool operator==(const IntDir& o) const { return dx == o.dx && dy == o.dy; }
};

IntDir canonical_direction(const Scalar& dx, const Scalar& dy); // throws ZeroDirection on (0,0)
/// Strict CCW angular order starting at direction (1,0).
bool angular_less(const IntDir& u, const IntDir& v);

/// Twice the signed area (shoelace), exact.
Scalar signed_area_2(const std::vector<Point>& ring);

} // namespace kmodem

#endif
