#ifndef KMODEM_ILLUMINATION_H
#define KMODEM_ILLUMINATION_H

#include "kmodem/polygon.h"

#include <span>
#include <string>

namespace kmodem {

struct Modem {
    Point position;
    int k = 0;
    std::string note;
};

struct ModemPlan {
    int k = 0;
    std::vector<Modem> modems;
};

struct CrossingCount {
    int count = 0;
    std::vector<size_t> touched_vertices;
};

/// Counts transversal wall crossings from a fixed source point. Edges whose
/// closed segment contains the source are never barriers (both incident edges
/// when the source is a vertex). A pass through a vertex counts as one
/// crossing iff the incident edges lie strictly on opposite sides of the
/// carrier line; collinear overlaps contribute where the overlap ends.
///
/// Not thread safe; make one instance per thread.
class WallCounter {
public:
    WallCounter(const Polygon& p, Point source);

    /// Crossings of the segment (source, target]; arriving on a wall is not
    /// a crossing.
    int count_to(const Point& target, std::vector<size_t>* touched = nullptr) const;

    /// Crossings of the open ray from the source.
    int count_ray(const Scalar& dx, const Scalar& dy) const;

    const Point& source() const { return q_; }
    bool edge_excluded(size_t e) const { return excl_[e] != 0; }

private:
    const Polygon* p_;
    Point q_;
    std::vector<char> excl_;
    std::vector<BigInt> rx_, ry_; // v_i - q, scaled to integers per vertex

    // per-call scratch
    mutable std::vector<int8_t> side_;
    mutable std::vector<uint32_t> side_stamp_, run_stamp_;
    mutable uint32_t stamp_ = 0;
    mutable BigInt adx_, ady_, t1_, t2_;

    int side_of(size_t v) const;
    Scalar param_of(size_t v, const Scalar& ddx, const Scalar& ddy) const;
    int count_core(const Scalar& ddx, const Scalar& ddy, const Scalar* t_end,
                   std::vector<size_t>* touched) const;
};

CrossingCount segment_wall_crossings(const Polygon& p, const Point& q, const Point& target);

bool is_point_illuminated(const Polygon& p, std::span<const Modem> modems, const Point& target);

struct RayMax {
    int max_crossings = 0;
    Direction witness;
};

/// Maximum edge-crossing count over all rays from q, by exact angular sweep
/// over the critical directions (toward every vertex, plus the axes) and one
/// interior direction per angular gap.
RayMax max_ray_crossings(const Polygon& p, const Point& q);

/// q is a valid k-modem position iff no ray from q crosses more than k+1 edges.
bool is_valid_modem_position(const Polygon& p, const Point& q, int k);

enum class RayParity { EvenOutward, OddInward };

struct ParityReport {
    RayParity classification;
    int count = 0;
};

/// Classifies a ray from a boundary point as starting inward or outward and
/// checks the crossing-count parity against it.
ParityReport ray_parity_check(const Polygon& p, const Point& q, const Direction& d);

} // namespace kmodem

#endif
