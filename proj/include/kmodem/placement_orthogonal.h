#ifndef KMODEM_PLACEMENT_ORTHOGONAL_H
#define KMODEM_PLACEMENT_ORTHOGONAL_H

#include "kmodem/illumination.h"

namespace kmodem {

/// Orthogonal vertical split at an even label: both parts are genuine
/// subpolygons meeting along the splitting line; left has i vertices, right
/// n-i+2.
struct OrthoSplitOutcome {
    Polygon left, right;
    Segment cut_left;  // s_L, rightmost edge of the left part
    Segment cut_right; // s_R, leftmost edge of the right part
    Point p_cut;       // intersection of the split line with the spanned edge
};

OrthoSplitOutcome ortho_split(const Polygon& p, int label);

/// n <= k+3: any point, even outside the polygon, works.
Modem place_outside_k3(const Polygon& p, int k, const Point& q);

enum class Side { Left, Right };

/// n <= k+5: a point on the leftmost (or rightmost) edge at the supporting
/// line of a non-extremal horizontal edge.
Modem place_edge_k5(const Polygon& p, int k, Side side);

enum class StairEndSide { UpperLeft, LowerLeft, UpperRight, LowerRight };

/// Which stair-end classes the polygon matches (a defining edge near one of
/// its ends exists). Throws NotStairEnd when none does.
std::vector<StairEndSide> classify_stair_end(const Polygon& p);

/// Stair-end (k+7)-gon placement for odd k >= 3, on the leftmost or rightmost
/// edge per the five-way analysis of the third-from-top and third-from-bottom
/// horizontal edges.
Modem place_stair_end_k7(const Polygon& p, int k,
                         std::optional<StairEndSide> prefer = std::nullopt);

/// Single-modem placement for orthogonal n-gons with n <= 2k+6.
Modem place_single_2k6(const Polygon& p, int k);

/// Single-modem placement for orthogonal n-gons with n <= 2k+8, odd k >= 3.
Modem place_single_2k8(const Polygon& p, int k);

/// Chunked placement: ceil((n-2)/(2k+4)) modems for even k and k=1,
/// ceil((n-2)/(2k+6)) for odd k >= 3.
ModemPlan place_orthogonal(const Polygon& p, int k);

} // namespace kmodem

#endif
