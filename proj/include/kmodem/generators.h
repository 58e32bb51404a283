#ifndef KMODEM_GENERATORS_H
#define KMODEM_GENERATORS_H

#include "kmodem/polygon.h"

#include <cstdint>

namespace kmodem {

/// Geometry knobs for the lower-bound families. The constructions fix only
/// the topology; these defaults are tuned so that the verification oracle
/// certifies the witness-region structure across the tested parameter grids.
struct GeneratorKnobs {
    // monotone spike families
    Scalar spike_mouth = Scalar(2);
    Scalar spike_height = Scalar(40);
    Scalar base_height = Scalar(2);
    Scalar gap_width = Scalar(8);
    Scalar tower_height = Scalar(50); // towers overtop the spikes to block wall-level sightlines
    // orthogonal corridor families
    Scalar corridor_width = scalar(3, 2);  // tall corridor width
    Scalar corridor_height = Scalar(24);   // tall corridor height
    Scalar passage = Scalar(1);            // passage corridor height
    Scalar passage_width = scalar(23, 4);  // passage corridor width
    // witness-box family (k = 1)
    Scalar box_size = Scalar(12);
    Scalar box_overlap = Scalar(3);
    Scalar baffle_width = Scalar(2);
    Scalar baffle_drop = Scalar(8); // deep baffles: a one-unit crawl gap under each

    uint64_t perturb_seed = 1;
};

enum class FamilyKind { MonotoneSpikes, OrthoCorridors, OrthoBoxesK1 };

struct InstanceFamily {
    Polygon polygon;
    std::vector<Point> witnesses;
    int t = 0;
    int k = 0;
    FamilyKind family = FamilyKind::MonotoneSpikes;
};

/// Spiky monotone n-gon with n = t(2k+3) - 2k requiring t k-modems: a single
/// floor edge under groups of thin triangular spikes separated by valleys
/// (even k) or towers (odd k), witnesses in the designated spikes.
InstanceFamily gen_monotone_spikes(int k, int t, const GeneratorKnobs& knobs = {});

/// Staggered descending staircase of tall corridors; witnesses every (k+2)-th
/// corridor (even k) or (k+3)-th (odd k). n = 2(1+(k+2)(t-1))+2 for even k.
InstanceFamily gen_ortho_corridors(int k, int t, const GeneratorKnobs& knobs = {});

/// The 1-modem witness-box staircase with n = 6t+2 and two witnesses per box.
InstanceFamily gen_ortho_boxes_k1(int t, const GeneratorKnobs& knobs = {});

/// The box rectangles G_1..G_t of the witness-box family (for the reachability
/// checks; boxes overlap, membership ties go to the smaller index).
std::vector<std::pair<Point, Point>> ortho_boxes_k1_rects(int t, const GeneratorKnobs& knobs = {});

/// Box index (1-based) containing a point, 0 if none; shared strips count for
/// the smaller index.
int ortho_boxes_k1_box_of(int t, const Point& q, const GeneratorKnobs& knobs = {});

Polygon gen_random_monotone(int n, uint64_t seed);
Polygon gen_random_ortho_monotone(int n, uint64_t seed);

/// Upper-right stair-end (k+7)-gon whose horizontal-edge order drives the
/// requested dispatch case (1..5). Case 4 needs k >= 7.
Polygon gen_stair_end_case(int k, int case_id, uint64_t seed);

/// (2k+8)-gon realizing one of the four middle-pair configurations (1..4).
Polygon gen_ortho_2k8_case(int k, int case_id, uint64_t seed);

} // namespace kmodem

#endif
