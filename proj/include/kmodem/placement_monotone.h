#ifndef KMODEM_PLACEMENT_MONOTONE_H
#define KMODEM_PLACEMENT_MONOTONE_H

#include "kmodem/illumination.h"

namespace kmodem {

/// Result of the monotone splitting construction at label i: left part with i
/// vertices, right part with n-i+2. The parts may overlap and are not
/// subpolygons, but their union contains the input. Modems illuminating the
/// left part placed at x <= left_zone_max_x together with modems illuminating
/// the right part placed at x >= right_zone_min_x illuminate the input.
struct SplitOutcome {
    Polygon left, right;
    Scalar left_zone_max_x;  // x of v_{i-1}
    Scalar right_zone_min_x; // x of v_i
    Point extension;         // intersection of the two supporting lines
};

SplitOutcome split_monotone(const Polygon& p, int label);

/// The six candidate positions for a single modem in a (2k+5)-gon, built
/// around the median vertex v_m (m = k+3) and the opposite edge f crossed by
/// the vertical through v_m.
struct CandidateSet2k5 {
    int m = 0;
    Point v_m, p_m;
    Point p_e_prev, p_f_prev; // on the vertical through v_{m-1}
    Point p_e_next, p_f_next; // on the vertical through v_{m+1}
    size_t e_left, e_right, f, f_left, f_right;      // edge indices
    size_t v_e_left, v_e_right, v_f_left, v_f_right; // vertex indices
    bool v_m_above_f = false;
};

CandidateSet2k5 candidates_2k5(const Polygon& p, int k);

struct CandidateCert {
    bool left_half = false;  // certified for the part left of the vertical through v_m
    bool right_half = false; // certified for the part right of it
    bool whole = false;      // certified for the whole polygon
};

/// Which candidates the case lemmas certify, from the raw geometric
/// predicates (supporting-line intersections for even k, reflex/convex and
/// ray-side tests for odd k). Certification is sufficient, never necessary.
struct LemmaConditionReport {
    bool even_k = false;
    bool cond_v_left = false, cond_p_left = false;
    bool cond_v_right = false, cond_p_right = false;
    bool ray_left = false;  // v_e_left strictly left of the ray p_f_next -> v_m
    bool ray_right = false; // v_e_right strictly right of the ray p_f_prev -> v_m
    CandidateCert v_m, p_m, p_f_prev, p_f_next, p_e_prev, p_e_next;
};

LemmaConditionReport even_case_conditions(const Polygon& p, int k);
LemmaConditionReport odd_case_conditions(const Polygon& p, int k);

/// Places one k-modem in an x-monotone polygon with at most 2k+5 vertices.
/// Candidate order is fixed: v_m, p_m, p_f_prev, p_f_next, p_e_prev, p_e_next,
/// then the small-polygon fallbacks. Throws NoValidCandidate if the checker
/// rejects every candidate.
Modem place_single_2k5(const Polygon& p, int k);

/// Chunked placement: at most ceil((n-2)/(2k+3)) k-modems, full coverage.
ModemPlan place_monotone(const Polygon& p, int k);

} // namespace kmodem

#endif
