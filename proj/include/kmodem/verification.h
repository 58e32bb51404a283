#ifndef KMODEM_VERIFICATION_H
#define KMODEM_VERIFICATION_H

#include "kmodem/illumination.h"

#include <optional>

namespace kmodem {

enum class ExecMode { Serial, Parallel };

struct CoverageCertificate {
    bool covered = false;
    std::optional<Point> witness; // an unilluminated point of P
    size_t cells_checked = 0;
    std::vector<int> per_modem_max; // max crossing count observed per modem
};

/// Exact full-coverage check on the subdivision of P induced by the edge
/// supporting lines and, per modem, the lines through the modem and every
/// vertex. Wall-crossing counts are constant on each open cell of that
/// refinement, so testing one interior point per cell, one point per open
/// refined edge and every refinement vertex decides coverage exactly.
CoverageCertificate verify_full_coverage(const Polygon& p, const ModemPlan& plan,
                                         ExecMode mode = ExecMode::Parallel);

/// Size of the largest subset of witnesses whose k-modem coverage regions are
/// pairwise disjoint; a certified lower bound on the number of modems.
int witness_lower_bound(const Polygon& p, int k, std::span<const Point> witnesses,
                        ExecMode mode = ExecMode::Parallel);

struct MinModemsResult {
    std::optional<int> minimum; // empty means Unknown (budget exceeded)
};

/// Exhaustive minimum search for tiny instances over candidate positions taken
/// from the refinement induced by the lines through all vertex pairs
/// (counterexample-guided set cover, each solution re-checked by the full
/// coverage oracle).
MinModemsResult min_modems_exhaustive(const Polygon& p, int k, int budget);

/// Sample points of the refined arrangement for a polygon and a set of focal
/// points (modems or witnesses): refinement vertices, one interior point per
/// refined edge, one per cell.
struct RefinedArrangementSamples {
    std::vector<Point> vertices, edge_points, cell_points;
};

RefinedArrangementSamples refined_arrangement_samples(const Polygon& p, std::span<const Point> foci);

} // namespace kmodem

#endif
