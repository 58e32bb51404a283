#ifndef KMODEM_IO_H
#define KMODEM_IO_H

#include "kmodem/generators.h"
#include "kmodem/verification.h"

#include <string>

namespace kmodem {

/// Polygon file: {"class": "monotone"|"orthogonal",
///                "vertices": [["x","y"], ...]}   (rationals as "p" or "p/q";
/// vertices in boundary order, writer always emits counter-clockwise).
Polygon read_polygon_json(const std::string& text);
std::string write_polygon_json(const Polygon& p);

/// Plan file: {"k": int, "modems": [{"pos": ["x","y"], "note": "..."}]}
ModemPlan read_plan_json(const std::string& text);
std::string write_plan_json(const ModemPlan& plan);

/// Witness sidecar: {"family": "...", "k": int, "t": int,
///                   "witnesses": [["x","y"], ...]}
struct FamilySidecar {
    std::string family;
    int k = 0;
    int t = 0;
    std::vector<Point> witnesses;
};
FamilySidecar read_witnesses_json(const std::string& text);
std::string write_witnesses_json(const InstanceFamily& fam);

std::string write_certificate_json(const CoverageCertificate& cert);

struct RenderOptions {
    double scale = 16;
    double stroke = 1.0;
};
std::string render_svg(const Polygon& p, const std::vector<Modem>& modems,
                       const std::vector<Point>& witnesses, const RenderOptions& opt = {});

std::string slurp_file(const std::string& path);
void spew_file(const std::string& path, const std::string& content);

} // namespace kmodem

#endif
