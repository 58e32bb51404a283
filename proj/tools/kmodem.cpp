#include "kmodem/errors.h"
#include "kmodem/io.h"
#include "kmodem/placement_monotone.h"
#include "kmodem/placement_orthogonal.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace kmodem;

bool log_enabled() {
    const char* v = std::getenv("KMODEM_LOG");
    return v && std::string(v) != "" && std::string(v) != "quiet";
}

void log_info(const std::string& msg) {
    if (log_enabled()) std::cerr << "[kmodem] " << msg << "\n";
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::NotSimple:
        case Errc::NotMonotone:
        case Errc::DuplicateX:
        case Errc::NotOrthogonal:
        case Errc::ParallelEdges: return 3;
        default: return 2;
    }
}

ModemPlan place_any(const Polygon& p, int k) {
    return p.orthogonal_shape() ? place_orthogonal(p, k) : place_monotone(p, k);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct TRange {
    int lo = 2, hi = 2;
};

TRange parse_trange(const std::string& s) {
    TRange r;
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, pos));
        r.hi = std::stoi(s.substr(pos + 2));
    }
    if (r.lo < 1 || r.hi < r.lo) throw CLI::ValidationError("--t", "bad range");
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-modem illumination of monotone and monotone orthogonal polygons"};
    app.require_subcommand(1);

    int jobs = 0;
    app.add_option("--jobs", jobs, "number of worker threads (0 = default)");

    // generate
    auto* gen = app.add_subcommand("generate", "emit a polygon (family or random)");
    std::string family, gen_out = "polygon.json";
    int gen_k = 0, gen_t = 2, gen_n = 12;
    uint64_t gen_seed = 1;
    bool random_monotone = false, random_ortho = false;
    gen->add_option("--family", family, "spikes | corridors | boxes-k1");
    gen->add_flag("--random-monotone", random_monotone);
    gen->add_flag("--random-ortho", random_ortho);
    gen->add_option("--k", gen_k);
    gen->add_option("--t", gen_t);
    gen->add_option("--n", gen_n);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--output,-o", gen_out);

    // place
    auto* place = app.add_subcommand("place", "place k-modems");
    std::string place_in, place_out = "plan.json";
    int place_k = 0;
    place->add_option("--input,-i", place_in)->required();
    place->add_option("--k", place_k)->required();
    place->add_option("--output,-o", place_out);

    // verify
    auto* verify = app.add_subcommand("verify", "check full coverage of a plan");
    std::string ver_in, ver_plan, ver_out;
    bool ver_serial = false;
    verify->add_option("--input,-i", ver_in)->required();
    verify->add_option("--plan,-p", ver_plan)->required();
    verify->add_option("--output,-o", ver_out);
    verify->add_flag("--serial", ver_serial, "use the serial reference kernel");

    // check-position
    auto* chk = app.add_subcommand("check-position", "validity of a single position");
    std::string chk_in, chk_x, chk_y;
    int chk_k = 0;
    chk->add_option("--input,-i", chk_in)->required();
    chk->add_option("--x", chk_x)->required();
    chk->add_option("--y", chk_y)->required();
    chk->add_option("--k", chk_k)->required();

    // render
    auto* ren = app.add_subcommand("render", "SVG of polygon, modems and witnesses");
    std::string ren_in, ren_plan, ren_wit, ren_out = "out.svg", ren_format = "svg";
    double ren_scale = 16, ren_stroke = 1.0;
    ren->add_option("--input,-i", ren_in)->required();
    ren->add_option("--plan,-p", ren_plan);
    ren->add_option("--witnesses,-w", ren_wit);
    ren->add_option("--output,-o", ren_out);
    ren->add_option("--scale", ren_scale);
    ren->add_option("--stroke-width", ren_stroke);
    ren->add_option("--format", ren_format, "svg");

    // bench
    auto* bench = app.add_subcommand("bench", "bounds and timings over a family");
    std::string bench_family = "spikes", bench_t = "2..4";
    int bench_k = 0;
    bench->add_option("--family", bench_family, "spikes | corridors | boxes-k1");
    bench->add_option("--k", bench_k);
    bench->add_option("--t", bench_t);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        if (*gen) {
            if (int(!family.empty()) + int(random_monotone) + int(random_ortho) != 1)
                fail(Errc::BadParams, "pick exactly one of --family / --random-monotone / --random-ortho");
            if (!family.empty()) {
                InstanceFamily fam = [&] {
                    if (family == "spikes") return gen_monotone_spikes(gen_k, gen_t);
                    if (family == "corridors") return gen_ortho_corridors(gen_k, gen_t);
                    if (family == "boxes-k1") return gen_ortho_boxes_k1(gen_t);
                    fail(Errc::BadParams, "unknown family '" + family + "'");
                }();
                spew_file(gen_out, write_polygon_json(fam.polygon));
                spew_file(gen_out + ".witnesses.json", write_witnesses_json(fam));
                log_info("wrote " + gen_out + " (n=" + std::to_string(fam.polygon.size()) + ") and sidecar");
            } else if (random_monotone) {
                spew_file(gen_out, write_polygon_json(gen_random_monotone(gen_n, gen_seed)));
            } else {
                spew_file(gen_out, write_polygon_json(gen_random_ortho_monotone(gen_n, gen_seed)));
            }
            return 0;
        }
        if (*place) {
            Polygon p = read_polygon_json(slurp_file(place_in));
            auto t0 = std::chrono::steady_clock::now();
            ModemPlan plan = place_any(p, place_k);
            log_info("placed " + std::to_string(plan.modems.size()) + " modems in " +
                     std::to_string(ms_since(t0)) + " ms");
            spew_file(place_out, write_plan_json(plan));
            return 0;
        }
        if (*verify) {
            Polygon p = read_polygon_json(slurp_file(ver_in));
            ModemPlan plan = read_plan_json(slurp_file(ver_plan));
            auto t0 = std::chrono::steady_clock::now();
            CoverageCertificate cert =
                verify_full_coverage(p, plan, ver_serial ? ExecMode::Serial : ExecMode::Parallel);
            log_info("verified in " + std::to_string(ms_since(t0)) + " ms, " +
                     std::to_string(cert.cells_checked) + " cells");
            if (!ver_out.empty()) spew_file(ver_out, write_certificate_json(cert));
            if (cert.covered) {
                std::cout << "covered\n";
                return 0;
            }
            std::cout << "uncovered at (" << scalar_str(cert.witness->x) << ", " << scalar_str(cert.witness->y)
                      << ")\n";
            return 1;
        }
        if (*chk) {
            Polygon p = read_polygon_json(slurp_file(chk_in));
            Point q{scalar_parse(chk_x), scalar_parse(chk_y)};
            RayMax rm = max_ray_crossings(p, q);
            bool ok = rm.max_crossings <= chk_k + 1;
            std::cout << (ok ? "valid" : "invalid") << " max_ray_crossings=" << rm.max_crossings
                      << " budget=" << chk_k + 1 << " witness_direction=(" << scalar_str(rm.witness.dx) << ","
                      << scalar_str(rm.witness.dy) << ")\n";
            return ok ? 0 : 1;
        }
        if (*ren) {
            if (ren_format != "svg") fail(Errc::BadParams, "only --format svg is supported");
            Polygon p = read_polygon_json(slurp_file(ren_in));
            std::vector<Modem> modems;
            std::vector<Point> wit;
            if (!ren_plan.empty()) modems = read_plan_json(slurp_file(ren_plan)).modems;
            if (!ren_wit.empty()) wit = read_witnesses_json(slurp_file(ren_wit)).witnesses;
            RenderOptions opt;
            opt.scale = ren_scale;
            opt.stroke = ren_stroke;
            spew_file(ren_out, render_svg(p, modems, wit, opt));
            return 0;
        }
        if (*bench) {
            TRange tr = parse_trange(bench_t);
            std::cout << "family     k   t     n  modems  bound  lower  place_ms  verify_ms  verdict\n";
            for (int t = tr.lo; t <= tr.hi; ++t) {
                InstanceFamily fam = [&] {
                    if (bench_family == "spikes") return gen_monotone_spikes(bench_k, t);
                    if (bench_family == "corridors") return gen_ortho_corridors(bench_k, t);
                    if (bench_family == "boxes-k1") return gen_ortho_boxes_k1(t);
                    fail(Errc::BadParams, "unknown family '" + bench_family + "'");
                }();
                const Polygon& p = fam.polygon;
                int k = fam.k;
                size_t denom = p.orthogonal_shape() ? ((k % 2 == 1 && k >= 3) ? 2 * k + 6 : 2 * k + 4)
                                                    : (2 * k + 3);
                size_t bound = (p.size() - 2 + denom - 1) / denom;
                auto t0 = std::chrono::steady_clock::now();
                ModemPlan plan = place_any(p, k);
                double pms = ms_since(t0);
                t0 = std::chrono::steady_clock::now();
                CoverageCertificate cert = verify_full_coverage(p, plan);
                double vms = ms_since(t0);
                int lower = witness_lower_bound(p, k, fam.witnesses);
                char line[256];
                std::snprintf(line, sizeof line, "%-9s %3d %3d %5zu %7zu %6zu %6d %9.1f %10.1f  %s",
                              bench_family.c_str(), k, t, p.size(), plan.modems.size(), bound, lower, pms,
                              vms, cert.covered ? "covered" : "UNCOVERED");
                std::cout << line << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
