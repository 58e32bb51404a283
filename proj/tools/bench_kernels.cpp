// Compares the serial reference coverage kernel against the OpenMP one on a
// few representative instances and reports timings plus agreement.

#include "kmodem/generators.h"
#include "kmodem/placement_monotone.h"
#include "kmodem/placement_orthogonal.h"
#include "kmodem/verification.h"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace kmodem;

namespace {

double ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
    std::string name;
    Polygon poly;
    ModemPlan plan;
};

} // namespace

int main() {
    std::vector<Case> cases;
    {
        Polygon p = gen_random_monotone(40, 7);
        cases.push_back({"monotone n=40 k=1", p, place_monotone(p, 1)});
    }
    {
        Polygon p = gen_random_monotone(60, 11);
        cases.push_back({"monotone n=60 k=0", p, place_monotone(p, 0)});
    }
    {
        Polygon p = gen_random_ortho_monotone(48, 3);
        cases.push_back({"ortho    n=48 k=2", p, place_orthogonal(p, 2)});
    }
    {
        InstanceFamily f = gen_monotone_spikes(2, 4);
        cases.push_back({"spikes   k=2 t=4 ", f.polygon, place_monotone(f.polygon, 2)});
    }

    std::printf("%-20s %10s %12s %12s %8s %s\n", "instance", "samples", "serial_ms", "parallel_ms",
                "speedup", "agree");
    bool all_agree = true;
    for (const Case& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        CoverageCertificate s = verify_full_coverage(c.poly, c.plan, ExecMode::Serial);
        double ts = ms(t0);
        t0 = std::chrono::steady_clock::now();
        CoverageCertificate par = verify_full_coverage(c.poly, c.plan, ExecMode::Parallel);
        double tp = ms(t0);
        bool agree = s.covered == par.covered && s.cells_checked == par.cells_checked &&
                     ((!s.witness && !par.witness) || (s.witness && par.witness && *s.witness == *par.witness));
        all_agree = all_agree && agree;
        std::printf("%-20s %10zu %12.1f %12.1f %7.2fx %s\n", c.name.c_str(), s.cells_checked, ts, tp,
                    ts / (tp > 0 ? tp : 1e-9), agree ? "yes" : "NO");
    }
    return all_agree ? 0 : 1;
}
