#include "kmodem/verification.h"

#include "kmodem/errors.h"

#include <algorithm>
#include <functional>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kmodem {

namespace {

enum SampleKind : int { kVertexSample = 0, kEdgeSample = 1, kCellSample = 2 };

struct LineRec {
    Line ln;
    int focus = -1; // pencil id; crossings within one pencil all sit at the focus
    bool active = false;
    Scalar alo, ahi; // x-extent of the boundary contact
};

struct SampleTasks {
    const Polygon* poly = nullptr;
    std::vector<LineRec> lines;
    std::vector<Scalar> events;              // sorted unique x of refinement vertices
    std::vector<Point> vsamples;             // refinement vertices, sorted by (x, y)
    std::vector<size_t> ev_begin;            // vsamples group per event (size events+1)
    std::vector<std::vector<int32_t>> slab_lines;

    size_t task_count() const { return events.size() + (events.empty() ? 0 : events.size() - 1); }
    void for_task(size_t t, std::vector<std::pair<Point, int>>& out) const;
};

void SampleTasks::for_task(size_t t, std::vector<std::pair<Point, int>>& out) const {
    out.clear();
    const size_t ne = events.size();
    std::vector<Scalar> ys;
    if (t < ne) {
        const Scalar& x = events[t];
        auto li = poly->lower_interval_at(x);
        auto ui = poly->upper_interval_at(x);
        if (!li || !ui) return;
        size_t gb = ev_begin[t], ge = ev_begin[t + 1];
        ys.reserve(ge - gb + 4);
        for (size_t i = gb; i < ge; ++i) ys.push_back(vsamples[i].y);
        ys.push_back(li->first);
        ys.push_back(li->second);
        ys.push_back(ui->first);
        ys.push_back(ui->second);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (size_t i = 0; i < ys.size(); ++i) {
            out.emplace_back(Point{x, ys[i]}, kVertexSample);
            if (i + 1 < ys.size()) {
                Scalar m = (ys[i] + ys[i + 1]) / 2;
                m.canonicalize();
                out.emplace_back(Point{x, m}, kEdgeSample);
            }
        }
    } else {
        size_t s = t - ne;
        Scalar x = (events[s] + events[s + 1]) / 2;
        x.canonicalize();
        auto li = poly->lower_interval_at(x);
        auto ui = poly->upper_interval_at(x);
        if (!li || !ui) return;
        const Scalar& lo = li->first;
        const Scalar& hi = ui->first;
        ys.reserve(slab_lines[s].size() + 2);
        ys.push_back(lo);
        ys.push_back(hi);
        for (int32_t lidx : slab_lines[s]) {
            Scalar y = lines[lidx].ln.y_at(x);
            y.canonicalize();
            if (y >= lo && y <= hi) ys.push_back(y);
        }
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (size_t i = 0; i < ys.size(); ++i) {
            out.emplace_back(Point{x, ys[i]}, kEdgeSample);
            if (i + 1 < ys.size()) {
                Scalar m = (ys[i] + ys[i + 1]) / 2;
                m.canonicalize();
                out.emplace_back(Point{x, m}, kCellSample);
            }
        }
    }
}

std::vector<std::pair<Line, int>> edge_and_pencil_lines(const Polygon& p, std::span<const Point> foci) {
    std::vector<std::pair<Line, int>> out;
    for (size_t e = 0; e < p.size(); ++e) out.emplace_back(line_through(p.edge_a(e), p.edge_b(e)), -1);
    for (size_t f = 0; f < foci.size(); ++f)
        for (size_t v = 0; v < p.size(); ++v) {
            if (p.vertex(v) == foci[f]) continue;
            out.emplace_back(line_through(foci[f], p.vertex(v)), int(f));
        }
    return out;
}

std::vector<std::pair<Line, int>> all_pair_lines(const Polygon& p) {
    std::vector<std::pair<Line, int>> out;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            out.emplace_back(line_through(p.vertex(i), p.vertex(j)), -1);
    return out;
}

SampleTasks build_sample_tasks(const Polygon& p, std::vector<std::pair<Line, int>> raw,
                               std::span<const Point> foci) {
    SampleTasks st;
    st.poly = &p;
    p.labeling();
    const size_t n = p.size();

    std::map<Line, int> seen;
    for (auto& [ln, focus] : raw) {
        auto it = seen.find(ln);
        if (it == seen.end()) {
            seen.emplace(ln, int(st.lines.size()));
            st.lines.push_back(LineRec{ln, focus, false, Scalar(0), Scalar(0)});
        }
    }

    std::vector<Point> vs;
    vs.reserve(4 * st.lines.size() + n + foci.size());
    for (size_t i = 0; i < n; ++i) vs.push_back(p.vertex(i));
    for (const Point& f : foci) vs.push_back(f);

    // Boundary contacts per line.
    std::vector<int> side(n);
    for (LineRec& lr : st.lines) {
        const Line& l = lr.ln;
        Scalar la(l.a), lb(l.b), lc(l.c);
        bool any = false;
        std::optional<Scalar> xlo, xhi;
        auto note_hit = [&](const Point& h) {
            if (!xlo || h.x < *xlo) xlo = h.x;
            if (!xhi || h.x > *xhi) xhi = h.x;
            any = true;
            vs.push_back(h);
        };
        for (size_t v = 0; v < n; ++v) side[v] = sgn(la * p.vertex(v).x + lb * p.vertex(v).y - lc);
        for (size_t e = 0; e < n; ++e) {
            size_t u = e, w = (e + 1) % n;
            if (side[u] == 0) note_hit(p.vertex(u));
            if (side[u] * side[w] < 0) {
                auto x = line_intersection(l, line_through(p.vertex(u), p.vertex(w)));
                if (!x) fail(Errc::Internal, "straddling edge parallel to line");
                note_hit(*x);
            }
        }
        if (any) {
            lr.active = true;
            lr.alo = *xlo;
            lr.ahi = *xhi;
        }
    }

    // Pairwise line crossings inside P.
    Scalar gymin = p.vertex(0).y, gymax = p.vertex(0).y;
    for (size_t i = 1; i < n; ++i) {
        gymin = std::min(gymin, p.vertex(i).y);
        gymax = std::max(gymax, p.vertex(i).y);
    }
    const size_t L = st.lines.size();
    for (size_t i = 0; i < L; ++i) {
        if (!st.lines[i].active) continue;
        for (size_t j = i + 1; j < L; ++j) {
            if (!st.lines[j].active) continue;
            if (st.lines[i].focus >= 0 && st.lines[i].focus == st.lines[j].focus) continue;
            const Scalar& lo = std::max(st.lines[i].alo, st.lines[j].alo);
            const Scalar& hi = std::min(st.lines[i].ahi, st.lines[j].ahi);
            if (lo > hi) continue;
            auto x = line_intersection(st.lines[i].ln, st.lines[j].ln);
            if (!x) continue;
            if (x->x < lo || x->x > hi) continue;
            if (x->y < gymin || x->y > gymax) continue;
            if (p.locate(*x) == PointLocation::Outside) continue;
            vs.push_back(*x);
        }
    }

    auto pt_less = [](const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    };
    std::sort(vs.begin(), vs.end(), pt_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    st.vsamples = std::move(vs);

    for (const Point& v : st.vsamples)
        if (st.events.empty() || st.events.back() != v.x) st.events.push_back(v.x);
    st.ev_begin.assign(st.events.size() + 1, 0);
    {
        size_t e = 0;
        for (size_t i = 0; i < st.vsamples.size(); ++i) {
            while (st.events[e] != st.vsamples[i].x) st.ev_begin[++e] = i;
        }
        while (++e <= st.events.size()) st.ev_begin[e] = st.vsamples.size();
    }

    // Activity per slab.
    const size_t S = st.events.size() - 1;
    st.slab_lines.assign(S, {});
    auto event_index = [&](const Scalar& x) {
        size_t lo = 0, hi = st.events.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (st.events[mid] < x) lo = mid + 1;
            else hi = mid;
        }
        return lo;
    };
    for (size_t i = 0; i < L; ++i) {
        const LineRec& lr = st.lines[i];
        if (!lr.active || lr.ln.vertical()) continue;
        size_t s_from = event_index(lr.alo);
        size_t s_to = event_index(lr.ahi);
        for (size_t s = s_from; s < s_to && s < S; ++s) st.slab_lines[s].push_back(int32_t(i));
    }
    return st;
}

} // namespace

RefinedArrangementSamples refined_arrangement_samples(const Polygon& p, std::span<const Point> foci) {
    for (const Point& f : foci)
        if (p.locate(f) == PointLocation::Outside) fail(Errc::PointOutsidePolygon, "focus outside the polygon");
    SampleTasks st = build_sample_tasks(p, edge_and_pencil_lines(p, foci), foci);
    RefinedArrangementSamples out;
    std::vector<std::pair<Point, int>> buf;
    for (size_t t = 0; t < st.task_count(); ++t) {
        st.for_task(t, buf);
        for (auto& [pt, kind] : buf) {
            if (kind == kVertexSample) out.vertices.push_back(pt);
            else if (kind == kEdgeSample) out.edge_points.push_back(pt);
            else out.cell_points.push_back(pt);
        }
    }
    return out;
}

namespace {

// Deterministic min-reduction over (task, sub-index) for the failure witness.
struct Failure {
    size_t task = SIZE_MAX, sub = SIZE_MAX;
    Point pt;
    bool better_than(const Failure& o) const {
        if (task != o.task) return task < o.task;
        return sub < o.sub;
    }
};

} // namespace

CoverageCertificate verify_full_coverage(const Polygon& p, const ModemPlan& plan, ExecMode mode) {
    if (plan.k < 0) fail(Errc::BadParams, "negative k");
    for (const Modem& m : plan.modems)
        if (p.locate(m.position) == PointLocation::Outside)
            fail(Errc::ModemOutsidePolygon, "modem position outside the polygon");

    std::vector<Point> foci;
    for (const Modem& m : plan.modems) foci.push_back(m.position);
    SampleTasks st = build_sample_tasks(p, edge_and_pencil_lines(p, foci), foci);

    const size_t M = plan.modems.size();
    std::vector<size_t> by_x(M);
    for (size_t i = 0; i < M; ++i) by_x[i] = i;
    std::sort(by_x.begin(), by_x.end(), [&](size_t a, size_t b) {
        return plan.modems[a].position.x < plan.modems[b].position.x;
    });

    const size_t T = st.task_count();
    Failure best;
    size_t cells = 0;
    std::vector<int> modem_max(M, -1);

#ifdef _OPENMP
    int nthreads = (mode == ExecMode::Parallel) ? omp_get_max_threads() : 1;
#else
    int nthreads = 1;
    (void)mode;
#endif

#pragma omp parallel num_threads(nthreads)
    {
        std::vector<WallCounter> counters;
        counters.reserve(M);
        for (size_t i = 0; i < M; ++i) counters.emplace_back(p, plan.modems[i].position);
        std::vector<std::pair<Point, int>> buf;
        Failure local_best;
        size_t local_cells = 0;
        std::vector<int> local_max(M, -1);

#pragma omp for schedule(dynamic, 4)
        for (long long tt = 0; tt < (long long)T; ++tt) {
            size_t t = size_t(tt);
            if (local_best.task < t) continue;
            st.for_task(t, buf);
            for (size_t s = 0; s < buf.size(); ++s) {
                const Point& pt = buf[s].first;
                if (buf[s].second == kCellSample) ++local_cells;
                // Probe modems, nearest in x first.
                size_t pos = 0;
                {
                    size_t lo = 0, hi = M;
                    while (lo < hi) {
                        size_t mid = (lo + hi) / 2;
                        if (plan.modems[by_x[mid]].position.x < pt.x) lo = mid + 1;
                        else hi = mid;
                    }
                    pos = lo;
                }
                bool lit = false;
                for (size_t step = 0; step < 2 * M + 2 && !lit; ++step) {
                    long long idx = (step % 2 == 0) ? (long long)pos + (long long)step / 2
                                                    : (long long)pos - 1 - (long long)step / 2;
                    if (idx < 0 || idx >= (long long)M) continue;
                    size_t mi = by_x[size_t(idx)];
                    int c = counters[mi].count_to(pt);
                    local_max[mi] = std::max(local_max[mi], c);
                    if (c <= plan.modems[mi].k) lit = true;
                }
                if (!lit) {
                    Failure f{t, s, pt};
                    if (f.better_than(local_best)) local_best = f;
                }
            }
        }

#pragma omp critical
        {
            if (local_best.better_than(best)) best = local_best;
            cells += local_cells;
            for (size_t i = 0; i < M; ++i) modem_max[i] = std::max(modem_max[i], local_max[i]);
        }
    }

    CoverageCertificate cert;
    cert.cells_checked = cells;
    cert.per_modem_max = std::move(modem_max);
    if (best.task == SIZE_MAX) {
        cert.covered = true;
    } else {
        cert.covered = false;
        cert.witness = best.pt;
    }
    return cert;
}

int witness_lower_bound(const Polygon& p, int k, std::span<const Point> witnesses, ExecMode mode) {
    if (k < 0) fail(Errc::BadParams, "negative k");
    const size_t W = witnesses.size();
    if (W == 0) return 0;
    if (W > 32) fail(Errc::BadParams, "too many witnesses");
    for (const Point& w : witnesses)
        if (p.locate(w) != PointLocation::Interior)
            fail(Errc::WitnessOutsidePolygon, "witness not strictly inside the polygon");

    SampleTasks st = build_sample_tasks(p, edge_and_pencil_lines(p, witnesses), witnesses);
    const size_t T = st.task_count();
    // overlap[i] bit j: some point is in both coverage regions i and j.
    std::vector<uint32_t> overlap(W, 0);

#ifdef _OPENMP
    int nthreads = (mode == ExecMode::Parallel) ? omp_get_max_threads() : 1;
#else
    int nthreads = 1;
    (void)mode;
#endif

#pragma omp parallel num_threads(nthreads)
    {
        // A modem at q covers witness w iff the segment from q to w crosses at
        // most k walls; for interior witnesses the count is symmetric, so the
        // per-witness counters are reusable across all sample points.
        std::vector<WallCounter> counters;
        counters.reserve(W);
        for (const Point& w : witnesses) counters.emplace_back(p, w);
        std::vector<std::pair<Point, int>> buf;
        std::vector<uint32_t> local(W, 0);

#pragma omp for schedule(dynamic, 4)
        for (long long tt = 0; tt < (long long)T; ++tt) {
            st.for_task(size_t(tt), buf);
            for (auto& [pt, kind] : buf) {
                (void)kind;
                uint32_t mask = 0;
                for (size_t i = 0; i < W; ++i)
                    if (counters[i].count_to(pt) <= k) mask |= (1u << i);
                if (mask == 0 || (mask & (mask - 1)) == 0) continue;
                for (size_t i = 0; i < W; ++i)
                    if (mask & (1u << i)) local[i] |= mask;
            }
        }
#pragma omp critical
        for (size_t i = 0; i < W; ++i) overlap[i] |= local[i];
    }
    for (size_t i = 0; i < W; ++i) overlap[i] &= ~(1u << i);

    // Largest subset with pairwise-disjoint regions = max independent set in
    // the overlap graph; W is tiny.
    int bestsz = 0;
    for (uint32_t sub = 1; sub < (1u << W); ++sub) {
        int sz = __builtin_popcount(sub);
        if (sz <= bestsz) continue;
        bool ok = true;
        for (size_t i = 0; i < W && ok; ++i)
            if ((sub & (1u << i)) && (overlap[i] & sub)) ok = false;
        if (ok) bestsz = sz;
    }
    return bestsz;
}

MinModemsResult min_modems_exhaustive(const Polygon& p, int k, int budget) {
    if (k < 0 || budget < 1) fail(Errc::BadParams, "need k >= 0 and budget >= 1");
    p.labeling();

    SampleTasks st = build_sample_tasks(p, all_pair_lines(p), {});
    std::vector<Point> cand;
    {
        std::vector<std::pair<Point, int>> buf;
        for (size_t t = 0; t < st.task_count(); ++t) {
            st.for_task(t, buf);
            for (auto& [pt, kind] : buf) {
                (void)kind;
                cand.push_back(pt);
            }
        }
    }
    const size_t C = cand.size();
    std::vector<WallCounter> counters;
    counters.reserve(C);
    for (const Point& c : cand) counters.emplace_back(p, c);

    // Working point set, grown by coverage counterexamples.
    std::vector<Point> work;
    for (size_t i = 0; i < p.size(); ++i) work.push_back(p.vertex(i));
    size_t words = 0;
    std::vector<std::vector<uint64_t>> rows(C); // per candidate: bitset over work points
    auto add_points = [&](size_t from) {
        size_t need = (work.size() + 63) / 64;
        for (size_t c = 0; c < C; ++c) {
            rows[c].resize(need, 0);
            for (size_t i = from; i < work.size(); ++i)
                if (counters[c].count_to(work[i]) <= k) rows[c][i / 64] |= (1ull << (i % 64));
        }
        words = need;
    };
    add_points(0);
    auto full_mask = [&]() {
        std::vector<uint64_t> f(words, ~0ull);
        size_t r = work.size() % 64;
        if (r) f[words - 1] = (1ull << r) - 1;
        return f;
    };

    // Exact minimum set cover over the working points, by increasing size.
    std::vector<size_t> chosen;
    std::function<bool(std::vector<uint64_t>&, int, size_t)> cover = [&](std::vector<uint64_t>& need,
                                                                         int depth, size_t /*lastc*/) {
        bool empty = true;
        size_t first = SIZE_MAX;
        for (size_t w = 0; w < words && first == SIZE_MAX; ++w)
            if (need[w]) {
                empty = false;
                first = w * 64 + size_t(__builtin_ctzll(need[w]));
            }
        if (empty) return true;
        if (depth == 0) return false;
        for (size_t c = 0; c < C; ++c) {
            if (!(rows[c][first / 64] & (1ull << (first % 64)))) continue;
            std::vector<uint64_t> next(words);
            for (size_t w = 0; w < words; ++w) next[w] = need[w] & ~rows[c][w];
            chosen.push_back(c);
            if (cover(next, depth - 1, c)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int rounds = 0; rounds < 10000; ++rounds) {
        int s_found = -1;
        for (int s = 1; s <= budget; ++s) {
            auto need = full_mask();
            chosen.clear();
            if (cover(need, s, SIZE_MAX)) {
                s_found = s;
                break;
            }
        }
        if (s_found < 0) return MinModemsResult{std::nullopt};

        ModemPlan plan;
        plan.k = k;
        for (size_t c : chosen) plan.modems.push_back(Modem{cand[c], k, "exhaustive"});
        CoverageCertificate cert = verify_full_coverage(p, plan, ExecMode::Serial);
        if (cert.covered) return MinModemsResult{s_found};
        size_t from = work.size();
        work.push_back(*cert.witness);
        add_points(from);
    }
    fail(Errc::Internal, "exhaustive search did not converge");
}

} // namespace kmodem
