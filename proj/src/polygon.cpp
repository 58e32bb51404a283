#include "kmodem/polygon.h"

#include "kmodem/errors.h"

#include <algorithm>
#include <map>

namespace kmodem {

struct Polygon::Analysis {
    bool failed = false;
    Errc err = Errc::Internal;
    std::string err_msg;
    VertexLabeling lab;
    Chains ch;
    bool orthogonal = false;
    bool parallel_cross = false;
};

namespace {

// Effective x-order with the symbolic displacement of auxiliary vertices.
bool label_less(const std::vector<Point>& v, const std::vector<int8_t>& aux, size_t i, size_t j) {
    if (v[i].x != v[j].x) return v[i].x < v[j].x;
    int8_t ai = aux.empty() ? 0 : aux[i];
    int8_t aj = aux.empty() ? 0 : aux[j];
    if (ai != aj) return ai < aj;
    if (v[i].y != v[j].y) return v[i].y > v[j].y; // lower vertex gets the higher label
    return i < j;
}

} // namespace

Polygon::Polygon(std::vector<Point> verts, PolygonClass hint, std::vector<int8_t> aux_dir)
    : verts_(std::move(verts)), hint_(hint), aux_dir_(std::move(aux_dir)) {
    if (verts_.size() < 3) fail(Errc::NotSimple, "fewer than 3 vertices");
    if (!aux_dir_.empty() && aux_dir_.size() != verts_.size())
        fail(Errc::BadParams, "aux flag array size mismatch");
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == verts_[(i + 1) % verts_.size()])
            fail(Errc::NotSimple, "consecutive vertices coincide");

    Scalar a2 = signed_area_2(verts_);
    if (sgn(a2) == 0) fail(Errc::NotSimple, "zero signed area");
    if (sgn(a2) < 0) {
        std::reverse(verts_.begin(), verts_.end());
        if (!aux_dir_.empty()) std::reverse(aux_dir_.begin(), aux_dir_.end());
    }

    auto a = std::make_shared<Analysis>();
    const size_t n = verts_.size();
    auto set_err = [&](Errc e, std::string m) {
        if (!a->failed) {
            a->failed = true;
            a->err = e;
            a->err_msg = std::move(m);
        }
    };

    // Degenerate straight vertices.
    for (size_t i = 0; i < n && !a->failed; ++i) {
        const Point& p = verts_[(i + n - 1) % n];
        const Point& q = verts_[i];
        const Point& r = verts_[(i + 1) % n];
        if (collinear(p, q, r)) set_err(Errc::NotSimple, "collinear adjacent edges at vertex " + std::to_string(i));
    }

    // Pairwise edge intersection scan.
    for (size_t i = 0; i < n && !a->failed; ++i) {
        Segment si(edge_a(i), edge_b(i));
        for (size_t j = i + 1; j < n && !a->failed; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            Segment sj(edge_a(j), edge_b(j));
            CrossClass cc = segment_crossing_class(si, sj);
            if (cc.kind == CrossKind::None) continue;
            if (adjacent && cc.kind == CrossKind::AtEndpoint) continue; // shared vertex only
            set_err(Errc::NotSimple, "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    }

    a->orthogonal = true;
    for (size_t i = 0; i < n; ++i) {
        const Point& p = edge_a(i);
        const Point& q = edge_b(i);
        if (p.x != q.x && p.y != q.y) {
            a->orthogonal = false;
            break;
        }
    }
    if (!a->failed && hint_ == PolygonClass::MonotoneOrthogonal && !a->orthogonal)
        set_err(Errc::NotOrthogonal, "edges are not all axis-parallel");

    if (!a->failed) {
        // x-sorted labeling.
        a->lab.order.resize(n);
        for (size_t i = 0; i < n; ++i) a->lab.order[i] = i;
        std::sort(a->lab.order.begin(), a->lab.order.end(),
                  [&](size_t i, size_t j) { return label_less(verts_, aux_dir_, i, j); });
        a->lab.rank.resize(n);
        for (size_t l = 0; l < n; ++l) a->lab.rank[a->lab.order[l]] = l;

        // Tie legality: at most two plain vertices per x, and only when the
        // pair forms a vertical edge (orthogonal columns, the caps of shapes
        // like the example pentagon, or an auxiliary cut edge).
        size_t g = 0;
        while (g < n && !a->failed) {
            size_t h = g;
            while (h + 1 < n) {
                size_t u = a->lab.order[h], w = a->lab.order[h + 1];
                if (verts_[u].x != verts_[w].x) break;
                if (this->aux_dir(u) != this->aux_dir(w)) break; // resolved symbolically
                ++h;
            }
            size_t group = h - g + 1;
            if (group > 2) set_err(Errc::DuplicateX, "more than two vertices share an x-coordinate");
            else if (group == 2) {
                size_t u = a->lab.order[g], w = a->lab.order[g + 1];
                bool adjacent = (u + 1) % n == w || (w + 1) % n == u;
                if (!adjacent) set_err(Errc::DuplicateX, "two vertices share an x-coordinate");
            }
            g = h + 1;
        }
    }

    if (!a->failed) {
        // Chains: CCW arc from v_1 to v_n is the lower chain.
        size_t i1 = a->lab.order[0], in = a->lab.order[n - 1];
        for (size_t j = i1;; j = (j + 1) % n) {
            a->ch.lower.push_back(j);
            if (j == in) break;
        }
        for (size_t j = in;; j = (j + 1) % n) {
            a->ch.upper.push_back(j);
            if (j == i1) break;
        }
        std::reverse(a->ch.upper.begin(), a->ch.upper.end());

        auto chain_monotone = [&](const std::vector<size_t>& ch) {
            for (size_t j = 0; j + 1 < ch.size(); ++j) {
                size_t u = ch[j], w = ch[j + 1];
                if (verts_[u].x < verts_[w].x) continue;
                if (verts_[u].x == verts_[w].x) continue; // a vertical edge, legality checked above
                return false;
            }
            return true;
        };
        if (!chain_monotone(a->ch.lower) || !chain_monotone(a->ch.upper))
            set_err(Errc::NotMonotone, "a boundary chain is not x-monotone");
    }

    if (!a->failed && !a->orthogonal) {
        // Cross-chain parallel edge scan (convention needed by the splitting machinery).
        auto dirs = [&](const std::vector<size_t>& ch) {
            std::vector<IntDir> ds;
            for (size_t j = 0; j + 1 < ch.size(); ++j) {
                Point p = verts_[ch[j]], q = verts_[ch[j + 1]];
                IntDir d = canonical_direction(q.x - p.x, q.y - p.y);
                if (d.dx < 0 || (d.dx == 0 && d.dy < 0)) {
                    d.dx = -d.dx;
                    d.dy = -d.dy;
                }
                ds.push_back(d);
            }
            return ds;
        };
        auto du = dirs(a->ch.upper);
        auto dl = dirs(a->ch.lower);
        for (const auto& x : du)
            for (const auto& y : dl)
                if (x == y) a->parallel_cross = true;
    }

    a_ = std::move(a);
}

const Polygon::Analysis& Polygon::analysis() const { return *a_; }

bool Polygon::has_aux() const {
    for (size_t i = 0; i < aux_dir_.size(); ++i)
        if (aux_dir_[i] != 0) return true;
    return false;
}

bool Polygon::orthogonal_shape() const { return a_->orthogonal; }

const VertexLabeling& Polygon::labeling() const {
    if (a_->failed) fail(a_->err, a_->err_msg);
    return a_->lab;
}

const Chains& Polygon::boundary_chains() const {
    if (a_->failed) fail(a_->err, a_->err_msg);
    return a_->ch;
}

const Point& Polygon::labeled(size_t label_1based) const { return verts_[labeled_index(label_1based)]; }

size_t Polygon::labeled_index(size_t label_1based) const {
    const auto& lab = labeling();
    if (label_1based < 1 || label_1based > verts_.size())
        fail(Errc::LabelOutOfRange, "label " + std::to_string(label_1based));
    return lab.order[label_1based - 1];
}

size_t Polygon::label_of(size_t vertex_index) const { return labeling().rank[vertex_index] + 1; }

const Scalar& Polygon::min_x() const { return verts_[labeling().order.front()].x; }
const Scalar& Polygon::max_x() const { return verts_[labeling().order.back()].x; }

std::optional<std::pair<Scalar, Scalar>> Polygon::chain_interval(const std::vector<size_t>& chain,
                                                                 const Scalar& x) const {
    const Point& first = verts_[chain.front()];
    const Point& last = verts_[chain.back()];
    if (x < first.x || x > last.x) return std::nullopt;
    // First chain position with vertex x >= query x.
    size_t lo = 0, hi = chain.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (verts_[chain[mid]].x < x) lo = mid + 1;
        else hi = mid;
    }
    if (lo < chain.size() && verts_[chain[lo]].x == x) {
        Scalar ymin = verts_[chain[lo]].y, ymax = ymin;
        for (size_t j = lo; j < chain.size() && verts_[chain[j]].x == x; ++j) {
            ymin = std::min(ymin, verts_[chain[j]].y);
            ymax = std::max(ymax, verts_[chain[j]].y);
        }
        return std::make_pair(ymin, ymax);
    }
    // Strictly inside the edge (chain[lo-1], chain[lo]).
    const Point& p = verts_[chain[lo - 1]];
    const Point& q = verts_[chain[lo]];
    Scalar y = p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
    y.canonicalize();
    return std::make_pair(y, y);
}

std::optional<std::pair<Scalar, Scalar>> Polygon::lower_interval_at(const Scalar& x) const {
    return chain_interval(boundary_chains().lower, x);
}

std::optional<std::pair<Scalar, Scalar>> Polygon::upper_interval_at(const Scalar& x) const {
    return chain_interval(boundary_chains().upper, x);
}

PointLocation Polygon::locate(const Point& p) const {
    auto li = lower_interval_at(p.x);
    if (!li) return PointLocation::Outside;
    auto ui = upper_interval_at(p.x);
    if (!ui) return PointLocation::Outside;
    if ((p.y >= li->first && p.y <= li->second) || (p.y >= ui->first && p.y <= ui->second))
        return PointLocation::Boundary;
    if (p.y > li->second && p.y < ui->first) return PointLocation::Interior;
    return PointLocation::Outside;
}

bool Polygon::has_parallel_cross_chain_edges() const {
    labeling(); // surface analysis errors first
    return a_->parallel_cross;
}

Scalar Polygon::area_2() const { return signed_area_2(verts_); }

VertexLabeling validate(const Polygon& p) { return p.labeling(); }

Chains chains(const Polygon& p, const VertexLabeling&) { return p.boundary_chains(); }

ExtremalEdges extremal_edges(const Polygon& p) {
    if (!p.orthogonal_shape()) fail(Errc::NotOrthogonal, "extremal edges need an orthogonal polygon");
    p.labeling();
    const size_t n = p.size();
    ExtremalEdges r{n, n, n, n};
    std::optional<Scalar> top_y, bot_y;
    for (size_t e = 0; e < n; ++e) {
        Point a = p.edge_a(e), b = p.edge_b(e);
        if (a.x == b.x) {
            if (a.x == p.min_x()) r.left = e;
            if (a.x == p.max_x()) r.right = e;
            continue;
        }
        // Horizontal edge.
        Scalar lx = std::min(a.x, b.x), rx = std::max(a.x, b.x);
        if (!top_y || a.y > *top_y) {
            top_y = a.y;
            r.top = e;
        } else if (a.y == *top_y) {
            Point ta = p.edge_a(r.top), tb = p.edge_b(r.top);
            if (lx < std::min(ta.x, tb.x)) r.top = e; // leftmost among topmost
        }
        if (!bot_y || a.y < *bot_y) {
            bot_y = a.y;
            r.bottom = e;
        } else if (a.y == *bot_y) {
            Point ba = p.edge_a(r.bottom), bb = p.edge_b(r.bottom);
            if (rx > std::max(ba.x, bb.x)) r.bottom = e; // rightmost among bottommost
        }
    }
    if (r.left == n || r.right == n || r.top == n || r.bottom == n)
        fail(Errc::Internal, "extremal edge scan failed");
    return r;
}

SplitParts simple_vertical_split(const Polygon& p, const VertexLabeling& lab, int label) {
    const size_t n = p.size();
    if (label < 2 || size_t(label) > n - 1) fail(Errc::LabelOutOfRange, "split label " + std::to_string(label));
    if (p.orthogonal_shape()) fail(Errc::NotMonotone, "simple vertical split needs a non-orthogonal monotone polygon");
    p.labeling();

    size_t vi = lab.order[label - 1];
    const Point& v = p.vertex(vi);

    // The unique opposite-chain edge strictly spanning x(v).
    size_t f = n;
    for (size_t e = 0; e < n; ++e) {
        if (e == vi || (e + 1) % n == vi) continue;
        Point a = p.edge_a(e), b = p.edge_b(e);
        if (std::min(a.x, b.x) < v.x && v.x < std::max(a.x, b.x)) {
            f = e;
            break;
        }
    }
    if (f == n) fail(Errc::Internal, "no opposite edge spans the split line");
    Point fa = p.edge_a(f), fb = p.edge_b(f);
    Scalar sy = fa.y + (v.x - fa.x) * (fb.y - fa.y) / (fb.x - fa.x);
    sy.canonicalize();
    Point s_pt{v.x, sy};

    auto build = [&](bool left_side) {
        std::vector<Point> ring;
        std::vector<int8_t> aux;
        // Start the cycle walk on the far side so emitted points are contiguous.
        size_t start = left_side ? p.labeling().order.back() : p.labeling().order.front();
        for (size_t step = 0; step < n; ++step) {
            size_t j = (start + step) % n;
            const Point& w = p.vertex(j);
            bool keep = j == vi || (left_side ? w.x < v.x : w.x > v.x);
            if (keep) {
                ring.push_back(w);
                aux.push_back(0);
            }
            if (j == f) {
                ring.push_back(s_pt);
                aux.push_back(left_side ? int8_t(-1) : int8_t(1));
            }
        }
        return Polygon(std::move(ring), PolygonClass::Monotone, std::move(aux));
    };

    return SplitParts{build(true), build(false), Segment(v, s_pt)};
}

Polygon mirror_x(const Polygon& p) {
    std::vector<Point> v;
    std::vector<int8_t> aux;
    v.reserve(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        v.push_back(Point{-p.vertex(i).x, p.vertex(i).y});
        aux.push_back(int8_t(-p.aux_dir(i)));
    }
    return Polygon(std::move(v), p.class_hint(), std::move(aux));
}

Polygon mirror_y(const Polygon& p) {
    std::vector<Point> v;
    std::vector<int8_t> aux;
    v.reserve(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        v.push_back(Point{p.vertex(i).x, -p.vertex(i).y});
        aux.push_back(p.aux_dir(i));
    }
    return Polygon(std::move(v), p.class_hint(), std::move(aux));
}

} // namespace kmodem
