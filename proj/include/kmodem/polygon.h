#ifndef KMODEM_POLYGON_H
#define KMODEM_POLYGON_H

#include "kmodem/geometry.h"

#include <memory>
#include <vector>

namespace kmodem {

enum class PolygonClass { Monotone, MonotoneOrthogonal, Unclassified };

enum class PointLocation { Outside, Boundary, Interior };

/// Label i (1-based) -> vertex index, per x-sorted order. Orthogonal tie rule:
/// among two vertices with equal x, the lower one gets the higher label.
/// Auxiliary split vertices are ordered as if displaced along their host edge.
struct VertexLabeling {
    std::vector<size_t> order; // order[l-1] = vertex index of label l
    std::vector<size_t> rank;  // rank[v] = label - 1
};

/// Boundary chains; both run from v_1 to v_n inclusive (vertex indices).
struct Chains {
    std::vector<size_t> upper, lower;
};

struct ExtremalEdges {
    size_t top, bottom, left, right; // edge indices
};

/// Closed simple polygon, stored CCW. Analysis (simplicity, classification,
/// labeling, chains) runs at construction; validate() surfaces the outcome.
///
/// aux_dir marks auxiliary split vertices: -1/+1 means the vertex is treated
/// as infinitesimally displaced along its host edge to the left/right for all
/// x-order comparisons. Geometry always uses the exact stored coordinates.
class Polygon {
public:
    explicit Polygon(std::vector<Point> verts, PolygonClass hint = PolygonClass::Unclassified,
                     std::vector<int8_t> aux_dir = {});

    size_t size() const { return verts_.size(); }
    const Point& vertex(size_t i) const { return verts_[i]; }
    const std::vector<Point>& vertices() const { return verts_; }
    PolygonClass class_hint() const { return hint_; }
    int8_t aux_dir(size_t i) const { return aux_dir_.empty() ? 0 : aux_dir_[i]; }
    bool has_aux() const;

    Point edge_a(size_t e) const { return verts_[e]; }
    Point edge_b(size_t e) const { return verts_[(e + 1) % verts_.size()]; }

    /// Effective class after analysis (orthogonal shapes detected even when
    /// the hint was Unclassified).
    bool orthogonal_shape() const;

    /// Throws the analysis error, if any; otherwise returns the labeling.
    const VertexLabeling& labeling() const;
    const Chains& boundary_chains() const;

    const Point& labeled(size_t label_1based) const; // v_1 .. v_n
    size_t labeled_index(size_t label_1based) const;
    size_t label_of(size_t vertex_index) const; // 1-based

    PointLocation locate(const Point& p) const;
    bool contains(const Point& p) const { return locate(p) != PointLocation::Outside; }

    const Scalar& min_x() const;
    const Scalar& max_x() const;

    /// y-interval of a chain at abscissa x (nullopt outside [min_x, max_x]).
    std::optional<std::pair<Scalar, Scalar>> lower_interval_at(const Scalar& x) const;
    std::optional<std::pair<Scalar, Scalar>> upper_interval_at(const Scalar& x) const;

    /// True if the polygon-wide convention "no two cross-chain edges are
    /// parallel" fails (meaningful for non-orthogonal monotone polygons).
    bool has_parallel_cross_chain_edges() const;

    Scalar area_2() const; // twice the area, exact

private:
    struct Analysis;
    std::vector<Point> verts_;
    PolygonClass hint_;
    std::vector<int8_t> aux_dir_;
    std::shared_ptr<const Analysis> a_;

    const Analysis& analysis() const;
    std::optional<std::pair<Scalar, Scalar>> chain_interval(const std::vector<size_t>& chain,
                                                            const Scalar& x) const;
};

/// Runs the class checks and returns the x-sorted labeling.
VertexLabeling validate(const Polygon& p);

Chains chains(const Polygon& p, const VertexLabeling& lab);

/// The four extremal edges of an orthogonal polygon with the tie rules:
/// topmost ties -> leftmost, bottommost ties -> rightmost.
ExtremalEdges extremal_edges(const Polygon& p);

struct SplitParts {
    Polygon left, right;
    Segment cut;
};

/// Cuts a monotone polygon along the vertical line through v_i. Both parts
/// keep the cut segment as an auxiliary edge; the cut endpoint that is not a
/// vertex of the input is flagged auxiliary.
SplitParts simple_vertical_split(const Polygon& p, const VertexLabeling& lab, int label);

Polygon mirror_x(const Polygon& p);
Polygon mirror_y(const Polygon& p);

} // namespace kmodem

#endif
