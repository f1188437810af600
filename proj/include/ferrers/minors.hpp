#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"

namespace ferrers {

/// Dense lookup from a point to its position in a lexicographically sorted
/// point list.
class PointIndex {
public:
    PointIndex() = default;
    explicit PointIndex(std::span<const Point> sorted_points) {
        for (const auto& p : sorted_points) {
            ni_ = std::max(ni_, p.i);
            nj_ = std::max(nj_, p.j);
            nk_ = std::max(nk_, p.k);
        }
        slots_.assign(static_cast<std::size_t>(ni_) * nj_ * nk_, -1);
        for (std::size_t n = 0; n < sorted_points.size(); ++n) slots_[slot(sorted_points[n])] = static_cast<int>(n);
    }

    /// -1 if absent.
    [[nodiscard]] int find(const Point& p) const noexcept {
        if (p.i < 1 || p.j < 1 || p.k < 1 || p.i > ni_ || p.j > nj_ || p.k > nk_) return -1;
        return slots_[slot(p)];
    }

private:
    [[nodiscard]] std::size_t slot(const Point& p) const noexcept {
        return (static_cast<std::size_t>(p.i - 1) * nj_ + (p.j - 1)) * nk_ + (p.k - 1);
    }
    int ni_ = 0, nj_ = 0, nk_ = 0;
    std::vector<int> slots_;
};

enum Axis : std::uint8_t { axis_x = 1, axis_y = 2, axis_z = 4 };

/// T_u T_v - T_u' T_v' where {u', v'} arises from {u, v} by swapping one
/// coordinate. The lead pair is the lex leading term.
struct Binomial2Minor {
    std::pair<Point, Point> lead;
    std::pair<Point, Point> trail;
    std::uint8_t directions = 0;  ///< bitmask of Axis values producing this binomial

    friend bool operator==(const Binomial2Minor& x, const Binomial2Minor& y) {
        return x.lead == y.lead && x.trail == y.trail;
    }
};

/// Vertices are the points in lex order; edges are index pairs (first < second).
struct PairGraph {
    std::vector<Point> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;

    [[nodiscard]] std::size_t degree(int v) const { return adjacency.at(static_cast<std::size_t>(v)).size(); }

    /// Edge set expressed with points, for comparisons across graphs.
    [[nodiscard]] std::set<std::pair<Point, Point>> edge_points() const {
        std::set<std::pair<Point, Point>> out;
        for (auto [a, b] : edges) out.emplace(vertices[a], vertices[b]);
        return out;
    }
};

namespace detail {

inline std::pair<Point, Point> ordered(const Point& a, const Point& b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

inline Point swap_axis(const Point& p, const Point& q, Axis axis) {
    Point r = p;
    if (axis == axis_x) r.i = q.i;
    if (axis == axis_y) r.j = q.j;
    if (axis == axis_z) r.k = q.k;
    return r;
}

/// Visits every nonzero 2-minor of a lex-sorted point set once per
/// (unordered pair, axis) as (lead, trail, axis).
template <class Visit>
void visit_minors(std::span<const Point> pts, const PointIndex& index, Visit&& visit) {
    constexpr Axis axes[] = {axis_x, axis_y, axis_z};
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const Point& u = pts[a];
            const Point& v = pts[b];
            for (Axis axis : axes) {
                const Point u2 = swap_axis(u, v, axis);
                const Point v2 = swap_axis(v, u, axis);
                if (u2 == u || u2 == v) continue;  // zero binomial
                if (index.find(u2) < 0 || index.find(v2) < 0) continue;
                // the four points are distinct; the lex smallest one is the largest variable
                auto p1 = ordered(u, v);
                auto p2 = ordered(u2, v2);
                if (p1.first < p2.first) visit(p1, p2, axis);
                else visit(p2, p1, axis);
            }
        }
}

inline std::vector<Point> sorted_unique(std::span<const Point> s) {
    std::vector<Point> pts(s.begin(), s.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace detail

/// Generators x_i y_j z_k of I_D, one per point.
inline std::vector<Point> monomial_generators(const Diagram& d) { return d.points(); }

/// All nonzero 2-minors of S, deduplicated by their unordered term pairs.
inline std::vector<Binomial2Minor> two_minors(std::span<const Point> s) {
    const auto pts = detail::sorted_unique(s);
    const PointIndex index(pts);
    std::map<std::pair<std::pair<Point, Point>, std::pair<Point, Point>>, std::uint8_t> found;
    detail::visit_minors(pts, index, [&](const auto& lead, const auto& trail, Axis axis) {
        found[{lead, trail}] |= axis;
    });
    std::vector<Binomial2Minor> out;
    out.reserve(found.size());
    for (const auto& [terms, dirs] : found) out.push_back({terms.first, terms.second, dirs});
    return out;
}

/// Graph of lex leading pairs of the 2-minors of S. Its independence complex
/// is the Stanley-Reisner complex of the initial ideal.
inline PairGraph leading_pair_graph(std::span<const Point> s) {
    PairGraph g;
    g.vertices = detail::sorted_unique(s);
    const PointIndex index(g.vertices);
    std::set<std::pair<int, int>> edges;
    detail::visit_minors(g.vertices, index, [&](const auto& lead, const auto&, Axis) {
        edges.emplace(index.find(lead.first), index.find(lead.second));
    });
    g.edges.assign(edges.begin(), edges.end());
    g.adjacency.assign(g.vertices.size(), {});
    for (auto [a, b] : g.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    return g;
}

inline PairGraph leading_pair_graph(const Diagram& d) { return leading_pair_graph(d.points()); }

/// Induced subgraph on the given vertex subset (points not in g are ignored).
inline PairGraph induced_subgraph(const PairGraph& g, std::span<const Point> subset) {
    PairGraph h;
    h.vertices = detail::sorted_unique(subset);
    const PointIndex parent(g.vertices);
    h.vertices.erase(std::remove_if(h.vertices.begin(), h.vertices.end(),
                                    [&](const Point& p) { return parent.find(p) < 0; }),
                     h.vertices.end());
    const PointIndex idx(h.vertices);
    for (auto [a, b] : g.edges) {
        const int x = idx.find(g.vertices[a]);
        const int y = idx.find(g.vertices[b]);
        if (x >= 0 && y >= 0) h.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(h.edges.begin(), h.edges.end());
    h.adjacency.assign(h.vertices.size(), {});
    for (auto [a, b] : h.edges) {
        h.adjacency[a].push_back(b);
        h.adjacency[b].push_back(a);
    }
    return h;
}

/// A_u: the points of D^1 from u onwards in the given order, plus D^{>=2}.
inline std::vector<Point> suffix_points(const Diagram& d, const OrderedPointList& order, std::size_t start) {
    std::vector<Point> out(order.points.begin() + static_cast<std::ptrdiff_t>(std::min(start, order.points.size())),
                           order.points.end());
    for (int i = 2; i <= d.length(); ++i) {
        auto layer = d.layer_points(i);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

enum class PointClass { normal, phantom };

inline const char* to_string(PointClass c) { return c == PointClass::normal ? "normal" : "phantom"; }

/// Normal iff removing u from A_u shrinks the initial ideal of the 2-minors.
inline PointClass classify_point(const Diagram& d, const OrderedPointList& order, const Point& u) {
    if (u.i != 1 || !d.contains(u)) throw Error(ErrorKind::NotInLayer, to_string(u) + " is not in the first layer");
    const auto pos = order.position(u);
    if (!pos) throw Error(ErrorKind::NotInLayer, to_string(u) + " is not in the order");
    const auto with_u = suffix_points(d, order, *pos);
    const auto without_u = suffix_points(d, order, *pos + 1);
    return leading_pair_graph(with_u).edge_points() != leading_pair_graph(without_u).edge_points()
               ? PointClass::normal
               : PointClass::phantom;
}

}  // namespace ferrers
