#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ferrers/core.hpp"

namespace ferrers {

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw Error(ErrorKind::InvalidInput, "empty partition");
        for (std::size_t n = 0; n < parts_.size(); ++n) {
            if (parts_[n] < 1) throw Error(ErrorKind::InvalidInput, "partition parts must be >= 1");
            if (n > 0 && parts_[n] > parts_[n - 1])
                throw Error(ErrorKind::InvalidInput, "partition parts must be weakly decreasing");
        }
    }

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    /// 1-based access, 0 beyond the last part.
    [[nodiscard]] int operator()(std::size_t idx) const noexcept {
        return idx >= 1 && idx <= parts_.size() ? parts_[idx - 1] : 0;
    }
    [[nodiscard]] int cells() const noexcept {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A three-dimensional Ferrers diagram stored as layer height matrices:
/// (i, j, k) is a member iff k <= layers[i-1][j-1].
///
/// A default-constructed Diagram is the empty sentinel. It never comes out of
/// validate(); the engine uses it as the base of its recursion.
class Diagram {
public:
    using Layer = std::vector<int>;

    Diagram() = default;

    /// Checks the Ferrers conditions and returns the diagram.
    /// Throws NotFerrers naming the violating coordinates.
    static Diagram validate(std::vector<Layer> layers) {
        if (layers.empty()) throw Error(ErrorKind::InvalidInput, "diagram has no layers");
        for (std::size_t i = 0; i < layers.size(); ++i) {
            const auto& layer = layers[i];
            if (layer.empty())
                throw Error(ErrorKind::NotFerrers, "layer " + std::to_string(i + 1) + " is empty");
            for (std::size_t j = 0; j < layer.size(); ++j) {
                if (layer[j] < 1)
                    throw Error(ErrorKind::NotFerrers, "zero or negative height at (i,j)=(" +
                                                           std::to_string(i + 1) + "," +
                                                           std::to_string(j + 1) + ")");
                if (j > 0 && layer[j] > layer[j - 1])
                    throw Error(ErrorKind::NotFerrers,
                                "heights increase in j at (i,j)=(" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
            }
            if (i > 0) {
                const auto& prev = layers[i - 1];
                if (layer.size() > prev.size())
                    throw Error(ErrorKind::NotFerrers, "layer " + std::to_string(i + 1) +
                                                           " has more columns than layer " +
                                                           std::to_string(i));
                for (std::size_t j = 0; j < layer.size(); ++j)
                    if (layer[j] > prev[j])
                        throw Error(ErrorKind::NotFerrers,
                                    "height grows in i at (i,j)=(" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")");
            }
        }
        Diagram d;
        d.layers_ = std::move(layers);
        return d;
    }

    /// Smallest Ferrers diagram containing every generator.
    static Diagram from_generators(std::span<const Point> gens) {
        if (gens.empty()) throw Error(ErrorKind::InvalidInput, "empty generator set");
        int a = 0, b = 0;
        for (const auto& g : gens) {
            if (g.i < 1 || g.j < 1 || g.k < 1)
                throw Error(ErrorKind::InvalidInput, "generator " + to_string(g) + " has a coordinate < 1");
            a = std::max(a, g.i);
            b = std::max(b, g.j);
        }
        std::vector<Layer> layers(static_cast<std::size_t>(a), Layer(static_cast<std::size_t>(b), 0));
        for (const auto& g : gens)
            for (int i = 1; i <= g.i; ++i)
                for (int j = 1; j <= g.j; ++j) {
                    int& h = layers[i - 1][j - 1];
                    h = std::max(h, g.k);
                }
        for (auto& layer : layers)
            while (!layer.empty() && layer.back() == 0) layer.pop_back();
        return validate(std::move(layers));
    }

    /// The point set must already be downward closed.
    static Diagram from_points(std::span<const Point> points) {
        if (points.empty()) return Diagram{};
        Diagram d = from_generators(points);
        if (d.size() != std::set<Point>(points.begin(), points.end()).size())
            throw Error(ErrorKind::NotFerrers, "point set is not downward closed");
        return d;
    }

    [[nodiscard]] bool empty() const noexcept { return layers_.empty(); }
    [[nodiscard]] const std::vector<Layer>& layers() const noexcept { return layers_; }

    [[nodiscard]] bool contains(const Point& p) const noexcept {
        if (p.i < 1 || p.j < 1 || p.k < 1) return false;
        if (static_cast<std::size_t>(p.i) > layers_.size()) return false;
        const auto& layer = layers_[p.i - 1];
        if (static_cast<std::size_t>(p.j) > layer.size()) return false;
        return p.k <= layer[p.j - 1];
    }

    [[nodiscard]] std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& layer : layers_)
            for (int h : layer) n += static_cast<std::size_t>(h);
        return n;
    }

    /// Essential length a_D, width b_D and height c_D.
    [[nodiscard]] int length() const noexcept { return static_cast<int>(layers_.size()); }
    [[nodiscard]] int width() const noexcept { return empty() ? 0 : static_cast<int>(layers_[0].size()); }
    [[nodiscard]] int height() const noexcept { return empty() ? 0 : layers_[0][0]; }

    /// b and c of the single layer D^i; zero when the layer does not exist.
    [[nodiscard]] int layer_width(int i) const noexcept {
        return i >= 1 && i <= length() ? static_cast<int>(layers_[i - 1].size()) : 0;
    }
    [[nodiscard]] int layer_height(int i) const noexcept {
        return i >= 1 && i <= length() ? layers_[i - 1][0] : 0;
    }
    /// c_{D^{>= i}}; the layers are nested so this is the height of layer i.
    [[nodiscard]] int tail_height(int i) const noexcept { return layer_height(i); }

    /// All points in lexicographic order.
    [[nodiscard]] std::vector<Point> points() const {
        std::vector<Point> out;
        out.reserve(size());
        for (int i = 1; i <= length(); ++i) {
            const auto& layer = layers_[i - 1];
            for (int j = 1; j <= static_cast<int>(layer.size()); ++j)
                for (int k = 1; k <= layer[j - 1]; ++k) out.push_back({i, j, k});
        }
        return out;
    }

    /// Points of D^i in lexicographic order.
    [[nodiscard]] std::vector<Point> layer_points(int i) const {
        std::vector<Point> out;
        if (i < 1 || i > length()) return out;
        const auto& layer = layers_[i - 1];
        for (int j = 1; j <= static_cast<int>(layer.size()); ++j)
            for (int k = 1; k <= layer[j - 1]; ++k) out.push_back({i, j, k});
        return out;
    }

    /// D^{>= from}, shifted so that its first layer is layer 1. Empty if from > a_D.
    [[nodiscard]] Diagram tail(int from) const {
        Diagram d;
        if (from < 1) from = 1;
        for (int i = from; i <= length(); ++i) d.layers_.push_back(layers_[i - 1]);
        return d;
    }

    [[nodiscard]] bool subset_of(const Diagram& other) const noexcept {
        if (length() > other.length()) return false;
        for (int i = 1; i <= length(); ++i) {
            const auto& mine = layers_[i - 1];
            const auto& theirs = other.layers_[i - 1];
            if (mine.size() > theirs.size()) return false;
            for (std::size_t j = 0; j < mine.size(); ++j)
                if (mine[j] > theirs[j]) return false;
        }
        return true;
    }

    friend bool operator==(const Diagram&, const Diagram&) = default;

    /// Stable textual form such as "3,3,2;3,3".
    [[nodiscard]] std::string key() const {
        std::string s;
        for (std::size_t i = 0; i < layers_.size(); ++i) {
            if (i) s += ';';
            for (std::size_t j = 0; j < layers_[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(layers_[i][j]);
            }
        }
        return s;
    }

    [[nodiscard]] static Diagram box(int a, int b, int c) {
        if (a < 1 || b < 1 || c < 1) throw Error(ErrorKind::InvalidInput, "box sides must be >= 1");
        return validate(std::vector<Layer>(static_cast<std::size_t>(a),
                                           Layer(static_cast<std::size_t>(b), c)));
    }

private:
    std::vector<Layer> layers_;
};

// ---------------------------------------------------------------------------
// Reductions

/// Result of deleting empty i-, j- and k-slices from a finite point set.
/// The maps send a reduced coordinate (1-based) to the original one.
struct Reduction {
    Diagram diagram;
    std::vector<int> i_map;
    std::vector<int> j_map;
    std::vector<int> k_map;

    [[nodiscard]] Point to_original(const Point& p) const {
        return {i_map.at(p.i - 1), j_map.at(p.j - 1), k_map.at(p.k - 1)};
    }

    [[nodiscard]] std::optional<Point> to_reduced(const Point& p) const {
        auto find = [](const std::vector<int>& map, int v) -> int {
            auto it = std::lower_bound(map.begin(), map.end(), v);
            return it != map.end() && *it == v ? static_cast<int>(it - map.begin()) + 1 : 0;
        };
        const int i = find(i_map, p.i), j = find(j_map, p.j), k = find(k_map, p.k);
        if (!i || !j || !k) return std::nullopt;
        return Point{i, j, k};
    }
};

/// Relabels the inhabited coordinate values of each axis to 1, 2, ... and
/// checks that the result is a Ferrers diagram. An empty input gives the
/// empty diagram.
inline Reduction reduce(std::span<const Point> points) {
    Reduction r;
    if (points.empty()) return r;
    std::set<int> is, js, ks;
    for (const auto& p : points) {
        is.insert(p.i);
        js.insert(p.j);
        ks.insert(p.k);
    }
    r.i_map.assign(is.begin(), is.end());
    r.j_map.assign(js.begin(), js.end());
    r.k_map.assign(ks.begin(), ks.end());
    std::vector<Point> relabeled;
    relabeled.reserve(points.size());
    for (const auto& p : points) relabeled.push_back(*r.to_reduced(p));
    r.diagram = Diagram::from_points(relabeled);
    return r;
}

/// Removes all empty slices. Throws InvalidInput on an empty set and
/// NotFerrers if the reduced set is still not downward closed.
inline Diagram essential_reduce(std::span<const Point> points) {
    if (points.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    return reduce(points).diagram;
}

inline Diagram essential_reduce(const Diagram& d) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    return d;  // a valid Ferrers diagram has no empty slices
}

struct EssentialDims {
    int a = 0, b = 0, c = 0;
    friend bool operator==(const EssentialDims&, const EssentialDims&) = default;
};

inline EssentialDims essential_dims(const Diagram& d) { return {d.length(), d.width(), d.height()}; }

/// S(D) = {(i,k,j) : (i,j,k) in D}.
inline Diagram flip(const Diagram& d) {
    if (d.empty()) return d;
    std::vector<Diagram::Layer> layers;
    layers.reserve(d.layers().size());
    for (const auto& layer : d.layers()) {
        // conjugate partition
        Diagram::Layer conj(static_cast<std::size_t>(layer.front()), 0);
        for (int h : layer)
            for (int k = 0; k < h; ++k) ++conj[k];
        layers.push_back(std::move(conj));
    }
    return Diagram::validate(std::move(layers));
}

// ---------------------------------------------------------------------------
// Coordinate statistics and zones

struct Extents {
    int alpha = 0, beta = 0, gamma = 0;
    friend bool operator==(const Extents&, const Extents&) = default;
};

/// Maximal i, j and k reachable from u along the three axis lines through u.
inline Extents alpha_beta_gamma(const Diagram& d, const Point& u) {
    if (!d.contains(u)) throw Error(ErrorKind::NotInDiagram, to_string(u) + " is not in the diagram");
    Extents e{u.i, u.j, u.k};
    while (d.contains({e.alpha + 1, u.j, u.k})) ++e.alpha;
    while (d.contains({u.i, e.beta + 1, u.k})) ++e.beta;
    while (d.contains({u.i, u.j, e.gamma + 1})) ++e.gamma;
    return e;
}

/// Six-way split of D^{>= i0} around u = (i0, j0, k0).
struct ZoneMap {
    std::array<std::vector<Point>, 6> zones;

    /// 1-based zone index.
    [[nodiscard]] const std::vector<Point>& operator[](int z) const { return zones.at(z - 1); }
    [[nodiscard]] std::vector<Point>& operator[](int z) { return zones.at(z - 1); }

    /// Zone z restricted to layer i exactly (Z^i) or to layers >= i (Z^{>=i}).
    [[nodiscard]] std::vector<Point> layer(int z, int i) const {
        std::vector<Point> out;
        for (const auto& p : (*this)[z])
            if (p.i == i) out.push_back(p);
        return out;
    }
    [[nodiscard]] std::vector<Point> from_layer(int z, int i) const {
        std::vector<Point> out;
        for (const auto& p : (*this)[z])
            if (p.i >= i) out.push_back(p);
        return out;
    }
};

inline ZoneMap zones(const Diagram& d, const Point& u) {
    const Extents e = alpha_beta_gamma(d, u);
    ZoneMap z;
    for (const auto& p : d.points()) {
        if (p.i < u.i) continue;
        int idx = 0;
        if (p.j <= u.j) {
            if (p.k > e.gamma) idx = 1;
            else if (p.k > u.k) idx = 2;
            else idx = 3;
        } else if (p.j <= e.beta) {
            if (p.k > u.k && p.k <= e.gamma) idx = 4;
            else if (p.k <= u.k) idx = 5;
        } else if (p.k < u.k) {
            idx = 6;
        }
        if (idx == 0)
            throw Error(ErrorKind::Internal, "point " + to_string(p) + " falls in no zone of " + to_string(u));
        z[idx].push_back(p);
    }
    return z;
}

// ---------------------------------------------------------------------------
// Projection properties

/// Each layer covers the rectangular shadow of the next one.
inline bool has_projection_property(const Diagram& d) {
    for (int i = 1; i < d.length(); ++i) {
        const int b_next = d.layer_width(i + 1);
        const int c_next = d.layer_height(i + 1);
        if (!d.contains({i, b_next, c_next})) return false;
    }
    return true;
}

inline bool has_strong_projection_property(const Diagram& d) {
    for (int i = 1; i < d.length(); ++i) {
        const int b_next = d.layer_width(i + 1);
        const int c_next = d.layer_height(i + 1);
        if (b_next != 1 && !d.contains({i, b_next, d.layer_height(i)})) return false;
        if (c_next != 1 && !d.contains({i, d.layer_width(i), c_next})) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orders on the first layer

enum class OrderFlavor { induction, lex };

inline const char* to_string(OrderFlavor f) { return f == OrderFlavor::lex ? "lex" : "induction"; }

/// An ordering of the points of D^1.
struct OrderedPointList {
    std::vector<Point> points;
    OrderFlavor flavor = OrderFlavor::lex;
    /// Number of leading points that belong to the first stage (induction
    /// flavor); equals points.size() for the lex flavor.
    std::size_t first_stage = 0;

    [[nodiscard]] std::optional<std::size_t> position(const Point& p) const {
        auto it = std::find(points.begin(), points.end(), p);
        if (it == points.end()) return std::nullopt;
        return static_cast<std::size_t>(it - points.begin());
    }
};

inline OrderedPointList lex_order(const Diagram& d) {
    OrderedPointList out;
    out.points = d.layer_points(1);
    out.flavor = OrderFlavor::lex;
    out.first_stage = out.points.size();
    return out;
}

/// First stage: lex order on {(1,j,k) : k <= c_{D^{>=2}}}. Second stage: the
/// remaining points in the lex order of the flipped diagram. With a single
/// layer c_{D^{>=2}} = 0 and everything is second stage.
inline OrderedPointList induction_order(const Diagram& d) {
    OrderedPointList out;
    out.flavor = OrderFlavor::induction;
    const int cut = d.tail_height(2);
    std::vector<Point> second;
    for (const auto& p : d.layer_points(1)) {
        if (p.k <= cut) out.points.push_back(p);
        else second.push_back(p);
    }
    out.first_stage = out.points.size();
    std::sort(second.begin(), second.end(),
              [](const Point& x, const Point& y) { return x.flipped() < y.flipped(); });
    out.points.insert(out.points.end(), second.begin(), second.end());
    return out;
}

inline OrderedPointList order_of(const Diagram& d, OrderFlavor flavor) {
    return flavor == OrderFlavor::lex ? lex_order(d) : induction_order(d);
}

/// Checks that the list covers D^1 exactly once and that componentwise
/// smaller points come first.
inline bool is_quasi_lexicographic(const OrderedPointList& order, const Diagram& d) {
    const auto layer = d.layer_points(1);
    if (order.points.size() != layer.size()) return false;
    if (std::set<Point>(order.points.begin(), order.points.end()) != std::set<Point>(layer.begin(), layer.end()))
        return false;
    for (std::size_t x = 0; x < order.points.size(); ++x)
        for (std::size_t y = 0; y < x; ++y) {
            const auto& early = order.points[y];
            const auto& late = order.points[x];
            if (late.j <= early.j && late.k <= early.k) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Profiles

enum class Plane { xy, xz };

/// Row i of the profile has the number of columns (xy) or the height (xz) of layer i.
inline Partition profile(const Diagram& d, Plane plane) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    std::vector<int> parts;
    for (int i = 1; i <= d.length(); ++i)
        parts.push_back(plane == Plane::xy ? d.layer_width(i) : d.layer_height(i));
    return Partition(std::move(parts));
}

/// A single-layer diagram whose columns have heights given by the partition.
inline Diagram diagram_from_partition(const Partition& lambda) {
    return Diagram::validate({lambda.parts()});
}

}  // namespace ferrers
