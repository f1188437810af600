#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/invariants.hpp"
#include "ferrers/minors.hpp"
#include "ferrers/oracle.hpp"

namespace ferrers {

/// A_start(host): the order-suffix of host^1 beginning at start, together
/// with host^{>=2}. A missing start means every first-layer point is gone.
struct SuffixState {
    Diagram host;
    std::optional<Point> start;
    OrderFlavor flavor = OrderFlavor::induction;

    friend bool operator==(const SuffixState&, const SuffixState&) = default;
};

/// Invariants of the Stanley-Reisner ring of a suffix complex. dim is the
/// Krull dimension (complex dimension + 1); the empty point set is the
/// complex {emptyset} with dim 0, reg 0, mult 1.
struct SuffixInvariants {
    int dim = 0;
    int reg = 0;
    BigInt mult = 1;

    friend bool operator==(const SuffixInvariants&, const SuffixInvariants&) = default;
};

inline SuffixState initial_state(const Diagram& d, OrderFlavor flavor) {
    SuffixState s{d, std::nullopt, flavor};
    if (!d.empty()) s.start = order_of(d, flavor).points.front();
    return s;
}

inline std::vector<Point> realized_points(const SuffixState& s) {
    if (s.host.empty()) return {};
    const auto order = order_of(s.host, s.flavor);
    std::size_t pos = order.points.size();
    if (s.start) {
        auto p = order.position(*s.start);
        if (!p) throw Error(ErrorKind::NotInLayer, to_string(*s.start) + " is not a first-layer point of the host");
        pos = *p;
    }
    return suffix_points(s.host, order, pos);
}

/// Deterministic memo key: flavor, host layers and start.
inline std::string canonical_key(const SuffixState& s) {
    std::string key = s.flavor == OrderFlavor::lex ? "L|" : "I|";
    key += s.host.key();
    key += '|';
    key += s.start ? to_string(*s.start) : std::string("-");
    return key;
}

/// A state whose start lies in the second stage of the induction order is
/// the lex state of the flipped host at the flipped start.
inline SuffixState normalized(const SuffixState& s) {
    if (s.flavor != OrderFlavor::induction || !s.start || s.host.empty()) return s;
    const auto order = induction_order(s.host);
    const auto pos = order.position(*s.start);
    if (!pos) throw Error(ErrorKind::NotInLayer, to_string(*s.start) + " is not a first-layer point of the host");
    if (*pos < order.first_stage) return s;
    return {flip(s.host), s.start->flipped(), OrderFlavor::lex};
}

struct LinkResult {
    SuffixState state;
    /// Realized set of `state`, in the coordinates of the (normalized) parent.
    std::vector<Point> realized;
    /// The link's vertices outside `realized`; they are cone apexes.
    std::size_t cone_vertices = 0;
    bool validated = false;
    std::string detail;
};

namespace detail {

inline std::vector<Point> concat(std::initializer_list<std::vector<Point>> parts) {
    std::vector<Point> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <class Pred>
std::vector<Point> select(const std::vector<Point>& pts, Pred&& keep) {
    std::vector<Point> out;
    for (const auto& p : pts)
        if (keep(p)) out.push_back(p);
    return out;
}

/// The state that follows `s` in its order.
inline SuffixState successor(const SuffixState& s, const OrderedPointList& order, std::size_t pos) {
    SuffixState next{s.host, std::nullopt, s.flavor};
    if (pos + 1 < order.points.size()) next.start = order.points[pos + 1];
    return next;
}

/// Builds the link state from the zone formulas and checks it against the
/// graph-level link of `u` in `g` (the pair graph of A_u).
inline LinkResult build_link(const SuffixState& s, const PairGraph& g) {
    const Point u = *s.start;
    const Diagram& host = s.host;
    const ZoneMap z = zones(host, u);
    const int gamma = alpha_beta_gamma(host, u).gamma;
    const int c2 = host.tail_height(2);

    LinkResult out;
    out.state.flavor = s.flavor;
    std::vector<Point> expected;  // H from the zone formula
    std::vector<Point> ambient;
    std::optional<Point> ambient_start;  // in parent coordinates
    bool successor_of_u = false;

    if (s.flavor == OrderFlavor::induction) {
        const auto tall = select(host.layer_points(1), [&](const Point& p) { return p.j <= u.j && p.k > c2; });
        expected = concat({z.from_layer(1, 2), z.from_layer(3, 2), z.layer(5, 1), z.layer(6, 1), tall});
        const int cut = std::min(gamma, c2);
        ambient = concat({z[3], z.layer(5, 1), z.layer(6, 1),
                          select(host.points(), [&](const Point& p) { return p.j <= u.j && p.k > cut; })});
        ambient_start = u;
        successor_of_u = true;
    } else {
        expected = concat({z.from_layer(1, 2), z.from_layer(3, 2), z.layer(5, 1), z.layer(6, 1)});
        const auto upper = concat({z.from_layer(1, 2), z.from_layer(3, 2)});
        const bool all_left = std::all_of(upper.begin(), upper.end(), [&](const Point& p) { return p.j < u.j; });
        if (z.from_layer(1, 2).empty()) {
            ambient = concat({z[3], z.layer(5, 1), z.layer(6, 1)});
            ambient_start = u;
            successor_of_u = true;
        } else if (all_left) {
            const auto right = concat({z.layer(5, 1), z.layer(6, 1)});
            ambient = concat({select(concat({z[1], z[3]}), [&](const Point& p) { return p.j < u.j; }), right});
            if (!right.empty()) ambient_start = Point{1, u.j + 1, 1};
        } else {
            out.detail = "no lex ambient diagram for " + to_string(u) + " in " + host.key();
            return out;
        }
    }

    Reduction red;
    try {
        red = reduce(ambient);
    } catch (const Error& e) {
        out.detail = std::string("ambient diagram is not Ferrers: ") + e.what();
        return out;
    }
    out.state.host = red.diagram;
    if (ambient_start) {
        const auto mapped = red.to_reduced(*ambient_start);
        if (!mapped || !red.diagram.contains(*mapped) || mapped->i != 1) {
            out.detail = "link start " + to_string(*ambient_start) + " is missing from the ambient diagram";
            return out;
        }
        if (successor_of_u) {
            const auto order = order_of(red.diagram, s.flavor);
            const auto pos = order.position(*mapped);
            if (!pos) {
                out.detail = "u is not a first-layer point of the ambient diagram";
                return out;
            }
            out.state = successor(out.state, order, *pos);
        } else {
            out.state.start = *mapped;
        }
    }
    for (const auto& p : realized_points(out.state)) out.realized.push_back(red.to_original(p));
    std::sort(out.realized.begin(), out.realized.end());

    if (out.realized != expected) {
        out.detail = "realized link set differs from the zone formula at " + to_string(u);
        return out;
    }

    // graph-level link: vertices of A_u^+ not adjacent to u
    const PointIndex index(g.vertices);
    const int ui = index.find(u);
    std::vector<char> excluded(g.vertices.size(), 0);
    excluded[static_cast<std::size_t>(ui)] = 1;
    for (int v : g.adjacency[static_cast<std::size_t>(ui)]) excluded[static_cast<std::size_t>(v)] = 1;
    std::vector<Point> link_vertices;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (!excluded[v]) link_vertices.push_back(g.vertices[v]);

    const std::set<Point> realized_set(out.realized.begin(), out.realized.end());
    for (const auto& p : out.realized)
        if (index.find(p) < 0 || excluded[static_cast<std::size_t>(index.find(p))]) {
            out.detail = "link state contains " + to_string(p) + " outside the graph link";
            return out;
        }
    const PairGraph link_graph = induced_subgraph(g, link_vertices);
    for (std::size_t v = 0; v < link_graph.vertices.size(); ++v)
        if (!realized_set.count(link_graph.vertices[v])) {
            if (!link_graph.adjacency[v].empty()) {
                out.detail = "dropped link vertex " + to_string(link_graph.vertices[v]) + " is not a cone apex";
                return out;
            }
            ++out.cone_vertices;
        }
    if (induced_subgraph(g, out.realized).edge_points() != leading_pair_graph(out.realized).edge_points()) {
        out.detail = "restriction of the pair graph to the link set differs from its own pair graph";
        return out;
    }
    out.validated = true;
    return out;
}

/// Capacity 0 means unbounded; otherwise least-recently-used eviction.
template <class Value>
class LruCache {
public:
    explicit LruCache(std::size_t capacity = 0) : capacity_(capacity) {}

    std::optional<Value> get(const std::string& key) {
        std::lock_guard lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        order_.splice(order_.begin(), order_, it->second.second);
        return it->second.first;
    }

    void put(const std::string& key, Value value) {
        std::lock_guard lock(mutex_);
        auto it = map_.find(key);
        if (it != map_.end()) {
            it->second.first = std::move(value);
            order_.splice(order_.begin(), order_, it->second.second);
            return;
        }
        order_.push_front(key);
        map_.emplace(key, std::pair{std::move(value), order_.begin()});
        if (capacity_ && map_.size() > capacity_) {
            map_.erase(order_.back());
            order_.pop_back();
        }
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return map_.size();
    }

private:
    std::size_t capacity_;
    mutable std::mutex mutex_;
    std::list<std::string> order_;
    std::unordered_map<std::string, std::pair<Value, std::list<std::string>::iterator>> map_;
};

}  // namespace detail

struct EngineOptions {
    /// Cross-check every link against the facet oracle on hosts up to
    /// verify_threshold points.
    bool verify = false;
    std::size_t verify_threshold = 24;
    std::size_t cache_capacity = 0;
    /// Compute unvalidated links with the facet oracle instead of failing.
    bool allow_fallback = true;
    OracleLimits fallback_limits{64, 50'000'000, 3'000'000, 3'000'000};
};

struct EngineStats {
    std::atomic<std::size_t> states{0};
    std::atomic<std::size_t> cache_hits{0};
    std::atomic<std::size_t> phantom_steps{0};
    std::atomic<std::size_t> normal_steps{0};
    std::atomic<std::size_t> fallbacks{0};
    std::atomic<std::size_t> verified_links{0};
    std::atomic<std::size_t> nonpure_steps{0};
};

/// Deletion/link recursion over the first-layer shedding order. Phantom
/// points are cone apexes and leave (reg, mult) unchanged; a normal point u
/// contributes reg = max(reg(A_u^+), reg(link) + 1) and
/// mult = mult(A_u^+) + mult(link), where the link is again a suffix state of
/// a smaller Ferrers diagram.
class Engine {
public:
    explicit Engine(EngineOptions options = {}) : options_(options), cache_(options.cache_capacity) {}

    [[nodiscard]] const EngineOptions& options() const noexcept { return options_; }
    [[nodiscard]] const EngineStats& stats() const noexcept { return stats_; }
    [[nodiscard]] std::size_t cache_size() const { return cache_.size(); }

    std::vector<std::string> log() const {
        std::lock_guard lock(log_mutex_);
        return log_;
    }

    InvariantsReport invariants(const Diagram& d, OrderFlavor flavor = OrderFlavor::induction) {
        if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
        if (!has_projection_property(d))
            throw Error(ErrorKind::UnsupportedDiagram, "diagram " + d.key() + " lacks the projection property");
        if (flavor == OrderFlavor::lex && !has_strong_projection_property(d))
            throw Error(ErrorKind::UnsupportedDiagram,
                        "lex shedding needs the strong projection property; " + d.key() + " lacks it");
        const auto r = suffix_invariants(initial_state(d, flavor));
        const int expected_dim = d.length() + d.width() + d.height() - 2;
        if (r.dim != expected_dim)
            throw Error(ErrorKind::Internal, "recursion produced dimension " + std::to_string(r.dim) + " for " +
                                                 d.key() + ", expected " + std::to_string(expected_dim));
        InvariantsReport out;
        out.ring_dim = expected_dim;
        out.reg = r.reg;
        out.mult = r.mult;
        out.red_num = r.reg;
        out.source = Source::engine;
        return out;
    }

    SuffixInvariants suffix_invariants(const SuffixState& raw) {
        const SuffixState s = normalized(raw);
        const std::string key = canonical_key(s);
        if (auto hit = cache_.get(key)) {
            ++stats_.cache_hits;
            return *hit;
        }
        ++stats_.states;
        SuffixInvariants result = compute(s);
        cache_.put(key, result);
        return result;
    }

    /// The suffix state realizing the link of the start point. Throws
    /// NotNormal for a phantom start.
    LinkResult link_state(const SuffixState& raw) const {
        const SuffixState s = normalized(raw);
        if (!s.start) throw Error(ErrorKind::NotNormal, "state has no start point");
        const auto order = order_of(s.host, s.flavor);
        const auto pos = *order.position(*s.start);
        const auto with_u = suffix_points(s.host, order, pos);
        const auto g = leading_pair_graph(with_u);
        const auto gp = leading_pair_graph(suffix_points(s.host, order, pos + 1));
        if (g.edge_points() == gp.edge_points())
            throw Error(ErrorKind::NotNormal, to_string(*s.start) + " is a phantom point");
        return detail::build_link(s, g);
    }

    /// Invariants of the link of the start point in Delta(A_start), cone
    /// vertices included in dim. Uses the facet oracle on the graph-level link
    /// when the suffix state does not validate.
    SuffixInvariants link_invariants(const SuffixState& raw) {
        const SuffixState s = normalized(raw);
        const LinkResult link = link_state(s);
        if (link.validated) {
            auto r = suffix_invariants(link.state);
            r.dim += static_cast<int>(link.cone_vertices);
            return r;
        }
        const auto order = order_of(s.host, s.flavor);
        const auto g = leading_pair_graph(suffix_points(s.host, order, *order.position(*s.start)));
        return graph_link_by_oracle(g, *s.start);
    }

private:
    SuffixInvariants compute(const SuffixState& s) {
        if (s.host.empty()) return {};
        if (!s.start) {
            const Diagram rest = s.host.tail(2);
            if (rest.empty()) return {};
            const OrderFlavor next = s.flavor == OrderFlavor::lex && has_strong_projection_property(rest)
                                         ? OrderFlavor::lex
                                         : OrderFlavor::induction;
            return suffix_invariants(initial_state(rest, next));
        }

        const auto order = order_of(s.host, s.flavor);
        const auto pos_opt = order.position(*s.start);
        if (!pos_opt) throw Error(ErrorKind::NotInLayer, to_string(*s.start) + " is not in the host's first layer");
        const std::size_t pos = *pos_opt;
        const auto with_u = suffix_points(s.host, order, pos);
        const auto g = leading_pair_graph(with_u);
        const auto gp = leading_pair_graph(suffix_points(s.host, order, pos + 1));
        const auto edges = g.edge_points();
        const auto edges_plus = gp.edge_points();

        const Point u = *s.start;
        std::set<std::pair<Point, Point>> away_from_u;
        for (const auto& e : edges)
            if (e.first != u && e.second != u) away_from_u.insert(e);
        if (away_from_u != edges_plus) {
            log("restriction property fails at " + canonical_key(s) + "; using the facet oracle");
            return whole_by_oracle(g);
        }

        const SuffixInvariants rest = suffix_invariants(detail::successor(s, order, pos));
        if (edges == edges_plus) {
            ++stats_.phantom_steps;
            return {rest.dim + 1, rest.reg, rest.mult};
        }
        ++stats_.normal_steps;

        LinkResult link = detail::build_link(s, g);
        SuffixInvariants lk;
        bool have_link = false;
        if (link.validated) {
            lk = suffix_invariants(link.state);
            lk.dim += static_cast<int>(link.cone_vertices);
            have_link = true;
            if (options_.verify && with_u.size() <= options_.verify_threshold) {
                ++stats_.verified_links;
                const auto direct = graph_link_by_oracle(g, u);
                if (!(direct == lk)) {
                    log("link at " + canonical_key(s) + " disagrees with the facet oracle");
                    lk = direct;
                    ++stats_.fallbacks;
                }
            }
        } else {
            log("link state at " + canonical_key(s) + " not validated: " + link.detail);
        }
        if (!have_link) {
            if (!options_.allow_fallback)
                throw Error(ErrorKind::LinkMismatch, link.detail + " (" + canonical_key(s) + ")");
            ++stats_.fallbacks;
            lk = graph_link_by_oracle(g, u);
        }

        SuffixInvariants out;
        out.dim = std::max(rest.dim, lk.dim + 1);
        out.reg = std::max(rest.reg, lk.reg + 1);
        out.mult = (rest.dim == out.dim ? rest.mult : BigInt{0}) + (lk.dim + 1 == out.dim ? lk.mult : BigInt{0});
        if (rest.dim != lk.dim + 1) ++stats_.nonpure_steps;
        return out;
    }

    SuffixInvariants whole_by_oracle(const PairGraph& g) {
        ++stats_.fallbacks;
        const auto r = complex_invariants(facets(g, options_.fallback_limits));
        return {r.ring_dim, r.reg, r.mult};
    }

    SuffixInvariants graph_link_by_oracle(const PairGraph& g, const Point& u) const {
        const PointIndex index(g.vertices);
        const int ui = index.find(u);
        std::vector<char> excluded(g.vertices.size(), 0);
        excluded[static_cast<std::size_t>(ui)] = 1;
        for (int v : g.adjacency[static_cast<std::size_t>(ui)]) excluded[static_cast<std::size_t>(v)] = 1;
        std::vector<Point> rest;
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (!excluded[v]) rest.push_back(g.vertices[v]);
        const auto r = complex_invariants(facets(induced_subgraph(g, rest), options_.fallback_limits));
        return {r.ring_dim, r.reg, r.mult};
    }

    void log(std::string line) {
        std::lock_guard lock(log_mutex_);
        log_.push_back(std::move(line));
    }

    EngineOptions options_;
    EngineStats stats_;
    detail::LruCache<SuffixInvariants> cache_;
    mutable std::mutex log_mutex_;
    std::vector<std::string> log_;
};

/// Convenience wrapper with a fresh engine.
inline InvariantsReport invariants(const Diagram& d, OrderFlavor flavor = OrderFlavor::induction) {
    Engine engine;
    return engine.invariants(d, flavor);
}

}  // namespace ferrers
