#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/invariants.hpp"
#include "ferrers/minors.hpp"

namespace ferrers {

struct OracleLimits {
    std::size_t max_vertices = 24;          ///< facet enumeration; hard cap 64
    std::size_t max_faces = 50'000'000;     ///< f-vector enumeration
    std::size_t max_hilbert_set = 3'000'000;  ///< distinct monomials in one degree
    std::size_t max_monomials = 3'000'000;  ///< toric_gb_check monomials in one degree
};

/// Facets, f- and h-vector of a simplicial complex.
struct ComplexSummary {
    std::vector<std::vector<Point>> facets;
    bool pure = true;
    std::vector<BigInt> f_vector;  ///< f_{-1} = 1, f_0, f_1, ...
    std::vector<BigInt> h_vector;  ///< h_0 .. h_d with d = complex_dim + 1
    int complex_dim = -1;

    [[nodiscard]] std::size_t top_facet_count() const {
        return static_cast<std::size_t>(std::count_if(facets.begin(), facets.end(), [&](const auto& f) {
            return static_cast<int>(f.size()) == complex_dim + 1;
        }));
    }
};

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

/// h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, where f[0] is f_{-1}.
inline std::vector<BigInt> h_from_f(const std::vector<BigInt>& f) {
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<BigInt> h(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i) {
            BigInt term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
            if ((k - i) % 2) h[k] -= term;
            else h[k] += term;
        }
    return h;
}

/// Inverse transform: f_{i-1} = sum_{k=0}^{i} C(d-k, i-k) h_k.
inline std::vector<BigInt> f_from_h(const std::vector<BigInt>& h) {
    const int d = static_cast<int>(h.size()) - 1;
    std::vector<BigInt> f(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i)
        for (int k = 0; k <= i; ++k) f[i] += binomial(d - k, i - k) * h[static_cast<std::size_t>(k)];
    return f;
}

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

/// Complement-graph neighbourhoods: the vertices that may join v in a face.
inline std::vector<Mask> compatible_masks(const PairGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    const Mask all = n == 64 ? ~Mask{0} : (bit(n) - 1);
    std::vector<Mask> comp(static_cast<std::size_t>(n), all);
    for (int v = 0; v < n; ++v) comp[v] &= ~bit(v);
    for (auto [a, b] : g.edges) {
        comp[a] &= ~bit(b);
        comp[b] &= ~bit(a);
    }
    return comp;
}

/// Bron-Kerbosch with pivoting on the complement graph; reports maximal
/// independent sets.
template <class Report>
void maximal_independent_sets(Mask r, Mask p, Mask x, const std::vector<Mask>& comp, Report&& report) {
    if (!p && !x) {
        report(r);
        return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask m = px; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        const int c = std::popcount(p & comp[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Mask cand = p & ~comp[pivot]; cand; cand &= cand - 1) {
        const int v = std::countr_zero(cand);
        maximal_independent_sets(r | bit(v), p & comp[v], x & comp[v], comp, report);
        p &= ~bit(v);
        x |= bit(v);
    }
}

inline void count_faces(Mask allowed, std::size_t size, const std::vector<Mask>& comp,
                        std::vector<std::uint64_t>& counts, std::size_t& budget) {
    if (budget == 0) throw Error(ErrorKind::TooLarge, "face count exceeds limit");
    --budget;
    if (counts.size() <= size) counts.resize(size + 1, 0);
    ++counts[size];
    for (Mask m = allowed; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const Mask higher = ~((bit(v) << 1) - 1);
        count_faces(allowed & comp[v] & higher, size + 1, comp, counts, budget);
    }
}

}  // namespace detail

/// Independence complex of the graph: facets are maximal independent sets.
inline ComplexSummary facets(const PairGraph& g, const OracleLimits& limits = {}) {
    const std::size_t n = g.vertices.size();
    if (n > std::min<std::size_t>(limits.max_vertices, 64))
        throw Error(ErrorKind::TooLarge, "facet enumeration on " + std::to_string(n) + " vertices exceeds limit " +
                                             std::to_string(std::min<std::size_t>(limits.max_vertices, 64)));
    ComplexSummary out;
    const auto comp = detail::compatible_masks(g);
    const detail::Mask all = n == 64 ? ~detail::Mask{0} : (detail::bit(static_cast<int>(n)) - 1);

    std::vector<detail::Mask> found;
    detail::maximal_independent_sets(0, all, 0, comp, [&](detail::Mask m) { found.push_back(m); });

    for (auto m : found) {
        std::vector<Point> facet;
        for (; m; m &= m - 1) facet.push_back(g.vertices[std::countr_zero(m)]);
        out.facets.push_back(std::move(facet));
    }
    std::sort(out.facets.begin(), out.facets.end());

    std::size_t largest = 0, smallest = n + 1;
    for (const auto& f : out.facets) {
        largest = std::max(largest, f.size());
        smallest = std::min(smallest, f.size());
    }
    out.complex_dim = static_cast<int>(largest) - 1;
    out.pure = out.facets.empty() || largest == smallest;

    std::vector<std::uint64_t> counts;
    std::size_t budget = limits.max_faces;
    detail::count_faces(all, 0, comp, counts, budget);
    counts.resize(largest + 1, 0);
    for (auto c : counts) out.f_vector.emplace_back(c);
    out.h_vector = h_from_f(out.f_vector);
    return out;
}

/// Largest index with a nonzero entry; 0 for the zero vector.
inline int last_nonzero(const std::vector<BigInt>& v) {
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k)
        if (v[static_cast<std::size_t>(k)] != 0) return k;
    return 0;
}

/// Invariants read off an independence complex: dim = complex dim + 1,
/// e = number of top-dimensional facets, reg = degree of the h-polynomial
/// (the last one assumes Cohen-Macaulayness).
inline InvariantsReport complex_invariants(const ComplexSummary& summary) {
    InvariantsReport r;
    r.ring_dim = summary.complex_dim + 1;
    r.mult = summary.top_facet_count();
    r.reg = last_nonzero(summary.h_vector);
    r.red_num = r.reg;
    r.source = Source::oracle_facets;
    return r;
}

inline InvariantsReport oracle_invariants(const Diagram& d, const OracleLimits& limits = {},
                                          ComplexSummary* summary_out = nullptr) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    const auto summary = facets(leading_pair_graph(d), limits);
    const bool pp = has_projection_property(d);
    if (pp && !summary.pure)
        throw Error(ErrorKind::Internal, "initial complex of a projection-property diagram is not pure: " + d.key());
    InvariantsReport r = complex_invariants(summary);
    r.groebner_guarantee = pp;
    if (summary_out) *summary_out = summary;
    return r;
}

// ---------------------------------------------------------------------------
// Hilbert function of the toric ring

struct HilbertTable {
    std::vector<BigInt> values;  ///< H(0), ..., H(L)
};

namespace detail {

inline std::string exponent_key(const std::vector<std::uint8_t>& v) { return {v.begin(), v.end()}; }

}  // namespace detail

/// H(l) = number of distinct monomials among products of l generators.
inline HilbertTable hilbert_function(const Diagram& d, int max_degree, const OracleLimits& limits = {}) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    if (max_degree < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
    const int a = d.length(), b = d.width(), c = d.height();
    const auto pts = d.points();
    HilbertTable table;
    std::unordered_set<std::string> level{std::string(static_cast<std::size_t>(a + b + c), '\0')};
    table.values.emplace_back(1);
    for (int l = 1; l <= max_degree; ++l) {
        std::unordered_set<std::string> next;
        for (const auto& s : level)
            for (const auto& p : pts) {
                std::string t = s;
                ++t[static_cast<std::size_t>(p.i - 1)];
                ++t[static_cast<std::size_t>(a + p.j - 1)];
                ++t[static_cast<std::size_t>(a + b + p.k - 1)];
                next.insert(std::move(t));
                if (next.size() > limits.max_hilbert_set)
                    throw Error(ErrorKind::TooLarge, "Hilbert function in degree " + std::to_string(l) +
                                                         " exceeds " + std::to_string(limits.max_hilbert_set));
            }
        if (l >= 255) throw Error(ErrorKind::TooLarge, "degree too large for byte exponents");
        level = std::move(next);
        table.values.emplace_back(level.size());
    }
    return table;
}

struct HilbertFit {
    InvariantsReport report;
    HilbertTable table;
    std::vector<BigInt> numerator;  ///< h-polynomial coefficients (trailing zeros trimmed)
    int degree_used = 0;
};

/// Default degree bound: dimension plus the regularity bound plus slack.
inline int default_hilbert_degree(const Diagram& d) {
    const int a = d.length(), b = d.width(), c = d.height();
    const int mu = std::min({a + b, a + c, b + c});
    return (a + b + c - 2) + (mu - 2) + 2;
}

/// Recovers the Hilbert series numerator from H(0..L) and reads off
/// e = P(1) and reg = deg P. Requires the numerator to have vanished for at
/// least the two highest degrees computed.
inline HilbertFit hilbert_invariants(const Diagram& d, std::optional<int> max_degree = std::nullopt,
                                     const OracleLimits& limits = {}) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    const int dim = d.length() + d.width() + d.height() - 2;
    const int L = max_degree.value_or(default_hilbert_degree(d));
    HilbertFit fit;
    fit.degree_used = L;
    fit.table = hilbert_function(d, L, limits);
    const auto& H = fit.table.values;

    std::vector<BigInt> p(static_cast<std::size_t>(L + 1), 0);
    for (int k = 0; k <= L; ++k)
        for (int i = 0; i <= std::min(k, dim); ++i) {
            BigInt term = binomial(dim, i) * H[static_cast<std::size_t>(k - i)];
            if (i % 2) p[k] -= term;
            else p[k] += term;
        }
    const int r = last_nonzero(p);
    if (L - r < 2)
        throw Error(ErrorKind::InsufficientDegree, "Hilbert numerator has not stabilised by degree " + std::to_string(L));
    p.resize(static_cast<std::size_t>(r + 1));

    // (dim-1)-st difference at the top degree must equal P(1)
    BigInt e = std::accumulate(p.begin(), p.end(), BigInt{0});
    BigInt diff = 0;
    for (int i = 0; i <= dim - 1; ++i) {
        BigInt term = binomial(dim - 1, i) * H[static_cast<std::size_t>(L - i)];
        if (i % 2) diff -= term;
        else diff += term;
    }
    if (dim >= 1 && L >= dim - 1 && diff != e)
        throw Error(ErrorKind::InsufficientDegree, "finite differences have not stabilised by degree " + std::to_string(L));

    fit.numerator = p;
    fit.report.ring_dim = dim;
    fit.report.mult = e;
    fit.report.reg = r;
    fit.report.red_num = r;
    fit.report.source = Source::oracle_hilbert;
    fit.report.groebner_guarantee = true;
    return fit;
}

// ---------------------------------------------------------------------------
// Bounded-degree Groebner basis check of the 2-minors

/// A monomial in the T variables, as a sorted multiset of points.
using TMonomial = std::vector<Point>;

struct GbWitness {
    TMonomial first;
    TMonomial second;
    int degree = 0;
};

struct GbReport {
    bool holds = true;              ///< every equal-image binomial reduces to 0
    std::optional<GbWitness> witness;  ///< lowest-degree irreducible binomial
    std::vector<int> failing_degrees;
    std::map<int, GbWitness> witness_by_degree;
    /// Every equal-image fiber is connected by quadric moves (the 2-minors
    /// generate the toric ideal up to the checked degree).
    bool generated = true;
    std::optional<GbWitness> generator_witness;
    /// Degrees in which the toric ideal needs a minimal generator: some fiber
    /// splits into several classes under "shares a variable".
    std::vector<int> minimal_generator_degrees;
    std::map<int, GbWitness> minimal_generator_by_degree;
    std::vector<std::size_t> monomials_per_degree;
};

/// Repeatedly replaces a lead pair of a 2-minor by its trail pair.
inline TMonomial reduce_monomial(TMonomial m, const std::vector<Binomial2Minor>& minors) {
    std::map<std::pair<Point, Point>, std::pair<Point, Point>> rule;
    for (const auto& b : minors) rule.emplace(b.lead, b.trail);
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(m.begin(), m.end());
        for (std::size_t x = 0; x < m.size() && !changed; ++x)
            for (std::size_t y = x + 1; y < m.size() && !changed; ++y) {
                auto it = rule.find({m[x], m[y]});
                if (it == rule.end()) continue;
                m[x] = it->second.first;
                m[y] = it->second.second;
                changed = true;
            }
    }
    std::sort(m.begin(), m.end());
    return m;
}

namespace detail {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t x, std::uint32_t y) { parent[find(x)] = find(y); }
};

}  // namespace detail

/// For each degree l <= max_degree, groups the degree-l monomials in the T
/// variables by their image x^. y^. z^. and checks that each group holds
/// exactly one monomial not divisible by a leading pair. Also checks that each
/// group is connected by the quadric moves.
inline GbReport toric_gb_check(const Diagram& d, int max_degree, const OracleLimits& limits = {}) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    const auto pts = d.points();
    const int n = static_cast<int>(pts.size());
    const int a = d.length(), b = d.width();
    const auto minors = two_minors(pts);
    const PointIndex index(pts);

    std::vector<std::vector<char>> lead_edge(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<std::vector<std::pair<int, int>>>> moves(
        static_cast<std::size_t>(n), std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(n)));
    for (const auto& m : minors) {
        const int l1 = index.find(m.lead.first), l2 = index.find(m.lead.second);
        const int t1 = index.find(m.trail.first), t2 = index.find(m.trail.second);
        lead_edge[l1][l2] = lead_edge[l2][l1] = 1;
        moves[l1][l2].emplace_back(t1, t2);
        moves[t1][t2].emplace_back(l1, l2);
    }

    GbReport report;
    auto to_monomial = [&](const std::vector<int>& idx) {
        TMonomial m;
        for (int v : idx) m.push_back(pts[static_cast<std::size_t>(v)]);
        return m;
    };

    for (int l = 1; l <= max_degree; ++l) {
        // nondecreasing index sequences of length l
        std::vector<std::vector<int>> monomials;
        std::vector<int> cur(static_cast<std::size_t>(l), 0);
        std::size_t count = 0;
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == l) {
                if (++count > limits.max_monomials)
                    throw Error(ErrorKind::TooLarge, "degree " + std::to_string(l) + " has too many monomials");
                monomials.push_back(cur);
                return;
            }
            for (int v = from; v < n; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, v);
            }
        };
        rec(rec, 0, 0);
        report.monomials_per_degree.push_back(monomials.size());

        std::map<std::vector<int>, std::uint32_t> id_of;
        for (std::uint32_t id = 0; id < monomials.size(); ++id) id_of.emplace(monomials[id], id);

        std::unordered_map<std::string, std::vector<std::uint32_t>> fibers;
        for (std::uint32_t id = 0; id < monomials.size(); ++id) {
            std::string key(static_cast<std::size_t>(a + b + d.height()), '\0');
            for (int v : monomials[id]) {
                const Point& p = pts[static_cast<std::size_t>(v)];
                ++key[static_cast<std::size_t>(p.i - 1)];
                ++key[static_cast<std::size_t>(a + p.j - 1)];
                ++key[static_cast<std::size_t>(a + b + p.k - 1)];
            }
            fibers[key].push_back(id);
        }

        detail::UnionFind uf(monomials.size());
        for (std::uint32_t id = 0; id < monomials.size(); ++id) {
            const auto& m = monomials[id];
            for (int x = 0; x < l; ++x)
                for (int y = x + 1; y < l; ++y) {
                    if (m[x] == m[y]) continue;
                    for (auto [p1, p2] : moves[m[x]][m[y]]) {
                        auto next = m;
                        next[x] = p1;
                        next[y] = p2;
                        std::sort(next.begin(), next.end());
                        uf.unite(id, id_of.at(next));
                    }
                }
        }

        // deterministic iteration: order fibers by their smallest monomial id
        std::vector<const std::vector<std::uint32_t>*> ordered;
        for (const auto& [key, ids] : fibers) ordered.push_back(&ids);
        std::sort(ordered.begin(), ordered.end(), [](auto* x, auto* y) { return x->front() < y->front(); });

        bool degree_fails = false;
        for (const auto* ids : ordered) {
            std::vector<std::uint32_t> standard;
            for (auto id : *ids) {
                const auto& m = monomials[id];
                bool divisible = false;
                for (int x = 0; x < l && !divisible; ++x)
                    for (int y = x + 1; y < l && !divisible; ++y)
                        if (m[x] != m[y] && lead_edge[m[x]][m[y]]) divisible = true;
                if (!divisible) standard.push_back(id);
            }
            if (standard.size() >= 2) {
                degree_fails = true;
                report.witness_by_degree.try_emplace(
                    l, GbWitness{to_monomial(monomials[standard[0]]), to_monomial(monomials[standard[1]]), l});
            }
            if (l >= 2 && ids->size() >= 2 && !report.minimal_generator_by_degree.count(l)) {
                detail::UnionFind shared(ids->size());
                std::vector<int> owner(static_cast<std::size_t>(n), -1);
                for (std::uint32_t x = 0; x < ids->size(); ++x)
                    for (int v : monomials[(*ids)[x]]) {
                        int& o = owner[static_cast<std::size_t>(v)];
                        if (o < 0) o = static_cast<int>(x);
                        else shared.unite(x, static_cast<std::uint32_t>(o));
                    }
                for (std::uint32_t x = 1; x < ids->size(); ++x)
                    if (shared.find(x) != shared.find(0)) {
                        report.minimal_generator_by_degree.emplace(
                            l, GbWitness{to_monomial(monomials[(*ids)[0]]), to_monomial(monomials[(*ids)[x]]), l});
                        report.minimal_generator_degrees.push_back(l);
                        break;
                    }
            }
            const auto root = uf.find(ids->front());
            for (auto id : *ids)
                if (uf.find(id) != root) {
                    if (!report.generator_witness)
                        report.generator_witness =
                            GbWitness{to_monomial(monomials[ids->front()]), to_monomial(monomials[id]), l};
                    report.generated = false;
                    break;
                }
        }
        if (degree_fails) {
            report.holds = false;
            report.failing_degrees.push_back(l);
            if (!report.witness) report.witness = report.witness_by_degree.at(l);
        }
    }
    return report;
}

}  // namespace ferrers
