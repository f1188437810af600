#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/engine.hpp"
#include "ferrers/invariants.hpp"
#include "ferrers/oracle.hpp"

namespace ferrers {

/// (a+b+c-3)! / ((a-1)!(b-1)!(c-1)!)
inline BigInt rect_multiplicity(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw Error(ErrorKind::InvalidInput, "box dimensions must be positive");
    return binomial(a + b + c - 3, a - 1) * binomial(b + c - 2, b - 1);
}

inline int rect_regularity(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw Error(ErrorKind::InvalidInput, "box dimensions must be positive");
    std::array<int, 3> d{a, b, c};
    std::sort(d.begin(), d.end());
    return d[0] + d[1] - 2;
}

/// The two printed guards of the 2D regularity formula can both hold, or
/// neither; such inputs are reported, not resolved.
struct Regularity2D {
    enum class Kind { exact, ambiguous, gap };
    Kind kind = Kind::exact;
    int value = 0;                  ///< exact only
    std::vector<int> candidates;    ///< ambiguous: {s-1, min{j-1 : lambda_j = 2}}

    [[nodiscard]] bool is_exact() const noexcept { return kind == Kind::exact; }
};

inline const char* to_string(Regularity2D::Kind k) {
    switch (k) {
        case Regularity2D::Kind::exact: return "exact";
        case Regularity2D::Kind::ambiguous: return "ambiguous";
        case Regularity2D::Kind::gap: return "gap";
    }
    return "?";
}

/// `printed` takes the guards and the minimum over all j literally. `adopted`
/// takes the minimum over j >= 2 and returns 0 whenever s <= 1 (no 2-minor
/// exists); the printed reading gives 0 for lambda = (2,2,...), where the
/// 2x2 square alone already forces regularity 1.
enum class Reading2D { printed, adopted };

inline Regularity2D ferrers2d_regularity(const Partition& lambda, Reading2D reading = Reading2D::adopted) {
    const std::size_t n = lambda.length();
    std::size_t s = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (lambda(j) >= 2) s = j;
    const std::size_t trivial_below = reading == Reading2D::adopted ? 2 : 1;
    if (n == 1 || s < trivial_below) return {Regularity2D::Kind::exact, 0, {}};

    std::optional<int> first_two;
    for (std::size_t j = reading == Reading2D::adopted ? 2 : 1; j <= n; ++j)
        if (lambda(j) == 2) {
            first_two = static_cast<int>(j) - 1;
            break;
        }
    const bool wide = lambda(2) >= 3;
    const bool ends_at_two = lambda(s) == 2;
    if (wide && !ends_at_two) return {Regularity2D::Kind::exact, static_cast<int>(s) - 1, {}};
    if (wide && ends_at_two) return {Regularity2D::Kind::ambiguous, 0, {static_cast<int>(s) - 1, *first_two}};
    if (ends_at_two && first_two) return {Regularity2D::Kind::exact, *first_two, {}};
    // lambda_2 <= 2 and lambda_s >= 3 forces s = 1: neither guard applies
    return {Regularity2D::Kind::gap, 0, {}};
}

/// Nested sum with j_t running from lambda_2 - lambda_{t+2} + 1 up to
/// j_{t+1} (j_{n-1} = lambda_2); n = 2 gives lambda_2 and n = 1 gives 1.
inline BigInt ferrers2d_multiplicity(const Partition& lambda) {
    const std::size_t n = lambda.length();
    if (n == 1) return 1;
    const int top = lambda(2);
    if (n == 2) return top;
    // level[x] = value of the inner sums with the current variable fixed to x
    std::vector<BigInt> level(static_cast<std::size_t>(top) + 1, 0);
    const int lo1 = top - lambda(3) + 1;
    for (int x = std::max(lo1, 0); x <= top; ++x) level[static_cast<std::size_t>(x)] = x;
    for (std::size_t t = 2; t <= n - 2; ++t) {
        const int lo_inner = top - lambda(t + 1) + 1;
        const int lo = top - lambda(t + 2) + 1;
        std::vector<BigInt> next(level.size(), 0);
        BigInt running = 0;
        for (int x = 0; x <= top; ++x) {
            if (x >= lo_inner) running += level[static_cast<std::size_t>(x)];
            if (x >= lo) next[static_cast<std::size_t>(x)] = running;
        }
        level = std::move(next);
    }
    BigInt total = 0;
    for (int x = top - lambda(n) + 1; x <= top; ++x)
        if (x >= 0) total += level[static_cast<std::size_t>(x)];
    return total;
}

/// mu_D - 2, the regularity bound.
inline int mu_bound(const Diagram& d) {
    const auto [a, b, c] = essential_dims(d);
    return std::min({a + b, a + c, b + c}) - 2;
}

struct SegreFactor {
    int dim = 1;
    int reg = 0;
    BigInt mult = 1;

    friend bool operator==(const SegreFactor&, const SegreFactor&) = default;
};

inline SegreFactor segre_combine(std::span<const SegreFactor> factors) {
    if (factors.empty()) throw Error(ErrorKind::InvalidInput, "Segre product of no factors");
    bool any_wide = false;
    for (const auto& f : factors) {
        if (f.dim < 1) throw Error(ErrorKind::InvalidInput, "Segre factors need positive dimension");
        any_wide = any_wide || f.dim >= 2;
    }
    if (any_wide)
        for (const auto& f : factors)
            if (f.reg >= f.dim)
                throw Error(ErrorKind::HypothesisFailed, "factor with reg " + std::to_string(f.reg) +
                                                             " >= dim " + std::to_string(f.dim));
    SegreFactor acc = factors.front();
    for (std::size_t n = 1; n < factors.size(); ++n) {
        const auto& f = factors[n];
        acc.mult = binomial(acc.dim + f.dim - 2, acc.dim - 1) * acc.mult * f.mult;
        acc.dim = acc.dim + f.dim - 1;
    }
    if (!any_wide) {
        acc.reg = 0;
        for (const auto& f : factors) acc.reg = std::max(acc.reg, f.reg);
    } else {
        int slack = 0;
        for (const auto& f : factors) slack = std::max(slack, f.dim - f.reg);
        acc.reg = acc.dim - slack;
    }
    return acc;
}

inline int reduction_number(const Diagram& d, Engine& engine) {
    const auto r = engine.invariants(d);
    if (d.size() == static_cast<std::size_t>(d.length()) * d.width() * d.height()) {
        const int box = rect_regularity(d.length(), d.width(), d.height());
        if (box != r.red_num)
            throw Error(ErrorKind::Internal, "box reduction number " + std::to_string(box) + " differs from engine " +
                                                 std::to_string(r.red_num));
    }
    return r.red_num;
}

inline int reduction_number(const Diagram& d) {
    Engine engine;
    return reduction_number(d, engine);
}

struct Bound {
    int reg = 0;
    BigInt mult = 0;
};

struct ProfileBounds {
    Bound profile;   ///< via the xy-profile
    Bound box;       ///< via the bounding box
    Bound best;      ///< componentwise minimum
    Partition profile_partition;
    Source profile_source = Source::closed_form;  ///< engine when the 2D formula is not exact
};

inline ProfileBounds profile_bounds(const Diagram& d, Engine& engine) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
    if (!has_strong_projection_property(d))
        throw Error(ErrorKind::UnsupportedDiagram, "profile bounds need the strong projection property");
    const auto [a, b, c] = essential_dims(d);
    ProfileBounds out{{}, {}, {}, profile(d, Plane::xy), Source::closed_form};

    int p_reg = 0;
    BigInt p_mult;
    const auto r2 = ferrers2d_regularity(out.profile_partition);
    if (r2.is_exact()) {
        p_reg = r2.value;
        p_mult = ferrers2d_multiplicity(out.profile_partition);
    } else {
        const auto r = engine.invariants(diagram_from_partition(out.profile_partition));
        p_reg = r.reg;
        p_mult = r.mult;
        out.profile_source = Source::engine;
    }
    out.profile.reg = a + b + c - 2 - std::max(a + b - 1 - p_reg, c);
    out.profile.mult = binomial(a + b + c - 3, c - 1) * p_mult;
    out.box.reg = rect_regularity(a, b, c);
    out.box.mult = rect_multiplicity(a, b, c);
    out.best.reg = std::min(out.profile.reg, out.box.reg);
    out.best.mult = std::min(out.profile.mult, out.box.mult);
    return out;
}

inline ProfileBounds profile_bounds(const Diagram& d) {
    Engine engine;
    return profile_bounds(d, engine);
}

}  // namespace ferrers
