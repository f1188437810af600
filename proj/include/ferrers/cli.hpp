#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ferrers/closed_forms.hpp"
#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/engine.hpp"
#include "ferrers/enumerate.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/minors.hpp"
#include "ferrers/oracle.hpp"

/// Command implementations behind the ferrers command-line tool. Each command
/// returns an exit code and its stdout payload; argument parsing lives in the
/// tool itself.
namespace ferrers::cli {

enum ExitCode : int { ok = 0, internal_error = 1, input_error = 2, disagreement = 3, unsupported = 4 };

enum class Format { json, csv };
enum class Filter { all, pp, strong };

struct Options {
    bool oracle = false;
    bool hilbert = false;
    bool bounds = false;
    OrderFlavor order = OrderFlavor::induction;
    std::optional<long long> limit;
    std::uint64_t seed = 20240601;
    Format format = Format::json;
    Filter filter = Filter::pp;
    bool paired = false;
    std::optional<std::size_t> sample;
    std::size_t cache_capacity = 0;
    std::size_t oracle_vertices = 24;
    int degree = 4;
};

struct Outcome {
    int exit_code = ok;
    std::string output;
};

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
        case ErrorKind::NotFerrers:
        case ErrorKind::NotInDiagram:
        case ErrorKind::NotInLayer:
        case ErrorKind::NotNormal:
            return input_error;
        case ErrorKind::UnsupportedDiagram:
        case ErrorKind::TooLarge:
        case ErrorKind::InsufficientDegree:
        case ErrorKind::HypothesisFailed:
            return unsupported;
        case ErrorKind::LinkMismatch:
        case ErrorKind::Internal:
            return internal_error;
    }
    return internal_error;
}

inline Outcome error_outcome(const Error& e) {
    Json j{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    return {exit_code_for(e.kind()), j.dump(2)};
}

/// Runs a command body and converts library errors into exit codes.
template <class Body>
Outcome guarded(Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return error_outcome(e);
    } catch (const std::exception& e) {
        return error_outcome(Error(ErrorKind::Internal, e.what()));
    }
}

namespace detail {

inline OracleLimits limits_of(const Options& o) {
    OracleLimits l;
    l.max_vertices = o.oracle_vertices;
    return l;
}

inline EngineOptions engine_options(const Options& o) {
    EngineOptions e;
    e.cache_capacity = o.cache_capacity;
    return e;
}

inline double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline Json properties(const Diagram& d) {
    const auto [a, b, c] = essential_dims(d);
    return Json{{"points", d.size()},
                {"essential_dims", {a, b, c}},
                {"projection_property", has_projection_property(d)},
                {"strong_projection_property", has_strong_projection_property(d)},
                {"mu_bound", mu_bound(d)}};
}

inline Json bounds_json(const Diagram& d, Engine& engine) {
    Json j{{"mu_bound", mu_bound(d)}};
    if (!has_strong_projection_property(d)) {
        j["profile"] = "skipped: strong projection property fails";
        return j;
    }
    const auto pb = profile_bounds(d, engine);
    j["profile_partition"] = pb.profile_partition.parts();
    j["profile_source"] = to_string(pb.profile_source);
    j["profile"] = {{"reg", pb.profile.reg}, {"mult", to_json(pb.profile.mult)}};
    j["box"] = {{"reg", pb.box.reg}, {"mult", to_json(pb.box.mult)}};
    j["best"] = {{"reg", pb.best.reg}, {"mult", to_json(pb.best.mult)}};
    return j;
}

/// Invariants from the engine when the projection property holds, else from
/// the facet oracle (flagged as lacking the Groebner guarantee).
inline InvariantsReport best_invariants(const Diagram& d, Engine& engine, const OracleLimits& limits,
                                        OrderFlavor order = OrderFlavor::induction) {
    if (has_projection_property(d)) return engine.invariants(d, order);
    return oracle_invariants(d, limits);
}

}  // namespace detail

inline Outcome cmd_check(const Diagram& d) {
    return guarded([&] {
        Json j{{"diagram", to_json(d)}, {"properties", detail::properties(d)}};
        j["xy_profile"] = profile(d, Plane::xy).parts();
        j["xz_profile"] = profile(d, Plane::xz).parts();
        return Outcome{ok, j.dump(2)};
    });
}

inline Outcome cmd_invariants(const Diagram& d, const Options& opt) {
    return guarded([&] {
        const auto t0 = std::chrono::steady_clock::now();
        Engine engine(detail::engine_options(opt));
        const auto limits = detail::limits_of(opt);
        Json j{{"diagram", to_json(d)}, {"properties", detail::properties(d)}};
        std::optional<InvariantsReport> primary;
        if (has_projection_property(d)) {
            primary = engine.invariants(d, opt.order);
            j["engine"] = to_json(*primary);
            j["engine_stats"] = {{"states", engine.stats().states.load()},
                                 {"cache_hits", engine.stats().cache_hits.load()},
                                 {"fallbacks", engine.stats().fallbacks.load()}};
        } else if (!opt.oracle && !opt.hilbert) {
            throw Error(ErrorKind::UnsupportedDiagram,
                        "projection property fails; rerun with --oracle or --hilbert for brute-force values");
        }

        Json checks = Json::object();
        bool disagree = false;
        auto cross = [&](const char* name, const InvariantsReport& r) {
            j[name] = to_json(r);
            if (!primary) {
                primary = r;
                checks[name] = "skipped";
                return;
            }
            const bool same = primary->same_values(r);
            checks[name] = same ? "agree" : "disagree";
            disagree = disagree || !same;
        };
        if (opt.oracle) cross("oracle_facets", oracle_invariants(d, limits));
        if (opt.hilbert) cross("oracle_hilbert", hilbert_invariants(d, std::nullopt, limits).report);
        j["cross_check"] = checks;
        if (opt.bounds) j["bounds"] = detail::bounds_json(d, engine);
        j["millis"] = detail::millis_since(t0);
        if (disagree) j["reproduction"] = to_json(d);
        return Outcome{disagree ? disagreement : ok, j.dump(2)};
    });
}

inline Outcome cmd_gens(const Diagram& d) {
    return guarded([&] {
        const auto pts = monomial_generators(d);
        Json minors = Json::array();
        for (const auto& m : two_minors(pts)) minors.push_back(to_json(m));
        Json j{{"monomials", to_json(pts)}, {"minors", minors}};
        return Outcome{ok, j.dump(2)};
    });
}

inline Outcome cmd_oracle(const Diagram& d, const Options& opt) {
    return guarded([&] {
        const auto limits = detail::limits_of(opt);
        ComplexSummary summary;
        const auto r = oracle_invariants(d, limits, &summary);
        Json j{{"diagram", to_json(d)}, {"invariants", to_json(r)}};
        const auto show = static_cast<std::size_t>(opt.limit.value_or(1000));
        Json cs{{"facet_count", summary.facets.size()},
                {"pure", summary.pure},
                {"complex_dim", summary.complex_dim},
                {"f_vector", to_json(summary.f_vector)},
                {"h_vector", to_json(summary.h_vector)}};
        if (summary.facets.size() <= show) {
            Json fs = Json::array();
            for (const auto& f : summary.facets) fs.push_back(to_json(f));
            cs["facets"] = fs;
        } else {
            cs["facets"] = "suppressed: more than " + std::to_string(show);
        }
        j["complex"] = cs;
        if (opt.hilbert) {
            const auto fit = hilbert_invariants(d, std::nullopt, limits);
            j["hilbert"] = {{"values", to_json(fit.table.values)},
                            {"numerator", to_json(fit.numerator)},
                            {"degree_used", fit.degree_used},
                            {"invariants", to_json(fit.report)}};
            if (!fit.report.same_values(r)) return Outcome{disagreement, j.dump(2)};
        }
        return Outcome{ok, j.dump(2)};
    });
}

/// Link multiplicities at first-layer points normal in both diagrams.
inline Json link_diagnostic(const Diagram& d1, const Diagram& d2, Engine& engine) {
    Json rows = Json::array();
    if (!has_projection_property(d1) || !has_projection_property(d2)) return rows;
    const auto o1 = induction_order(d1);
    const auto o2 = induction_order(d2);
    for (const auto& u : o1.points) {
        if (!o2.position(u)) continue;
        if (classify_point(d1, o1, u) != PointClass::normal || classify_point(d2, o2, u) != PointClass::normal)
            continue;
        const auto l1 = engine.link_invariants({d1, u, OrderFlavor::induction});
        const auto l2 = engine.link_invariants({d2, u, OrderFlavor::induction});
        rows.push_back({{"u", to_json(u)},
                        {"link_mult", {to_json(l1.mult), to_json(l2.mult)}},
                        {"link_reg", {l1.reg, l2.reg}},
                        {"mult_increases", l1.mult <= l2.mult}});
    }
    return rows;
}

inline Outcome cmd_compare(const Diagram& d1, const Diagram& d2, const Options& opt) {
    return guarded([&] {
        if (!d1.subset_of(d2)) throw Error(ErrorKind::InvalidInput, "first diagram is not contained in the second");
        Engine engine(detail::engine_options(opt));
        const auto limits = detail::limits_of(opt);
        const auto r1 = detail::best_invariants(d1, engine, limits);
        const auto r2 = detail::best_invariants(d2, engine, limits);
        const bool hypotheses = has_strong_projection_property(d1) && has_strong_projection_property(d2);
        const bool reg_ok = r1.reg <= r2.reg;
        const bool mult_ok = r1.mult <= r2.mult;
        Json j{{"first", {{"diagram", to_json(d1)}, {"properties", detail::properties(d1)}, {"invariants", to_json(r1)}}},
               {"second", {{"diagram", to_json(d2)}, {"properties", detail::properties(d2)}, {"invariants", to_json(r2)}}},
               {"reg_monotone", reg_ok},
               {"mult_monotone", mult_ok},
               {"hypotheses_hold", hypotheses},
               {"link_diagnostic", link_diagnostic(d1, d2, engine)}};
        if (!hypotheses) j["note"] = "strong projection property fails; comparison is informational";
        const bool violation = hypotheses && (!reg_ok || !mult_ok);
        return Outcome{violation ? disagreement : ok, j.dump(2)};
    });
}

struct Box {
    int a = 1, b = 1, c = 1;
};

namespace detail {

inline bool passes(const Diagram& d, Filter f) {
    switch (f) {
        case Filter::all: return true;
        case Filter::pp: return has_projection_property(d);
        case Filter::strong: return has_strong_projection_property(d);
    }
    return false;
}

inline std::vector<Diagram> collect(const Box& box, const Options& opt) {
    const double estimate = estimated_diagram_count(box.a, box.b, box.c);
    if (opt.sample) {
        std::mt19937_64 rng(opt.seed);
        std::vector<Diagram> out;
        for (std::size_t n = 0; n < *opt.sample; ++n) out.push_back(random_diagram(box.a, box.b, box.c, rng));
        return out;
    }
    const double cap = static_cast<double>(opt.limit.value_or(2'000'000));
    if (estimate > cap)
        throw Error(ErrorKind::TooLarge, "box holds about " + std::to_string(static_cast<long long>(estimate)) +
                                             " diagrams; the limit is " + std::to_string(static_cast<long long>(cap)));
    return all_diagrams(box.a, box.b, box.c);
}

}  // namespace detail

inline Outcome cmd_sweep(const Box& box, const Options& opt) {
    return guarded([&] {
        const auto diagrams = detail::collect(box, opt);
        Engine engine(detail::engine_options(opt));
        const auto limits = detail::limits_of(opt);
        struct Row {
            Diagram d;
            InvariantsReport r;
            std::string check;
        };
        std::vector<Row> rows;
        bool disagree = false;
        for (const auto& d : diagrams) {
            if (!detail::passes(d, opt.filter)) continue;
            Row row{d, detail::best_invariants(d, engine, limits, opt.order), "skipped"};
            if (opt.oracle && row.r.source == Source::engine) {
                try {
                    const bool same = row.r.same_values(oracle_invariants(d, limits));
                    row.check = same ? "agree" : "disagree";
                    disagree = disagree || !same;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::TooLarge) throw;
                }
            }
            rows.push_back(std::move(row));
        }

        Json pairs = Json::object();
        bool violation = false;
        if (opt.paired) {
            std::size_t checked = 0;
            Json bad = Json::array();
            for (const auto& x : rows)
                for (const auto& y : rows) {
                    if (&x == &y || !has_strong_projection_property(x.d) || !has_strong_projection_property(y.d) ||
                        !x.d.subset_of(y.d))
                        continue;
                    ++checked;
                    if (x.r.reg > y.r.reg || x.r.mult > y.r.mult)
                        bad.push_back({{"first", to_json(x.d)}, {"second", to_json(y.d)}});
                }
            violation = !bad.empty();
            pairs = {{"nested_pairs", checked}, {"violations", bad}};
        }

        std::ostringstream out;
        if (opt.format == Format::csv) {
            out << "layers,points,a,b,c,pp,strong_pp,ring_dim,reg,mult,source,cross_check\n";
            for (const auto& row : rows) {
                const auto [a, b, c] = essential_dims(row.d);
                out << '"' << row.d.key() << '"' << ',' << row.d.size() << ',' << a << ',' << b << ',' << c << ','
                    << has_projection_property(row.d) << ',' << has_strong_projection_property(row.d) << ','
                    << row.r.ring_dim << ',' << row.r.reg << ',' << row.r.mult << ',' << to_string(row.r.source)
                    << ',' << row.check << '\n';
            }
        } else {
            Json arr = Json::array();
            for (const auto& row : rows)
                arr.push_back({{"diagram", to_json(row.d)}, {"invariants", to_json(row.r)}, {"cross_check", row.check}});
            Json j{{"box", {box.a, box.b, box.c}}, {"count", rows.size()}, {"rows", arr}};
            if (opt.paired) j["monotonicity"] = pairs;
            out << j.dump(2);
        }
        return Outcome{disagree || violation ? disagreement : ok, out.str()};
    });
}

/// Looks for projection-property diagrams whose multiplicity exceeds the
/// trinomial of their bounding box.
inline Outcome cmd_search(const Box& box, const Options& opt) {
    return guarded([&] {
        const auto diagrams = detail::collect(box, opt);
        Engine engine(detail::engine_options(opt));
        const auto limits = detail::limits_of(opt);
        std::size_t tested = 0;
        Json found = Json::array();
        for (const auto& d : diagrams) {
            if (!has_projection_property(d)) continue;
            ++tested;
            const auto r = engine.invariants(d);
            const auto [a, b, c] = essential_dims(d);
            const BigInt cap = rect_multiplicity(a, b, c);
            if (r.mult <= cap) continue;
            Json row{{"diagram", to_json(d)}, {"mult", to_json(r.mult)}, {"trinomial", to_json(cap)}};
            try {
                row["oracle"] = to_json(oracle_invariants(d, limits));
            } catch (const Error&) {
                row["oracle"] = to_json(hilbert_invariants(d, std::nullopt, limits).report);
            }
            found.push_back(row);
        }
        Json j{{"box", {box.a, box.b, box.c}}, {"tested", tested}, {"counterexamples", found}};
        j["summary"] = found.empty() ? "no counterexample found" : "counterexample candidates found";
        return Outcome{ok, j.dump(2)};
    });
}

inline Json witness_json(const GbWitness& w) {
    return Json{{"degree", w.degree}, {"first", to_json(w.first)}, {"second", to_json(w.second)}};
}

inline Outcome cmd_gb_check(const Diagram& d, const Options& opt) {
    return guarded([&] {
        const auto r = toric_gb_check(d, opt.degree, detail::limits_of(opt));
        Json j{{"diagram", to_json(d)},
               {"max_degree", opt.degree},
               {"projection_property", has_projection_property(d)},
               {"holds", r.holds},
               {"failing_degrees", r.failing_degrees},
               {"generated_by_quadrics", r.generated},
               {"minimal_generator_degrees", r.minimal_generator_degrees},
               {"monomials_per_degree", r.monomials_per_degree}};
        Json ws = Json::object();
        for (const auto& [deg, w] : r.witness_by_degree) ws[std::to_string(deg)] = witness_json(w);
        j["witnesses"] = ws;
        Json gs = Json::object();
        for (const auto& [deg, w] : r.minimal_generator_by_degree) gs[std::to_string(deg)] = witness_json(w);
        j["minimal_generators"] = gs;
        return Outcome{ok, j.dump(2)};
    });
}

}  // namespace ferrers::cli
