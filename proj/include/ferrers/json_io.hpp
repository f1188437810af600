#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/invariants.hpp"
#include "ferrers/minors.hpp"
#include "ferrers/oracle.hpp"

namespace ferrers {

using Json = nlohmann::json;

inline Json to_json(const Point& p) { return Json::array({p.i, p.j, p.k}); }

inline Json to_json(std::span<const Point> pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(to_json(p));
    return out;
}

/// Integers that fit in 64 bits are emitted as numbers, larger ones as
/// decimal strings.
inline Json to_json(const BigInt& n) {
    if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
    if (n < 0 && n >= std::numeric_limits<std::int64_t>::min()) return n.convert_to<std::int64_t>();
    return n.str();
}

inline Json to_json(const std::vector<BigInt>& v) {
    Json out = Json::array();
    for (const auto& n : v) out.push_back(to_json(n));
    return out;
}

inline Json to_json(const Diagram& d) { return Json{{"layers", d.layers()}}; }

inline Json to_json(const InvariantsReport& r) {
    return Json{{"ring_dim", r.ring_dim},
                {"reg", r.reg},
                {"mult", to_json(r.mult)},
                {"red_num", r.red_num},
                {"source", to_string(r.source)},
                {"groebner_guarantee", r.groebner_guarantee}};
}

inline Json to_json(const Binomial2Minor& m) {
    const std::vector<Point> lead{m.lead.first, m.lead.second};
    const std::vector<Point> trail{m.trail.first, m.trail.second};
    Json dirs = Json::array();
    if (m.directions & axis_x) dirs.push_back("x");
    if (m.directions & axis_y) dirs.push_back("y");
    if (m.directions & axis_z) dirs.push_back("z");
    return Json{{"lead", to_json(lead)}, {"trail", to_json(trail)}, {"directions", dirs}};
}

namespace detail {

inline int positive_int(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw Error(ErrorKind::InvalidInput, where + " must be an integer");
    const auto n = v.get<std::int64_t>();
    if (n < 1 || n > 255) throw Error(ErrorKind::InvalidInput, where + " must lie in [1, 255]");
    return static_cast<int>(n);
}

inline Point point_from_json(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) throw Error(ErrorKind::InvalidInput, where + " must be a triple [i,j,k]");
    return {positive_int(v[0], where), positive_int(v[1], where), positive_int(v[2], where)};
}

}  // namespace detail

inline Point parse_point(const Json& v) { return detail::point_from_json(v, "point"); }

/// Accepts {"layers": [[...],...]} or {"generators": [[i,j,k],...]}, exactly
/// one of the two keys.
inline Diagram diagram_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "diagram JSON must be an object");
    const bool has_layers = j.contains("layers");
    const bool has_gens = j.contains("generators");
    if (has_layers == has_gens || j.size() != 1)
        throw Error(ErrorKind::InvalidInput, "diagram JSON needs exactly one of \"layers\" or \"generators\"");
    if (has_layers) {
        const auto& raw = j.at("layers");
        if (!raw.is_array()) throw Error(ErrorKind::InvalidInput, "\"layers\" must be an array");
        std::vector<Diagram::Layer> layers;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (!raw[i].is_array()) throw Error(ErrorKind::InvalidInput, "each layer must be an array");
            Diagram::Layer layer;
            for (const auto& h : raw[i]) layer.push_back(detail::positive_int(h, "layer height"));
            layers.push_back(std::move(layer));
        }
        return Diagram::validate(std::move(layers));
    }
    const auto& raw = j.at("generators");
    if (!raw.is_array()) throw Error(ErrorKind::InvalidInput, "\"generators\" must be an array");
    std::vector<Point> gens;
    for (const auto& g : raw) gens.push_back(detail::point_from_json(g, "generator"));
    return Diagram::from_generators(gens);
}

inline Diagram parse_diagram(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return diagram_from_json(j);
}

}  // namespace ferrers
