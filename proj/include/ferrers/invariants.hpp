#pragma once

#include <string>

#include "ferrers/core.hpp"

namespace ferrers {

enum class Source { engine, oracle_facets, oracle_hilbert, closed_form };

inline const char* to_string(Source s) {
    switch (s) {
        case Source::engine: return "engine";
        case Source::oracle_facets: return "oracle-facets";
        case Source::oracle_hilbert: return "oracle-hilbert";
        case Source::closed_form: return "closed-form";
    }
    return "unknown";
}

/// Krull dimension, regularity, multiplicity and reduction number of the
/// toric ring, tagged with the route that produced them.
struct InvariantsReport {
    int ring_dim = 0;
    int reg = 0;
    BigInt mult = 1;
    int red_num = 0;
    Source source = Source::engine;
    /// False when the diagram lacks the projection property: the numbers then
    /// describe the initial complex, which need not match the toric ring.
    bool groebner_guarantee = true;

    /// Compares the three ring invariants only.
    [[nodiscard]] bool same_values(const InvariantsReport& other) const {
        return ring_dim == other.ring_dim && reg == other.reg && mult == other.mult;
    }
};

}  // namespace ferrers
