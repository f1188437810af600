#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"

namespace ferrers {

/// Calls visit(D) for every nonempty Ferrers diagram inside [A]x[B]x[C], by
/// enumerating monotone A x B height matrices with entries <= C. Order is
/// deterministic (lexicographic on the row-major matrix).
template <class Visit>
void for_each_diagram(int A, int B, int C, Visit&& visit) {
    if (A < 1 || B < 1 || C < 1) throw Error(ErrorKind::InvalidInput, "box bounds must be positive");
    const auto cells = static_cast<std::size_t>(A) * static_cast<std::size_t>(B);
    std::vector<int> h(cells, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells) {
            std::vector<Diagram::Layer> layers;
            for (int i = 0; i < A; ++i) {
                Diagram::Layer row;
                for (int j = 0; j < B; ++j)
                    if (int v = h[static_cast<std::size_t>(i * B + j)]; v > 0) row.push_back(v);
                if (row.empty()) break;
                layers.push_back(std::move(row));
            }
            if (!layers.empty()) visit(Diagram::validate(std::move(layers)));
            return;
        }
        const int i = static_cast<int>(idx) / B;
        const int j = static_cast<int>(idx) % B;
        int hi = C;
        if (i > 0) hi = std::min(hi, h[idx - static_cast<std::size_t>(B)]);
        if (j > 0) hi = std::min(hi, h[idx - 1]);
        for (int v = 0; v <= hi; ++v) {
            h[idx] = v;
            rec(idx + 1);
        }
        h[idx] = 0;
    };
    rec(0);
}

inline std::vector<Diagram> all_diagrams(int A, int B, int C) {
    std::vector<Diagram> out;
    for_each_diagram(A, B, C, [&](Diagram d) { out.push_back(std::move(d)); });
    return out;
}

/// Number of A x B plane partitions with entries <= C, minus the empty one
/// (MacMahon's box formula), used to refuse oversized sweeps up front.
inline double estimated_diagram_count(int A, int B, int C) {
    double n = 1;
    for (int i = 1; i <= A; ++i)
        for (int j = 1; j <= B; ++j)
            for (int k = 1; k <= C; ++k) n *= static_cast<double>(i + j + k - 1) / (i + j + k - 2);
    return n - 1;
}

/// Random monotone height matrix inside the box; may be any Ferrers diagram.
inline Diagram random_diagram(int A, int B, int C, std::mt19937_64& rng) {
    for (;;) {
        std::vector<Diagram::Layer> layers;
        for (int i = 0; i < A; ++i) {
            Diagram::Layer row;
            for (int j = 0; j < B; ++j) {
                int hi = C;
                if (i > 0) hi = std::min(hi, j < static_cast<int>(layers[static_cast<std::size_t>(i - 1)].size())
                                                 ? layers[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
                                                 : 0);
                if (j > 0) hi = std::min(hi, row.back());
                if (hi == 0) break;
                const int v = std::uniform_int_distribution<int>(0, hi)(rng);
                if (v == 0) break;
                row.push_back(v);
            }
            if (row.empty()) break;
            layers.push_back(std::move(row));
        }
        if (!layers.empty()) return Diagram::validate(std::move(layers));
    }
}

}  // namespace ferrers
