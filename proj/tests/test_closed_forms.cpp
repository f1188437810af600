#include <gtest/gtest.h>

#include "ferrers/closed_forms.hpp"
#include "ferrers/enumerate.hpp"

using namespace ferrers;

namespace {

Diagram L(std::vector<Diagram::Layer> layers) { return Diagram::validate(std::move(layers)); }

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

void partitions(int rem, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (!cur.empty()) out.emplace_back(cur);
    for (int p = std::min(rem, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(rem - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_up_to(int cells) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions(cells, cells, cur, out);
    return out;
}

}  // namespace

TEST(RectMultiplicity, Examples) {
    EXPECT_EQ(rect_multiplicity(2, 2, 2), 6);
    EXPECT_EQ(rect_multiplicity(1, 1, 1), 1);
    EXPECT_EQ(rect_multiplicity(2, 3, 4), 60);
}

TEST(RectMultiplicity, SymmetricAndBig) {
    EXPECT_EQ(rect_multiplicity(3, 5, 7), rect_multiplicity(7, 3, 5));
    EXPECT_EQ(rect_multiplicity(10, 10, 10).str(), "227873431500");
    // 45!/(15!^3) no longer fits in 64 bits
    EXPECT_EQ(rect_multiplicity(16, 16, 16).str(), "53494979785374631680");
    EXPECT_GT(rect_multiplicity(16, 16, 16), BigInt(1) << 64);
}

TEST(RectRegularity, Examples) {
    EXPECT_EQ(rect_regularity(2, 2, 2), 2);
    EXPECT_EQ(rect_regularity(1, 1, 7), 0);
    EXPECT_EQ(rect_regularity(4, 3, 2), 3);
}

TEST(RectFormulas, MatchEngineOnSmallBoxes) {
    Engine e;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                const auto r = e.invariants(Diagram::box(a, b, c));
                EXPECT_EQ(r.reg, rect_regularity(a, b, c));
                EXPECT_EQ(r.mult, rect_multiplicity(a, b, c));
            }
}

TEST(Ferrers2dRegularity, Examples) {
    EXPECT_EQ(ferrers2d_regularity(P({3, 3})).value, 1);
    EXPECT_EQ(ferrers2d_regularity(P({2, 1})).value, 0);
    EXPECT_EQ(ferrers2d_regularity(P({3, 2, 1})).value, 1);
    EXPECT_TRUE(ferrers2d_regularity(P({3, 2, 1})).is_exact());
}

TEST(Ferrers2dRegularity, OverlappingGuardsAreAmbiguous) {
    const auto r = ferrers2d_regularity(P({5, 3, 2, 2}));
    EXPECT_EQ(r.kind, Regularity2D::Kind::ambiguous);
    EXPECT_EQ(r.candidates, (std::vector<int>{3, 2}));
}

TEST(Ferrers2dRegularity, PrintedReadingHasGaps) {
    EXPECT_EQ(ferrers2d_regularity(P({3, 1}), Reading2D::printed).kind, Regularity2D::Kind::gap);
    EXPECT_EQ(ferrers2d_regularity(P({3, 1})).value, 0);
}

TEST(Ferrers2dRegularity, PrintedReadingMissesTheSquare) {
    // the 2 x 2 square is a quadric hypersurface of regularity 1
    EXPECT_EQ(ferrers2d_regularity(P({2, 2}), Reading2D::printed).value, 0);
    EXPECT_EQ(ferrers2d_regularity(P({2, 2})).value, 1);
    EXPECT_EQ(oracle_invariants(diagram_from_partition(P({2, 2}))).reg, 1);
}

TEST(Ferrers2dMultiplicity, Examples) {
    EXPECT_EQ(ferrers2d_multiplicity(P({2, 2})), 2);
    EXPECT_EQ(ferrers2d_multiplicity(P({3, 2, 1})), 2);
    EXPECT_EQ(ferrers2d_multiplicity(P({7})), 1);
}

TEST(Ferrers2d, AgreeWithOracleUpToTenCells) {
    int ambiguous = 0;
    for (const auto& lambda : partitions_up_to(10)) {
        const auto o = oracle_invariants(diagram_from_partition(lambda));
        EXPECT_EQ(ferrers2d_multiplicity(lambda), o.mult);
        const auto r = ferrers2d_regularity(lambda);
        if (r.is_exact()) {
            EXPECT_EQ(r.value, o.reg);
        } else {
            ASSERT_EQ(r.kind, Regularity2D::Kind::ambiguous);
            ++ambiguous;
            // the lambda_s = 2 branch is the one that holds
            EXPECT_EQ(r.candidates[1], o.reg);
        }
    }
    EXPECT_GT(ambiguous, 0);
}

TEST(MuBound, Examples) {
    EXPECT_EQ(mu_bound(Diagram::box(2, 2, 2)), 2);
    EXPECT_EQ(mu_bound(Diagram::from_generators(std::vector<Point>{{1, 3, 2}, {2, 2, 3}})), 3);
    EXPECT_EQ(mu_bound(L({{1}})), 0);
}

TEST(SegreCombine, Examples) {
    const std::vector<SegreFactor> two{{2, 0, 1}, {3, 0, 1}};
    EXPECT_EQ(segre_combine(two), (SegreFactor{4, 1, 3}));
    const std::vector<SegreFactor> one{{3, 1, 4}};
    EXPECT_EQ(segre_combine(one), one.front());
    const std::vector<SegreFactor> three{{2, 0, 1}, {2, 0, 1}, {2, 0, 1}};
    EXPECT_EQ(segre_combine(three), (SegreFactor{4, 2, 6}));
}

TEST(SegreCombine, AllLinesTakesMaxRegularity) {
    const std::vector<SegreFactor> lines{{1, 2, 3}, {1, 0, 1}};
    const auto r = segre_combine(lines);
    EXPECT_EQ(r.dim, 1);
    EXPECT_EQ(r.reg, 2);
}

TEST(SegreCombine, HypothesisViolation) {
    const std::vector<SegreFactor> bad{{2, 2, 1}, {3, 0, 1}};
    try {
        segre_combine(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
    }
}

TEST(SegreCombine, PolynomialRingsReproduceBoxes) {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c) {
                const std::vector<SegreFactor> f{{a, 0, 1}, {b, 0, 1}, {c, 0, 1}};
                const auto r = segre_combine(f);
                EXPECT_EQ(r.dim, a + b + c - 2);
                EXPECT_EQ(r.mult, rect_multiplicity(a, b, c));
                EXPECT_EQ(r.reg, rect_regularity(a, b, c));
            }
}

TEST(ReductionNumber, Examples) {
    EXPECT_EQ(reduction_number(Diagram::box(2, 2, 2)), 2);
    EXPECT_EQ(reduction_number(L({{1}})), 0);
    EXPECT_EQ(reduction_number(Diagram::box(1, 2, 3)), 1);
}

TEST(ProfileBounds, FullBoxIsExact) {
    const auto b = profile_bounds(Diagram::box(2, 3, 4));
    EXPECT_EQ(b.best.reg, rect_regularity(2, 3, 4));
    EXPECT_EQ(b.best.mult, rect_multiplicity(2, 3, 4));
    EXPECT_EQ(b.profile.mult, b.box.mult);
}

TEST(ProfileBounds, FlatSquare) {
    const auto b = profile_bounds(Diagram::box(2, 2, 1));
    EXPECT_EQ(b.box.mult, 2);
    EXPECT_EQ(b.best.mult, 2);
}

TEST(ProfileBounds, SmallLShapeBoxBound) {
    const auto b = profile_bounds(L({{2, 1}, {1}}));
    EXPECT_EQ(b.box.mult, 6);
}

TEST(ProfileBounds, RequiresStrongProjection) {
    try {
        profile_bounds(Diagram::from_generators(std::vector<Point>{{1, 3, 2}, {2, 2, 3}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDiagram);
    }
}

TEST(ProfileBounds, HoldOnWholeBox) {
    Engine e;
    for_each_diagram(3, 3, 3, [&](const Diagram& d) {
        if (!has_strong_projection_property(d)) return;
        const auto r = e.invariants(d);
        const auto b = profile_bounds(d, e);
        EXPECT_LE(r.reg, b.best.reg) << d.key();
        EXPECT_LE(r.mult, b.best.mult) << d.key();
    });
}
