#include <gtest/gtest.h>

#include <set>

#include "ferrers/diagram.hpp"
#include "ferrers/enumerate.hpp"

using namespace ferrers;

namespace {

Diagram L(std::vector<Diagram::Layer> layers) { return Diagram::validate(std::move(layers)); }

Diagram closure(std::vector<Point> gens) { return Diagram::from_generators(gens); }

const Diagram& two_generator_diagram() {
    static const Diagram d = closure({{1, 3, 2}, {2, 2, 3}});
    return d;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

// Condition (b) of the projection property, by brute force over point pairs.
bool pp_condition_b(const Diagram& d) {
    for (int i = 1; i < d.length(); ++i) {
        const auto next = d.layer_points(i + 1);
        for (const auto& p : next)
            for (const auto& q : next)
                if (!d.contains({i, p.j, q.k})) return false;
    }
    return true;
}

int layer_b(const Diagram& d, int i) { return d.layer_width(i); }
int layer_c(const Diagram& d, int i) { return d.layer_height(i); }

// Strong projection property, condition (a): zones Z1 and Z6 of every point
// of layer i are empty beyond layer i.
bool strong_condition_a(const Diagram& d) {
    for (int i = 1; i < d.length(); ++i)
        for (const auto& u : d.layer_points(i)) {
            const auto z = zones(d, u);
            if (!z.from_layer(1, i + 1).empty() || !z.from_layer(6, i + 1).empty()) return false;
        }
    return true;
}

// Condition (b): b_{D^{i+1}} <= beta(u) and c_{D^{i+1}} <= gamma(u).
bool strong_condition_b(const Diagram& d) {
    for (int i = 1; i < d.length(); ++i)
        for (const auto& u : d.layer_points(i)) {
            const auto e = alpha_beta_gamma(d, u);
            if (layer_b(d, i + 1) > e.beta || layer_c(d, i + 1) > e.gamma) return false;
        }
    return true;
}

bool quasi_lex_by_hand(const std::vector<Point>& order) {
    for (std::size_t x = 0; x < order.size(); ++x)
        for (std::size_t y = x + 1; y < order.size(); ++y) {
            const Point& later = order[y];
            const Point& earlier = order[x];
            if (later.i < earlier.i) return false;
            if (later.i == earlier.i && later.j <= earlier.j && later.k <= earlier.k) return false;
        }
    return true;
}

}  // namespace

TEST(FromGenerators, SinglePointIsItsOwnClosure) {
    EXPECT_EQ(closure({{1, 1, 1}}).layers(), (std::vector<Diagram::Layer>{{1}}));
}

TEST(FromGenerators, CornerGivesFullBox) {
    EXPECT_EQ(closure({{2, 2, 2}}).layers(), (std::vector<Diagram::Layer>{{2, 2}, {2, 2}}));
}

TEST(FromGenerators, TwoGenerators) {
    const auto& d = two_generator_diagram();
    EXPECT_EQ(d.layers(), (std::vector<Diagram::Layer>{{3, 3, 2}, {3, 3}}));
    // membership scan against domination by a generator
    const std::vector<Point> gens{{1, 3, 2}, {2, 2, 3}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) {
                const Point p{i, j, k};
                const bool dominated = std::any_of(gens.begin(), gens.end(), [&](const Point& g) { return p.dominated_by(g); });
                EXPECT_EQ(d.contains(p), dominated) << to_string(p);
            }
}

TEST(FromGenerators, EmptyInputIsRejected) {
    EXPECT_EQ(kind_of([] { Diagram::from_generators({}); }), ErrorKind::InvalidInput);
}

TEST(Validate, AcceptsSmallLShape) {
    const auto d = L({{2, 1}, {1}});
    EXPECT_EQ(d.points(), (std::vector<Point>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
}

TEST(Validate, RejectsGrowthAcrossLayers) {
    EXPECT_EQ(kind_of([] { L({{1}, {2}}); }), ErrorKind::NotFerrers);
}

TEST(Validate, RejectsGrowthAlongJ) {
    EXPECT_EQ(kind_of([] { L({{1, 2}}); }), ErrorKind::NotFerrers);
}

TEST(Validate, ErrorNamesTheCoordinates) {
    try {
        L({{2, 2}, {2, 3}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("(i,j)=(2,2)"), std::string::npos) << e.what();
    }
}

TEST(Validate, RejectsMoreColumnsInLaterLayer) {
    EXPECT_EQ(kind_of([] { L({{1}, {1, 1}}); }), ErrorKind::NotFerrers);
}

TEST(FromPoints, RequiresDownwardClosure) {
    const std::vector<Point> holes{{1, 1, 1}, {1, 1, 3}};
    EXPECT_EQ(kind_of([&] { Diagram::from_points(holes); }), ErrorKind::NotFerrers);
}

TEST(EssentialReduce, AlreadyEssential) {
    const auto d = L({{2, 2}, {2, 2}});
    EXPECT_EQ(essential_reduce(d), d);
    EXPECT_EQ(essential_reduce(two_generator_diagram()), two_generator_diagram());
}

TEST(EssentialReduce, RelabelsSkippedHeights) {
    const std::vector<Point> pts{{1, 1, 1}, {1, 1, 3}, {1, 2, 1}};
    const auto d = essential_reduce(pts);
    EXPECT_EQ(d.layers(), (std::vector<Diagram::Layer>{{2, 1}}));
    const auto r = reduce(pts);
    EXPECT_EQ(r.to_original({1, 1, 2}), (Point{1, 1, 3}));
    EXPECT_EQ(r.to_reduced({1, 1, 3}), (Point{1, 1, 2}));
    EXPECT_FALSE(r.to_reduced({1, 1, 2}).has_value());
}

TEST(EssentialReduce, EmptyInputIsRejected) {
    EXPECT_EQ(kind_of([] { essential_reduce(std::span<const Point>{}); }), ErrorKind::InvalidInput);
}

TEST(EssentialDims, Examples) {
    EXPECT_EQ(essential_dims(L({{2, 2}, {2, 2}})), (EssentialDims{2, 2, 2}));
    EXPECT_EQ(essential_dims(two_generator_diagram()), (EssentialDims{2, 3, 3}));
    EXPECT_EQ(essential_dims(L({{1}})), (EssentialDims{1, 1, 1}));
}

TEST(Flip, Examples) {
    EXPECT_EQ(flip(Diagram::box(2, 2, 2)), Diagram::box(2, 2, 2));
    EXPECT_EQ(flip(L({{2, 1}})), L({{2, 1}}));
    EXPECT_EQ(flip(L({{3, 1}})), L({{2, 1, 1}}));
}

TEST(Flip, InvolutionAndDimsOnWholeBox) {
    for_each_diagram(3, 3, 3, [](const Diagram& d) {
        const auto f = flip(d);
        EXPECT_EQ(flip(f), d);
        const auto [a, b, c] = essential_dims(d);
        EXPECT_EQ(essential_dims(f), (EssentialDims{a, c, b}));
        std::set<Point> flipped;
        for (const auto& p : d.points()) flipped.insert(p.flipped());
        const auto fp = f.points();
        EXPECT_EQ(std::set<Point>(fp.begin(), fp.end()), flipped);
    });
}

TEST(AlphaBetaGamma, Examples) {
    EXPECT_EQ(alpha_beta_gamma(Diagram::box(2, 2, 2), {1, 1, 1}), (Extents{2, 2, 2}));
    EXPECT_EQ(alpha_beta_gamma(two_generator_diagram(), {1, 1, 1}), (Extents{2, 3, 3}));
    EXPECT_EQ(alpha_beta_gamma(L({{2, 1}}), {1, 2, 1}), (Extents{1, 2, 1}));
    EXPECT_EQ(kind_of([] { alpha_beta_gamma(L({{1}}), {1, 1, 2}); }), ErrorKind::NotInDiagram);
}

TEST(Zones, BoxAtOrigin) {
    const auto z = zones(Diagram::box(2, 2, 2), {1, 1, 1});
    EXPECT_TRUE(z[1].empty());
    EXPECT_EQ(z[2], (std::vector<Point>{{1, 1, 2}, {2, 1, 2}}));
    EXPECT_EQ(z[3], (std::vector<Point>{{1, 1, 1}, {2, 1, 1}}));
    EXPECT_EQ(z[4], (std::vector<Point>{{1, 2, 2}, {2, 2, 2}}));
    EXPECT_EQ(z[5], (std::vector<Point>{{1, 2, 1}, {2, 2, 1}}));
    EXPECT_TRUE(z[6].empty());
}

TEST(Zones, MaximalCornerHasNoZ4OrZ6) {
    const auto d = L({{3, 2, 2}, {2, 1}});
    const auto z = zones(d, {1, 3, 2});
    EXPECT_TRUE(z[4].empty());
    EXPECT_TRUE(z[6].empty());
}

TEST(Zones, TwoGeneratorDiagram) {
    const auto z = zones(two_generator_diagram(), {1, 3, 1});
    EXPECT_TRUE(z[6].empty());
    EXPECT_TRUE(z.from_layer(5, 2).empty());
}

TEST(Zones, PartitionTheTailEverywhereInBox) {
    for_each_diagram(3, 3, 3, [](const Diagram& d) {
        for (const auto& u : d.points()) {
            const auto z = zones(d, u);
            std::multiset<Point> all;
            for (int n = 1; n <= 6; ++n) all.insert(z[n].begin(), z[n].end());
            std::multiset<Point> tail;
            for (const auto& p : d.points())
                if (p.i >= u.i) tail.insert(p);
            ASSERT_EQ(all, tail) << d.key() << " at " << to_string(u);
        }
    });
}

TEST(ProjectionProperty, Examples) {
    EXPECT_TRUE(has_projection_property(Diagram::box(3, 2, 4)));
    EXPECT_TRUE(has_projection_property(two_generator_diagram()));
    EXPECT_TRUE(has_projection_property(L({{2, 1}, {1, 1}})));
    EXPECT_FALSE(has_projection_property(L({{2, 1}, {2, 1}})));
}

TEST(StrongProjectionProperty, Examples) {
    EXPECT_TRUE(has_strong_projection_property(Diagram::box(3, 3, 2)));
    EXPECT_TRUE(has_strong_projection_property(L({{3, 2, 1}})));
    EXPECT_FALSE(has_strong_projection_property(two_generator_diagram()));
}

TEST(ProjectionProperty, EquivalentConditionsAgreeInBox) {
    int pp = 0, strong = 0;
    for_each_diagram(3, 3, 3, [&](const Diagram& d) {
        const bool a = has_projection_property(d);
        EXPECT_EQ(a, pp_condition_b(d)) << d.key();
        const bool c = has_strong_projection_property(d);
        EXPECT_EQ(c, strong_condition_a(d)) << d.key();
        EXPECT_EQ(c, strong_condition_b(d)) << d.key();
        if (c) {
            EXPECT_TRUE(a) << d.key();
        }
        pp += a;
        strong += c;
    });
    EXPECT_EQ(pp, 579);
    EXPECT_GT(pp, strong);
}

TEST(StrongProjectionProperty, TruncationKeepsIt) {
    for_each_diagram(3, 3, 3, [](const Diagram& d) {
        if (!has_strong_projection_property(d)) return;
        const auto pts = d.points();
        for (int axis = 0; axis < 3; ++axis)
            for (int slice = 1; slice <= 3; ++slice) {
                std::vector<Point> kept;
                for (const auto& p : pts) {
                    const int coord = axis == 0 ? p.i : axis == 1 ? p.j : p.k;
                    if (coord != slice) kept.push_back(p);
                }
                if (kept.empty() || kept.size() == pts.size()) continue;
                const auto t = essential_reduce(kept);
                EXPECT_TRUE(has_strong_projection_property(t)) << d.key() << " axis " << axis << " slice " << slice;
            }
    });
}

TEST(InductionOrder, FullBoxIsAllFirstStage) {
    const auto o = induction_order(Diagram::box(2, 2, 2));
    EXPECT_EQ(o.points, (std::vector<Point>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}}));
    EXPECT_EQ(o.first_stage, 4u);
}

TEST(InductionOrder, TallFirstLayerSplits) {
    const auto o = induction_order(L({{2}, {1}}));
    EXPECT_EQ(o.points, (std::vector<Point>{{1, 1, 1}, {1, 1, 2}}));
    EXPECT_EQ(o.first_stage, 1u);
}

TEST(InductionOrder, FlatBox) {
    const auto o = induction_order(Diagram::box(2, 2, 1));
    EXPECT_EQ(o.points, (std::vector<Point>{{1, 1, 1}, {1, 2, 1}}));
    EXPECT_EQ(o.first_stage, 2u);
}

TEST(InductionOrder, SingleLayerIsAllSecondStage) {
    const auto o = induction_order(L({{3, 2}}));
    EXPECT_EQ(o.first_stage, 0u);
    // second stage is lex on flipped points: sorted by (k, j)
    EXPECT_EQ(o.points, (std::vector<Point>{{1, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 2, 2}, {1, 1, 3}}));
}

TEST(InductionOrder, QuasiLexicographicEverywhereInBox) {
    for_each_diagram(3, 3, 3, [](const Diagram& d) {
        const auto o = induction_order(d);
        EXPECT_TRUE(is_quasi_lexicographic(o, d)) << d.key();
        EXPECT_TRUE(quasi_lex_by_hand(o.points)) << d.key();
        const auto layer = d.layer_points(1);
        EXPECT_EQ(std::set<Point>(o.points.begin(), o.points.end()), std::set<Point>(layer.begin(), layer.end()));
    });
}

TEST(InductionOrder, FirstStageZ6StaysInLayerOne) {
    for_each_diagram(3, 3, 3, [](const Diagram& d) {
        if (!has_projection_property(d)) return;
        const auto o = induction_order(d);
        for (std::size_t n = 0; n < o.first_stage; ++n) {
            const auto z = zones(d, o.points[n]);
            EXPECT_EQ(z[6], z.layer(6, 1)) << d.key() << " at " << to_string(o.points[n]);
        }
    });
}

TEST(LexOrder, Examples) {
    EXPECT_EQ(lex_order(Diagram::box(2, 2, 2)).points,
              (std::vector<Point>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}}));
    EXPECT_EQ(lex_order(L({{3, 3, 2}})).points,
              (std::vector<Point>{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {1, 3, 1}, {1, 3, 2}}));
    EXPECT_EQ(lex_order(L({{1}})).points, (std::vector<Point>{{1, 1, 1}}));
    EXPECT_EQ(lex_order(L({{1}})).flavor, OrderFlavor::lex);
}

TEST(Profile, Examples) {
    EXPECT_EQ(profile(Diagram::box(2, 3, 3), Plane::xy).parts(), (std::vector<int>{3, 3}));
    EXPECT_EQ(profile(two_generator_diagram(), Plane::xy).parts(), (std::vector<int>{3, 2}));
    EXPECT_EQ(profile(two_generator_diagram(), Plane::xz).parts(), (std::vector<int>{3, 3}));
    EXPECT_EQ(profile(L({{1}}), Plane::xy).parts(), (std::vector<int>{1}));
}

TEST(Enumerate, BoxCounts) {
    EXPECT_EQ(all_diagrams(3, 3, 3).size(), 979u);
    EXPECT_EQ(all_diagrams(2, 2, 2).size(), 19u);
    EXPECT_NEAR(estimated_diagram_count(3, 3, 3), 979.0, 1e-6);
}

TEST(Diagram, KeyDistinguishesShapes) {
    EXPECT_EQ(two_generator_diagram().key(), "3,3,2;3,3");
    EXPECT_NE(L({{2, 1}}).key(), L({{2}, {1}}).key());
}

TEST(Diagram, TailShiftsLayers) {
    EXPECT_EQ(two_generator_diagram().tail(2), L({{3, 3}}));
    EXPECT_TRUE(L({{1}}).tail(2).empty());
}
