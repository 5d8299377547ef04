#include <random>

#include "doctest.h"
#include "lslink/errors.hpp"
#include "lslink/invariants.hpp"
#include "testutil.hpp"

using namespace lslink;

namespace {

LinkHFunction2 whitehead() {
    return h_from_alexander_link(tilde_normalize(families::whitehead_alexander()),
                                 KnotHFunction::unknot(), KnotHFunction::unknot());
}

// Box-sum table with unknotted components, h = sum of centered-box indicators.
LinkHFunction2 box_link(const std::vector<std::pair<int, int>>& boxes) {
    int r = 1;
    for (auto [a, b] : boxes) r = std::max({r, a + 1, b + 1});
    std::vector<std::int64_t> core;
    for (int s2 = -r; s2 <= r; ++s2)
        for (int s1 = -r; s1 <= r; ++s1) {
            std::int64_t h = 0;
            for (auto [a, b] : boxes)
                if (std::abs(s1) <= a && std::abs(s2) <= b) ++h;
            core.push_back(h + std::max(0, -s1) + std::max(0, -s2));
        }
    return link_from_table(std::move(core), KnotHFunction::unknot(), KnotHFunction::unknot(), r);
}

}  // namespace

TEST_CASE("Sato-Levine invariant") {
    CHECK(sato_levine(whitehead()) == -1);
    CHECK(sato_levine(LinkHFunction2::unlink()) == 0);

    // beta <= 0 for valid tables with unknotted components, 0 only for the unlink
    std::mt19937 rng(73);
    for (int i = 0; i < 10; ++i) {
        LinkHFunction2 l = testutil::random_box_link(rng);
        std::int64_t beta = sato_levine(l);
        CHECK(beta <= 0);
        CHECK(beta < 0);  // the generator always places at least one box
    }
}

TEST_CASE("Conway a2 from the h-function") {
    CHECK(conway_a2(KnotHFunction::unknot()) == 0);
    CHECK(conway_a2(h_from_alexander_knot(torus_knot_alexander(2, 3))) == 1);
    CHECK(conway_a2(h_from_alexander_knot(torus_knot_alexander(2, 5))) == 3);

    // independent oracle through the Conway normal form of the Alexander polynomial
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}}) {
        LaurentPoly1 alex = torus_knot_alexander(p, q);
        CHECK(conway_a2(h_from_alexander_knot(alex)) == testutil::conway_a2_oracle(alex));
    }
}

TEST_CASE("Casson invariants of (+-1,+-1)-surgeries") {
    LinkHFunction2 wh = whitehead();
    CHECK(casson_link_pm1(wh, 1, 1) == 1);
    CHECK(casson_link_pm1(wh, 1, -1) == -1);
    CHECK(casson_link_pm1(wh, -1, 1) == -1);
    CHECK(casson_link_pm1(wh, -1, -1) == 1);
    CHECK_THROWS_AS(casson_link_pm1(wh, 2, 1), std::invalid_argument);

    // state-sum consistency: lambda(e1,e2) + lambda(-e1,e2) = 2 e2 sum h2
    std::mt19937 rng(79);
    for (int i = 0; i < 10; ++i) {
        LinkHFunction2 l = testutil::random_valid_link(rng);
        std::int64_t sum2 = l.component(2).sum_h();
        for (int e1 : {1, -1})
            for (int e2 : {1, -1})
                CHECK(casson_link_pm1(l, e1, e2) + casson_link_pm1(l, -e1, e2) == 2 * e2 * sum2);
    }
}

TEST_CASE("Casson invariants of knot surgeries") {
    KnotHFunction tref = h_from_alexander_knot(torus_knot_alexander(2, 3));
    CHECK(casson_knot_pm1(tref, 1, true) == 1);
    CHECK(casson_knot_pm1(KnotHFunction::unknot(), 1, true) == 0);
    CHECK(casson_knot_pm1(KnotHFunction::unknot(), -1, true) == 0);
    CHECK(casson_knot_pm1(h_from_alexander_knot(torus_knot_alexander(2, 5)), 1, true) == 3);
    CHECK_THROWS_AS(casson_knot_pm1(tref, 1, false), TorsionUnknown);

    // +1-surgery Casson equals a2 for every L-space knot here
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
        KnotHFunction k = h_from_alexander_knot(torus_knot_alexander(p, q));
        CHECK(casson_knot_pm1(k, 1, true) == conway_a2(k));
        CHECK(casson_knot_pm1(k, -1, true) == -conway_a2(k));
    }
}

TEST_CASE("torsion Euler characteristic of the blow-down") {
    CHECK(torsion_euler_blowdown(whitehead()) == 0);
    CHECK(torsion_euler_blowdown(LinkHFunction2::unlink()) == 0);
    // plus-shaped h: h(0,0)=2, h(+-1,0)=h(0,+-1)=1
    LinkHFunction2 plus = box_link({{1, 0}, {0, 1}});
    CHECK(torsion_euler_blowdown(plus) == -2);

    std::mt19937 rng(83);
    LinkHFunction2 split = [&] {
        while (true) {
            LinkHFunction2 l = testutil::random_split_link(rng);
            if (!l.component(1).is_unknot()) return l;
        }
    }();
    CHECK_THROWS_AS(torsion_euler_blowdown(split), ComponentNotUnknot);
}

TEST_CASE("L-space surgery regions") {
    LSpaceRegion wh = lspace_region(whitehead());
    CHECK(wh.exact);
    CHECK(wh.threshold1 == 0);
    CHECK(wh.threshold2 == 0);
    CHECK(wh.str() == "p1>0 and p2>0 (exact)");
    CHECK(lspace_region_contains(wh, 1, 1));
    CHECK(lspace_region_contains(wh, 5, 2));
    CHECK_FALSE(lspace_region_contains(wh, 0, 1));
    CHECK_FALSE(lspace_region_contains(wh, 1, 0));
    CHECK_FALSE(lspace_region_contains(wh, -1, 7));

    // wider box: b1 = 2, b2 = 1
    LSpaceRegion big = lspace_region(box_link({{2, 1}}));
    CHECK(big.exact);
    CHECK(big.threshold1 == 4);
    CHECK(big.threshold2 == 2);

    CHECK_THROWS_AS(lspace_region(LinkHFunction2::unlink()), TrivialLink);

    std::mt19937 rng(89);
    LinkHFunction2 split = [&] {
        while (true) {
            LinkHFunction2 l = testutil::random_split_link(rng);
            if (!l.component(1).is_unknot() && l.h(0, 0) > 0) return l;
        }
    }();
    LSpaceRegion nec = lspace_region(split);
    CHECK_FALSE(nec.exact);
    CHECK(nec.conditions.size() == 2);
    CHECK_THROWS_AS(lspace_region_contains(nec, 1, 1), std::invalid_argument);
}

TEST_CASE("four-genus lower bounds") {
    GenusBoundReport wh = genus_lower_bound(whitehead(), 3);
    CHECK(wh.min_total == 1);
    CHECK(wh.excluded == std::vector<std::pair<int, int>>{{0, 0}});

    CHECK(genus_lower_bound(LinkHFunction2::unlink(), 3).min_total == 0);

    // table input with h(0,0) = 1 only, as for the two-bridge family
    CHECK(genus_lower_bound(box_link({{0, 0}}), 3).min_total == 1);

    // monotone: adding boxes (pointwise-larger h) never lowers the bound
    std::vector<std::pair<int, int>> boxes{{3, 2}, {1, 1}, {0, 0}};
    std::int64_t prev = 0;
    for (size_t k = 1; k <= boxes.size(); ++k) {
        std::vector<std::pair<int, int>> sub(boxes.begin(), boxes.begin() + k);
        std::int64_t cur = genus_lower_bound(box_link(sub), 4).min_total;
        CHECK(cur >= prev);
        prev = cur;
    }

    // survival is upward monotone in each genus coordinate
    std::mt19937 rng(97);
    for (int i = 0; i < 6; ++i) {
        GenusBoundReport rep = genus_lower_bound(testutil::random_valid_link(rng), 3);
        auto is_excluded = [&](int g1, int g2) {
            for (auto [a, b] : rep.excluded)
                if (a == g1 && b == g2) return true;
            return false;
        };
        for (auto [g1, g2] : rep.excluded) {
            if (g1 > 0) CHECK(is_excluded(g1 - 1, g2));
            if (g2 > 0) CHECK(is_excluded(g1, g2 - 1));
        }
    }
}

TEST_CASE("d-invariant genus checker") {
    LinkHFunction2 wh = whitehead();
    DValueMap neg{{{0, 0}, d_link_surgery(wh, -1, -1, {0, 0})}};
    DValueMap pos{{{0, 0}, d_link_surgery(wh, 1, 1, {0, 0})}};
    CHECK(d_genus_check(neg, pos, {1, 0}, {1, 1}));
    CHECK(d_genus_check(neg, pos, {0, 1}, {1, 1}));
    CHECK_FALSE(d_genus_check(neg, pos, {0, 0}, {1, 1}));

    LinkHFunction2 unlink = LinkHFunction2::unlink();
    DValueMap uneg{{{0, 0}, d_link_surgery(unlink, -1, -1, {0, 0})}};
    DValueMap upos{{{0, 0}, d_link_surgery(unlink, 1, 1, {0, 0})}};
    CHECK(d_genus_check(uneg, upos, {0, 0}, {1, 1}));

    CHECK_THROWS_AS(d_genus_check(DValueMap{}, std::nullopt, {0, 0}, {1, 1}), LabelMismatch);
    CHECK_THROWS_AS(d_genus_check(std::nullopt, std::nullopt, {0, 0}, {1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(d_genus_check(neg, pos, {0}, {1, 1}), std::invalid_argument);

    // three-component usage with externally supplied values: the unlink again
    DValueMap neg3, pos3;
    for (int t1 : {0}) {
        (void)t1;
        neg3[{0, 0, 0}] = -phi(1, 0) * Rational(3);
        pos3[{0, 0, 0}] = phi(1, 0) * Rational(3);
    }
    CHECK(d_genus_check(neg3, pos3, {0, 0, 0}, {1, 1, 1}));
}

TEST_CASE("skein inequality checker") {
    CHECK(skein_check(Rational(-2), Rational(0)));
    CHECK(skein_check(Rational(0), Rational(0)));
    CHECK_FALSE(skein_check(Rational(-4), Rational(0)));
    CHECK_FALSE(skein_check(Rational(1, 2), Rational(0)));
}
