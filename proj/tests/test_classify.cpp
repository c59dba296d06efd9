#include <gtest/gtest.h>

#include <semicomm/classify.hpp>
#include <semicomm/construct.hpp>
#include <semicomm/enumerate.hpp>

#include "test_support.hpp"

using namespace semicomm;
using testing_support::el;
using testing_support::raw;

namespace {

std::vector<Semigroup> all_up_to(std::size_t n) {
    std::vector<Semigroup> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (auto& s : all_semigroups({.order = k}))
            out.push_back(std::move(s));
    return out;
}

const std::vector<Semigroup>& universe4() {
    static const auto u = all_up_to(4);
    return u;
}

} // namespace

TEST(CheckBasic, Examples) {
    auto b2 = brandt_b2();
    auto sep = separativity(b2);
    ASSERT_FALSE(sep);
    // Lexicographically least failing pair; the quasi-identity is symmetric
    // in x and y, so (0, a) is the same witness as (a, 0).
    EXPECT_EQ(*sep.counterexample, (ElementPair{el(b2, "0"), el(b2, "a")}));
    EXPECT_FALSE(check_basic(b2).separative);

    auto c3 = check_basic(cyclic_group(3));
    EXPECT_TRUE(c3.cancellative);
    EXPECT_TRUE(c3.separative);
    EXPECT_TRUE(c3.commutative);

    auto lz = check_basic(left_zero(2));
    EXPECT_FALSE(lz.cancellative);
    EXPECT_FALSE(lz.commutative);
}

TEST(CheckBasic, IdentityAndIdempotents) {
    auto r = check_basic(with_identity(brandt_b2()));
    EXPECT_TRUE(r.has_identity);
    EXPECT_EQ(r.identity, Element(0));
    EXPECT_EQ(r.idempotent_count, 4u);
    EXPECT_FALSE(check_basic(brandt_b2()).has_identity);
}

TEST(InversesOf, Examples) {
    auto b2 = brandt_b2();
    EXPECT_EQ(inverses_of(b2, el(b2, "a")), std::vector<Element>{el(b2, "b")});
    EXPECT_EQ(inverses_of(cyclic_group(4), Element(1)), std::vector<Element>{Element(3)});
    EXPECT_EQ(inverses_of(left_zero(2), Element(0)), (std::vector<Element>{Element(0), Element(1)}));
}

TEST(CheckRegularity, Examples) {
    auto b2 = check_regularity(brandt_b2());
    EXPECT_TRUE(b2.regular);
    EXPECT_TRUE(b2.inverse);
    EXPECT_FALSE(b2.completely_regular);
    EXPECT_FALSE(b2.clifford);

    auto lz = check_regularity(left_zero(2));
    EXPECT_TRUE(lz.regular);
    EXPECT_TRUE(lz.completely_regular);
    EXPECT_FALSE(lz.inverse);

    auto c5 = check_regularity(cyclic_group(5));
    EXPECT_TRUE(c5.regular && c5.inverse && c5.completely_regular && c5.clifford && c5.group);
}

TEST(PowersCommute, Examples) {
    for (std::uint64_t p = 2; p <= 6; ++p)
        EXPECT_TRUE(powers_commute(brandt_b2(), p)) << p;
    // The literal p = 1 reading fails on B2.
    EXPECT_FALSE(powers_commute(brandt_b2(), 1));

    auto h = heisenberg_mod(3);
    EXPECT_TRUE(powers_commute(h, 3));
    auto sq = powers_commute(h, 2);
    ASSERT_FALSE(sq);
    auto [x, y] = *sq.counterexample;
    auto x2 = power(h, x, 2), y2 = power(h, y, 2);
    EXPECT_NE(h(x2, y2), h(y2, x2));
    EXPECT_THROW(powers_commute(h, 0), InputError);
}

TEST(PowerEndomorphism, Examples) {
    EXPECT_TRUE(power_endomorphism(left_zero(2), 3));
    EXPECT_TRUE(power_endomorphism(heisenberg_mod(3), 3));
    auto b2 = brandt_b2();
    auto r = power_endomorphism(b2, 2);
    ASSERT_FALSE(r);
    EXPECT_EQ(*r.counterexample, (ElementPair{el(b2, "a"), el(b2, "b")}));
    EXPECT_EQ(power(b2, b2(el(b2, "a"), el(b2, "b")), 2), el(b2, "e"));
}

TEST(CubeConditions, Examples) {
    auto h = check_cube_conditions(heisenberg_mod(3));
    EXPECT_FALSE(h.cube_injective);
    // x^3 is the identity, so x^4 = x everywhere while x^2 = x only at 1.
    EXPECT_FALSE(h.four_to_two);
    EXPECT_FALSE(h.x3_eq_x);

    auto c2 = check_cube_conditions(cyclic_group(2));
    EXPECT_TRUE(c2.x3_eq_x);
    EXPECT_TRUE(c2.cube_injective);

    EXPECT_FALSE(check_cube_conditions(cyclic_group(3)).cube_injective);
}

TEST(CubeConditions, HeisenbergByBruteForce) {
    auto h = heisenberg_mod(3);
    for (std::size_t x = 0; x < 27; ++x) {
        EXPECT_EQ(power(h, Element(x), 3), Element(0));
        const bool fourth_fixed = power(h, Element(x), 4) == Element(x);
        EXPECT_TRUE(fourth_fixed);
        EXPECT_EQ(h.at(x, x) == x, x == 0);
    }
}

TEST(ConsecutivePowers, Examples) {
    auto c4 = consecutive_powers(cyclic_group(4), 5, ConsecutiveMode::global);
    EXPECT_TRUE(c4.holds);
    EXPECT_EQ(c4.global_starts, (std::vector<std::size_t>{0, 1, 2, 3}));

    auto b2 = brandt_b2();
    const Element zero = el(b2, "0");
    auto zp = consecutive_powers(b2, 8, ConsecutiveMode::per_pair,
                                 [&](Element x, Element y) { return x == zero || y == zero; });
    EXPECT_TRUE(zp.holds);
    EXPECT_EQ(zp.per_pair.size(), 9u);
    for (const auto& [pair, starts] : zp.per_pair)
        EXPECT_EQ(starts.size(), 7u);

    auto lz = consecutive_powers(left_zero(2), 5, ConsecutiveMode::global);
    EXPECT_TRUE(lz.holds);
    EXPECT_FALSE(commutativity(left_zero(2)));
    EXPECT_THROW(consecutive_powers(b2, 2, ConsecutiveMode::global), InputError);
}

TEST(ConsecutivePowers, PerPairFailsOnFullBrandt) {
    auto b2 = brandt_b2();
    auto r = consecutive_powers(b2, 8, ConsecutiveMode::per_pair);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.failing_pair);
    EXPECT_EQ(*r.failing_pair, (ElementPair{el(b2, "a"), el(b2, "b")}));
}

TEST(Classify, RejectsNonAssociativeInput) {
    CayleyTable bad(2, {1, 0, 0, 0});
    EXPECT_THROW(classify(Semigroup(bad)), ContractViolation);
}

TEST(Classify, MatchesOracleOnAllTablesUpToOrderThree) {
    std::size_t seen = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        oracle::for_each_associative(n, [&](const oracle::Cells& t) {
            ++seen;
            auto s = testing_support::from_raw(t, n);
            auto r = classify(s);
            auto reg = oracle::regularity(t, n);
            EXPECT_EQ(r.commutative, oracle::commutative(t, n));
            EXPECT_EQ(r.cancellative, oracle::cancellative(t, n));
            EXPECT_EQ(r.separative, oracle::separative(t, n));
            EXPECT_EQ(r.regular, reg.regular);
            EXPECT_EQ(r.inverse, reg.inverse);
            EXPECT_EQ(r.completely_regular, reg.completely_regular);
            EXPECT_EQ(r.group, reg.group);
            EXPECT_EQ(r.clifford, reg.inverse && reg.completely_regular);
        });
    EXPECT_EQ(seen, 1u + 8u + 113u);
}

TEST(Classify, MatchesOracleOnOrderFour) {
    for (const auto& s : universe4()) {
        if (s.order() != 4)
            continue;
        auto t = raw(s);
        auto r = classify(s);
        auto reg = oracle::regularity(t, 4);
        ASSERT_EQ(r.cancellative, oracle::cancellative(t, 4));
        ASSERT_EQ(r.separative, oracle::separative(t, 4));
        ASSERT_EQ(r.inverse, reg.inverse);
        ASSERT_EQ(r.completely_regular, reg.completely_regular);
        ASSERT_EQ(r.group, reg.group);
    }
}

TEST(Classify, ImplicationLatticeAndInverseCriteria) {
    for (const auto& s : universe4()) {
        auto r = classify(s);
        EXPECT_TRUE(!r.group || r.cancellative);
        EXPECT_TRUE(!r.cancellative || r.separative);
        EXPECT_EQ(r.clifford, r.completely_regular && r.inverse);
        EXPECT_TRUE(!r.clifford || r.separative);
        EXPECT_TRUE(!r.inverse || r.regular);
        EXPECT_EQ(r.inverse, r.regular && idempotents_commute(s));
        auto c = check_cube_conditions(s);
        EXPECT_TRUE(!c.cube_injective || c.four_to_two);
    }
}

TEST(Classify, FirstPowerCommutingIsCommutativity) {
    for (const auto& s : universe4())
        EXPECT_EQ(powers_commute(s, 1).holds(), check_basic(s).commutative);
}

TEST(Classify, CommutativeTablesArePowerEndomorphic) {
    for (const auto& s : universe4()) {
        if (!commutativity(s))
            continue;
        for (std::uint64_t k = 1; k <= 8; ++k)
            EXPECT_TRUE(power_endomorphism(s, k));
    }
}

TEST(Classify, WitnessIsLexicographicallyLeast) {
    for (const auto& s : universe4()) {
        auto c = commutativity(s);
        if (c)
            continue;
        auto [x, y] = *c.counterexample;
        for (std::size_t a = 0; a < s.order(); ++a)
            for (std::size_t b = 0; b < s.order(); ++b) {
                if (std::make_pair(a, b) >= std::make_pair<std::size_t, std::size_t>(x.index, y.index))
                    break;
                EXPECT_EQ(s.at(a, b), s.at(b, a));
            }
    }
}

TEST(RenderReport, KeyValueLines) {
    auto text = render_report(classify(cyclic_group(2)), cyclic_group(2));
    EXPECT_EQ(text,
              "order=2\n"
              "commutative=true\n"
              "cancellative=true\n"
              "separative=true\n"
              "regular=true\n"
              "inverse=true\n"
              "completely_regular=true\n"
              "clifford=true\n"
              "group=true\n"
              "has_identity=true\n"
              "identity=e0\n"
              "idempotent_count=1\n");
}
