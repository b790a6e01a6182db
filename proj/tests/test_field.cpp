#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berkdisc/field.hpp"
#include "berkdisc/rational.hpp"
#include "berkdisc/valuation.hpp"

#include "test_support.hpp"

#include <stdexcept>

using namespace berkdisc;
using namespace berkdisc::testing;

TEST_CASE("field parameters validate p prime and N >= 1") {
    CHECK_NOTHROW(FieldParams(2, 1));
    CHECK_NOTHROW(FieldParams(3, 12));
    CHECK_NOTHROW(FieldParams(97, 4));
    CHECK_THROWS_AS(FieldParams(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams(-3, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams(3, -1), std::invalid_argument);
}

TEST_CASE("rational helpers") {
    CHECK(rat_str(Rat(3, 2)) == "3/2");
    CHECK(rat_str(Rat(-4, 2)) == "-2/1");
    CHECK(rat_str(Rat(0)) == "0/1");
    CHECK(rat_parse("3/2") == Rat(3, 2));
    CHECK(rat_parse("-7") == Rat(-7));
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK(vp(Int(12), 2) == 2);
    CHECK(vp(Rat(9, 2), 3) == 2);
    CHECK(vp(Rat(2, 9), 3) == -2);
    CHECK(rat_floor(Rat(-3, 2)) == -2);
    CHECK(rat_floor(Rat(3, 2)) == 1);
    CHECK(decimal_string(Rat(1, 3), 4) == "0.3333");
    CHECK(decimal_string(Rat(-1, 8), 3) == "-0.125");
    CHECK(integer_nth_root(Int(26), 3) == 2);
    CHECK(integer_nth_root(Int(27), 3) == 3);
}

TEST_CASE("valuation of basis monomials and sums") {
    FieldParams prm(3, 2); // pi^2 = 3

    FieldElement zero(prm);
    CHECK(zero.is_zero());
    CHECK(!valuation(zero).is_finite());

    FieldElement one = FieldElement::from_long(prm, 1);
    CHECK(valuation(one) == Valuation(Rat(0)));

    FieldElement pi = FieldElement::pi_power(prm, 1);
    CHECK(valuation(pi) == Valuation(Rat(1, 2)));

    // pi^2 folds to the rational 3
    FieldElement pi2 = FieldElement::pi_power(prm, 2);
    CHECK(pi2 == FieldElement::from_long(prm, 3));
    CHECK(valuation(pi2) == Valuation(Rat(1)));

    // negative exponents divide by p: pi^-1 = pi / 3
    FieldElement pim1 = FieldElement::pi_power(prm, -1);
    CHECK(valuation(pim1) == Valuation(Rat(-1, 2)));
    CHECK(pim1 * pi == one);

    // candidates vp(c_e) + e/N have distinct residues mod 1, so the minimum
    // is attained by exactly one term and sums never cancel below it
    FieldElement x = FieldElement::from_long(prm, 9) + pi; // v = min(2, 1/2)
    CHECK(valuation(x) == Valuation(Rat(1, 2)));
    FieldElement y = FieldElement::from_rational(prm, Rat(1, 3)) +
                     FieldElement::pi_power(prm, 1, Rat(5));
    CHECK(valuation(y) == Valuation(Rat(-1)));
}

TEST_CASE("field arithmetic is the quotient ring Q[pi]/(pi^N - p)") {
    FieldParams prm(5, 4);
    FieldElement pi = FieldElement::pi_power(prm, 1);
    FieldElement p5 = FieldElement::from_long(prm, 5);

    // pi^4 = 5 exactly
    CHECK(pi * pi * pi * pi == p5);
    // (1 + pi)(1 - pi) = 1 - pi^2
    FieldElement one = FieldElement::from_long(prm, 1);
    CHECK((one + pi) * (one - pi) == one - pi * pi);
    // distributivity spot check
    FieldElement a = FieldElement::pi_power(prm, 3, Rat(2, 7));
    FieldElement b = FieldElement::pi_power(prm, 2, Rat(-1, 3));
    FieldElement c = FieldElement::pi_power(prm, 1, Rat(4));
    CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("inverse round-trips on random elements") {
    FieldParams prm(3, 12);
    Rng rng(kDefaultSeed);
    FieldElement one = FieldElement::from_long(prm, 1);
    for (int k = 0; k < 25; ++k) {
        FieldElement x = random_scaled_unit(prm, static_cast<long>(rng.below(25)) - 6, rng);
        FieldElement y = x.inverse();
        CHECK(x * y == one);
    }
    CHECK(thrown_name([&] { FieldElement(prm).inverse(); }) == "DivisionByZero");
}

TEST_CASE("valuation is additive: v(xy) = v(x) + v(y)") {
    FieldParams prm(5, 4);
    Rng rng(7);
    for (int k = 0; k < 40; ++k) {
        FieldElement x = random_scaled_unit(prm, static_cast<long>(rng.below(17)) - 8, rng);
        FieldElement y = random_scaled_unit(prm, static_cast<long>(rng.below(17)) - 8, rng);
        CHECK(valuation(x * y) == valuation(x) + valuation(y));
    }
}

TEST_CASE("residue map") {
    FieldParams prm(3, 2);
    CHECK(residue(FieldElement::from_long(prm, 5)) == 2);
    CHECK(residue(FieldElement::from_long(prm, -1)) == 2);
    CHECK(residue(FieldElement::pi_power(prm, 1)) == 0); // v > 0
    CHECK(residue(FieldElement(prm)) == 0);
    // 1/3 has negative valuation
    CHECK(thrown_name([&] {
              residue(FieldElement::from_rational(prm, Rat(1, 3)));
          }) == "NegativeValuation");
    // 5 + pi reduces to 2: the pi-digit never shows at valuation 0
    FieldElement x = FieldElement::from_long(prm, 5) + FieldElement::pi_power(prm, 1);
    CHECK(residue(x) == 2);
}

TEST_CASE("random units are units and reproducible by seed") {
    FieldParams prm(5, 4);
    for (std::uint64_t seed : {1729ull, 7ull, 42ull}) {
        FieldElement u1 = random_unit(prm, seed);
        FieldElement u2 = random_unit(prm, seed);
        CHECK(u1 == u2);
        CHECK(valuation(u1) == Valuation(Rat(0)));
    }
    Rng rng(kDefaultSeed);
    for (int k = 0; k < 30; ++k)
        CHECK(valuation(random_unit(prm, rng)) == Valuation(Rat(0)));
}
