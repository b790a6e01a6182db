#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berkdisc/pushforward.hpp"

#include "test_support.hpp"

#include <algorithm>

using namespace berkdisc;
using namespace berkdisc::testing;

namespace {

FieldElement fe(const FieldParams& prm, long c) { return FieldElement::from_long(prm, c); }

DiscMorphism cubic(const FieldParams& prm) {
    return DiscMorphism::make(
        Poly(prm, {FieldElement(prm), fe(prm, -3), FieldElement(prm), fe(prm, 1)}));
}

CountFunction make_nf(std::vector<Rat> jumps, std::vector<long> values) {
    CountFunction nf;
    nf.jumps = std::move(jumps);
    nf.values = std::move(values);
    return nf;
}

Multiradius mr_of(std::vector<Rat> lambdas) {
    Multiradius mr;
    mr.lambdas = std::move(lambdas);
    return mr;
}

} // namespace

TEST_CASE("multiradius from the count function block formula") {
    // degree 1, constant count: the isomorphism keeps radius 1
    CHECK(multiradius_from_count(make_nf({}, {1}), 1) == mr_of({Rat(0)}));

    // flagship cubic: jump at 3/2 forces two entries down to lambda 3/2
    CHECK(multiradius_from_count(make_nf({Rat(3, 2)}, {1, 3}), 3) ==
          mr_of({Rat(3, 2), Rat(3, 2), Rat(0)}));

    // constant count 1 at degree 3 (totally merged segments): all radius 1
    CHECK(multiradius_from_count(make_nf({}, {1}), 3) ==
          mr_of({Rat(0), Rat(0), Rat(0)}));

    // two jumps, intermediate value: blocks of sizes d-w1 / w1-w0 / w0
    CHECK(multiradius_from_count(make_nf({Rat(2), Rat(4)}, {1, 3, 4}), 4) ==
          mr_of({Rat(4), Rat(2), Rat(2), Rat(0)}));

    // a fiber that never fully separates (root multiplicity): value stays
    // below the degree above the last jump
    CHECK(multiradius_from_count(make_nf({Rat(1)}, {1, 2}), 4) ==
          mr_of({Rat(1), Rat(1), Rat(1), Rat(0)}));
}

TEST_CASE("count-function data is validated") {
    CHECK(thrown_name([] {
              multiradius_from_count(make_nf({}, {1}), 0);
          }) == "InconsistentCount");
    CHECK(thrown_name([] {
              multiradius_from_count(make_nf({Rat(1)}, {1}), 3);
          }) == "InconsistentCount");
    CHECK(thrown_name([] {
              multiradius_from_count(make_nf({Rat(0)}, {1, 2}), 3);
          }) == "InconsistentCount");
    CHECK(thrown_name([] {
              multiradius_from_count(make_nf({Rat(2), Rat(1)}, {1, 2, 3}), 3);
          }) == "InconsistentCount");
    CHECK(thrown_name([] {
              multiradius_from_count(make_nf({Rat(1)}, {1, 4}), 3);
          }) == "InconsistentCount");
    CHECK(thrown_name([] {
              multiradius_from_count(make_nf({Rat(1)}, {1, 1}), 3);
          }) == "InconsistentCount"); // value must actually jump

    // a count that starts above 1 is legal data (already-split component
    // bundle): two entries never leave radius 1
    CHECK(multiradius_from_count(make_nf({Rat(1)}, {2, 3}), 3) ==
          mr_of({Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("clustering oracle agrees with the block formula on real fibers") {
    FieldParams prm(3, 2);
    FieldElement zero(prm);
    FieldElement pi = FieldElement::pi_power(prm, 1);

    // flagship cubic, fiber over 0
    {
        DiscMorphism F = cubic(prm);
        FiberData fib = validate_fiber(F, zero, {zero, pi, -pi});
        Multiradius mr = multiradius_from_count(count_function(F, fib), 3);
        CHECK(mr == mr_of({Rat(3, 2), Rat(3, 2), Rat(0)}));
        CHECK(multiradius_bruteforce(F, fib) == mr);
    }

    // quartic with two distance scales in the fiber
    {
        std::vector<FieldElement> c(5, FieldElement(prm));
        c[1] = FieldElement::pi_power(prm, 1, Rat(6));
        c[2] = fe(prm, -3);
        c[3] = FieldElement::pi_power(prm, 1, Rat(-2));
        c[4] = fe(prm, 1);
        DiscMorphism F = DiscMorphism::make(Poly(prm, c));
        FiberData fib = validate_fiber(F, zero, {zero, pi, pi + pi, -pi});
        Multiradius mr = multiradius_from_count(count_function(F, fib), 4);
        CHECK(mr == mr_of({Rat(4), Rat(2), Rat(2), Rat(0)}));
        CHECK(multiradius_bruteforce(F, fib) == mr);
    }

    // degree-5 map with clustered roots 0, +-pi, +-pi^2 over K(5,4)
    {
        FieldParams prm54(5, 4);
        std::vector<FieldElement> c(6, FieldElement(prm54));
        c[1] = FieldElement::pi_power(prm54, 6);
        c[3] = -(FieldElement::pi_power(prm54, 2) + FieldElement::pi_power(prm54, 4));
        c[5] = fe(prm54, 1);
        DiscMorphism F = DiscMorphism::make(Poly(prm54, c));
        FieldElement z54(prm54);
        FieldElement p1 = FieldElement::pi_power(prm54, 1);
        FieldElement p2 = FieldElement::pi_power(prm54, 2);
        FiberData fib = validate_fiber(F, z54, {z54, p1, -p1, p2, -p2});
        Multiradius mr = multiradius_from_count(count_function(F, fib), 5);
        CHECK(mr == mr_of({Rat(2), Rat(2), Rat(5, 4), Rat(5, 4), Rat(0)}));
        CHECK(multiradius_bruteforce(F, fib) == mr);
    }

    // identity: single radius 1
    {
        DiscMorphism F = DiscMorphism::make(Poly(prm, {zero, fe(prm, 1)}));
        FiberData fib = validate_fiber(F, zero, {zero});
        CHECK(multiradius_bruteforce(F, fib) == mr_of({Rat(0)}));
    }
}

TEST_CASE("exactly one entry sits at radius 1 for a split fiber") {
    FieldParams prm(3, 2);
    DiscMorphism F = cubic(prm);
    FieldElement zero(prm);
    FieldElement pi = FieldElement::pi_power(prm, 1);
    FiberData fib = validate_fiber(F, zero, {zero, pi, -pi});
    Multiradius mr = multiradius_from_count(count_function(F, fib), 3);
    CHECK(std::count(mr.lambdas.begin(), mr.lambdas.end(), Rat(0)) == 1);
}

TEST_CASE("star product merges sorted") {
    Multiradius a = mr_of({Rat(3, 2), Rat(0)});
    Multiradius b = mr_of({Rat(2), Rat(1, 2), Rat(0)});
    Multiradius ab = star_product(a, b);
    CHECK(ab == mr_of({Rat(2), Rat(3, 2), Rat(1, 2), Rat(0), Rat(0)}));
    CHECK(star_product(b, a) == ab);
    CHECK(star_product(mr_of({}), a) == a);

    Multiradius c = mr_of({Rat(5)});
    CHECK(star_product(star_product(a, b), c) == star_product(a, star_product(b, c)));
    CHECK(ab.lambdas.size() == a.lambdas.size() + b.lambdas.size());
}

TEST_CASE("multi-component assembly") {
    CountFunction cub = make_nf({Rat(3, 2)}, {1, 3});
    CHECK(multiradius_multi_component({{cub, 3}}) == multiradius_from_count(cub, 3));

    // two copies of the cubic part: the star square has six entries with
    // exactly two at radius 1, one per component
    Multiradius sq = multiradius_multi_component({{cub, 3}, {cub, 3}});
    CHECK(sq == mr_of({Rat(3, 2), Rat(3, 2), Rat(3, 2), Rat(3, 2), Rat(0), Rat(0)}));
    CHECK(std::count(sq.lambdas.begin(), sq.lambdas.end(), Rat(0)) == 2);

    CHECK(thrown_name([] { multiradius_multi_component({}); }) == "EmptyInput");
}

TEST_CASE("profile reconstruction from the count function") {
    FieldParams prm(3, 2);
    NewtonPolygon P = reconstruct_profile_from_count(make_nf({Rat(3, 2)}, {1, 3}), 3);
    REQUIRE(P.pieces().size() == 2);
    CHECK(P.pieces()[0].b == Rat(0));
    CHECK(P.pieces()[0].slope == Rat(3));
    CHECK(P.pieces()[1].b == Rat(1));
    CHECK(P.pieces()[1].slope == Rat(1));
    CHECK(P.equals(profile_of_radial(cubic(prm))));

    // identity
    NewtonPolygon I = reconstruct_profile_from_count(make_nf({}, {1}), 1);
    REQUIRE(I.pieces().size() == 1);
    CHECK(I.pieces()[0].b == Rat(0));
    CHECK(I.pieces()[0].slope == Rat(1));

    // degree-5 radial map T^5 - 5T over K(5,4): jump at 5/4, then full split
    FieldParams prm54(5, 4);
    std::vector<FieldElement> qc(6, FieldElement(prm54));
    qc[1] = fe(prm54, -5);
    qc[5] = fe(prm54, 1);
    NewtonPolygon Q = reconstruct_profile_from_count(make_nf({Rat(5, 4)}, {1, 5}), 5);
    CHECK(Q.equals(profile_of_radial(DiscMorphism::make(Poly(prm54, qc)))));

    // counts that do not divide the degree cannot come from a radial map
    CHECK(thrown_name([] {
              reconstruct_profile_from_count(make_nf({Rat(1)}, {1, 2}), 3);
          }) == "NotRealizable");
}

TEST_CASE("main theorem consistency check on the disc") {
    FieldParams prm(3, 2);
    FieldElement zero(prm);
    FieldElement pi = FieldElement::pi_power(prm, 1);

    DiscMorphism F = cubic(prm);
    FiberData f0 = validate_fiber(F, zero, {zero, pi, -pi});
    FiberData f1 = validate_fiber(F, FieldElement::pi_power(prm, 1, Rat(-360, 343)),
                                  {FieldElement::pi_power(prm, 1, Rat(3, 7)),
                                   FieldElement::pi_power(prm, 1, Rat(-8, 7)),
                                   FieldElement::pi_power(prm, 1, Rat(5, 7))});

    MainTheoremReport rep = check_main_theorem_disc(F, {f0, f1});
    CHECK(rep.verdict.status == RadialStatus::certified);
    CHECK(rep.all_equal);
    CHECK(rep.consistent);
    REQUIRE(rep.fiber_multiradii.size() == 2);
    CHECK(rep.fiber_multiradii[0] == rep.fiber_multiradii[1]);

    CHECK(thrown_name([&] {
              check_main_theorem_disc(F, {f0});
          }) == "EmptyInput");

    // non-radial quadratic: fibers over 0 and over f(pi) have different
    // multiradii, and the verdict is refuted, which is the consistent pairing
    FieldParams prm54(5, 4);
    FieldElement z54(prm54);
    FieldElement q1 = FieldElement::pi_power(prm54, 1);
    FieldElement q2 = FieldElement::pi_power(prm54, 2);
    DiscMorphism G = DiscMorphism::make(
        Poly(prm54, {z54, -q2, fe(prm54, 1)})); // T^2 - pi^2 T
    FiberData g0 = validate_fiber(G, z54, {z54, q2});
    FiberData g1 = validate_fiber(G, G.poly().evaluate(q1), {q1, q2 - q1});
    MainTheoremReport rep2 = check_main_theorem_disc(G, {g0, g1});
    CHECK(rep2.verdict.status == RadialStatus::refuted);
    CHECK(!rep2.all_equal);
    CHECK(rep2.consistent);
    CHECK(rep2.fiber_multiradii[0] == mr_of({Rat(1), Rat(0)}));
    CHECK(rep2.fiber_multiradii[1] == mr_of({Rat(1, 2), Rat(0)}));
}
