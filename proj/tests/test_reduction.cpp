#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berkdisc/reduction.hpp"

#include "test_support.hpp"

using namespace berkdisc;
using namespace berkdisc::testing;

namespace {

FpPoly fp(long p, std::vector<long> coeffs) {
    FpPoly f;
    f.p = p;
    f.coeffs = std::move(coeffs);
    return f;
}

} // namespace

TEST_CASE("residue polynomial printing") {
    CHECK(fp(3, {2, 0, 1, 2}).str() == "2 + T^2 + 2*T^3");
    CHECK(fp(3, {}).str() == "0");
    CHECK(fp(3, {0, 1}).str() == "T");
    CHECK(fp(3, {0, 2}).str() == "2*T");
    CHECK(fp(5, {1}).str() == "1");
    CHECK(fp(3, {0, 0, 1}).str() == "T^2");
}

TEST_CASE("derivative over F_p kills p-th powers") {
    CHECK(fp_derivative(fp(3, {1, 2, 1})) == fp(3, {2, 2}));
    // d/dT T^3 = 3T^2 = 0 in characteristic 3
    CHECK(fp_derivative(fp(3, {0, 0, 0, 1})).is_zero());
    CHECK(fp_derivative(fp(3, {2})).is_zero());
    CHECK(fp_derivative(fp(2, {0, 1, 1})) == fp(2, {1}));
}

TEST_CASE("reduction at the Gauss point") {
    FieldParams prm(3, 2);
    FieldElement zero(prm);
    auto fe = [&](long c) { return FieldElement::from_long(prm, c); };

    // T^3 - 3T: the -3 coefficient has positive valuation and vanishes
    Poly cubic(prm, {zero, fe(-3), zero, fe(1)});
    CHECK(reduce_at_gauss(cubic) == fp(3, {0, 0, 0, 1}));

    // coefficients reduce mod p into [0, p)
    Poly shifted(prm, {fe(7), fe(-1), fe(5)});
    CHECK(reduce_at_gauss(shifted) == fp(3, {1, 2, 2}));

    // pi^6 T over K(3,12) has valuation 1/2 and reduces to zero
    FieldParams wide(3, 12);
    std::vector<FieldElement> c6(7, FieldElement(wide));
    c6[1] = FieldElement::pi_power(wide, 6);
    c6[6] = FieldElement::from_long(wide, 1);
    CHECK(reduce_at_gauss(Poly(wide, c6)) == fp(3, {0, 0, 0, 0, 0, 0, 1}));

    CHECK(reduce_at_gauss(Poly(prm)).is_zero());

    // a denominator divisible by p is not integral at the Gauss point
    CHECK(thrown_name([&] {
              reduce_at_gauss(Poly(prm, {FieldElement::from_rational(prm, Rat(1, 3)), fe(1)}));
          }) == "NotIntegral");

    // leading coefficient pi: degree would drop under reduction
    CHECK(thrown_name([&] {
              reduce_at_gauss(Poly(prm, {fe(1), FieldElement::pi_power(prm, 1)}));
          }) == "DegreeDrop");
}

TEST_CASE("inseparable/separable split") {
    // T^3 = (T)^(3^1)
    SepSplit s = insep_sep_split(fp(3, {0, 0, 0, 1}));
    CHECK(s.r == 1);
    CHECK(s.g == fp(3, {0, 1}));

    // T^6 = (T^2)^(3^1), and T^2 is separable
    s = insep_sep_split(fp(3, {0, 0, 0, 0, 0, 0, 1}));
    CHECK(s.r == 1);
    CHECK(s.g == fp(3, {0, 0, 1}));

    // T^9 = (T)^(3^2)
    s = insep_sep_split(fp(3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(s.r == 2);
    CHECK(s.g == fp(3, {0, 1}));

    // T^2 + T has a nonzero coefficient at an index coprime to p
    s = insep_sep_split(fp(3, {0, 1, 1}));
    CHECK(s.r == 0);
    CHECK(s.g == fp(3, {0, 1, 1}));

    // T^3 + 1 is a cube in characteristic 3: (T + 1)^3
    s = insep_sep_split(fp(3, {1, 0, 0, 1}));
    CHECK(s.r == 1);
    CHECK(s.g == fp(3, {1, 1}));

    CHECK(thrown_name([] { insep_sep_split(fp(3, {2})); }) == "ConstantInput");
    CHECK(thrown_name([] { insep_sep_split(fp(3, {})); }) == "ConstantInput");
}

TEST_CASE("classification of the reduction") {
    // pure Frobenius power: radicial and uniformly ramified
    ResidualReport rep = classify(fp(3, {0, 0, 0, 1}));
    CHECK(rep.r == 1);
    CHECK(rep.g == fp(3, {0, 1}));
    CHECK(rep.sep_degree == 1);
    CHECK(rep.insep_degree == 3);
    CHECK(rep.uniformly_ramified);
    CHECK(rep.cls == ResidualClass::radicial);
    CHECK(std::string(residual_class_name(rep.cls)) == "radicial");

    // T^6 = (T^2)^3: mixed, and T^2 ramifies at the origin only
    rep = classify(fp(3, {0, 0, 0, 0, 0, 0, 1}));
    CHECK(rep.sep_degree == 2);
    CHECK(rep.insep_degree == 3);
    CHECK(!rep.uniformly_ramified);
    CHECK(rep.cls == ResidualClass::mixed);

    // degree 1: etale
    rep = classify(fp(3, {0, 1}));
    CHECK(rep.sep_degree == 1);
    CHECK(rep.insep_degree == 1);
    CHECK(rep.uniformly_ramified);
    CHECK(rep.cls == ResidualClass::etale);

    // separable but ramified somewhere: T^2 + T in odd characteristic
    rep = classify(fp(3, {0, 1, 1}));
    CHECK(rep.insep_degree == 1);
    CHECK(!rep.uniformly_ramified);
    CHECK(rep.cls == ResidualClass::separable);

    // Artin-Schreier T^2 + T in characteristic 2 is etale
    rep = classify(fp(2, {0, 1, 1}));
    CHECK(rep.insep_degree == 1);
    CHECK(rep.uniformly_ramified);
    CHECK(rep.cls == ResidualClass::etale);

    // sep_degree * insep_degree always recovers the full degree, and the
    // separable part has nonzero derivative by construction
    for (const FpPoly& ft : {fp(3, {0, 0, 0, 1}), fp(3, {0, 0, 0, 0, 0, 0, 1}),
                             fp(3, {0, 1, 1}), fp(3, {1, 0, 0, 1}), fp(2, {0, 1, 1}),
                             fp(5, {0, 2, 0, 0, 0, 1})}) {
        ResidualReport r = classify(ft);
        CHECK(r.sep_degree * r.insep_degree == ft.degree());
        CHECK(!fp_derivative(r.g).is_zero());
    }
}

TEST_CASE("end-to-end residual analysis") {
    FieldParams prm(3, 2);
    FieldElement zero(prm);
    auto fe = [&](long c) { return FieldElement::from_long(prm, c); };

    ResidualReport rep = residual_analysis(Poly(prm, {zero, fe(-3), zero, fe(1)}));
    CHECK(rep.f_tilde == fp(3, {0, 0, 0, 1}));
    CHECK(rep.f_tilde.str() == "T^3");
    CHECK(rep.cls == ResidualClass::radicial);
    CHECK(rep.uniformly_ramified);

    FieldParams wide(3, 12);
    std::vector<FieldElement> c6(7, FieldElement(wide));
    c6[1] = FieldElement::pi_power(wide, 6);
    c6[6] = FieldElement::from_long(wide, 1);
    rep = residual_analysis(Poly(wide, c6));
    CHECK(rep.insep_degree == 3);
    CHECK(rep.sep_degree == 2);
    CHECK(rep.cls == ResidualClass::mixed);
    CHECK(!rep.uniformly_ramified);

    rep = residual_analysis(Poly(prm, {zero, fe(1)}));
    CHECK(rep.cls == ResidualClass::etale);
}
