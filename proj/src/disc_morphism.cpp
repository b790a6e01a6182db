#include "berkdisc/disc_morphism.hpp"

#include "berkdisc/errors.hpp"

#include <utility>

namespace berkdisc {

DiscMorphism DiscMorphism::make(Poly f) {
    if (f.degree() < 1)
        fail("NotFinite", "a finite self-map of the disc needs degree >= 1");
    if (!f.coeff(0).is_zero())
        fail("NotCompatible", "constant term must vanish so that f(0) = 0");
    if (!(valuation(f.coeff(f.degree())) == Valuation(Rat(0))))
        fail("NotFinite", "leading coefficient must be a unit; the degree would "
                          "drop at the boundary otherwise");
    for (long i = 1; i < f.degree(); ++i) {
        Valuation v = valuation(f.coeff(i));
        if (!(v > Valuation(Rat(0))))
            fail("BoundaryZeros", "coefficient " + std::to_string(i) +
                                      " has valuation <= 0: the fiber over a "
                                      "boundary-near value leaves the open disc");
    }
    return DiscMorphism(std::move(f));
}

DiscPoint DiscPoint::make(FieldElement center, Rat lambda) {
    if (!(valuation(center) > Valuation(Rat(0))))
        fail("NotInDisc", "point center must have positive valuation");
    if (lambda <= 0) fail("OutOfDomain", "lambda must be > 0");
    return DiscPoint{std::move(center), std::move(lambda)};
}

bool same_point(const DiscPoint& x, const DiscPoint& y) {
    /* zeta_{a,lambda} = zeta_{b,mu} iff the closed discs coincide: equal
       radii and each center inside the other's disc. */
    return x.lambda == y.lambda && valuation(x.center - y.center) >= Valuation(x.lambda);
}

NewtonPolygon local_polygon(const DiscMorphism& F, const FieldElement& a) {
    if (!(valuation(a) > Valuation(Rat(0))))
        fail("NotInDisc", "polygon center must lie in the open unit disc");
    Poly g = recenter(F.poly(), a);
    std::vector<Line> lines;
    for (long i = 1; i <= g.degree(); ++i)
        lines.push_back({valuation(g.coeff(i)), Rat(i)});
    return NewtonPolygon::from_lines(Domain::positive, lines);
}

NewtonPolygon profile(const DiscMorphism& F, const FieldElement& a) {
    return local_polygon(F, a);
}

namespace {

long slope_as_long(const Rat& s) {
    /* Local polygons have integer slopes (input slopes 1..d). */
    if (rat_den(s) != 1) fail("InvariantViolation", "expected an integer slope");
    return static_cast<long>(rat_num(s));
}

} // namespace

long multiplicity(const DiscMorphism& F, const DiscPoint& pt) {
    return slope_as_long(local_polygon(F, pt.center).slope_left(pt.lambda));
}

long restriction_degree(const DiscMorphism& F, const DiscPoint& pt) {
    return slope_as_long(local_polygon(F, pt.center).slope_right(pt.lambda));
}

Rat image_lambda(const DiscMorphism& F, const FieldElement& a, const Rat& lambda) {
    return local_polygon(F, a).eval(lambda);
}

bool is_etale(const DiscMorphism& F) {
    /* The slope of the valuation polygon at lambda counts the roots of
       valuation >= lambda (vanishing order at 0 included, as the slope at
       +infinity), so f' has no zero inside the open disc iff the right slope
       at 0 vanishes. */
    NewtonPolygon P = valuation_polygon(derivative(F.poly()), Domain::real);
    return P.slope_right(Rat(0)) == 0;
}

Valuation generic_eval_valuation(const DiscMorphism& F, const FieldElement& a,
                                 const Rat& lambda, std::uint64_t seed, int trials) {
    if (!(valuation(a) > Valuation(Rat(0))))
        fail("NotInDisc", "evaluation center must lie in the open unit disc");
    const FieldParams& prm = F.params();
    Rat scaled = lambda * prm.N;
    if (lambda <= 0 || rat_den(scaled) != 1)
        fail("LambdaNotInValueGroup",
             "need lambda in (1/N)Z with lambda > 0, got " + rat_str(lambda));
    const long e = static_cast<long>(rat_num(scaled));

    Rng rng(seed);
    const FieldElement fa = F.poly().evaluate(a);
    Valuation best = Valuation::inf();
    for (int k = 0; k < trials; ++k) {
        FieldElement t = random_unit(prm, rng) * FieldElement::pi_power(prm, e);
        best = vmin(best, valuation(F.poly().evaluate(a + t) - fa));
    }
    return best;
}

} // namespace berkdisc
