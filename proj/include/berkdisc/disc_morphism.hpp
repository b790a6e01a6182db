#ifndef BERKDISC_DISC_MORPHISM_HPP
#define BERKDISC_DISC_MORPHISM_HPP

#include "berkdisc/polynomial.hpp"

#include <cstdint>

namespace berkdisc {

/* A finite self-map of the open unit disc given by a polynomial f with
   f(0) = 0, unit leading coefficient and topologically nilpotent middle
   coefficients:

     a_0 = 0          (fixes a point of the disc; NotCompatible otherwise)
     v(a_d) = 0       (degree survives at the boundary; NotFinite otherwise)
     v(a_i) > 0, 0<i<d (no zeros on the boundary circle; BoundaryZeros)

   Together these force the valuation polygon restricted to lambda > 0 to
   start with slope d and the image to stay inside the open disc. */
class DiscMorphism {
public:
    static DiscMorphism make(Poly f);

    const Poly& poly() const { return f_; }
    const FieldParams& params() const { return f_.params(); }
    int degree() const { return f_.degree(); }

private:
    explicit DiscMorphism(Poly f) : f_(std::move(f)) {}
    Poly f_;
};

/* The point zeta_{a,lambda}: the sup-norm point of the closed disc of radius
   p^(-lambda) around a. lambda = +infinity degenerates to the rational point
   a itself; the ops below take finite lambda > 0. Two descriptions name the
   same point iff the lambdas agree and v(a - b) >= lambda. */
struct DiscPoint {
    FieldElement center; // v(center) > 0 (NotInDisc enforced by make)
    Rat lambda;          // > 0 (OutOfDomain enforced by make)

    static DiscPoint make(FieldElement center, Rat lambda);
};

bool same_point(const DiscPoint& x, const DiscPoint& y);

/* Envelope of the lines (v((hasse_i f)(a)), i), i = 1..d, on lambda > 0: the
   valuation polygon of f(T + a) - f(a). Its value at lambda is
   v(f - f(a)) at the point zeta_{a,lambda}. NotInDisc if v(a) <= 0. */
NewtonPolygon local_polygon(const DiscMorphism& F, const FieldElement& a);

/* Same polygon viewed as the radius map of f along the segment from a to the
   boundary: zeta_{a,lambda} maps to zeta_{f(a),profile(lambda)}. */
NewtonPolygon profile(const DiscMorphism& F, const FieldElement& a);

/* Local degree of f at zeta_{a,lambda}: left slope of the local polygon. */
long multiplicity(const DiscMorphism& F, const DiscPoint& pt);

/* Degree of f restricted to the closed disc around a of radius lambda:
   right slope of the local polygon. */
long restriction_degree(const DiscMorphism& F, const DiscPoint& pt);

/* lambda-coordinate of the image point: local polygon evaluated at lambda. */
Rat image_lambda(const DiscMorphism& F, const FieldElement& a, const Rat& lambda);

/* True iff f' has no zero in the open disc: the valuation polygon of f' has
   no root of valuation > 0 (and none at infinity, i.e. a_1 != 0). */
bool is_etale(const DiscMorphism& F);

/* min over `trials` draws t = u pi^(lambda N), u a seeded random unit, of
   v(f(a + t) - f(a)). Always >= the polygon value; equality is generic.
   LambdaNotInValueGroup unless lambda is in (1/N)Z, lambda > 0. */
Valuation generic_eval_valuation(const DiscMorphism& F, const FieldElement& a,
                                 const Rat& lambda, std::uint64_t seed, int trials);

} // namespace berkdisc

#endif
