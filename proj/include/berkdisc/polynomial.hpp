#ifndef BERKDISC_POLYNOMIAL_HPP
#define BERKDISC_POLYNOMIAL_HPP

#include "berkdisc/field.hpp"
#include "berkdisc/polygon.hpp"

#include <vector>

namespace berkdisc {

/* Dense coefficient vector over K, ascending degree, trailing zeros trimmed.
   The zero polynomial is the empty vector and reports degree -1; everything
   else has degree = coeffs.size() - 1 with a nonzero top coefficient. */
class Poly {
public:
    Poly() = default;
    explicit Poly(const FieldParams& params) : params_(params) {}
    Poly(const FieldParams& params, std::vector<FieldElement> coeffs);

    const FieldParams& params() const { return params_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /* Zero element beyond the degree, so callers can index freely. */
    FieldElement coeff(long i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElement& c) const;

    FieldElement evaluate(const FieldElement& t) const; // Horner

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    FieldParams params_;
    std::vector<FieldElement> coeffs_;

    void trim();
};

/* i-th Hasse derivative: coefficient of T^j is binom(i+j, i) * a_{i+j}.
   Over residue characteristic p this is the right divided-power substitute
   for f^(i)/i!, and the binomials are computed as exact integers. */
Poly hasse_derivative(const Poly& f, long i);

/* First derivative; identical to hasse_derivative(f, 1). */
Poly derivative(const Poly& f);

/* g with g(T) = f(T + a) - f(a); concretely g_i = (hasse_i f)(a) for i >= 1
   and g_0 = 0. */
Poly recenter(const Poly& f, const FieldElement& a);

/* Monic-times-leading product of (T - r) over the multiset of roots. */
Poly from_roots(const FieldParams& params, const std::vector<FieldElement>& roots,
                const FieldElement& leading);

/* Envelope of the lines (v(a_i), i) for i = 0..deg f over the chosen domain.
   This is the valuation polygon: its value at lambda is the generic valuation
   of f on the circle of radius p^(-lambda), and slope drops count roots. */
NewtonPolygon valuation_polygon(const Poly& f, Domain domain);

} // namespace berkdisc

#endif
