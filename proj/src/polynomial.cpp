#include "berkdisc/polynomial.hpp"

#include "berkdisc/errors.hpp"

#include <utility>

namespace berkdisc {

namespace {

/* binom(n, k) as an exact integer, multiplicative form. */
Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

} // namespace

Poly::Poly(const FieldParams& params, std::vector<FieldElement> coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
    for (const FieldElement& c : coeffs_)
        if (!(c.params() == params_))
            fail("NotCompatible", "coefficient over different field parameters");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Poly::coeff(long i) const {
    if (i < 0 || i > degree()) return FieldElement(params_);
    return coeffs_[static_cast<size_t>(i)];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElement> c;
    const long d = std::max(degree(), o.degree());
    c.reserve(static_cast<size_t>(d + 1));
    for (long i = 0; i <= d; ++i) c.push_back(coeff(i) + o.coeff(i));
    return Poly(params_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FieldElement> c;
    const long d = std::max(degree(), o.degree());
    c.reserve(static_cast<size_t>(d + 1));
    for (long i = 0; i <= d; ++i) c.push_back(coeff(i) - o.coeff(i));
    return Poly(params_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(params_);
    std::vector<FieldElement> c(static_cast<size_t>(degree() + o.degree() + 1),
                                FieldElement(params_));
    for (long i = 0; i <= degree(); ++i) {
        if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (long j = 0; j <= o.degree(); ++j)
            c[static_cast<size_t>(i + j)] =
                c[static_cast<size_t>(i + j)] +
                coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
    }
    return Poly(params_, std::move(c));
}

Poly Poly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const FieldElement& a : coeffs_) out.push_back(a * c);
    return Poly(params_, std::move(out));
}

FieldElement Poly::evaluate(const FieldElement& t) const {
    FieldElement acc(params_);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

Poly hasse_derivative(const Poly& f, long i) {
    if (i < 0) fail("OutOfDomain", "hasse_derivative order must be >= 0");
    if (i == 0) return f;
    const FieldParams& prm = f.params();
    std::vector<FieldElement> c;
    for (long j = 0; i + j <= f.degree(); ++j) {
        FieldElement b = FieldElement::from_rational(prm, Rat(binomial(i + j, i)));
        c.push_back(b * f.coeff(i + j));
    }
    return Poly(prm, std::move(c));
}

Poly derivative(const Poly& f) { return hasse_derivative(f, 1); }

Poly recenter(const Poly& f, const FieldElement& a) {
    /* g_i = (hasse_i f)(a): the Taylor coefficients of f around a, with the
       constant term dropped so that g(T) = f(T + a) - f(a). */
    const FieldParams& prm = f.params();
    std::vector<FieldElement> c;
    c.push_back(FieldElement(prm));
    for (long i = 1; i <= f.degree(); ++i) c.push_back(hasse_derivative(f, i).evaluate(a));
    return Poly(prm, std::move(c));
}

Poly from_roots(const FieldParams& params, const std::vector<FieldElement>& roots,
                const FieldElement& leading) {
    Poly acc(params, {leading});
    for (const FieldElement& r : roots) {
        Poly lin(params, {-r, FieldElement::from_long(params, 1)});
        acc = acc * lin;
    }
    return acc;
}

NewtonPolygon valuation_polygon(const Poly& f, Domain domain) {
    std::vector<Line> lines;
    for (long i = 0; i <= f.degree(); ++i)
        lines.push_back({valuation(f.coeff(i)), Rat(i)});
    return NewtonPolygon::from_lines(domain, lines);
}

} // namespace berkdisc
