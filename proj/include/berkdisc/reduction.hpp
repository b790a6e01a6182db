#ifndef BERKDISC_REDUCTION_HPP
#define BERKDISC_REDUCTION_HPP

#include "berkdisc/polynomial.hpp"

#include <string>
#include <vector>

namespace berkdisc {

/* Polynomial over the residue field F_p: coefficients normalized to [0, p),
   ascending degree, trailing zeros trimmed (zero polynomial = empty). */
struct FpPoly {
    long p = 0;
    std::vector<long> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    long coeff(long i) const {
        return (i >= 0 && i <= degree()) ? coeffs[static_cast<size_t>(i)] : 0;
    }

    /* Canonical ascending-degree form: "2 + T^2 + 2*T^3"; "0" when zero. */
    std::string str() const;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

FpPoly fp_derivative(const FpPoly& f);

/* Coefficientwise residue of f at the Gauss point of the closed unit disc.
   Requires every coefficient integral (NotIntegral when some v(a_i) < 0) and
   a unit leading coefficient so the degree survives (DegreeDrop). */
FpPoly reduce_at_gauss(const Poly& f);

/* Largest r with ft in F_p[T^(p^r)], and the separable part g defined by
   ft(T) = g(T^(p^r)). Over F_p the Frobenius fixes coefficients, so g is
   plain index reindexing: g_j = ft_{j p^r}. ConstantInput when deg ft < 1. */
struct SepSplit {
    int r = 0;
    FpPoly g;
};

SepSplit insep_sep_split(const FpPoly& ft);

enum class ResidualClass { radicial, separable, etale, mixed };

const char* residual_class_name(ResidualClass c);

/* Invariants of the reduction: ft = g(T^(p^r)) with g separable,
   insep_degree = p^r, sep_degree = deg g, product = deg ft.
   uniformly_ramified iff g' is a nonzero constant (each residue point sits
   under the same local behavior). Classes: radicial iff sep_degree = 1,
   separable iff insep_degree = 1, etale = separable + uniformly ramified,
   mixed otherwise. */
struct ResidualReport {
    FpPoly f_tilde;
    int r = 0;
    FpPoly g;
    long sep_degree = 0;
    long insep_degree = 0;
    bool uniformly_ramified = false;
    ResidualClass cls = ResidualClass::mixed;
};

ResidualReport classify(const FpPoly& ft);

/* Full pipeline from an integral polynomial over K. */
ResidualReport residual_analysis(const Poly& f);

} // namespace berkdisc

#endif
