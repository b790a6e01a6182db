#ifndef BERKDISC_FIELD_HPP
#define BERKDISC_FIELD_HPP

#include "berkdisc/rational.hpp"
#include "berkdisc/rng.hpp"
#include "berkdisc/valuation.hpp"

#include <cstdint>
#include <vector>

namespace berkdisc {

/* The ground field is K = Q(pi) with pi^N = p, a totally ramified degree-N
   extension of Q with the p-adic valuation extended by v(pi) = 1/N. Elements
   are stored exactly, so the field is the algebraic number field itself, not
   a completion: every computation below is exact rational arithmetic. */
struct FieldParams {
    long p = 0; // residue characteristic, prime
    long N = 1; // ramification index

    FieldParams() = default;
    FieldParams(long p_, long N_); // validates: p prime, N >= 1

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/* x = sum_{e=0}^{N-1} c_e pi^e with rational c_e. The basis is rigid, so
   equality is coefficientwise. The valuation is exact because the candidates
   vp(c_e) + e/N have pairwise distinct residues mod 1: no two can tie, hence
   v(x) = min over nonzero coefficients, no cancellation possible. */
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(const FieldParams& params)
        : params_(params), coeffs_(static_cast<size_t>(params.N), Rat(0)) {}

    static FieldElement from_rational(const FieldParams& params, const Rat& c);
    static FieldElement from_long(const FieldParams& params, long c);
    /* pi^e times c; e may be any integer (negative powers divide by p). */
    static FieldElement pi_power(const FieldParams& params, long e, const Rat& c = 1);

    const FieldParams& params() const { return params_; }
    const Rat& coeff(long e) const { return coeffs_[static_cast<size_t>(e)]; }
    void set_coeff(long e, Rat c) { coeffs_[static_cast<size_t>(e)] = std::move(c); }

    bool is_zero() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    /* Multiplicative inverse via the extended Euclidean algorithm in Q[x]
       against x^N - p. DivisionByZero on zero input. */
    FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
    }

private:
    FieldParams params_;
    std::vector<Rat> coeffs_;

    void require_same(const FieldElement& o) const;
};

/* v(x) in (1/N)Z, or +infinity for x = 0. */
Valuation valuation(const FieldElement& x);

/* Image in the residue field F_p as an integer in [0, p): c_0 mod p when
   v(x) = 0, 0 when v(x) > 0. NegativeValuation when v(x) < 0. */
long residue(const FieldElement& x);

/* A unit drawn from the seeded stream: residue uniform in [1, p), higher
   pi-digits uniform in [0, p). Always v = 0. */
FieldElement random_unit(const FieldParams& params, Rng& rng);
FieldElement random_unit(const FieldParams& params, std::uint64_t seed);

} // namespace berkdisc

#endif
