#include "berkdisc/field.hpp"

#include "berkdisc/errors.hpp"

#include <stdexcept>
#include <utility>

namespace berkdisc {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/* Dense polynomials over Q, used only inside inverse(). */
using QPoly = std::vector<Rat>;

int qdeg(const QPoly& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<size_t>(d)] == 0) --d;
    return d;
}

/* (quotient, remainder) of a by b, b nonzero. */
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    const int db = qdeg(b);
    QPoly q(a.size(), Rat(0));
    for (int da = qdeg(a); da >= db; da = qdeg(a)) {
        Rat c = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(da - db)] = c;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(da - db + j)] -= c * b[static_cast<size_t>(j)];
        a[static_cast<size_t>(da)] = 0; // kill rounding-free leading term exactly
    }
    return {std::move(q), std::move(a)};
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    /* a - q*b */
    QPoly out = a;
    const size_t need = q.size() + b.size();
    if (out.size() < need) out.resize(need, Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    return out;
}

} // namespace

FieldParams::FieldParams(long p_, long N_) : p(p_), N(N_) {
    if (!is_prime(p)) throw std::invalid_argument("FieldParams: p must be prime");
    if (N < 1) throw std::invalid_argument("FieldParams: ramification must be >= 1");
}

FieldElement FieldElement::from_rational(const FieldParams& params, const Rat& c) {
    FieldElement x(params);
    x.coeffs_[0] = c;
    return x;
}

FieldElement FieldElement::from_long(const FieldParams& params, long c) {
    return from_rational(params, Rat(c));
}

FieldElement FieldElement::pi_power(const FieldParams& params, long e, const Rat& c) {
    /* pi^e = p^q * pi^r with e = q*N + r, 0 <= r < N (floor division). */
    long q = e / params.N;
    long r = e % params.N;
    if (r < 0) {
        r += params.N;
        --q;
    }
    Rat scale = c;
    if (q >= 0)
        scale *= boost::multiprecision::pow(Int(params.p), static_cast<unsigned>(q));
    else
        scale /= boost::multiprecision::pow(Int(params.p), static_cast<unsigned>(-q));
    FieldElement x(params);
    x.coeffs_[static_cast<size_t>(r)] = scale;
    return x;
}

bool FieldElement::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

void FieldElement::require_same(const FieldElement& o) const {
    if (!(params_ == o.params_))
        fail("NotCompatible", "field elements live over different parameters");
}

FieldElement FieldElement::operator-() const {
    FieldElement out(params_);
    for (size_t e = 0; e < coeffs_.size(); ++e) out.coeffs_[e] = -coeffs_[e];
    return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    FieldElement out(params_);
    for (size_t e = 0; e < coeffs_.size(); ++e) out.coeffs_[e] = coeffs_[e] + o.coeffs_[e];
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    FieldElement out(params_);
    for (size_t e = 0; e < coeffs_.size(); ++e) out.coeffs_[e] = coeffs_[e] - o.coeffs_[e];
    return out;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    /* Convolution folded with pi^(N+k) = p * pi^k. */
    const long N = params_.N;
    FieldElement out(params_);
    for (long i = 0; i < N; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < N; ++j) {
            if (o.coeffs_[static_cast<size_t>(j)] == 0) continue;
            Rat term = coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
            long e = i + j;
            if (e >= N) {
                e -= N;
                term *= params_.p;
            }
            out.coeffs_[static_cast<size_t>(e)] += term;
        }
    }
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    const long N = params_.N;

    /* Extended Euclid in Q[x] against the minimal polynomial x^N - p, which
       is Eisenstein at p and hence irreducible, so the gcd is a nonzero
       constant and t solves a*t = gcd (mod x^N - p). */
    QPoly modulus(static_cast<size_t>(N) + 1, Rat(0));
    modulus[0] = Rat(-params_.p);
    modulus[static_cast<size_t>(N)] = 1;

    QPoly r0 = modulus;
    QPoly r1(coeffs_.begin(), coeffs_.end());
    QPoly t0 = {Rat(0)};
    QPoly t1 = {Rat(1)};

    while (qdeg(r1) >= 0) {
        auto [q, rem] = qdivmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly tn = qsub_mul(t0, q, t1);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    /* r0 is the constant gcd; divide through. */
    const Rat g = r0[0];
    FieldElement out(params_);
    for (long e = 0; e < N; ++e) {
        Rat c = (static_cast<size_t>(e) < t0.size()) ? t0[static_cast<size_t>(e)] : Rat(0);
        out.coeffs_[static_cast<size_t>(e)] = c / g;
    }
    return out;
}

Valuation valuation(const FieldElement& x) {
    const FieldParams& prm = x.params();
    Valuation best = Valuation::inf();
    for (long e = 0; e < prm.N; ++e) {
        const Rat& c = x.coeff(e);
        if (c == 0) continue;
        /* vp(c) + e/N; the fractional parts e/N are pairwise distinct, so
           distinct terms never tie and the min is the exact valuation. */
        Valuation cand(Rat(vp(c, prm.p)) + Rat(e, prm.N));
        best = vmin(best, cand);
    }
    return best;
}

long residue(const FieldElement& x) {
    const FieldParams& prm = x.params();
    Valuation v = valuation(x);
    if (v < Valuation(Rat(0)))
        fail("NegativeValuation", "residue needs v(x) >= 0, got " + val_str(v));
    if (v > Valuation(Rat(0))) return 0;
    /* v(x) = 0 forces the minimum at e = 0 (all other candidates have nonzero
       fractional part), so x = c_0 up to the maximal ideal. */
    const Rat& c0 = x.coeff(0);
    const long p = prm.p;
    long num = static_cast<long>(rat_num(c0) % p);
    long den = static_cast<long>(rat_den(c0) % p);
    if (num < 0) num += p;
    if (den < 0) den += p;
    /* den is a unit mod p; invert by Fermat. */
    long inv = 1, base = den, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return (num * inv) % p;
}

FieldElement random_unit(const FieldParams& params, Rng& rng) {
    FieldElement x(params);
    x.set_coeff(0, Rat(1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(params.p - 1)))));
    for (long e = 1; e < params.N; ++e)
        x.set_coeff(e, Rat(static_cast<long>(rng.below(static_cast<std::uint64_t>(params.p)))));
    return x;
}

FieldElement random_unit(const FieldParams& params, std::uint64_t seed) {
    Rng rng(seed);
    return random_unit(params, rng);
}

} // namespace berkdisc
