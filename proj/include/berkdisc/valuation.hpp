#ifndef BERKDISC_VALUATION_HPP
#define BERKDISC_VALUATION_HPP

#include "berkdisc/rational.hpp"

#include <string>

namespace berkdisc {

/* An element of Q union {+infinity}, ordered the usual way. Valuations are
   additive: v(xy) = v(x) + v(y), and +infinity (the valuation of 0) absorbs.
   Radii are always written through the exponent: rho = p^(-lambda), so larger
   valuation means smaller radius. */
struct Valuation {
    bool infinite = false;
    Rat value = 0; // meaningless when infinite

    Valuation() = default;
    Valuation(Rat v) : value(std::move(v)) {}
    Valuation(long v) : value(v) {}
    static Valuation inf() {
        Valuation v;
        v.infinite = true;
        return v;
    }

    bool is_finite() const { return !infinite; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) return inf();
        return Valuation(a.value + b.value);
    }
};

inline Valuation vmin(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

/* "n/d" for finite values, "inf" otherwise. */
inline std::string val_str(const Valuation& v) {
    return v.infinite ? std::string("inf") : rat_str(v.value);
}

} // namespace berkdisc

#endif
