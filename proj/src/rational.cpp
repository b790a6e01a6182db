#include "berkdisc/rational.hpp"

#include <stdexcept>

namespace berkdisc {

long vp(Int n, long p) {
    if (n == 0) throw std::invalid_argument("vp: zero has no finite valuation");
    long v = 0;
    Int q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, Int(p), q, r);
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

long vp(const Rat& r, long p) {
    return vp(rat_num(r), p) - vp(rat_den(r), p);
}

std::string rat_str(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rat_parse: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    }
}

Int rat_floor(const Rat& r) {
    Int q, rem;
    boost::multiprecision::divide_qr(rat_num(r), rat_den(r), q, rem);
    if (rem != 0 && r < 0) --q;
    return q;
}

std::string decimal_string(const Rat& r, unsigned digits) {
    const bool neg = r < 0;
    Int num = boost::multiprecision::abs(rat_num(r));
    const Int den = rat_den(r);
    Int ip = num / den;
    Int rem = num - ip * den;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits == 0) return out;
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        Int d = rem / den;
        rem -= d * den;
        out += static_cast<char>('0' + d.convert_to<int>());
    }
    return out;
}

Int integer_nth_root(const Int& a, unsigned n) {
    if (a < 0) throw std::invalid_argument("integer_nth_root: negative input");
    if (n == 0) throw std::invalid_argument("integer_nth_root: zeroth root");
    if (a == 0 || a == 1 || n == 1) return a;
    /* Binary search on x^n <= a; bounds from the bit length. */
    Int lo = 1;
    Int hi = Int(1) << (boost::multiprecision::msb(a) / n + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace berkdisc
