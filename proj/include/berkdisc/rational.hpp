#ifndef BERKDISC_RATIONAL_HPP
#define BERKDISC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace berkdisc {

/* All arithmetic in this library is exact. Rationals are the only scalar
   type; there is no floating point anywhere in the core. */
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/* p-adic valuation of a nonzero integer: the exact number of times p divides
   n. Caller guarantees n != 0 and p >= 2. */
long vp(Int n, long p);

/* p-adic valuation of a nonzero rational: vp(num) - vp(den). */
long vp(const Rat& r, long p);

/* Canonical string form "num/den", always with the denominator, lowest terms,
   sign on the numerator. This is the wire format for rationals. */
std::string rat_str(const Rat& r);

/* Accepts "n" or "n/d". Throws std::invalid_argument on malformed input. */
Rat rat_parse(const std::string& s);

/* floor(r) as an exact integer. */
Int rat_floor(const Rat& r);

/* Decimal expansion of r truncated toward zero to `digits` places, computed
   by integer long division. Display helper only; never fed back into math. */
std::string decimal_string(const Rat& r, unsigned digits);

/* Largest x >= 0 with x^n <= a. Caller guarantees a >= 0, n >= 1. */
Int integer_nth_root(const Int& a, unsigned n);

} // namespace berkdisc

#endif
