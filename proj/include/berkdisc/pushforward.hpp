#ifndef BERKDISC_PUSHFORWARD_HPP
#define BERKDISC_PUSHFORWARD_HPP

#include "berkdisc/fiber.hpp"
#include "berkdisc/radiality.hpp"

#include <utility>
#include <vector>

namespace berkdisc {

/* Multiradius of the pushforward of the constant connection along f over a
   segment: d convergence radii, stored through their exponents lambda with
   radius = p^(-lambda), sorted nonincreasing in lambda (nondecreasing in
   radius). Everything here is determined by the fiber-count function. */
struct Multiradius {
    std::vector<Rat> lambdas;

    friend bool operator==(const Multiradius&, const Multiradius&) = default;
};

/* Closed-form translation of the count function, jumps lambda_1 < ... <
   lambda_m with value w_k above lambda_k (w_0 below the first jump):

     w_0 entries at lambda = 0,
     w_k - w_{k-1} entries at lambda_k   for k = 1..m-1,
     d - w_{m-1}  entries at lambda_m,

   and all d entries at lambda = 0 when there is no jump. InconsistentCount
   when the data cannot come from a degree-d fiber (sizes off, values not
   nondecreasing, out of [1, d], or jumps not increasing and positive). */
Multiradius multiradius_from_count(const CountFunction& nf, long d);

/* Independent route used as the oracle: for each threshold K = 2..d take the
   smallest candidate lambda at which the preimage of the OPEN disc has at
   least K components (open-disc clustering is the strict comparison
   v(r_i - r_j) > lambda_i, evaluated exactly at each candidate jump);
   thresholds never reached (root multiplicity) take the largest candidate,
   and K <= 1 sits at lambda = 0. Must agree with multiradius_from_count on
   every fiber, entry for entry. */
Multiradius multiradius_bruteforce(const DiscMorphism& F, const FiberData& fiber);

/* Multiradius of a direct sum: concatenate and resort. */
Multiradius star_product(const Multiradius& a, const Multiradius& b);

/* Star product over the components of a disjoint preimage, one count
   function and local degree per component. */
Multiradius multiradius_multi_component(const std::vector<std::pair<CountFunction, long>>& parts);

/* Left inverse of "radial profile -> count function": integrate
   dQ/dmu = N(mu)/d from Q(0) = 0 (so Q is the inverse profile) and invert.
   Exact round-trip on certified-radial morphisms. NotRealizable when some
   value fails to divide d (slopes d/w_k must be integers). */
NewtonPolygon reconstruct_profile_from_count(const CountFunction& nf, long d);

/* Radiality verdict side by side with per-fiber multiradii. The theorem
   being exercised: radial implies the multiradius is the same over every
   point; so certified + unequal multiradii is a hard inconsistency
   (InvariantViolation), while refuted + equal multiradii is fine (sampling
   two fibers proves nothing). Requires at least two validated fibers. */
struct MainTheoremReport {
    RadialityVerdict verdict;
    std::vector<Multiradius> fiber_multiradii;
    bool all_equal = false;
    bool consistent = false;
};

MainTheoremReport check_main_theorem_disc(const DiscMorphism& F,
                                          const std::vector<FiberData>& fibers,
                                          std::uint64_t seed = kDefaultSeed);

} // namespace berkdisc

#endif
