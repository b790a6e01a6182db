#ifndef BERKDISC_FIBER_HPP
#define BERKDISC_FIBER_HPP

#include "berkdisc/disc_morphism.hpp"

#include <vector>

namespace berkdisc {

/* A fully split fiber: the target value c together with all d roots of
   f(T) = c, listed with multiplicity. Roots are validated inputs, never
   conjured: the library checks them exactly and refuses anything short of a
   complete factorization over this field. */
struct FiberData {
    FieldElement target;
    std::vector<FieldElement> roots;
};

/* Checks: exactly d roots (WrongCount), every root in the open disc
   (RootOutsideDisc), f(r) = c exactly and the multiset is the full fiber,
   i.e. f(T) - c = a_d * prod (T - r_i) coefficientwise (RootMismatch). */
FiberData validate_fiber(const DiscMorphism& F, FieldElement target,
                         std::vector<FieldElement> roots);

/* Preimages of zeta_{c,lambda_target} under f: one point zeta_{r_i,lambda_i}
   per root with lambda_i = profile_at_r_i^(-1)(lambda_target), deduplicated
   under the same_point law (union-find over the merge relation). */
std::vector<DiscPoint> preimage_points(const DiscMorphism& F, const FiberData& fiber,
                                       const Rat& lambda_target);

/* Number of preimage points. Nondecreasing in lambda_target. */
long count_at(const DiscMorphism& F, const FiberData& fiber, const Rat& lambda_target);

/* Full fiber-count step function along the segment from c to the boundary.
   values[k] is the count on the interval (jumps[k-1], jumps[k]] read
   left-attached: the count AT a jump is the merged (left) value, so
   values[k] holds on (jumps[k], jumps[k+1]] and values[0] = 1 holds
   on (0, jumps[0]]. values has exactly jumps.size() + 1 entries. */
struct CountFunction {
    std::vector<Rat> jumps;   // strictly increasing, all > 0
    std::vector<long> values; // size jumps.size() + 1, nondecreasing

    friend bool operator==(const CountFunction&, const CountFunction&) = default;
};

/* Candidate jumps are the pairwise image_lambda(F, r_i, v(r_i - r_j));
   between consecutive candidates the count is provably constant, so each
   interval is probed once and non-jumps are pruned. Left-attachment at every
   kept jump is verified exactly (InvariantViolation on any inconsistency). */
CountFunction count_function(const DiscMorphism& F, const FiberData& fiber);

struct MultSumReport {
    Rat lambda_target;
    std::vector<long> multiplicities; // per deduplicated preimage point
    long total = 0;                   // always d
    bool uniform = false;             // all multiplicities equal
    long count = 0;                   // number of preimage points
};

/* Multiplicities of the preimage points over zeta_{c,lambda}: their sum must
   be exactly d (InvariantViolation otherwise), and when they are uniform the
   count is d / nu. */
MultSumReport check_mult_sum(const DiscMorphism& F, const FiberData& fiber,
                             const Rat& lambda_target);

/* One exact Newton step is r <- r - (f(r) - c)/f'(r); iterates until
   v(f(r) - c) >= precision, truncating coefficients modulo
   pi^(N * precision) between steps to keep rationals small (valid for
   p-integral iterates). Refines near-roots only; NotCertified when the
   iteration fails to reach the target within max_iter steps. */
FieldElement newton_refine(const DiscMorphism& F, const FieldElement& target,
                           FieldElement approx, const Rat& precision, int max_iter = 64);

} // namespace berkdisc

#endif
