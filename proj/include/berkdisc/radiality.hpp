#ifndef BERKDISC_RADIALITY_HPP
#define BERKDISC_RADIALITY_HPP

#include "berkdisc/disc_morphism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace berkdisc {

/* f is radial when the local polygon is the same at every center: the
   geometry of f over the segment from a to the boundary does not depend on
   a. Sampling finitely many centers can refute this but never certify it;
   certification goes through the exact coefficient test in
   radial_certificate. */

/* Probe centers used by the sampling checks: a = 0 plus u pi^j for
   j = 1..min(3N, 36) with three seeded random units u per j. */
std::vector<FieldElement> default_probes(const FieldParams& params, std::uint64_t seed);

struct NRadialReport {
    int n = 0;
    /* First n envelope slopes shared by every probe (fewer when the polygon
       runs out of slopes before n). Strictly decreasing, starts at d. */
    std::vector<long> dominating_slopes;
    /* (n-1)-th break of the shared polygon: the lambda from which on the
       first n slopes are in force. 0 for n = 1; +infinity when the polygon
       has fewer than n-1 breaks (the regime is never entered). */
    Valuation border_lambda;
};

struct Refutation {
    FieldElement witness_a;
    FieldElement witness_b;
    std::string detail;
};

struct WeakRadialResult {
    std::optional<NRadialReport> report;    // set when no probe disagreed
    std::optional<Refutation> refutation;   // set when two probes disagreed
    bool holds() const { return report.has_value(); }
};

/* Compares the first n slopes and first n-1 breaks of the local polygon
   across the probe set. A disagreement yields a Refutation whose witness
   pair genuinely differs; agreement yields a report and proves nothing
   beyond the sampled set. */
WeakRadialResult weak_n_radial(const DiscMorphism& F, int n,
                               const std::vector<FieldElement>& probes);

/* n-th break of the local polygon at a, +infinity when there are fewer than
   n breaks (the n-th regime starts only at the point a itself).
   NotWeaklyNRadial when the probe set already refutes weak n-radiality. */
Valuation theta_n(const DiscMorphism& F, const FieldElement& a, int n,
                  const std::vector<FieldElement>& probes);

/* Slope right after the n-th break. ThetaIsZero when theta_n is infinite. */
long i_next(const DiscMorphism& F, const FieldElement& a, int n);

enum class RadialStatus { certified, refuted, undetermined };

/* Outcome of the exact certificate.

   certified:   the local polygon provably equals P at every center of the
                open disc over any extension; profile holds P.
   refuted:     witness pair attached; their local polygons differ (hard
                assert, not sampled).
   undetermined: the exact test was inconclusive (a non-active coefficient
                line touches P, or a strict failure has no witness at the
                granularity of this field); evidence says what was seen. */
struct RadialityVerdict {
    RadialStatus status = RadialStatus::undetermined;
    std::optional<NewtonPolygon> profile;  // certified only
    std::optional<Refutation> refutation;  // refuted only
    std::string evidence;
};

/* Exact radiality test on the coefficients of the recentered expansions.
   Writing g_i for the i-th Hasse derivative and m_i for the minimum
   coefficient valuation of g_i, the certificate checks, against the
   polygon P built at center 0:

     (C1) for every slope i active in P: v(g_i(0)) <= v of every other
          coefficient of g_i (so the active lines cannot move), and
     (C2) for every i: the line m_i + i*lambda stays >= P on all of
          lambda > 0 (so no line can undercut the envelope anywhere).

   (C2) at a concave P is decided exactly at the vertices plus two boundary
   slope comparisons. Strict domination everywhere certifies; a strict
   violation is refuted via a constructed witness (deterministic unit sweep
   u in 1..p-1 times pi^t plus the seeded probes); ties downgrade to
   undetermined, as does a strict violation whose witness is not
   representable in this field. */
RadialityVerdict radial_certificate(const DiscMorphism& F,
                                    std::uint64_t seed = kDefaultSeed);

/* Profile of a certified-radial morphism; NotCertified otherwise. */
NewtonPolygon profile_of_radial(const DiscMorphism& F,
                                std::uint64_t seed = kDefaultSeed);

} // namespace berkdisc

#endif
