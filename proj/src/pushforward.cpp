#include "berkdisc/pushforward.hpp"

#include "berkdisc/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace berkdisc {

namespace {

void validate_count(const CountFunction& nf, long d) {
    if (d < 1) fail("InconsistentCount", "degree must be >= 1");
    if (nf.values.size() != nf.jumps.size() + 1)
        fail("InconsistentCount", "values must have exactly one more entry than jumps");
    for (size_t k = 0; k < nf.jumps.size(); ++k) {
        if (!(nf.jumps[k] > 0))
            fail("InconsistentCount", "jumps must be positive");
        if (k > 0 && !(nf.jumps[k] > nf.jumps[k - 1]))
            fail("InconsistentCount", "jumps must be strictly increasing");
    }
    for (size_t k = 0; k < nf.values.size(); ++k) {
        if (nf.values[k] < 1 || nf.values[k] > d)
            fail("InconsistentCount", "count values must lie in [1, degree]");
        if (k > 0 && nf.values[k] <= nf.values[k - 1])
            fail("InconsistentCount", "count values must strictly increase across jumps");
    }
}

void sort_desc(std::vector<Rat>& v) { std::sort(v.begin(), v.end(), std::greater<Rat>()); }

} // namespace

Multiradius multiradius_from_count(const CountFunction& nf, long d) {
    validate_count(nf, d);
    Multiradius mr;
    const size_t m = nf.jumps.size();
    if (m == 0) {
        mr.lambdas.assign(static_cast<size_t>(d), Rat(0));
        return mr;
    }
    /* One radius reaches lambda_k for each component that appears there; the
       components that never split off (root multiplicity) stop at the last
       jump together with the ones that do. Building blocks from the largest
       jump down keeps the list sorted. */
    for (long c = 0; c < d - nf.values[m - 1]; ++c) mr.lambdas.push_back(nf.jumps[m - 1]);
    for (size_t k = m - 1; k >= 1; --k)
        for (long c = 0; c < nf.values[k] - nf.values[k - 1]; ++c)
            mr.lambdas.push_back(nf.jumps[k - 1]);
    for (long c = 0; c < nf.values[0]; ++c) mr.lambdas.push_back(Rat(0));
    return mr;
}

namespace {

/* Number of connected components of the preimage of the OPEN disc of
   exponent lambda around the fiber target: roots r_i, r_j share a component
   iff their component radii agree and v(r_i - r_j) exceeds that radius
   strictly. */
long open_component_count(const DiscMorphism& F, const FiberData& fiber, const Rat& lambda) {
    const size_t n = fiber.roots.size();
    std::vector<Rat> li(n);
    for (size_t i = 0; i < n; ++i)
        li[i] = local_polygon(F, fiber.roots[i]).invert().eval(lambda);

    std::vector<size_t> rep(n);
    for (size_t i = 0; i < n; ++i) rep[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (li[i] != li[j]) continue;
            Valuation dist = valuation(fiber.roots[i] - fiber.roots[j]);
            if (!dist.is_finite() || dist.value > li[i]) rep[find(i)] = find(j);
        }
    long count = 0;
    for (size_t i = 0; i < n; ++i)
        if (find(i) == i) ++count;
    return count;
}

} // namespace

Multiradius multiradius_bruteforce(const DiscMorphism& F, const FiberData& fiber) {
    const long d = F.degree();
    std::set<Rat> cand_set;
    for (size_t i = 0; i < fiber.roots.size(); ++i)
        for (size_t j = i + 1; j < fiber.roots.size(); ++j) {
            if (fiber.roots[i] == fiber.roots[j]) continue;
            Valuation dist = valuation(fiber.roots[i] - fiber.roots[j]);
            cand_set.insert(image_lambda(F, fiber.roots[i], dist.value));
        }
    std::vector<Rat> cand(cand_set.begin(), cand_set.end());

    Multiradius mr;
    mr.lambdas.push_back(Rat(0)); // the first radius always runs the whole segment
    if (cand.empty()) {
        mr.lambdas.assign(static_cast<size_t>(d), Rat(0));
        return mr;
    }
    std::vector<long> counts(cand.size());
    for (size_t k = 0; k < cand.size(); ++k)
        counts[k] = open_component_count(F, fiber, cand[k]);
    for (long K = 2; K <= d; ++K) {
        bool found = false;
        for (size_t k = 0; k < cand.size(); ++k)
            if (counts[k] >= K) {
                mr.lambdas.push_back(cand[k]);
                found = true;
                break;
            }
        if (!found) mr.lambdas.push_back(cand.back());
    }
    sort_desc(mr.lambdas);
    return mr;
}

Multiradius star_product(const Multiradius& a, const Multiradius& b) {
    Multiradius out = a;
    out.lambdas.insert(out.lambdas.end(), b.lambdas.begin(), b.lambdas.end());
    sort_desc(out.lambdas);
    return out;
}

Multiradius multiradius_multi_component(
    const std::vector<std::pair<CountFunction, long>>& parts) {
    if (parts.empty()) fail("EmptyInput", "no components");
    Multiradius out;
    for (const auto& [nf, deg] : parts) out = star_product(out, multiradius_from_count(nf, deg));
    return out;
}

NewtonPolygon reconstruct_profile_from_count(const CountFunction& nf, long d) {
    validate_count(nf, d);
    for (long w : nf.values)
        if (d % w != 0)
            fail("NotRealizable", "count value " + std::to_string(w) +
                                      " does not divide the degree " + std::to_string(d));

    /* The inverse profile Q satisfies Q(0) = 0 and dQ/dmu = N(mu)/d, so on
       the k-th interval Q has slope values[k]/d and the profile itself has
       slope d/values[k] there. Integrating for the Q-intercepts q_k and
       inverting each affine piece gives the profile pieces directly. */
    std::vector<NewtonPolygon::Piece> pieces;
    Rat q(0);
    for (size_t k = 0; k < nf.values.size(); ++k) {
        Rat s(nf.values[k], d);
        pieces.push_back({-q / s, Rat(d, nf.values[k])});
        if (k < nf.jumps.size()) q += (s - Rat(nf.values[k + 1], d)) * nf.jumps[k];
    }
    return NewtonPolygon::from_pieces(Domain::positive, std::move(pieces));
}

MainTheoremReport check_main_theorem_disc(const DiscMorphism& F,
                                          const std::vector<FiberData>& fibers,
                                          std::uint64_t seed) {
    if (fibers.size() < 2)
        fail("EmptyInput", "need at least two fibers to compare multiradii");

    MainTheoremReport rep;
    rep.verdict = radial_certificate(F, seed);
    for (const FiberData& fiber : fibers) {
        Multiradius mr = multiradius_from_count(count_function(F, fiber), F.degree());
        if (!(mr == multiradius_bruteforce(F, fiber)))
            fail("InvariantViolation",
                 "count-function and clustering multiradii disagree on a fiber");
        rep.fiber_multiradii.push_back(std::move(mr));
    }
    rep.all_equal = std::all_of(rep.fiber_multiradii.begin(), rep.fiber_multiradii.end(),
                                [&](const Multiradius& m) {
                                    return m == rep.fiber_multiradii.front();
                                });
    if (rep.verdict.status == RadialStatus::certified && !rep.all_equal)
        fail("InvariantViolation",
             "certified radial morphism with unequal fiber multiradii");
    rep.consistent = true;
    return rep;
}

} // namespace berkdisc
