#include "berkdisc/fiber.hpp"

#include "berkdisc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace berkdisc {

FiberData validate_fiber(const DiscMorphism& F, FieldElement target,
                         std::vector<FieldElement> roots) {
    const FieldParams& prm = F.params();
    const long d = F.degree();
    if (static_cast<long>(roots.size()) != d)
        fail("WrongCount", "expected " + std::to_string(d) + " roots, got " +
                               std::to_string(roots.size()));
    for (const FieldElement& r : roots) {
        Valuation v = valuation(r);
        if (v.is_finite() && !(v.value > 0))
            fail("RootOutsideDisc", "root has valuation " + val_str(v) +
                                        ", not inside the open unit disc");
    }
    Poly lhs = F.poly() - Poly(prm, {target});
    Poly rhs = from_roots(prm, roots, F.poly().coeff(d));
    if (!(lhs == rhs))
        fail("RootMismatch",
             "a_d * prod(T - r_i) does not reproduce f(T) - c coefficientwise");
    return FiberData{std::move(target), std::move(roots)};
}

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(size_t a, size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<DiscPoint> preimage_points(const DiscMorphism& F, const FiberData& fiber,
                                       const Rat& lambda_target) {
    if (!(lambda_target > 0))
        fail("OutOfDomain", "lambda_target must be positive, got " + rat_str(lambda_target));

    const size_t n = fiber.roots.size();
    std::vector<Rat> lambda(n);
    for (size_t i = 0; i < n; ++i)
        lambda[i] = local_polygon(F, fiber.roots[i]).invert().eval(lambda_target);

    UnionFind uf(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (lambda[i] != lambda[j]) continue;
            Valuation dist = valuation(fiber.roots[i] - fiber.roots[j]);
            if (!dist.is_finite() || dist.value >= lambda[i]) uf.merge(i, j);
        }

    // keep the first root of each class, in input order
    std::vector<DiscPoint> out;
    std::vector<char> seen(n, 0);
    for (size_t i = 0; i < n; ++i) {
        size_t r = uf.find(i);
        if (seen[r]) continue;
        seen[r] = 1;
        out.push_back(DiscPoint::make(fiber.roots[i], lambda[i]));
    }
    return out;
}

long count_at(const DiscMorphism& F, const FiberData& fiber, const Rat& lambda_target) {
    return static_cast<long>(preimage_points(F, fiber, lambda_target).size());
}

CountFunction count_function(const DiscMorphism& F, const FiberData& fiber) {
    /* The count can only change where some pair of preimage segments merges,
       and the merge radius of roots r_i, r_j maps forward to the candidate
       image_lambda(F, r_i, v(r_i - r_j)); this value is symmetric in (i, j).
       Between consecutive candidates the count is constant, so probing one
       interior point per gap determines the whole step function; the probes
       double as a consistency check on monotonicity and left-attachment. */
    const size_t n = fiber.roots.size();
    std::set<Rat> cand_set;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (fiber.roots[i] == fiber.roots[j]) continue;
            Valuation dist = valuation(fiber.roots[i] - fiber.roots[j]);
            cand_set.insert(image_lambda(F, fiber.roots[i], dist.value));
        }
    std::vector<Rat> cand(cand_set.begin(), cand_set.end());

    // one probe per interval: below the first candidate, between, and above
    std::vector<long> interval_count;
    if (cand.empty()) {
        interval_count.push_back(count_at(F, fiber, Rat(1)));
    } else {
        interval_count.push_back(count_at(F, fiber, cand.front() / 2));
        for (size_t k = 0; k + 1 < cand.size(); ++k)
            interval_count.push_back(count_at(F, fiber, (cand[k] + cand[k + 1]) / 2));
        interval_count.push_back(count_at(F, fiber, cand.back() + 1));
    }

    if (interval_count.front() != 1)
        fail("InvariantViolation", "fiber count near lambda = 0 must be 1, got " +
                                       std::to_string(interval_count.front()));
    for (size_t k = 0; k + 1 < interval_count.size(); ++k)
        if (interval_count[k + 1] < interval_count[k])
            fail("InvariantViolation", "fiber count decreased across lambda = " +
                                           rat_str(cand[k]));

    CountFunction nf;
    nf.values.push_back(interval_count.front());
    for (size_t k = 0; k < cand.size(); ++k) {
        // at the candidate itself the merge condition v >= lambda still holds,
        // so the count must equal the value on the interval ending there
        if (count_at(F, fiber, cand[k]) != interval_count[k])
            fail("InvariantViolation", "fiber count at lambda = " + rat_str(cand[k]) +
                                           " is not left-attached");
        if (interval_count[k + 1] != interval_count[k]) {
            nf.jumps.push_back(cand[k]);
            nf.values.push_back(interval_count[k + 1]);
        }
    }
    return nf;
}

MultSumReport check_mult_sum(const DiscMorphism& F, const FiberData& fiber,
                             const Rat& lambda_target) {
    std::vector<DiscPoint> pts = preimage_points(F, fiber, lambda_target);
    MultSumReport rep;
    rep.lambda_target = lambda_target;
    rep.count = static_cast<long>(pts.size());
    for (const DiscPoint& pt : pts) {
        rep.multiplicities.push_back(multiplicity(F, pt));
        rep.total += rep.multiplicities.back();
    }
    if (rep.total != F.degree())
        fail("InvariantViolation", "preimage multiplicities sum to " +
                                       std::to_string(rep.total) + ", expected " +
                                       std::to_string(F.degree()));
    rep.uniform = std::all_of(rep.multiplicities.begin(), rep.multiplicities.end(),
                              [&](long m) { return m == rep.multiplicities.front(); });
    return rep;
}

namespace {

Int egcd_inverse(Int a, const Int& mod) {
    // inverse of a modulo mod, for gcd(a, mod) = 1
    Int r0 = mod, r1 = a % mod, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += mod;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    t0 %= mod;
    if (t0 < 0) t0 += mod;
    return t0;
}

/* Replaces each coefficient c_e by the representative of c_e mod p^(k_e) in
   [0, p^(k_e)), with k_e chosen so the element is unchanged modulo elements
   of valuation >= precision. Requires p-integral coefficients; anything else
   is passed through untouched. */
FieldElement truncate_element(const FieldElement& x, const Rat& precision) {
    const FieldParams& prm = x.params();
    FieldElement out(prm);
    for (long e = 0; e < prm.N; ++e) {
        const Rat& c = x.coeff(e);
        if (c == 0) continue;
        if (vp(rat_den(c), prm.p) != 0) { out.set_coeff(e, c); continue; }
        // k = ceil(precision - e/N), at least 1
        Rat need = precision - Rat(e, prm.N);
        Int k = -rat_floor(-need);
        if (k < 1) k = 1;
        Int mod = 1;
        for (Int i = 0; i < k; ++i) mod *= prm.p;
        Int num = rat_num(c) % mod;
        if (num < 0) num += mod;
        Int m = num * egcd_inverse(rat_den(c), mod) % mod;
        out.set_coeff(e, Rat(m));
    }
    return out;
}

} // namespace

FieldElement newton_refine(const DiscMorphism& F, const FieldElement& target,
                           FieldElement approx, const Rat& precision, int max_iter) {
    const Poly& f = F.poly();
    Poly fp = derivative(f);
    for (int it = 0; it < max_iter; ++it) {
        FieldElement num = f.evaluate(approx) - target;
        Valuation vn = valuation(num);
        if (!vn.is_finite() || vn.value >= precision) return approx;
        FieldElement den = fp.evaluate(approx);
        if (den.is_zero())
            fail("NotCertified", "derivative vanishes at the current iterate");
        approx = truncate_element(approx - num * den.inverse(), precision);
    }
    FieldElement res = f.evaluate(approx) - target;
    Valuation vr = valuation(res);
    if (vr.is_finite() && vr.value < precision)
        fail("NotCertified", "newton iteration did not reach the requested precision");
    return approx;
}

} // namespace berkdisc
