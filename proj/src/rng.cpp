#include "berkdisc/rng.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace berkdisc {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    if (n == 1) return 0;
    /* Rejection sampling: draw until the value falls below the largest
       multiple of n, so the result is unbiased and the consumed stream
       depends only on the seed and the call sequence. */
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    for (;;) {
        std::uint64_t x = gen_();
        if (x < limit) return x % n;
    }
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
    const char* s = std::getenv("BERKDISC_SEED");
    if (s == nullptr || *s == '\0') return fallback;
    return std::stoull(std::string(s));
}

} // namespace berkdisc
