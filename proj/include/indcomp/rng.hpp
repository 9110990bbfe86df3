#pragma once

#include <cstdint>

namespace indcomp {

// Counter-based deterministic generator (splitmix64).  Every randomized suite
// derives one generator per case from (seed, case index), so results do not
// depend on evaluation order or thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), rejection sampled so the distribution is exact.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

// Mixes a suite seed with a case counter into an independent stream.
inline SplitMix64 case_rng(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 mixer(seed ^ (0xa0761d6478bd642fULL * (counter + 1)));
    return SplitMix64(mixer.next());
}

}  // namespace indcomp
