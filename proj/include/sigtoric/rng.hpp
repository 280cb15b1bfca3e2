#ifndef SIGTORIC_RNG_HPP
#define SIGTORIC_RNG_HPP

#include <cstdint>

namespace sigtoric {

// SplitMix64. Used instead of <random> engines+distributions so that seeded
// runs are bit-identical across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform on [lo, hi], rejection sampled
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return lo + static_cast<long long>(v % span);
    }

    // independent stream for the i-th parallel work item
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return Rng(mix.next());
    }

private:
    std::uint64_t state_;
};

} // namespace sigtoric

#endif
