#pragma once

#include <cstdint>

#include "teachdim/concepts.hpp"

namespace teachdim {

// splitmix64: tiny, portable, identical stream on every platform.  The
// standard-library distributions are not guaranteed stable across
// implementations, so everything random in this library goes through this.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1, via rejection sampling
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// random concept class for oracle cross-checks: domain in [1, max_domain],
// between 1 and max_concepts concepts, uniform subsets, names c0, c1, ...
ConceptClass random_class(SplitMix64& rng, std::uint64_t max_concepts,
                          std::uint64_t max_domain);

}  // namespace teachdim
