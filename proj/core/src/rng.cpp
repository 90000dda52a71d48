#include "teachdim/rng.hpp"

#include <string>

namespace teachdim {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    check(n >= 1, "below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

ConceptClass random_class(SplitMix64& rng, std::uint64_t max_concepts,
                          std::uint64_t max_domain) {
    check(max_concepts >= 1 && max_domain >= 1, "empty random class shape");
    std::uint64_t domain = 1 + rng.below(max_domain);
    std::uint64_t count = 1 + rng.below(max_concepts);
    std::vector<Concept> concepts;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<std::uint64_t> elems;
        for (std::uint64_t e = 0; e < domain; ++e)
            if (rng.next() & 1) elems.push_back(e);
        concepts.push_back(Concept{"c" + std::to_string(i), std::move(elems)});
    }
    return ConceptClass(domain, std::move(concepts));
}

}  // namespace teachdim
