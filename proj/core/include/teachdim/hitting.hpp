#pragma once

#include <cstdint>
#include <vector>

namespace teachdim {

// exact minimum hitting set.  infeasible (some constraint empty) is reported
// rather than thrown, since callers map it to INFINITE dimensions.
struct HittingResult {
    bool feasible;
    std::vector<std::uint64_t> witness;  // lexicographically least minimum witness
};

// constraints are finite element sets; duplicates/supersets are pruned
// internally.  Deterministic: the witness is the lexicographically least
// among all minimum-cardinality hitting sets.
HittingResult minimal_hitting_set(std::vector<std::vector<std::uint64_t>> constraints);

// feasibility of "hitting set of size <= budget"; false when infeasible
bool hitting_set_at_most(std::vector<std::vector<std::uint64_t>> constraints,
                         std::size_t budget);

}  // namespace teachdim
