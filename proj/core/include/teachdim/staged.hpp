#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "teachdim/concepts.hpp"

namespace teachdim {

// truncation horizons carried by every staged family and gadget build
struct Horizons {
    std::uint64_t columns;  // J: number of columns realized
    std::uint64_t stages;   // S: largest stage
    std::uint64_t domain;   // M: elements live in {0..M-1}
};

// family of enumerable columns with explicit stage approximations:
// column(j, s) is the stage-s portion of column j, a subset of {0..min(s,M-1)},
// monotone nondecreasing in s
class StagedFamily {
public:
    using ColumnFn =
        std::function<std::vector<std::uint64_t>(std::uint64_t j, std::uint64_t s)>;

    StagedFamily(ColumnFn fn, Horizons horizons);

    const Horizons& horizons() const { return horizons_; }

    // checked against the horizons and the subset invariant
    std::vector<std::uint64_t> column(std::uint64_t j, std::uint64_t s) const;

    // the class {column(j, s) : j < J} deduplicated extensionally (first
    // occurrence keeps its name c<j>) over domain {0..min(s,M-1)}
    ConceptClass stage_restrict(std::uint64_t s) const;

    // index within stage_restrict(s) of the concept extensionally equal to
    // column j at stage s
    std::size_t index_of_column(const ConceptClass& cls, std::uint64_t j,
                                std::uint64_t s) const;

private:
    ColumnFn fn_;
    Horizons horizons_;
};

}  // namespace teachdim
