#include "teachdim/staged.hpp"

#include <algorithm>

namespace teachdim {

StagedFamily::StagedFamily(ColumnFn fn, Horizons horizons)
    : fn_(std::move(fn)), horizons_(horizons) {
    check(horizons_.columns >= 1 && horizons_.domain >= 1, "degenerate horizons");
}

std::vector<std::uint64_t> StagedFamily::column(std::uint64_t j, std::uint64_t s) const {
    if (j >= horizons_.columns)
        throw bound_error("column " + std::to_string(j) + " beyond column horizon " +
                          std::to_string(horizons_.columns));
    if (s > horizons_.stages)
        throw bound_error("stage " + std::to_string(s) + " beyond stage horizon " +
                          std::to_string(horizons_.stages));
    auto elems = fn_(j, s);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::uint64_t cap = std::min(s, horizons_.domain - 1);
    check(elems.empty() || elems.back() <= cap, "stage column leaves {0..min(s,M-1)}");
    return elems;
}

ConceptClass StagedFamily::stage_restrict(std::uint64_t s) const {
    std::vector<Concept> concepts;
    std::vector<std::vector<std::uint64_t>> seen;
    for (std::uint64_t j = 0; j < horizons_.columns; ++j) {
        auto elems = column(j, s);
        if (std::find(seen.begin(), seen.end(), elems) != seen.end()) continue;
        seen.push_back(elems);
        concepts.push_back(Concept{"c" + std::to_string(j), std::move(elems)});
    }
    return ConceptClass(std::min(s, horizons_.domain - 1) + 1, std::move(concepts));
}

std::size_t StagedFamily::index_of_column(const ConceptClass& cls, std::uint64_t j,
                                          std::uint64_t s) const {
    auto elems = column(j, s);
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (cls.at(i).elements == elems) return i;
    throw internal_error("column extension missing from its stage class");
}

}  // namespace teachdim
