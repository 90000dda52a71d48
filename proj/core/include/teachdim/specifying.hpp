#pragma once

#include <cstdint>
#include <vector>

#include "teachdim/concepts.hpp"
#include "teachdim/errors.hpp"

namespace teachdim {

// specifying sets: S such that at most one concept of the class agrees with
// the hypothesis on S.  Hypotheses are arbitrary subsets of the domain.

struct SpecifyingResult {
    Dim dim = Dim::finite(0);  // always finite (S = domain works)
    std::vector<std::uint64_t> witness;
};
SpecifyingResult min_specifying_set(const ConceptClass& c,
                                    const std::vector<std::uint64_t>& hypothesis);

struct XtdResult {
    Dim dim = Dim::finite(0);
    std::vector<std::uint64_t> worst_hypothesis;
    bool exact;                        // false in sampling mode
    std::uint64_t hypotheses_checked;
};

// exhaustive max over all 2^n hypotheses; refuses domains over kXtdExactLimit
inline constexpr std::uint64_t kXtdExactLimit = 22;
XtdResult xtd_of_class(const ConceptClass& c);

// randomized lower-bound estimate for larger domains; explicitly non-exact
XtdResult xtd_of_class_sampled(const ConceptClass& c, std::uint64_t samples,
                               std::uint64_t seed);

// positive-only variant with the pairwise-disjointness characterization as
// the fast path: finite iff all distinct concepts are pairwise disjoint
// (value 0 when <= 1 distinct concept, else 1); otherwise INFINITE and the
// hypothesis {shared_element} has no positive specifying set.
struct XtdPlusReport {
    Dim dim = Dim::finite(0);
    std::size_t distinct;
    bool all_disjoint;
    std::size_t witness_i, witness_j;     // overlapping distinct pair (infinite case)
    std::uint64_t shared_element;
};
XtdPlusReport xtdplus_of_class(const ConceptClass& c);

}  // namespace teachdim
