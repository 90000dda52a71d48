#pragma once

#include <cstdint>
#include <vector>

#include "teachdim/concepts.hpp"
#include "teachdim/errors.hpp"
#include "teachdim/hitting.hpp"

namespace teachdim {

// Brute-force reference implementations for cross-checking the solvers.
// Everything here enumerates subsets, orderings or partitions directly and
// never calls into the solver modules.  Sizes are capped hard; these exist
// for desk-scale verification, not production use.

struct OracleTd {
    Dim dim = Dim::finite(0);
    std::vector<std::uint64_t> elements;  // witness; labels follow membership
};

// minimum sample (labelled by membership in concept i) consistent with no
// other distinct concept; enumerates domain subsets by size
OracleTd oracle_td(const ConceptClass& c, std::size_t i);

// minimum subset of concept i contained in no other distinct concept;
// INFINITE when even the full extension is covered
OracleTd oracle_tdplus(const ConceptClass& c, std::size_t i);

// minimum S with at most one distinct concept agreeing with the hypothesis
// on S; always finite (S = domain works)
Dim oracle_min_specifying(const ConceptClass& c, const std::vector<std::uint64_t>& hypothesis);

// max of oracle_min_specifying over all hypotheses
Dim oracle_xtd(const ConceptClass& c);

// max over nonempty hypotheses L of the minimum S ⊆ L contained in at most
// one distinct concept; INFINITE when some L admits none
Dim oracle_xtdplus(const ConceptClass& c);

// minimum over all concept orderings of the largest step dimension, where a
// step's dimension is the positive one against the not-yet-taught rest
Dim oracle_rtd1plus(const ConceptClass& c);
bool oracle_rtd1plus_at_most(const ConceptClass& c, std::uint64_t n);

// minimum order over all ordered partitions into blocks; plain mode scores a
// block by the largest TD against the remaining class, positive mode by the
// largest positive dimension, requiring exact-size witnesses to exist
// (largest positive dimension <= smallest extension in the block)
Dim oracle_rtd(const ConceptClass& c, bool positive);

// minimum hitting set by subset enumeration over the constraint universe
HittingResult oracle_hitting(const std::vector<std::vector<std::uint64_t>>& constraints);

}  // namespace teachdim
