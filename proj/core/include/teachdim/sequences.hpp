#pragma once

#include <string>
#include <vector>

#include "teachdim/teaching.hpp"

namespace teachdim {

// ordered partition of a class into blocks of concept indices, optionally
// carrying declared per-block orders (sequence files declare none)
struct TeachingSequence {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<Dim> declared;  // empty, or one per block
};

struct PlanStep {
    std::size_t concept_index = 0;
    Dim dim = Dim::finite(0);
};
using TeachingPlan = std::vector<PlanStep>;

struct SequenceValidation {
    bool valid = false;
    std::string reason;        // empty when valid
    std::vector<Dim> orders;   // recomputed d_i, parallel to blocks
    Dim order = Dim::finite(0);                 // sup of the d_i (infinite if any block fails)
};

// Checks that the blocks partition the class and recomputes each block's
// order against the not-yet-taught remainder.  Plain mode: d_i is determined
// by the partition (max TD over the block) and any declared order must match
// it exactly.  Positive mode: d_i must admit exact-size witnesses S_L ⊆ L,
// which happens iff max td⁺ over the block ≤ d_i ≤ min |L|; undeclared
// orders are recomputed as the least feasible value.
SequenceValidation validate_sequence(const ConceptClass& c, const TeachingSequence& ts,
                                     bool positive);

struct GreedyResult {
    bool ok = false;
    TeachingPlan plan;                // full plan when ok, prefix otherwise
    std::vector<std::size_t> stuck;   // remaining indices when not ok
};

// Greedy least-index decision procedure for positive teaching plans of order
// <= n: repeatedly schedule the least-index remaining concept whose td⁺
// against the remaining class is <= n.  Succeeds iff a plan of order <= n
// exists (an omitted concept stays schedulable after any other removals).
GreedyResult rtd1plus_at_most(const ConceptClass& c, std::uint64_t n);

struct Rtd1PlusResult {
    Dim value = Dim::finite(0);
    TeachingPlan plan;
};

// least n accepted by rtd1plus_at_most; always finite for finite classes
// because a concept that is subset-maximal among the remaining distinct
// extensions has td⁺ <= |extension|, so the greedy pass at n = max |L|
// never sticks
Rtd1PlusResult rtd1plus(const ConceptClass& c);

// standard canonical greedy: peel every concept attaining the minimal
// current dimension (TD, or finite td⁺ in positive mode), repeat; always
// yields a valid sequence whose order upper-bounds the exact value
TeachingSequence canonical_sequence(const ConceptClass& c, bool positive);

inline constexpr std::size_t kRtdExactLimit = 8;

// exact infimum over teaching-sequence orders, by dynamic programming over
// subsets of distinct extension groups (duplicates never change block costs,
// so partitions of groups suffice); refuses > kRtdExactLimit groups
Dim rtd_exact(const ConceptClass& c, bool positive);

// Parses "block: name name ..." lines into a sequence over c (no declared
// orders).  '#' starts a comment; blank lines are skipped.
TeachingSequence parse_sequence(std::istream& in, const ConceptClass& c);

}  // namespace teachdim
