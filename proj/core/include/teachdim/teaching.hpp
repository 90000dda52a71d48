#pragma once

#include <cstdint>
#include <vector>

#include "teachdim/concepts.hpp"
#include "teachdim/errors.hpp"

namespace teachdim {

// All predicates compare concepts extensionally: duplicates of the target are
// never adversaries.  The optional `alive` mask (size = class size, nonzero =
// present) restricts every quantifier to a subclass; the target must be alive.

// D distinguishes C_i: every distinct concept meets D differently
bool is_distinguishing_set(const ConceptClass& c, std::size_t i,
                           const std::vector<std::uint64_t>& d,
                           const std::vector<char>* alive = nullptr);

// distinguishing and no strictly smaller distinguishing set exists
bool is_minimal_distinguishing_set(const ConceptClass& c, std::size_t i,
                                   const std::vector<std::uint64_t>& d);

// the TDDP predicate: requires d >= 1 (throws bound_error on d = 0; the d=0
// question is is_distinguishing_set with the empty set)
bool td_at_most(const ConceptClass& c, std::size_t i, std::uint64_t d);

struct TdResult {
    Dim dim = Dim::finite(0);
    Sample witness;  // minimum teaching set; distinguishing set labelled by membership
};
// always finite on finite classes (bounded by domain size)
TdResult teaching_dimension(const ConceptClass& c, std::size_t i,
                            const std::vector<char>* alive = nullptr);

struct TdPlusResult {
    Dim dim = Dim::finite(0);
    std::vector<std::uint64_t> witness;  // positive teaching set when finite
    int blocking;  // when infinite: index of a distinct superset concept, else -1
};
TdPlusResult positive_teaching_dimension(const ConceptClass& c, std::size_t i,
                                         const std::vector<char>* alive = nullptr);

// "exists positive teaching set of size <= d" without computing the exact value
bool tdplus_at_most(const ConceptClass& c, std::size_t i, std::uint64_t d,
                    const std::vector<char>* alive = nullptr);

struct ClassDim {
    Dim dim = Dim::finite(0);
    std::size_t argmax;  // first concept attaining the sup
};
ClassDim td_of_class(const ConceptClass& c);
ClassDim tdplus_of_class(const ConceptClass& c);

// difference constraints feeding the hitting-set engine (exposed for reuse by
// the specifying/sequence solvers):
//   symmetric differences for TD, target-minus-other for TD+
std::vector<std::vector<std::uint64_t>> td_constraints(const ConceptClass& c, std::size_t i,
                                                       const std::vector<char>* alive = nullptr);
std::vector<std::vector<std::uint64_t>> tdplus_constraints(const ConceptClass& c, std::size_t i,
                                                           const std::vector<char>* alive = nullptr);

}  // namespace teachdim
