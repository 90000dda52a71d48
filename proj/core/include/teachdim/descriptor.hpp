#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teachdim/errors.hpp"

namespace teachdim {

// Decidable stand-in for an enumerable set: membership, finiteness and
// cofiniteness are all computable, so gadget verdicts can be compared against
// ground truth.  Stage-s approximations are canonical:
//   Finite/Progressions: the first s values of the increasing enumeration
//   Cofinite(X):         {v < s : v not in X}   (stage = value)
// All three are monotone in s with union equal to the described set.
class SetDescriptor {
public:
    enum class Kind { finite, cofinite, progressions };

    // arithmetic progression {step*t + offset : t >= 0}, step >= 1
    struct Progression {
        std::uint64_t step;
        std::uint64_t offset;
    };

    static SetDescriptor finite(std::vector<std::uint64_t> elements);
    static SetDescriptor cofinite(std::vector<std::uint64_t> excluded);
    static SetDescriptor progressions(std::vector<Progression> parts);

    Kind kind() const { return kind_; }
    bool contains(std::uint64_t x) const;
    bool is_infinite() const;
    bool is_cofinite() const;

    // stage-s approximation, sorted ascending
    std::vector<std::uint64_t> enumerated_by_stage(std::uint64_t s) const;

    // elements of the complement below `bound`, ascending
    std::vector<std::uint64_t> complement_below(std::uint64_t bound) const;
    // elements of the set below `bound`, ascending
    std::vector<std::uint64_t> members_below(std::uint64_t bound) const;
    // least member >= from (the set must be infinite or have one)
    std::uint64_t least_member_from(std::uint64_t from) const;
    // least non-member >= from (the complement must have one)
    std::uint64_t least_nonmember_from(std::uint64_t from) const;

    // CLI syntax: finite:{1,5}  cofinite:{}  progressions:{(2,0),(3,1)}
    std::string str() const;
    static SetDescriptor parse(const std::string& text);

    const std::vector<std::uint64_t>& listed() const { return listed_; }
    const std::vector<Progression>& parts() const { return parts_; }

private:
    SetDescriptor() = default;
    Kind kind_ = Kind::finite;
    std::vector<std::uint64_t> listed_;   // elements (finite) or exclusions (cofinite)
    std::vector<Progression> parts_;
};

}  // namespace teachdim
