#include "teachdim/teaching.hpp"

#include <algorithm>
#include <set>

#include "teachdim/hitting.hpp"

namespace teachdim {

namespace {

bool alive_at(const std::vector<char>* alive, std::size_t j) {
    return alive == nullptr || (*alive)[j];
}

// first alive member of each extension group other than the target's group
std::vector<std::size_t> alive_adversaries(const ConceptClass& c, std::size_t i,
                                           const std::vector<char>* alive) {
    check(i < c.size(), "concept index out of range");
    check(alive_at(alive, i), "target concept not alive");
    std::set<std::size_t> seen_groups;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (!alive_at(alive, j) || c.group_of(j) == c.group_of(i)) continue;
        if (seen_groups.insert(c.group_of(j)).second) out.push_back(j);
    }
    return out;
}

std::vector<std::uint64_t> sym_diff(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

std::vector<std::uint64_t> set_minus(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> td_constraints(const ConceptClass& c, std::size_t i,
                                                       const std::vector<char>* alive) {
    std::vector<std::vector<std::uint64_t>> cons;
    for (std::size_t j : alive_adversaries(c, i, alive))
        cons.push_back(sym_diff(c.at(i).elements, c.at(j).elements));
    return cons;
}

std::vector<std::vector<std::uint64_t>> tdplus_constraints(const ConceptClass& c, std::size_t i,
                                                           const std::vector<char>* alive) {
    std::vector<std::vector<std::uint64_t>> cons;
    for (std::size_t j : alive_adversaries(c, i, alive))
        cons.push_back(set_minus(c.at(i).elements, c.at(j).elements));
    return cons;
}

bool is_distinguishing_set(const ConceptClass& c, std::size_t i,
                           const std::vector<std::uint64_t>& d,
                           const std::vector<char>* alive) {
    std::vector<std::uint64_t> ds(d);
    std::sort(ds.begin(), ds.end());
    for (const auto& diff : td_constraints(c, i, alive)) {
        // C_i cap D == C_j cap D  iff  D misses the symmetric difference
        bool hit = false;
        for (std::uint64_t e : diff)
            if (std::binary_search(ds.begin(), ds.end(), e)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool is_minimal_distinguishing_set(const ConceptClass& c, std::size_t i,
                                   const std::vector<std::uint64_t>& d) {
    if (!is_distinguishing_set(c, i, d)) return false;
    std::vector<std::uint64_t> ds(d);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.empty()) return true;
    // distinguishing is monotone under supersets, so it suffices to rule out
    // hitting sets strictly smaller than |D|
    return !hitting_set_at_most(td_constraints(c, i), ds.size() - 1);
}

bool td_at_most(const ConceptClass& c, std::size_t i, std::uint64_t d) {
    if (d == 0) throw bound_error("td_at_most requires d >= 1");
    return hitting_set_at_most(td_constraints(c, i), d);
}

TdResult teaching_dimension(const ConceptClass& c, std::size_t i,
                            const std::vector<char>* alive) {
    auto hit = minimal_hitting_set(td_constraints(c, i, alive));
    check(hit.feasible, "distinct concepts always have a nonempty symmetric difference");
    TdResult r;
    r.dim = Dim::finite(hit.witness.size());
    r.witness = label_by_membership(c.at(i).elements, hit.witness);
    return r;
}

TdPlusResult positive_teaching_dimension(const ConceptClass& c, std::size_t i,
                                         const std::vector<char>* alive) {
    TdPlusResult r;
    r.blocking = -1;
    auto adversaries = alive_adversaries(c, i, alive);
    std::vector<std::vector<std::uint64_t>> cons;
    for (std::size_t j : adversaries) {
        auto diff = set_minus(c.at(i).elements, c.at(j).elements);
        if (diff.empty()) {
            // C_j covers the target: no positive sample can exclude it
            r.dim = Dim::infinite();
            r.blocking = (int)j;
            return r;
        }
        cons.push_back(std::move(diff));
    }
    auto hit = minimal_hitting_set(std::move(cons));
    check(hit.feasible, "nonempty constraints must be hittable");
    r.dim = Dim::finite(hit.witness.size());
    r.witness = std::move(hit.witness);
    return r;
}

bool tdplus_at_most(const ConceptClass& c, std::size_t i, std::uint64_t d,
                    const std::vector<char>* alive) {
    auto cons = tdplus_constraints(c, i, alive);
    return hitting_set_at_most(std::move(cons), d);
}

ClassDim td_of_class(const ConceptClass& c) {
    ClassDim r{Dim::finite(0), 0};
    for (std::size_t i = 0; i < c.size(); ++i) {
        Dim d = teaching_dimension(c, i).dim;
        if (i == 0 || d > r.dim) r.dim = d, r.argmax = i;
    }
    return r;
}

ClassDim tdplus_of_class(const ConceptClass& c) {
    ClassDim r{Dim::finite(0), 0};
    for (std::size_t i = 0; i < c.size(); ++i) {
        Dim d = positive_teaching_dimension(c, i).dim;
        if (i == 0 || d > r.dim) r.dim = d, r.argmax = i;
    }
    return r;
}

}  // namespace teachdim
