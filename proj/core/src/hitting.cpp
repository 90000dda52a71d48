#include "teachdim/hitting.hpp"

#include <algorithm>

#include "teachdim/errors.hpp"

namespace teachdim {

namespace {

using Constraint = std::vector<std::uint64_t>;

// sort+dedupe each constraint, drop duplicates and supersets (an antichain of
// minimal constraints has the same hitting sets).  Returns false if some
// constraint is empty.
bool normalize(std::vector<Constraint>& cons) {
    for (auto& c : cons) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.empty()) return false;
    }
    std::sort(cons.begin(), cons.end(), [](const Constraint& a, const Constraint& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Constraint> kept;
    for (auto& c : cons) {
        bool redundant = false;
        for (const auto& k : kept) {
            // k is no larger than c; c is redundant if it contains k
            if (std::includes(c.begin(), c.end(), k.begin(), k.end())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(c));
    }
    cons = std::move(kept);
    return true;
}

bool contains(const Constraint& c, std::uint64_t e) {
    return std::binary_search(c.begin(), c.end(), e);
}

std::size_t count_at_least(const Constraint& c, std::uint64_t floor) {
    return c.end() - std::lower_bound(c.begin(), c.end(), floor);
}

// can the active constraints be hit with <= budget elements, all >= floor?
bool exists_cover(const std::vector<Constraint>& cons, std::vector<std::size_t> active,
                  std::size_t budget, std::uint64_t floor) {
    while (true) {
        if (active.empty()) return true;
        // branch on the active constraint with fewest usable elements
        std::size_t best = active[0], best_n = count_at_least(cons[active[0]], floor);
        for (std::size_t idx : active) {
            std::size_t n = count_at_least(cons[idx], floor);
            if (n < best_n) best = idx, best_n = n;
        }
        if (best_n == 0) return false;
        if (budget == 0) return false;
        if (best_n == 1) {
            // forced element, no branching needed
            std::uint64_t e = cons[best].back();
            std::vector<std::size_t> rest;
            for (std::size_t idx : active)
                if (!contains(cons[idx], e)) rest.push_back(idx);
            active = std::move(rest);
            --budget;
            continue;
        }
        const Constraint& c = cons[best];
        for (auto it = std::lower_bound(c.begin(), c.end(), floor); it != c.end(); ++it) {
            std::vector<std::size_t> rest;
            for (std::size_t idx : active)
                if (!contains(cons[idx], *it)) rest.push_back(idx);
            if (exists_cover(cons, std::move(rest), budget - 1, floor)) return true;
        }
        return false;
    }
}

}  // namespace

HittingResult minimal_hitting_set(std::vector<std::vector<std::uint64_t>> constraints) {
    HittingResult r;
    if (!normalize(constraints)) {
        r.feasible = false;
        return r;
    }
    r.feasible = true;
    std::vector<std::size_t> all(constraints.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

    std::size_t k = 0;
    while (!exists_cover(constraints, all, k, 0)) {
        ++k;
        check(k <= (std::size_t)1 << 20, "minimal_hitting_set runaway");
    }

    // lex-least witness of size k: repeatedly commit the least element that
    // leaves the rest coverable within the remaining budget
    std::vector<std::size_t> active = all;
    std::uint64_t floor = 0;
    std::size_t budget = k;
    while (!active.empty()) {
        // candidate elements: everything >= floor in some active constraint
        std::vector<std::uint64_t> cands;
        for (std::size_t idx : active)
            for (std::uint64_t e : constraints[idx])
                if (e >= floor) cands.push_back(e);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        bool advanced = false;
        for (std::uint64_t e : cands) {
            std::vector<std::size_t> rest;
            for (std::size_t idx : active)
                if (!contains(constraints[idx], e)) rest.push_back(idx);
            if (exists_cover(constraints, rest, budget - 1, e + 1)) {
                r.witness.push_back(e);
                active = std::move(rest);
                floor = e + 1;
                --budget;
                advanced = true;
                break;
            }
        }
        check(advanced, "lex witness reconstruction stuck");
    }
    check(r.witness.size() == k, "witness size mismatch");
    return r;
}

bool hitting_set_at_most(std::vector<std::vector<std::uint64_t>> constraints,
                         std::size_t budget) {
    if (!normalize(constraints)) return false;
    std::vector<std::size_t> all(constraints.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return exists_cover(constraints, all, budget, 0);
}

}  // namespace teachdim
