#include "teachdim/specifying.hpp"

#include <algorithm>
#include <bit>

#include "teachdim/hitting.hpp"
#include "teachdim/rng.hpp"

namespace teachdim {

namespace {

std::vector<std::uint64_t> sym_diff(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

// agreement sets: concept g agrees with L on S iff S misses ext_g ^ L, so a
// specifying set must hit the difference of every group bar at most one
std::vector<std::vector<std::uint64_t>> hypothesis_diffs(const ConceptClass& c,
                                                         const std::vector<std::uint64_t>& l) {
    std::vector<std::vector<std::uint64_t>> diffs;
    for (std::size_t rep : c.group_reps()) diffs.push_back(sym_diff(c.at(rep).elements, l));
    return diffs;
}

}  // namespace

SpecifyingResult min_specifying_set(const ConceptClass& c,
                                    const std::vector<std::uint64_t>& hypothesis) {
    std::vector<std::uint64_t> l(hypothesis);
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (!l.empty()) check(l.back() < c.domain_size(), "hypothesis outside domain");

    auto diffs = hypothesis_diffs(c, l);
    // if L matches a concept, that group may survive; otherwise any single
    // group may be excused.  Take the best choice deterministically.
    int matched = -1;
    for (std::size_t g = 0; g < diffs.size(); ++g)
        if (diffs[g].empty()) matched = (int)g;

    SpecifyingResult best;
    bool have = false;
    for (std::size_t g = 0; g < diffs.size(); ++g) {
        if (matched >= 0 && (int)g != matched) continue;
        std::vector<std::vector<std::uint64_t>> cons;
        for (std::size_t h = 0; h < diffs.size(); ++h)
            if (h != g) cons.push_back(diffs[h]);
        auto hit = minimal_hitting_set(std::move(cons));
        check(hit.feasible, "distinct extensions give nonempty differences");
        if (!have || hit.witness.size() < best.witness.size() ||
            (hit.witness.size() == best.witness.size() && hit.witness < best.witness)) {
            best.witness = std::move(hit.witness);
            have = true;
        }
    }
    check(have, "class has at least one group");
    best.dim = Dim::finite(best.witness.size());
    return best;
}

namespace {

// bitmask variants for the exhaustive hypothesis sweep (domain <= 22)

bool mask_cover(const std::vector<std::uint32_t>& cons, std::uint32_t chosen,
                std::size_t budget) {
    int best = -1;
    unsigned best_n = 33;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        if (cons[i] & chosen) continue;
        unsigned n = (unsigned)std::popcount(cons[i]);
        if (n < best_n) best_n = n, best = (int)i;
    }
    if (best < 0) return true;
    if (budget == 0) return false;
    std::uint32_t rest = cons[(std::size_t)best];
    while (rest) {
        std::uint32_t bit = rest & (~rest + 1);
        rest ^= bit;
        if (mask_cover(cons, chosen | bit, budget - 1)) return true;
    }
    return false;
}

// min specifying size for hypothesis mask, quitting early once > cap is known
// (returns cap+1 in that case)
std::size_t msp_mask(const std::vector<std::uint32_t>& exts, std::uint32_t l,
                     std::size_t cap) {
    std::vector<std::uint32_t> diffs(exts.size());
    int matched = -1;
    for (std::size_t g = 0; g < exts.size(); ++g) {
        diffs[g] = exts[g] ^ l;
        if (diffs[g] == 0) matched = (int)g;
    }
    for (std::size_t v = 0; v <= cap; ++v) {
        for (std::size_t g = 0; g < exts.size(); ++g) {
            if (matched >= 0 && (int)g != matched) continue;
            std::vector<std::uint32_t> cons;
            for (std::size_t h = 0; h < diffs.size(); ++h)
                if (h != g) cons.push_back(diffs[h]);
            if (mask_cover(cons, 0, v)) return v;
        }
    }
    return cap + 1;
}

}  // namespace

XtdResult xtd_of_class(const ConceptClass& c) {
    if (c.domain_size() > kXtdExactLimit)
        throw bound_error("xtd_of_class exhaustive mode needs domain <= " +
                          std::to_string(kXtdExactLimit) + " (use sampling)");
    std::uint64_t n = c.domain_size();
    std::vector<std::uint32_t> exts;
    for (std::size_t rep : c.group_reps()) {
        std::uint32_t m = 0;
        for (std::uint64_t e : c.at(rep).elements) m |= (std::uint32_t)1 << e;
        exts.push_back(m);
    }
    XtdResult r;
    r.exact = true;
    r.hypotheses_checked = (std::uint64_t)1 << n;
    std::size_t best = 0;
    std::uint32_t best_l = 0;
    bool have = false;
    for (std::uint64_t l = 0; l < ((std::uint64_t)1 << n); ++l) {
        // strict-improvement check: is msp(l) > best?
        std::size_t cap = have ? best : 0;
        std::size_t v = msp_mask(exts, (std::uint32_t)l, cap);
        if (!have || v > best) {
            if (v == cap + 1) {
                // capped answer: recompute without cap to get the true value
                v = msp_mask(exts, (std::uint32_t)l, n);
            }
            best = v;
            best_l = (std::uint32_t)l;
            have = true;
        }
    }
    r.dim = Dim::finite(best);
    for (std::uint64_t e = 0; e < n; ++e)
        if (best_l & ((std::uint32_t)1 << e)) r.worst_hypothesis.push_back(e);
    return r;
}

XtdResult xtd_of_class_sampled(const ConceptClass& c, std::uint64_t samples,
                               std::uint64_t seed) {
    XtdResult r;
    r.exact = false;
    r.hypotheses_checked = samples;
    SplitMix64 rng(seed);
    std::size_t best = 0;
    std::vector<std::uint64_t> best_l;
    bool have = false;
    for (std::uint64_t t = 0; t < samples; ++t) {
        std::vector<std::uint64_t> l;
        for (std::uint64_t e = 0; e < c.domain_size(); ++e)
            if (rng.next() & 1) l.push_back(e);
        auto got = min_specifying_set(c, l);
        if (!have || got.dim.value() > best) {
            best = got.dim.value();
            best_l = std::move(l);
            have = true;
        }
    }
    r.dim = Dim::finite(best);
    r.worst_hypothesis = std::move(best_l);
    return r;
}

XtdPlusReport xtdplus_of_class(const ConceptClass& c) {
    XtdPlusReport r;
    r.distinct = c.distinct_count();
    r.all_disjoint = true;
    r.witness_i = r.witness_j = 0;
    r.shared_element = 0;
    // first element claimed by two distinct groups, in (group, element) scan order
    std::vector<long> owner(c.domain_size(), -1);
    for (std::size_t rep : c.group_reps()) {
        for (std::uint64_t e : c.at(rep).elements) {
            if (owner[e] < 0) {
                owner[e] = (long)rep;
            } else if (r.all_disjoint) {
                r.all_disjoint = false;
                r.witness_i = (std::size_t)owner[e];
                r.witness_j = rep;
                r.shared_element = e;
            }
        }
        if (!r.all_disjoint) break;
    }
    if (!r.all_disjoint)
        r.dim = Dim::infinite();
    else
        r.dim = Dim::finite(r.distinct <= 1 ? 0 : 1);
    return r;
}

}  // namespace teachdim
