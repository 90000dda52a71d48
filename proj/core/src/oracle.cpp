#include "teachdim/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace teachdim {

namespace {

constexpr std::uint64_t kOracleDomainCap = 16;
constexpr std::size_t kOracleSizeCap = 8;

std::uint64_t ext_mask(const std::vector<std::uint64_t>& ext) {
    std::uint64_t m = 0;
    for (std::uint64_t v : ext) m |= 1ULL << v;
    return m;
}

std::vector<std::uint64_t> mask_elements(std::uint64_t mask) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

void require_domain(const ConceptClass& c) {
    if (c.domain_size() > kOracleDomainCap)
        throw bound_error("oracle limited to domains of at most 16 elements");
}

// distinct extension masks, restricted to the alive concepts when a mask is
// given (alive masks are only used by the size-capped ordering oracles)
std::vector<std::uint64_t> rep_masks(const ConceptClass& c, const std::uint64_t* alive_mask) {
    std::vector<std::uint64_t> out;
    std::vector<char> seen(c.distinct_count(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (alive_mask && !(*alive_mask >> i & 1)) continue;
        std::size_t g = c.group_of(i);
        if (seen[g]) continue;
        seen[g] = 1;
        out.push_back(ext_mask(c.at(i).elements));
    }
    return out;
}

// brute positive dimension of concept i against the alive subclass
Dim brute_tdplus(const ConceptClass& c, std::size_t i, std::uint64_t alive_mask) {
    std::uint64_t target = ext_mask(c.at(i).elements);
    auto reps = rep_masks(c, &alive_mask);
    std::size_t n = c.at(i).elements.size();
    for (std::uint64_t size = 0; size <= n; ++size)
        for (std::uint64_t pick = 0; pick < (1ULL << n); ++pick) {
            if ((std::uint64_t)popcount(pick) != size) continue;
            std::uint64_t s = 0;
            for (std::size_t t = 0; t < n; ++t)
                if (pick >> t & 1) s |= 1ULL << c.at(i).elements[t];
            bool covered = false;
            for (std::uint64_t m : reps)
                if (m != target && (s & m) == s) {
                    covered = true;
                    break;
                }
            if (!covered) return Dim::finite(size);
        }
    return Dim::infinite();
}

// brute plain dimension of concept i against the alive subclass
Dim brute_td(const ConceptClass& c, std::size_t i, std::uint64_t alive_mask) {
    std::uint64_t target = ext_mask(c.at(i).elements);
    auto reps = rep_masks(c, &alive_mask);
    std::uint64_t md = c.domain_size();
    for (std::uint64_t size = 0; size <= md; ++size)
        for (std::uint64_t s = 0; s < (1ULL << md); ++s) {
            if ((std::uint64_t)popcount(s) != size) continue;
            bool sole = true;
            for (std::uint64_t m : reps)
                if (m != target && (m & s) == (target & s)) {
                    sole = false;
                    break;
                }
            if (sole) return Dim::finite(size);
        }
    return Dim::infinite();  // unreachable: s = domain separates
}

}  // namespace

OracleTd oracle_td(const ConceptClass& c, std::size_t i) {
    require_domain(c);
    check(i < c.size(), "oracle target out of range");
    std::uint64_t target = ext_mask(c.at(i).elements);
    auto reps = rep_masks(c, nullptr);
    std::uint64_t md = c.domain_size();
    for (std::uint64_t size = 0; size <= md; ++size)
        for (std::uint64_t s = 0; s < (1ULL << md); ++s) {
            if ((std::uint64_t)popcount(s) != size) continue;
            bool sole = true;
            for (std::uint64_t m : reps)
                if (m != target && (m & s) == (target & s)) {
                    sole = false;
                    break;
                }
            if (sole) return {Dim::finite(size), mask_elements(s)};
        }
    throw internal_error("the full domain failed to separate a concept");
}

OracleTd oracle_tdplus(const ConceptClass& c, std::size_t i) {
    require_domain(c);
    check(i < c.size(), "oracle target out of range");
    const auto& ext = c.at(i).elements;
    std::uint64_t target = ext_mask(ext);
    auto reps = rep_masks(c, nullptr);
    std::size_t n = ext.size();
    for (std::uint64_t size = 0; size <= n; ++size)
        for (std::uint64_t pick = 0; pick < (1ULL << n); ++pick) {
            if ((std::uint64_t)popcount(pick) != size) continue;
            std::uint64_t s = 0;
            for (std::size_t t = 0; t < n; ++t)
                if (pick >> t & 1) s |= 1ULL << ext[t];
            bool covered = false;
            for (std::uint64_t m : reps)
                if (m != target && (s & m) == s) {
                    covered = true;
                    break;
                }
            if (!covered) return {Dim::finite(size), mask_elements(s)};
        }
    return {Dim::infinite(), {}};
}

Dim oracle_min_specifying(const ConceptClass& c, const std::vector<std::uint64_t>& hypothesis) {
    require_domain(c);
    std::uint64_t hyp = ext_mask(hypothesis);
    auto reps = rep_masks(c, nullptr);
    std::uint64_t md = c.domain_size();
    for (std::uint64_t size = 0; size <= md; ++size)
        for (std::uint64_t s = 0; s < (1ULL << md); ++s) {
            if ((std::uint64_t)popcount(s) != size) continue;
            int agree = 0;
            for (std::uint64_t m : reps)
                if ((m & s) == (hyp & s) && ++agree > 1) break;
            if (agree <= 1) return Dim::finite(size);
        }
    throw internal_error("the full domain failed to specify a hypothesis");
}

Dim oracle_xtd(const ConceptClass& c) {
    if (c.domain_size() > 12) throw bound_error("exhaustive hypothesis oracle limited to 12 elements");
    std::uint64_t md = c.domain_size();
    Dim best = Dim::finite(0);
    for (std::uint64_t hyp = 0; hyp < (1ULL << md); ++hyp) {
        Dim d = oracle_min_specifying(c, mask_elements(hyp));
        if (d > best) best = d;
    }
    return best;
}

Dim oracle_xtdplus(const ConceptClass& c) {
    require_domain(c);
    auto reps = rep_masks(c, nullptr);
    std::uint64_t md = c.domain_size();
    Dim best = Dim::finite(0);
    for (std::uint64_t hyp = 1; hyp < (1ULL << md); ++hyp) {
        bool found = false;
        std::uint64_t least = 0;
        std::uint64_t s = hyp;
        for (;;) {  // all submasks of hyp, the empty one last
            int inside = 0;
            for (std::uint64_t m : reps)
                if ((s & m) == s && ++inside > 1) break;
            if (inside <= 1) {
                std::uint64_t sz = (std::uint64_t)popcount(s);
                if (!found || sz < least) least = sz;
                found = true;
            }
            if (s == 0) break;
            s = (s - 1) & hyp;
        }
        if (!found) return Dim::infinite();
        if (Dim::finite(least) > best) best = Dim::finite(least);
    }
    return best;
}

Dim oracle_rtd1plus(const ConceptClass& c) {
    if (c.size() > kOracleSizeCap) throw bound_error("ordering oracle limited to 8 concepts");
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    std::map<std::pair<std::size_t, std::uint64_t>, Dim> memo;
    auto step = [&](std::size_t i, std::uint64_t alive) {
        auto key = std::make_pair(i, alive);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Dim d = brute_tdplus(c, i, alive);
        memo.emplace(key, d);
        return d;
    };
    Dim best = Dim::infinite();
    do {
        Dim worst = Dim::finite(0);
        std::uint64_t alive = (1ULL << c.size()) - 1;
        for (std::size_t i : order) {
            Dim d = step(i, alive);
            if (d > worst) worst = d;
            if (worst >= best) break;
            alive &= ~(1ULL << i);
        }
        if (worst < best) best = worst;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

bool oracle_rtd1plus_at_most(const ConceptClass& c, std::uint64_t n) {
    Dim v = oracle_rtd1plus(c);
    return !v.is_infinite() && v <= Dim::finite(n);
}

Dim oracle_rtd(const ConceptClass& c, bool positive) {
    if (c.size() > kOracleSizeCap) throw bound_error("partition oracle limited to 8 concepts");
    if (c.domain_size() > 12) throw bound_error("partition oracle limited to 12 elements");
    std::size_t n = c.size();
    std::uint64_t full = (1ULL << n) - 1;
    std::vector<Dim> best(full + 1, Dim::infinite());
    best[0] = Dim::finite(0);

    // cost of teaching block b while `alive` remains (b ⊆ alive)
    auto block_cost = [&](std::uint64_t b, std::uint64_t alive) {
        Dim worst = Dim::finite(0);
        std::size_t min_ext = (std::size_t)-1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(b >> i & 1)) continue;
            Dim d = positive ? brute_tdplus(c, i, alive) : brute_td(c, i, alive);
            if (d > worst) worst = d;
            min_ext = std::min(min_ext, c.at(i).elements.size());
        }
        if (positive && !worst.is_infinite() && worst > Dim::finite(min_ext))
            return Dim::infinite();  // no exact-size positive witnesses
        return worst;
    };

    // fill best[] in increasing popcount order of the taught mask complement:
    // iterate alive masks descending so every strict submask is ready
    std::vector<std::uint64_t> masks(full + 1);
    std::iota(masks.begin(), masks.end(), 0);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return popcount(a) < popcount(b);
    });
    for (std::uint64_t alive : masks) {
        if (alive == 0) continue;
        Dim acc = Dim::infinite();
        for (std::uint64_t b = alive;; b = (b - 1) & alive) {
            if (b == 0) break;
            Dim rest = best[alive & ~b];
            if (!rest.is_infinite()) {
                Dim cost = block_cost(b, alive);
                if (!cost.is_infinite()) {
                    Dim total = cost > rest ? cost : rest;
                    if (total < acc) acc = total;
                }
            }
        }
        best[alive] = acc;
    }
    return best[full];
}

HittingResult oracle_hitting(const std::vector<std::vector<std::uint64_t>>& constraints) {
    std::vector<std::uint64_t> universe;
    for (const auto& cs : constraints) {
        if (cs.empty()) return {false, {}};
        universe.insert(universe.end(), cs.begin(), cs.end());
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (universe.size() > 20) throw bound_error("hitting oracle limited to 20 elements");
    std::size_t n = universe.size();
    for (std::uint64_t size = 0; size <= n; ++size)
        for (std::uint64_t pick = 0; pick < (1ULL << n); ++pick) {
            if ((std::uint64_t)popcount(pick) != size) continue;
            std::vector<std::uint64_t> s;
            for (std::size_t t = 0; t < n; ++t)
                if (pick >> t & 1) s.push_back(universe[t]);
            bool all_hit = true;
            for (const auto& cs : constraints) {
                bool hit = false;
                for (std::uint64_t v : cs)
                    if (std::binary_search(s.begin(), s.end(), v)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    all_hit = false;
                    break;
                }
            }
            if (all_hit) return {true, s};
        }
    throw internal_error("the full universe failed to hit the constraints");
}

}  // namespace teachdim
