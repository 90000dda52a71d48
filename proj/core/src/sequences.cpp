#include "teachdim/sequences.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "teachdim/hitting.hpp"

namespace teachdim {

namespace {

// distinct alive groups containing each element, plus the alive group count.
// Feeds the O(|L|) "td or td+ equals 1 via a unique element" fast paths that
// keep validation linear on gadget-sized classes.
struct AliveCounts {
    std::vector<std::uint32_t> owners;  // per element
    std::size_t groups = 0;
};

AliveCounts alive_counts(const ConceptClass& c, const std::vector<char>& alive) {
    AliveCounts ac;
    ac.owners.assign(c.domain_size(), 0);
    std::vector<char> group_alive(c.distinct_count(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (alive[i]) group_alive[c.group_of(i)] = 1;
    for (std::size_t g = 0; g < c.distinct_count(); ++g) {
        if (!group_alive[g]) continue;
        ++ac.groups;
        for (std::uint64_t e : c.at(c.group_reps()[g]).elements) ++ac.owners[e];
    }
    return ac;
}

Dim tdplus_quick(const ConceptClass& c, std::size_t i, const std::vector<char>& alive,
                 const AliveCounts& ac) {
    if (ac.groups <= 1) return Dim::finite(0);
    for (std::uint64_t e : c.at(i).elements)
        if (ac.owners[e] == 1) return Dim::finite(1);
    return positive_teaching_dimension(c, i, &alive).dim;
}

Dim td_quick(const ConceptClass& c, std::size_t i, const std::vector<char>& alive,
             const AliveCounts& ac) {
    if (ac.groups <= 1) return Dim::finite(0);
    for (std::uint64_t e : c.at(i).elements)
        if (ac.owners[e] == 1) return Dim::finite(1);
    bool in_target = false;  // a negative example e works iff every other alive group has e
    for (std::uint64_t e = 0; e < c.domain_size(); ++e) {
        in_target = std::binary_search(c.at(i).elements.begin(), c.at(i).elements.end(), e);
        if (!in_target && ac.owners[e] == ac.groups - 1) return Dim::finite(1);
    }
    return teaching_dimension(c, i, &alive).dim;
}

}  // namespace

SequenceValidation validate_sequence(const ConceptClass& c, const TeachingSequence& ts,
                                     bool positive) {
    SequenceValidation v;
    v.order = Dim::finite(0);
    auto fail = [&](const std::string& why) {
        v.valid = false;
        v.reason = why;
        v.order = Dim::infinite();
        return v;
    };
    if (ts.blocks.empty()) return fail("no blocks");
    if (!ts.declared.empty() && ts.declared.size() != ts.blocks.size())
        return fail("declared orders do not match block count");
    std::vector<char> seen(c.size(), 0);
    for (std::size_t b = 0; b < ts.blocks.size(); ++b) {
        if (ts.blocks[b].empty()) return fail("block " + std::to_string(b) + " is empty");
        for (std::size_t i : ts.blocks[b]) {
            if (i >= c.size())
                return fail("concept index " + std::to_string(i) + " out of range");
            if (seen[i])
                return fail("concept '" + c.at(i).name + "' appears in two blocks");
            seen[i] = 1;
        }
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!seen[i]) return fail("concept '" + c.at(i).name + "' missing from the blocks");

    std::vector<char> alive(c.size(), 1);
    for (std::size_t b = 0; b < ts.blocks.size(); ++b) {
        AliveCounts ac = alive_counts(c, alive);
        Dim maxd = Dim::finite(0);
        std::size_t min_size = c.at(ts.blocks[b][0]).elements.size();
        for (std::size_t i : ts.blocks[b]) {
            Dim d = positive ? tdplus_quick(c, i, alive, ac) : td_quick(c, i, alive, ac);
            maxd = std::max(maxd, d);
            min_size = std::min(min_size, c.at(i).elements.size());
        }
        Dim recomputed = maxd;
        if (positive) {
            if (maxd.is_infinite() || maxd.value() > min_size) {
                v.orders.push_back(Dim::infinite());
                return fail("block " + std::to_string(b) +
                            " admits no exact-size positive witnesses");
            }
            if (!ts.declared.empty()) {
                Dim want = ts.declared[b];
                if (want.is_infinite() || want < maxd || want.value() > min_size)
                    return fail("block " + std::to_string(b) + " cannot run at declared order " +
                                want.str());
                recomputed = want;
            }
        } else if (!ts.declared.empty() && ts.declared[b] != recomputed) {
            return fail("block " + std::to_string(b) + " declares order " + ts.declared[b].str() +
                        " but the partition forces " + recomputed.str());
        }
        v.orders.push_back(recomputed);
        v.order = std::max(v.order, recomputed);
        for (std::size_t i : ts.blocks[b]) alive[i] = 0;
    }
    v.valid = true;
    return v;
}

GreedyResult rtd1plus_at_most(const ConceptClass& c, std::uint64_t n) {
    GreedyResult r;
    std::vector<char> alive(c.size(), 1);
    std::size_t left = c.size();
    while (left > 0) {
        bool advanced = false;
        for (std::size_t i = 0; i < c.size() && !advanced; ++i) {
            if (!alive[i] || !tdplus_at_most(c, i, n, &alive)) continue;
            r.plan.push_back({i, positive_teaching_dimension(c, i, &alive).dim});
            alive[i] = 0;
            --left;
            advanced = true;
        }
        if (!advanced) {
            for (std::size_t i = 0; i < c.size(); ++i)
                if (alive[i]) r.stuck.push_back(i);
            r.ok = false;
            return r;
        }
    }
    r.ok = true;
    return r;
}

Rtd1PlusResult rtd1plus(const ConceptClass& c) {
    std::uint64_t bound = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        bound = std::max<std::uint64_t>(bound, c.at(i).elements.size());
    for (std::uint64_t n = 0; n <= bound; ++n) {
        GreedyResult g = rtd1plus_at_most(c, n);
        if (g.ok) return {Dim::finite(n), std::move(g.plan)};
    }
    // a subset-maximal concept always has td+ <= |extension| <= bound
    throw internal_error("greedy must succeed at n = max extension size");
}

TeachingSequence canonical_sequence(const ConceptClass& c, bool positive) {
    TeachingSequence ts;
    std::vector<char> alive(c.size(), 1);
    std::size_t left = c.size();
    while (left > 0) {
        AliveCounts ac = alive_counts(c, alive);
        std::vector<Dim> dims(c.size(), Dim::infinite());
        Dim best = Dim::infinite();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!alive[i]) continue;
            dims[i] = positive ? tdplus_quick(c, i, alive, ac) : td_quick(c, i, alive, ac);
            best = std::min(best, dims[i]);
        }
        check(!best.is_infinite(), "some remaining concept must be teachable");
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (alive[i] && dims[i] == best) {
                block.push_back(i);
                alive[i] = 0;
                --left;
            }
        ts.blocks.push_back(std::move(block));
        ts.declared.push_back(best);
    }
    return ts;
}

Dim rtd_exact(const ConceptClass& c, bool positive) {
    std::size_t m = c.distinct_count();
    if (m > kRtdExactLimit)
        throw bound_error("rtd_exact handles at most " + std::to_string(kRtdExactLimit) +
                          " distinct concepts; canonical_sequence gives an upper bound");
    auto alive_for = [&](std::uint32_t mask) {
        std::vector<char> alive(c.size(), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (mask & (1u << c.group_of(i))) alive[i] = 1;
        return alive;
    };
    // dim[g * 2^m + mask]: cost of teaching group g while mask remains
    std::vector<Dim> gdim((std::size_t)m << m, Dim::infinite());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        auto alive = alive_for(mask);
        for (std::size_t g = 0; g < m; ++g) {
            if (!(mask & (1u << g))) continue;
            std::size_t rep = c.group_reps()[g];
            gdim[(g << m) | mask] = positive
                                        ? positive_teaching_dimension(c, rep, &alive).dim
                                        : teaching_dimension(c, rep, &alive).dim;
        }
    }
    std::vector<Dim> dp(1u << m, Dim::infinite());
    dp[0] = Dim::finite(0);
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        for (std::uint32_t f = s; f; f = (f - 1) & s) {
            Dim rest = dp[s ^ f];
            if (rest.is_infinite()) continue;
            Dim cost = Dim::finite(0);
            std::size_t min_size = SIZE_MAX;
            for (std::size_t g = 0; g < m; ++g) {
                if (!(f & (1u << g))) continue;
                cost = std::max(cost, gdim[(g << m) | s]);
                min_size = std::min(min_size, c.at(c.group_reps()[g]).elements.size());
            }
            if (positive && (cost.is_infinite() || cost.value() > min_size))
                continue;  // no exact-size positive witnesses for this block
            dp[s] = std::min(dp[s], std::max(cost, rest));
        }
    }
    return dp[(1u << m) - 1];
}

TeachingSequence parse_sequence(std::istream& in, const ConceptClass& c) {
    TeachingSequence ts;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "block:" || head == "block") {
            if (head == "block") {
                std::string colon;
                if (!(ls >> colon) || colon != ":")
                    throw parse_error("expected ':' after 'block'", line_no);
            }
            std::vector<std::size_t> block;
            std::string name;
            while (ls >> name) {
                int idx = c.find(name);
                if (idx < 0) throw parse_error("unknown concept '" + name + "'", line_no);
                block.push_back((std::size_t)idx);
            }
            if (block.empty()) throw parse_error("empty block", line_no);
            ts.blocks.push_back(std::move(block));
        } else {
            throw parse_error("unknown directive '" + head + "'", line_no);
        }
    }
    return ts;
}

}  // namespace teachdim
