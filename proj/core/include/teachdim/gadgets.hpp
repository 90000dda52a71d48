#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "teachdim/concepts.hpp"
#include "teachdim/descriptor.hpp"
#include "teachdim/sequences.hpp"
#include "teachdim/staged.hpp"

namespace teachdim {

// One verified finite-scale claim.  `detail` carries the observed values so a
// failing check is diagnosable from the report alone.
struct GadgetCheck {
    std::string name;
    bool pass;
    std::string detail;
};

// Every verifier reports the decidable ground truth its claim reduces to, the
// finite-scale verdict actually computed, and the per-claim checks.  The
// horizons echoed in `params` are the final (possibly raised) ones, so a
// truncation-scale result is never mistaken for the limit statement.
struct GadgetReport {
    std::string tag;
    std::string params;
    std::string claim;        // what verdict/ground_truth mean
    bool ground_truth = false;
    bool verdict = false;
    std::uint64_t settling_stage = 0;
    std::vector<GadgetCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, std::string detail = "");
};

Horizons default_horizons();  // columns 6, stages 48, domain 64

// --- builders -------------------------------------------------------------
// Each builder truncates the corresponding limit family; horizons are raised
// (never lowered) when a structurally required element or column would fall
// outside them.

// staged family: column i is full iff i = 0 or the stage approximation of W
// holds an element > i, and {0..i} otherwise
StagedFamily build_acds_gadget(const SetDescriptor& w, Horizons h);

// the {tag} join family: H_i = {pair(e,x)} joined with W u {i} (W alone for
// i = 0), for i below the column horizon
ConceptClass build_t1_gadget(const SetDescriptor& w, std::uint64_t e, std::uint64_t x,
                             Horizons h);

// L_0 = {a} join W; L_{i+1} = L_0 if i in W, else {a} join ({i} u (W below i))
ConceptClass build_tdplus_gadget(const SetDescriptor& w, std::uint64_t a, Horizons h);

// two concepts {full domain, G}: G = full domain when W is infinite, else
// {0} u {x : x < m} with m the stage at which the enumeration of W settles
ConceptClass build_xtdplus_gadget(const SetDescriptor& w, Horizons h);

// top concept [0,k] join {} plus marker concepts D join {j}, where D cycles
// through the proper subsets of [0,k] `multiplicity` times in index order
ConceptClass build_lk_gadget(std::uint64_t k, std::uint64_t multiplicity, Horizons h);

// concatenated-column family: one full-columns concept plus, per family
// i < J and per sequence sigma (entries < 2^{n+1}-1, lengths 2..len_bound),
// a concept with sigma-coded data columns and injective markers
ConceptClass build_gan_gadget(const SetDescriptor& a, std::uint64_t n,
                              std::uint64_t sigma_len_bound, Horizons h);

// gan class together with the exhibited teaching sequence for its
// classification and the family index of every concept (-1 for the full
// concept), for sequence validation and subfamily experiments
struct GanBundle {
    ConceptClass cls;
    TeachingSequence witness_sequence;
    std::vector<long> family;     // per concept
    std::uint64_t n = 0;
    std::uint64_t alphabet = 0;   // 2^{n+1}-1
    std::uint64_t len_bound = 0;
    Horizons horizons{};
};
GanBundle build_gan_bundle(const SetDescriptor& a, std::uint64_t n,
                           std::uint64_t sigma_len_bound, Horizons h);

// number of t < s at which the n-th element of {0..universe-1} minus the
// stage-t approximation moves; changes count only when the element is defined
// on both sides of the step
std::uint64_t mover_count(const SetDescriptor& a, std::uint64_t n, std::uint64_t s,
                          std::uint64_t universe);

// disjoint union over families i of the mover-count-limited column bundles
// {L^i_j : j < m(a_i, n, S)} for n below `cols` (empty bundles are dropped)
ConceptClass build_rtd_reduction(const std::vector<SetDescriptor>& as, std::uint64_t cols,
                                 Horizons h);

// --- verifiers ------------------------------------------------------------

// claim: the empty set distinguishes column 0 at the stage horizon iff W is
// infinite; also reports where the stage-indexed predicate settles
GadgetReport verify_acds(const SetDescriptor& w, Horizons h);

// claim: TD of the i=0 concept stops growing between column horizons J and
// 2J iff W is cofinite; checks the exhibited teaching sets of both cases
GadgetReport verify_t1(const SetDescriptor& w, Horizons h);

// claim: the positive dimension of L_0 is finite with a horizon-stable
// witness iff W is cofinite (finite W yields a genuine covering superset,
// infinite coinfinite W drags the witness upward as horizons double)
GadgetReport verify_tdplus_forall(const SetDescriptor& w, Horizons h);

// claim: the two-concept class has finite positive extended dimension iff W
// is infinite
GadgetReport verify_xtdplus(const SetDescriptor& w, Horizons h);

// claims: marker concepts teach positively with one example; scheduling the
// top concept first costs exactly k+1; sampled subfamilies have
// single-example plans
GadgetReport verify_lk(std::uint64_t k, std::uint64_t multiplicity, Horizons h,
                       std::uint64_t seed);

// claims: the exhibited sequence validates with order 1 (cofinite) or n+1
// (coinfinite); and in the coinfinite case n+1 points are needed to tell a
// later-family concept from the first excluded family
GadgetReport verify_gan(const SetDescriptor& a, std::uint64_t n,
                        std::uint64_t sigma_len_bound, Horizons h);

// claims: mover counts start at 0, grow monotonically, respect the finite
// bound; assembled bundles teach at order <= 1 and the union obeys the
// sandwich bound
GadgetReport verify_rtd_reduction(const std::vector<SetDescriptor>& as, std::uint64_t cols,
                                  Horizons h);

// --- probes ---------------------------------------------------------------

// Enumerates the subsets S of concept i with |S| <= budget in (size, lex)
// order.  Refuted means every S is covered by a distinct concept (i.e. the
// positive dimension exceeds the budget); otherwise the first uncovered S is
// returned.
struct RefuteReport {
    bool refuted = false;
    std::uint64_t subsets_checked = 0;
    // (subset, covering concept index), in enumeration order
    std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> refutations;
    std::vector<std::uint64_t> unrefuted;  // meaningful when !refuted
};
RefuteReport refute_positive_teaching_set(const ConceptClass& c, std::size_t i,
                                          std::uint64_t budget);

// runs the refutation against every stage restriction and reports the least
// stage from which the verdict stays constant
struct StagedRefuteReport {
    RefuteReport at_horizon;
    std::uint64_t settling_stage = 0;
};
StagedRefuteReport refute_positive_staged(const StagedFamily& f, std::uint64_t column,
                                          std::uint64_t budget);

// the subsequence selector: picks positions `s` (sorted, within range) out of
// sigma, preserving order
std::vector<std::uint64_t> sigma_select(const std::vector<std::uint64_t>& sigma,
                                        const std::vector<std::uint64_t>& s);

}  // namespace teachdim
