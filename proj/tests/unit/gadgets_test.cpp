#include <doctest.h>

#include <algorithm>

#include "teachdim/gadgets.hpp"
#include "teachdim/specifying.hpp"
#include "teachdim/teaching.hpp"

using namespace teachdim;

namespace {

const SetDescriptor kEvens = SetDescriptor::progressions({{2, 0}});

}  // namespace

TEST_SUITE("gadgets") {

TEST_CASE("report plumbing") {
    CHECK(default_horizons().columns == 6);
    CHECK(default_horizons().stages == 48);
    CHECK(default_horizons().domain == 64);
    GadgetReport r;
    r.add("fine", true, "detail");
    CHECK(r.ok());
    r.add("broken", false);
    CHECK_FALSE(r.ok());
    CHECK(r.checks.size() == 2);
}

TEST_CASE("staged column family tracks the descriptor") {
    StagedFamily fam = build_acds_gadget(SetDescriptor::finite({5}), default_horizons());
    // finite descriptors push the horizons out so a short column survives
    CHECK(fam.horizons().columns >= 6);
    std::uint64_t s_max = fam.horizons().stages;
    // column 5 never sees a member above it and stays an initial segment
    CHECK(fam.column(5, s_max) == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5});
    // column 1 fills up once the enumeration reveals 5 > 1
    CHECK(fam.column(1, 0) == std::vector<std::uint64_t>{0});
    CHECK(fam.column(1, 3) == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(fam.stage_restrict(s_max).distinct_count() == 2);

    StagedFamily inf = build_acds_gadget(kEvens, default_horizons());
    CHECK(inf.stage_restrict(inf.horizons().stages).distinct_count() == 1);
}

TEST_CASE("empty-set verdict tracks infinitude") {
    GadgetReport r = verify_acds(kEvens, default_horizons());
    CHECK(r.ok());
    CHECK(r.verdict);
    CHECK(r.ground_truth);
    CHECK(r.settling_stage == 0);  // every stage already looks settled

    r = verify_acds(SetDescriptor::finite({5}), default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);
    // the short column separates exactly when the stage passes its index
    CHECK(r.settling_stage == 6);

    r = verify_acds(SetDescriptor::cofinite({1, 3}), default_horizons());
    CHECK(r.ok());
    CHECK(r.verdict);

    r = verify_acds(SetDescriptor::finite({}), default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);
}

TEST_CASE("tag-join family: member columns collapse, excluded columns carry markers") {
    ConceptClass c = build_t1_gadget(SetDescriptor::cofinite({1, 3}), 0, 0,
                                     default_horizons());
    REQUIRE(c.size() == 6);
    // H2 duplicates H0 because 2 is a member; H1 adds exactly its marker
    CHECK(c.same_extension(2, 0));
    CHECK(c.same_extension(4, 0));
    std::vector<std::uint64_t> extra;
    std::set_difference(c.at(1).elements.begin(), c.at(1).elements.end(),
                        c.at(0).elements.begin(), c.at(0).elements.end(),
                        std::back_inserter(extra));
    CHECK(extra == std::vector<std::uint64_t>{3});
    // single-tag build: H0 is taught by the two excluded markers alone
    CHECK(teaching_dimension(c, 0).dim == Dim::finite(2));
}

TEST_CASE("TD growth verdict tracks cofiniteness") {
    GadgetReport r = verify_t1(SetDescriptor::cofinite({1, 3}), default_horizons());
    CHECK(r.ok());
    CHECK(r.verdict);

    r = verify_t1(kEvens, default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);

    r = verify_t1(SetDescriptor::finite({0, 2}), default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);

    r = verify_t1(SetDescriptor::cofinite({}), default_horizons());
    CHECK(r.ok());
    CHECK(r.verdict);
}

TEST_CASE("positive-dimension family pins its witness on the first gap") {
    ConceptClass c = build_tdplus_gadget(SetDescriptor::cofinite({2}), 0,
                                         default_horizons());
    TdPlusResult p = positive_teaching_dimension(c, 0);
    CHECK(p.dim == Dim::finite(1));
    // least member above the last excluded value is 3; its odd code is 7
    CHECK(p.witness == std::vector<std::uint64_t>{7});
}

TEST_CASE("witness-stability verdict tracks cofiniteness") {
    GadgetReport r = verify_tdplus_forall(SetDescriptor::cofinite({2}), default_horizons());
    CHECK(r.ok());
    CHECK(r.verdict);

    r = verify_tdplus_forall(SetDescriptor::finite({0, 2}), default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);

    r = verify_tdplus_forall(kEvens, default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);

    r = verify_tdplus_forall(SetDescriptor::finite({}), default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);
}

TEST_CASE("two-concept family separates finite from infinite descriptors") {
    ConceptClass fin = build_xtdplus_gadget(SetDescriptor::finite({0, 2}), default_horizons());
    REQUIRE(fin.size() == 2);
    CHECK(fin.at(1).elements == std::vector<std::uint64_t>{0, 1});
    CHECK(xtdplus_of_class(fin).dim.is_infinite());

    ConceptClass inf = build_xtdplus_gadget(kEvens, default_horizons());
    CHECK(xtdplus_of_class(inf).dim == Dim::finite(0));

    for (const char* text : {"finite:{3}", "cofinite:{0}", "progressions:{(3,1)}"}) {
        SetDescriptor w = SetDescriptor::parse(text);
        GadgetReport r = verify_xtdplus(w, default_horizons());
        CHECK(r.ok());
        CHECK(r.verdict == w.is_infinite());
    }
}

TEST_CASE("cycling-subset family: markers are cheap, the top is not") {
    ConceptClass c = build_lk_gadget(2, 3, default_horizons());
    CHECK(c.size() == 1 + 3 * 7);
    CHECK(c.at(0).elements == std::vector<std::uint64_t>{0, 2, 4});
    // all proper subsets recur as marker bodies, so the top needs k+1 points
    CHECK(positive_teaching_dimension(c, 0).dim == Dim::finite(3));
    for (std::size_t j : {std::size_t(1), std::size_t(8), std::size_t(21)})
        CHECK(positive_teaching_dimension(c, j).dim == Dim::finite(1));

    GadgetReport r = verify_lk(1, 3, default_horizons(), 17);
    CHECK(r.ok());
    r = verify_lk(2, 2, default_horizons(), 17);
    CHECK(r.ok());
}

TEST_CASE("concatenated-column bundle exposes its teaching sequence") {
    GanBundle b = build_gan_bundle(SetDescriptor::cofinite({}), 1, 3, default_horizons());
    CHECK(b.cls.at(0).name == "An");
    CHECK(b.family[0] == -1);
    CHECK(b.alphabet == 3);
    // 6 families, sigmas of length 2 and 3 over a 3-letter alphabet
    CHECK(b.cls.size() == 1 + 6 * (9 + 27));
    for (std::size_t i = 1; i < b.cls.size(); ++i)
        CHECK(b.family[i] >= 0);
    SequenceValidation v = validate_sequence(b.cls, b.witness_sequence, true);
    REQUIRE(v.valid);
    CHECK(v.order == Dim::finite(1));

    GanBundle coinf = build_gan_bundle(kEvens, 1, 3, default_horizons());
    v = validate_sequence(coinf.cls, coinf.witness_sequence, true);
    REQUIRE(v.valid);
    CHECK(v.order == Dim::finite(2));
}

TEST_CASE("sequence-order verdict tracks cofiniteness of the index set") {
    GadgetReport r = verify_gan(SetDescriptor::cofinite({}), 1, 3, default_horizons());
    CHECK(r.ok());
    CHECK(r.verdict);
    r = verify_gan(kEvens, 1, 3, default_horizons());
    CHECK(r.ok());
    CHECK_FALSE(r.verdict);
}

TEST_CASE("subsequence selection keeps order") {
    CHECK(sigma_select({4, 5, 6}, {0, 2}) == std::vector<std::uint64_t>{4, 6});
    CHECK(sigma_select({4, 5, 6}, {}).empty());
    CHECK(sigma_select({9}, {0}) == std::vector<std::uint64_t>{9});
}

TEST_CASE("mover counts follow the complement at each stage") {
    SetDescriptor none = SetDescriptor::cofinite({});
    CHECK(mover_count(none, 1, 0, 16) == 0);
    CHECK(mover_count(none, 1, 4, 16) == 4);
    CHECK(mover_count(none, 1, 8, 16) == 8);
    // the n-th complement element can move at most universe-n-1 times
    CHECK(mover_count(none, 1, 16, 16) == 14);
    CHECK(mover_count(none, 1, 32, 16) == 14);

    SetDescriptor f = SetDescriptor::finite({0, 2});
    CHECK(mover_count(f, 0, 0, 16) == 0);
    CHECK(mover_count(f, 0, 1, 16) == 1);  // enumerating 0 pushes the least gap to 1
    CHECK(mover_count(f, 0, 8, 16) == 1);  // enumerating 2 leaves it at 1
    CHECK(mover_count(f, 1, 8, 16) == 2);
    CHECK(mover_count(kEvens, 0, 8, 16) == 1);
}

TEST_CASE("mover-count reduction assembles order-1 bundles") {
    Horizons h{4, 12, 12};
    ConceptClass u = build_rtd_reduction({SetDescriptor::finite({0, 2}), kEvens}, 2, h);
    CHECK(u.size() == 6);  // bundle sizes 1 + 2 + 1 + 2
    GadgetReport r = verify_rtd_reduction({SetDescriptor::finite({0, 2}), kEvens}, 2, h);
    CHECK(r.ok());
    CHECK(r.verdict);
}

TEST_CASE("positive refutation enumerates subsets in (size, lex) order") {
    ConceptClass c(3, {{"a", {0}}, {"b", {0, 1}}, {"d", {1, 2}}});
    RefuteReport r = refute_positive_teaching_set(c, 0, 1);
    CHECK(r.refuted);
    CHECK(r.subsets_checked == 2);  // {} and {0}
    REQUIRE(r.refutations.size() == 2);
    CHECK(r.refutations[0].first.empty());
    CHECK(r.refutations[0].second == 1);
    CHECK(r.refutations[1].first == std::vector<std::uint64_t>{0});

    r = refute_positive_teaching_set(c, 1, 2);
    CHECK_FALSE(r.refuted);
    CHECK(r.unrefuted == std::vector<std::uint64_t>{0, 1});
    CHECK(r.subsets_checked == 4);  // {}, {0}, {1}, then the uncovered {0,1}
}

TEST_CASE("staged refutation reports where the verdict settles") {
    StagedFamily fam = build_acds_gadget(SetDescriptor::finite({5}), default_horizons());
    StagedRefuteReport sr = refute_positive_staged(fam, 5, 2);
    CHECK(sr.at_horizon.refuted);  // the short column sits inside the full one
    CHECK(sr.settling_stage == 6);

    sr = refute_positive_staged(fam, 0, 2);
    CHECK_FALSE(sr.at_horizon.refuted);  // the full column has private points
    CHECK(sr.settling_stage == 0);
}

}  // TEST_SUITE
