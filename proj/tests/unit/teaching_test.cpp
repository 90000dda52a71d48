#include <doctest.h>

#include "teachdim/oracle.hpp"
#include "teachdim/rng.hpp"
#include "teachdim/teaching.hpp"

using namespace teachdim;

namespace {

// the motivating family: the empty concept plus all singletons over {0..n-1}
ConceptClass singletons_plus_empty(std::uint64_t n) {
    std::vector<Concept> cs{{"empty", {}}};
    for (std::uint64_t i = 0; i < n; ++i)
        cs.push_back({"s" + std::to_string(i), {i}});
    return ConceptClass(n, std::move(cs));
}

bool witness_separates(const ConceptClass& c, std::size_t i, const Sample& s) {
    if (!consistent(c.at(i).elements, s)) return false;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!c.same_extension(i, j) && consistent(c.at(j).elements, s)) return false;
    return true;
}

}  // namespace

TEST_SUITE("teaching") {

TEST_CASE("distinguishing sets and minimality") {
    ConceptClass c(3, {{"a", {1}}, {"b", {2}}});
    CHECK(is_distinguishing_set(c, 0, {1, 2}));
    CHECK(is_distinguishing_set(c, 0, {1}));
    CHECK_FALSE(is_distinguishing_set(c, 0, {0}));
    CHECK_FALSE(is_distinguishing_set(c, 0, {}));
    // {1,2} distinguishes but {1} already does, so it is not minimal
    CHECK_FALSE(is_minimal_distinguishing_set(c, 0, {1, 2}));
    CHECK(is_minimal_distinguishing_set(c, 0, {1}));
    CHECK(is_minimal_distinguishing_set(c, 0, {2}));
}

TEST_CASE("the empty set distinguishes only a lone extension") {
    ConceptClass solo(2, {{"a", {0}}, {"twin", {0}}});
    CHECK(is_distinguishing_set(solo, 0, {}));
    CHECK(is_minimal_distinguishing_set(solo, 1, {}));
}

TEST_CASE("td_at_most rejects d = 0 and is monotone") {
    ConceptClass c(3, {{"a", {1}}, {"b", {2}}});
    CHECK_THROWS_AS(td_at_most(c, 0, 0), bound_error);
    CHECK(td_at_most(c, 0, 1));
    CHECK(td_at_most(c, 0, 3));
}

TEST_CASE("singletons plus empty, n = 5") {
    ConceptClass c = singletons_plus_empty(5);
    CHECK(teaching_dimension(c, 0).dim == Dim::finite(5));
    for (std::size_t i = 1; i <= 5; ++i)
        CHECK(teaching_dimension(c, i).dim == Dim::finite(1));
    ClassDim cd = td_of_class(c);
    CHECK(cd.dim == Dim::finite(5));
    CHECK(cd.argmax == 0);
}

TEST_CASE("duplicates are never adversaries") {
    ConceptClass c(2, {{"a", {0}}, {"same", {0}}, {"b", {1}}});
    TdResult r = teaching_dimension(c, 0);
    CHECK(r.dim == Dim::finite(1));
    CHECK(witness_separates(c, 0, r.witness));
    TdPlusResult p = positive_teaching_dimension(c, 0);
    CHECK(p.dim == Dim::finite(1));
    CHECK(p.witness == std::vector<std::uint64_t>{0});
}

TEST_CASE("positive dimension goes infinite exactly under a covering concept") {
    ConceptClass c(2, {{"small", {0}}, {"big", {0, 1}}});
    TdPlusResult p = positive_teaching_dimension(c, 0);
    CHECK(p.dim.is_infinite());
    CHECK(p.blocking == 1);
    p = positive_teaching_dimension(c, 1);
    CHECK(p.dim == Dim::finite(1));
    CHECK(p.witness == std::vector<std::uint64_t>{1});
    CHECK(p.blocking == -1);

    CHECK_FALSE(tdplus_at_most(c, 0, 5));
    CHECK(tdplus_at_most(c, 1, 1));

    ClassDim cd = tdplus_of_class(c);
    CHECK(cd.dim.is_infinite());
    CHECK(cd.argmax == 0);
}

TEST_CASE("alive masks restrict the adversaries") {
    ConceptClass c(2, {{"a", {0}}, {"b", {1}}, {"ab", {0, 1}}});
    std::vector<char> no_b{1, 0, 1};
    TdResult r = teaching_dimension(c, 0, &no_b);
    CHECK(r.dim == Dim::finite(1));
    // only {0,1} remains adversarial; the lex-least distinguishing set is {1}
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness.items[0].element == 1);
    CHECK(r.witness.items[0].label == Label::negative);

    std::vector<char> no_ab{1, 1, 0};
    TdPlusResult p = positive_teaching_dimension(c, 0, &no_ab);
    CHECK(p.dim == Dim::finite(1));
    CHECK(p.witness == std::vector<std::uint64_t>{0});
    // with every cover alive the positive dimension is infinite again
    CHECK(positive_teaching_dimension(c, 0).dim.is_infinite());
}

TEST_CASE("constraints feed the hitting engine in the documented shape") {
    ConceptClass c(3, {{"a", {0, 1}}, {"b", {1, 2}}, {"c", {0, 1}}});
    auto td = td_constraints(c, 0);
    REQUIRE(td.size() == 1);  // the duplicate contributes nothing
    CHECK(td[0] == std::vector<std::uint64_t>{0, 2});  // symmetric difference with b
    auto tdp = tdplus_constraints(c, 0);
    REQUIRE(tdp.size() == 1);
    CHECK(tdp[0] == std::vector<std::uint64_t>{0});  // target minus b
}

TEST_CASE("solver matches the enumeration oracle on random classes") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        ConceptClass c = random_class(rng, 5, 8);
        for (std::size_t i = 0; i < c.size(); ++i) {
            TdResult fast = teaching_dimension(c, i);
            OracleTd slow = oracle_td(c, i);
            REQUIRE(fast.dim == slow.dim);
            CHECK(witness_separates(c, i, fast.witness));
            CHECK(fast.witness.size() == fast.dim.value());

            TdPlusResult p = positive_teaching_dimension(c, i);
            REQUIRE(p.dim == oracle_tdplus(c, i).dim);
            if (!p.dim.is_infinite()) {
                Sample s = label_by_membership(c.at(i).elements, p.witness);
                CHECK(witness_separates(c, i, s));
            } else {
                REQUIRE(p.blocking >= 0);
                CHECK_FALSE(c.same_extension(i, (std::size_t)p.blocking));
            }
        }
    }
}

}  // TEST_SUITE
