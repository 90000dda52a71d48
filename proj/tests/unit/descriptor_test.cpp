#include <doctest.h>

#include <algorithm>

#include "teachdim/descriptor.hpp"

using namespace teachdim;

TEST_SUITE("descriptor") {

TEST_CASE("text syntax round-trips") {
    for (const char* text : {"finite:{}", "finite:{1,5}", "cofinite:{}", "cofinite:{0,3,9}",
                             "progressions:{(2,0)}", "progressions:{(2,0),(3,1)}"})
        CHECK(SetDescriptor::parse(text).str() == text);
    // normalization: order and duplicates
    CHECK(SetDescriptor::parse("finite:{5, 1, 1}").str() == "finite:{1,5}");
    CHECK(SetDescriptor::finite({9, 2, 2}).listed() == std::vector<std::uint64_t>{2, 9});
}

TEST_CASE("parse rejects malformed descriptors") {
    for (const char* text : {"", "finite", "finite:{", "finite:{a}",
                             "sets:{1}", "progressions:{}", "progressions:{(0,1)}",
                             "progressions:{(2;0)}", "cofinite:{1,,2}"})
        CHECK_THROWS_AS(SetDescriptor::parse(text), parse_error);
    // trailing commas are tolerated
    CHECK(SetDescriptor::parse("finite:{1,}").str() == "finite:{1}");
}

TEST_CASE("membership and classification") {
    auto f = SetDescriptor::finite({0, 2});
    CHECK(f.contains(0));
    CHECK_FALSE(f.contains(1));
    CHECK_FALSE(f.is_infinite());
    CHECK_FALSE(f.is_cofinite());

    auto cf = SetDescriptor::cofinite({1, 3});
    CHECK(cf.contains(0));
    CHECK_FALSE(cf.contains(3));
    CHECK(cf.is_infinite());
    CHECK(cf.is_cofinite());

    auto evens = SetDescriptor::progressions({{2, 0}});
    CHECK(evens.contains(4));
    CHECK_FALSE(evens.contains(5));
    CHECK(evens.is_infinite());
    CHECK_FALSE(evens.is_cofinite());

    // a union covering every residue class is cofinite
    auto both = SetDescriptor::progressions({{2, 0}, {2, 1}});
    CHECK(both.is_cofinite());
    auto nats = SetDescriptor::progressions({{1, 0}});
    CHECK(nats.is_cofinite());
    auto gap = SetDescriptor::progressions({{2, 0}, {4, 1}});
    CHECK_FALSE(gap.is_cofinite());
}

TEST_CASE("stage approximations are canonical") {
    auto f = SetDescriptor::finite({5, 7});
    CHECK(f.enumerated_by_stage(0).empty());
    CHECK(f.enumerated_by_stage(1) == std::vector<std::uint64_t>{5});
    CHECK(f.enumerated_by_stage(9) == std::vector<std::uint64_t>{5, 7});

    auto cf = SetDescriptor::cofinite({1});
    CHECK(cf.enumerated_by_stage(3) == std::vector<std::uint64_t>{0, 2});

    auto evens = SetDescriptor::progressions({{2, 0}});
    CHECK(evens.enumerated_by_stage(3) == std::vector<std::uint64_t>{0, 2, 4});

    // merged progressions stay sorted and deduplicated
    auto merged = SetDescriptor::progressions({{3, 0}, {2, 0}});
    CHECK(merged.enumerated_by_stage(5) == std::vector<std::uint64_t>{0, 2, 3, 4, 6});
}

TEST_CASE("stages grow monotonically with union the described set") {
    for (const char* text : {"finite:{2,4}", "cofinite:{0,5}", "progressions:{(3,1),(4,0)}"}) {
        SetDescriptor d = SetDescriptor::parse(text);
        std::vector<std::uint64_t> prev;
        for (std::uint64_t s = 0; s <= 16; ++s) {
            auto cur = d.enumerated_by_stage(s);
            CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
            CHECK(std::is_sorted(cur.begin(), cur.end()));
            for (std::uint64_t v : cur) CHECK(d.contains(v));
            prev = std::move(cur);
        }
        // every member below 12 shows up by stage 16
        auto caught = d.enumerated_by_stage(16);
        for (std::uint64_t v : d.members_below(12))
            CHECK(std::binary_search(caught.begin(), caught.end(), v));
    }
}

TEST_CASE("windows into the set and its complement") {
    auto cf = SetDescriptor::cofinite({1, 3});
    CHECK(cf.members_below(5) == std::vector<std::uint64_t>{0, 2, 4});
    CHECK(cf.complement_below(5) == std::vector<std::uint64_t>{1, 3});
    CHECK(cf.least_member_from(1) == 2);
    CHECK(cf.least_nonmember_from(0) == 1);
    CHECK_THROWS_AS(cf.least_nonmember_from(4), bound_error);

    auto evens = SetDescriptor::progressions({{2, 0}});
    CHECK(evens.least_member_from(3) == 4);
    CHECK(evens.least_nonmember_from(4) == 5);

    auto f = SetDescriptor::finite({3});
    CHECK(f.least_member_from(3) == 3);
    CHECK_THROWS_AS(f.least_member_from(4), bound_error);
    CHECK(f.least_nonmember_from(3) == 4);
    CHECK(f.least_nonmember_from(0) == 0);
}

}  // TEST_SUITE
