#include <doctest.h>

#include "teachdim/staged.hpp"

using namespace teachdim;

namespace {

StagedFamily triangles() {
    // column j holds {0..min(j,s)}
    auto fn = [](std::uint64_t j, std::uint64_t s) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t v = 0; v <= std::min(j, s); ++v) out.push_back(v);
        return out;
    };
    return StagedFamily(fn, Horizons{3, 5, 6});
}

}  // namespace

TEST_SUITE("staged") {

TEST_CASE("columns respect the horizons") {
    StagedFamily f = triangles();
    CHECK(f.column(2, 1) == std::vector<std::uint64_t>{0, 1});
    CHECK(f.column(2, 5) == std::vector<std::uint64_t>{0, 1, 2});
    CHECK_THROWS_AS(f.column(3, 0), bound_error);
    CHECK_THROWS_AS(f.column(0, 6), bound_error);
}

TEST_CASE("stage restriction deduplicates extensionally, first column keeps its name") {
    StagedFamily f = triangles();
    ConceptClass early = f.stage_restrict(0);  // every column collapses to {0}
    CHECK(early.size() == 1);
    CHECK(early.at(0).name == "c0");
    CHECK(early.domain_size() == 1);
    CHECK(f.index_of_column(early, 2, 0) == 0);

    ConceptClass late = f.stage_restrict(4);
    CHECK(late.size() == 3);
    CHECK(late.domain_size() == 5);
    CHECK(late.at(2).elements == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(f.index_of_column(late, 1, 4) == 1);
}

TEST_CASE("columns that leave the window are rejected") {
    auto bad = [](std::uint64_t j, std::uint64_t s) {
        return std::vector<std::uint64_t>{j + s + 1};
    };
    StagedFamily f(bad, Horizons{2, 4, 16});
    CHECK_THROWS_AS(f.column(0, 0), internal_error);  // 1 > min(0, 15)

    auto outside = [](std::uint64_t, std::uint64_t) {
        return std::vector<std::uint64_t>{9};
    };
    StagedFamily g(outside, Horizons{2, 40, 8});
    CHECK_THROWS_AS(g.column(0, 30), internal_error);  // 9 > M-1 = 7
    CHECK_THROWS_AS(StagedFamily(outside, Horizons{0, 4, 4}), internal_error);
}

TEST_CASE("unsorted duplicate-bearing column functions are normalized") {
    auto messy = [](std::uint64_t, std::uint64_t) {
        return std::vector<std::uint64_t>{2, 0, 2, 1};
    };
    StagedFamily f(messy, Horizons{1, 8, 8});
    CHECK(f.column(0, 4) == std::vector<std::uint64_t>{0, 1, 2});
}

}  // TEST_SUITE
