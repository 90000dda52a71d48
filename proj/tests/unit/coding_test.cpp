#include <doctest.h>

#include <set>

#include "teachdim/coding.hpp"
#include "teachdim/errors.hpp"

using namespace teachdim;

TEST_SUITE("coding") {

TEST_CASE("pairing on small arguments") {
    CHECK(pair_code(0, 0) == 0);
    CHECK(pair_code(1, 0) == 1);
    CHECK(pair_code(0, 1) == 2);
    CHECK(pair_code(2, 0) == 3);
    CHECK(pair_code(1, 1) == 4);
    CHECK(pair_code(0, 2) == 5);
}

TEST_CASE("pairing round-trips and is injective") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t x = 0; x < 40; ++x)
        for (std::uint64_t y = 0; y < 40; ++y) {
            std::uint64_t z = pair_code(x, y);
            CHECK(seen.insert(z).second);
            auto [px, py] = pair_decode(z);
            CHECK(px == x);
            CHECK(py == y);
        }
    for (std::uint64_t z = 0; z < 2000; ++z) {
        auto [x, y] = pair_decode(z);
        CHECK(pair_code(x, y) == z);
    }
}

TEST_CASE("pairing overflow is reported") {
    std::uint64_t big = 1ULL << 33;
    CHECK_THROWS_AS(pair_code(big, big), bound_error);
}

TEST_CASE("sequence codes") {
    CHECK(seq_code({}) == 0);
    // <5> = pair(1, 5) = 26
    CHECK(seq_code({5}) == 26);
    std::set<std::uint64_t> seen;
    std::vector<std::vector<std::uint64_t>> seqs = {
        {}, {0}, {1}, {2}, {0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0, 0}, {2, 1, 0}};
    for (const auto& s : seqs) CHECK(seen.insert(seq_code(s)).second);
}

TEST_CASE("sequence ranks order by length then lexicographically") {
    CHECK(seq_rank({}, 2) == 0);
    CHECK(seq_rank({0}, 2) == 1);
    CHECK(seq_rank({1}, 2) == 2);
    CHECK(seq_rank({0, 0}, 2) == 3);
    CHECK(seq_rank({0, 1}, 2) == 4);
    CHECK(seq_rank({1, 0}, 2) == 5);
    CHECK(seq_rank({1, 1}, 2) == 6);
    CHECK(seq_rank({0, 0, 0}, 2) == 7);

    // injective over all sequences of length <= 3 on a 3-letter alphabet
    std::set<std::uint64_t> seen;
    std::vector<std::vector<std::uint64_t>> all = {{}};
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& s : all)
            if ((int)s.size() == len - 1)
                for (std::uint64_t a = 0; a < 3; ++a) {
                    auto t = s;
                    t.push_back(a);
                    next.push_back(t);
                }
        for (auto& t : next) all.push_back(t);
    }
    for (const auto& s : all) CHECK(seen.insert(seq_rank(s, 3)).second);
    CHECK(seen.size() == 1 + 3 + 9 + 27);
}

TEST_CASE("canonical finite set codes") {
    CHECK(finite_set_code({}) == 0);
    CHECK(finite_set_code({0}) == 1);
    CHECK(finite_set_code({0, 2}) == 5);
    CHECK(finite_set_code({2, 0, 2}) == 5);  // order and dupes ignored
    CHECK(finite_set_decode(5) == std::vector<std::uint64_t>{0, 2});
    CHECK(finite_set_decode(0).empty());
    for (std::uint64_t u = 0; u < 256; ++u)
        CHECK(finite_set_code(finite_set_decode(u)) == u);
    CHECK_THROWS_AS(finite_set_code({64}), bound_error);
}

TEST_CASE("join interleaves evens and odds") {
    auto j = join_sets({0, 1}, {0});
    CHECK(j == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(join_sets({}, {}).empty());
    // parity partition recovers both sides
    auto k = join_sets({3, 7}, {1, 4});
    std::vector<std::uint64_t> evens, odds;
    for (std::uint64_t v : k) (v % 2 ? odds : evens).push_back(v / 2);
    CHECK(evens == std::vector<std::uint64_t>{3, 7});
    CHECK(odds == std::vector<std::uint64_t>{1, 4});
}

}  // TEST_SUITE
