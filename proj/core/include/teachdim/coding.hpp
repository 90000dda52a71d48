#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace teachdim {

// Cantor pairing <x,y> = (x+y)(x+y+1)/2 + y.  Throws bound_error if the result
// would not fit in 64 bits.
std::uint64_t pair_code(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> pair_decode(std::uint64_t z);

// length-prefixed pair fold: <> = <0,0>, <x0..xk> = <k+1, fold> where fold
// pairs left to right.  Injective on all finite sequences; overflows quickly,
// callers needing large alphabets/lengths should use seq_rank instead.
std::uint64_t seq_code(const std::vector<std::uint64_t>& xs);

// rank of xs among all finite sequences over {0..alphabet-1}, ordered by
// length then lexicographically.  Injective; empty sequence ranks 0.
std::uint64_t seq_rank(const std::vector<std::uint64_t>& xs, std::uint64_t alphabet);

// canonical finite set codes: code(D) = sum of 2^x, D_0 = {}.  Elements must
// be < 64 and the code fit in 64 bits.
std::uint64_t finite_set_code(const std::vector<std::uint64_t>& elems);
std::vector<std::uint64_t> finite_set_decode(std::uint64_t u);

// join of two sets: {2x : x in a} u {2y+1 : y in b}
std::vector<std::uint64_t> join_sets(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b);

}  // namespace teachdim
