#include "teachdim/coding.hpp"

#include <algorithm>
#include <cmath>

#include "teachdim/errors.hpp"

namespace teachdim {

std::uint64_t pair_code(std::uint64_t x, std::uint64_t y) {
    // (x+y)(x+y+1)/2 + y stays below 2^64 iff x+y <= 6074000998
    const std::uint64_t s_max = 6074000998ULL;
    if (x > s_max || y > s_max - x) throw bound_error("pair_code overflow");
    std::uint64_t s = x + y;
    std::uint64_t tri = (s % 2 == 0) ? (s / 2) * (s + 1) : s * ((s + 1) / 2);
    if (tri > UINT64_MAX - y) throw bound_error("pair_code overflow");
    return tri + y;
}

std::pair<std::uint64_t, std::uint64_t> pair_decode(std::uint64_t z) {
    // invert the triangular part; long double has enough mantissa to land
    // within +-1 of the true root, fix up afterwards
    std::uint64_t s = (std::uint64_t)((std::sqrt(8.0L * (long double)z + 1.0L) - 1.0L) / 2.0L);
    auto tri = [](std::uint64_t n) {
        return (n % 2 == 0) ? (n / 2) * (n + 1) : n * ((n + 1) / 2);
    };
    while (tri(s) > z) --s;
    while (tri(s + 1) <= z) ++s;
    std::uint64_t y = z - tri(s);
    return {s - y, y};
}

std::uint64_t seq_code(const std::vector<std::uint64_t>& xs) {
    if (xs.empty()) return pair_code(0, 0);
    std::uint64_t acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = pair_code(acc, xs[i]);
    return pair_code(xs.size(), acc);
}

std::uint64_t seq_rank(const std::vector<std::uint64_t>& xs, std::uint64_t alphabet) {
    check(alphabet >= 1, "seq_rank needs a nonempty alphabet");
    // rank = (number of strictly shorter sequences) + lex index at this length
    std::uint64_t rank = 0, pow = 1;
    for (std::size_t l = 0; l < xs.size(); ++l) {
        if (rank > UINT64_MAX - pow) throw bound_error("seq_rank overflow");
        rank += pow;
        if (alphabet != 0 && pow > UINT64_MAX / alphabet) throw bound_error("seq_rank overflow");
        pow *= alphabet;
    }
    std::uint64_t lex = 0;
    for (std::uint64_t x : xs) {
        check(x < alphabet, "seq_rank entry outside alphabet");
        if (lex > (UINT64_MAX - x) / alphabet) throw bound_error("seq_rank overflow");
        lex = lex * alphabet + x;
    }
    if (rank > UINT64_MAX - lex) throw bound_error("seq_rank overflow");
    return rank + lex;
}

std::uint64_t finite_set_code(const std::vector<std::uint64_t>& elems) {
    std::uint64_t u = 0;
    for (std::uint64_t x : elems) {
        if (x >= 64) throw bound_error("finite_set_code element >= 64");
        u |= (1ULL << x);
    }
    return u;
}

std::vector<std::uint64_t> finite_set_decode(std::uint64_t u) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; u != 0; ++x, u >>= 1)
        if (u & 1) out.push_back(x);
    return out;
}

std::vector<std::uint64_t> join_sets(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    out.reserve(a.size() + b.size());
    for (std::uint64_t x : a) {
        if (x > (UINT64_MAX - 0) / 2) throw bound_error("join_sets overflow");
        out.push_back(2 * x);
    }
    for (std::uint64_t y : b) {
        if (y > (UINT64_MAX - 1) / 2) throw bound_error("join_sets overflow");
        out.push_back(2 * y + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace teachdim
