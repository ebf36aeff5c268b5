// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>

namespace quadchar::detail {

inline constexpr std::uint64_t binomial_clamp = std::numeric_limits<std::uint64_t>::max();

// C(n, k) clamped at binomial_clamp, for n up to 64.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > binomial_clamp / num) return binomial_clamp;
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

// Next bitmask with the same popcount in increasing numeric (= colex) order.
inline std::uint64_t next_same_popcount(std::uint64_t v) {
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    return r | (((v ^ r) >> 2) / c);
}

// The rank-th k-subset of {0, ..., n-1} in colex order, via the combinatorial
// number system: rank = sum_i C(c_i, i) with c_k > ... > c_1.
inline std::uint64_t subset_mask_at_rank(std::uint64_t rank, int n, int k) {
    std::uint64_t mask = 0;
    int hi = n - 1;
    for (int i = k; i >= 1; --i) {
        int c = hi;
        while (c >= i - 1 && binomial(c, i) > rank) --c;
        mask |= std::uint64_t(1) << c;
        rank -= binomial(c, i);
        hi = c - 1;
    }
    return mask;
}

}  // namespace quadchar::detail
