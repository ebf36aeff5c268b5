// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace testutil {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// All (p, m) with p an odd prime, m >= 1 and p^m <= cap.
inline std::vector<std::pair<std::int64_t, std::int64_t>> field_params_up_to(std::int64_t cap) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t p = 3; p <= cap; ++p) {
        if (!is_prime(p)) continue;
        std::int64_t q = p;
        for (std::int64_t m = 1; q <= cap; ++m, q *= p) out.emplace_back(p, m);
    }
    return out;
}

}  // namespace testutil
