// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "quadchar/field.hpp"

namespace quadchar {

// chi[idx] in {+1, -1} for nonzero indices, 0 at index 0. Stored as signed
// bytes for O(1) lookup inside the counting kernels. Immutable after build.
struct character_table {
    field fld;
    std::vector<std::int8_t> chi;
};

struct fiber_sets {
    std::vector<index_t> squares;     // indices with chi = +1, ascending
    std::vector<index_t> nonsquares;  // indices with chi = -1, ascending
};

// Builds chi via legendre(norm(b), p) and cross-validates every entry against
// the Euler criterion and against the direct-squaring image of F*. The three
// routes must agree; a mismatch is an internal failure, not a math result.
inline character_table build_character_table(const field& f) {
    const std::int64_t q = f.order();
    character_table t{f, std::vector<std::int8_t>(q, 0)};

    for (index_t i = 1; i < q; ++i) {
        const field_element b = f.element_at(i);
        const int via_norm = legendre(f.norm(b), f.p());
        const int via_euler = f.euler_criterion(b);
        if (via_norm != via_euler)
            raise(errc::character_mismatch,
                  "norm/Legendre and Euler values disagree at index " + std::to_string(i));
        t.chi[i] = static_cast<std::int8_t>(via_norm);
    }

    std::vector<char> is_square_image(q, 0);
    for (index_t i = 1; i < q; ++i) {
        const field_element b = f.element_at(i);
        is_square_image[f.index_of(f.mul(b, b))] = 1;
    }
    std::int64_t plus = 0;
    for (index_t i = 1; i < q; ++i) {
        if ((t.chi[i] == +1) != (is_square_image[i] == 1))
            raise(errc::character_mismatch,
                  "character and direct-squaring image disagree at index " + std::to_string(i));
        if (t.chi[i] == +1) ++plus;
    }
    if (plus != (q - 1) / 2)
        raise(errc::character_mismatch, "square fiber does not have (p^m-1)/2 elements");
    return t;
}

inline fiber_sets fibers(const character_table& t) {
    fiber_sets out;
    out.squares.reserve((t.fld.order() - 1) / 2);
    out.nonsquares.reserve((t.fld.order() - 1) / 2);
    for (index_t i = 1; i < t.fld.order(); ++i)
        (t.chi[i] > 0 ? out.squares : out.nonsquares).push_back(i);
    return out;
}

}  // namespace quadchar
