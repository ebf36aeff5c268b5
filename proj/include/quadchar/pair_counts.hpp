// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quadchar/character.hpp"
#include "quadchar/field.hpp"

namespace quadchar {

// d = (p^m - 1)/4 when p = 1 mod 4, (p^m - (-1)^m)/4 when p = 3 mod 4.
inline std::int64_t d_value(std::int64_t p, std::int64_t m) {
    if (p == 2) raise(errc::even_prime, "p must be an odd prime");
    if (!detail::is_prime(p)) raise(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) raise(errc::invalid_argument, "m must be >= 1");
    const std::int64_t q = detail::ipow_capped(p, m, std::int64_t(1) << 62);
    const std::int64_t num = (p % 4 == 1) ? q - 1 : q - (m % 2 == 0 ? 1 : -1);
    if (num % 4 != 0) raise(errc::non_integer_d, "d is not an integer");  // cannot occur for valid input
    return num / 4;
}

// out[b] = number of ordered pairs (x, y) with x in xs, y in ys, x + y = b.
// Naive |xs| * |ys| double loop with a flat accumulator.
inline std::vector<std::int64_t> count_pair_sums(const field& f, std::span<const index_t> xs,
                                                 std::span<const index_t> ys) {
    const std::int64_t q = f.order();
    for (index_t i : xs)
        if (i <= 0 || i >= q) raise(errc::index_out_of_range, "setX index " + std::to_string(i));
    for (index_t i : ys)
        if (i <= 0 || i >= q) raise(errc::index_out_of_range, "setY index " + std::to_string(i));

    std::vector<std::int64_t> out(q, 0);
    const index_adder add(f);
    for (index_t x : xs)
        for (index_t y : ys) ++out[add(x, y)];
    return out;
}

struct rep_count_table {
    field fld;
    std::vector<std::int64_t> counts_aa;     // ordered pairs of squares
    std::vector<std::int64_t> counts_bb;     // ordered pairs of non-squares
    std::vector<std::int64_t> counts_mixed;  // one of each, both orders
};

inline rep_count_table build_rep_counts(const field& f, const fiber_sets& fib) {
    rep_count_table t{f, count_pair_sums(f, fib.squares, fib.squares),
                      count_pair_sums(f, fib.nonsquares, fib.nonsquares),
                      count_pair_sums(f, fib.squares, fib.nonsquares)};
    // (x, y) and (y, x) with x, y in different fibers are distinct ordered pairs
    for (auto& c : t.counts_mixed) c *= 2;
    return t;
}

struct expected_observed {
    std::int64_t expected = 0;
    std::int64_t observed = 0;
    bool ok() const { return expected == observed; }
};

struct count_profile {
    std::int64_t p = 0, m = 0, order = 0, d = 0;
    expected_observed a1, am1, b1, bm1;  // fiber-constant pair counts
    expected_observed a0, c;             // pairs summing to zero
    expected_observed mixed;             // mixed-pair count, constant on F*

    bool pass() const {
        return a1.ok() && am1.ok() && b1.ok() && bm1.ok() && a0.ok() && c.ok() && mixed.ok();
    }
};

// Checks that the pair counts are constant on each fiber and fills the profile
// with observed values next to the closed-form expectations.
inline count_profile compute_count_profile(const field& f, const fiber_sets& fib) {
    const rep_count_table t = build_rep_counts(f, fib);
    const std::int64_t q = f.order();

    auto constant_on = [&](const std::vector<std::int64_t>& counts,
                           const std::vector<index_t>& set, const char* what) {
        const std::int64_t v = counts[set.front()];
        for (index_t i : set)
            if (counts[i] != v)
                raise(errc::non_constant_fiber_counts, std::string(what) + " is not constant on the fiber");
        return v;
    };

    count_profile pr;
    pr.p = f.p();
    pr.m = f.m();
    pr.order = q;
    pr.d = d_value(f.p(), f.m());

    pr.a1.observed = constant_on(t.counts_aa, fib.squares, "square-pair count over squares");
    pr.am1.observed = constant_on(t.counts_aa, fib.nonsquares, "square-pair count over non-squares");
    pr.b1.observed = constant_on(t.counts_bb, fib.squares, "non-square-pair count over squares");
    pr.bm1.observed = constant_on(t.counts_bb, fib.nonsquares, "non-square-pair count over non-squares");

    const std::int64_t mixed0 = t.counts_mixed[fib.squares.front()];
    for (index_t i = 1; i < q; ++i)
        if (t.counts_mixed[i] != mixed0)
            raise(errc::non_constant_fiber_counts, "mixed-pair count is not constant on F*");
    pr.mixed.observed = mixed0;

    pr.a0.observed = t.counts_aa[0];
    pr.c.observed = t.counts_aa[0];

    const bool minus_one_is_square = (f.p() % 4 == 1) || (f.m() % 2 == 0);
    pr.a1.expected = pr.d - 1;
    pr.am1.expected = pr.d;
    pr.b1.expected = pr.d;
    pr.bm1.expected = pr.d - 1;
    pr.mixed.expected = q - 1 - 2 * pr.d;
    pr.a0.expected = minus_one_is_square ? (q - 1) / 2 : 0;
    pr.c.expected = pr.a0.expected;
    return pr;
}

struct counting_laws_verdict {
    bool same_fiber_counts = false;   // (i)  count inside own fiber = d - 1 everywhere
    bool cross_fiber_counts = false;  // (ii) count from the other fiber = d everywhere
    bool mixed_counts = false;        // (iii) mixed count = p^m - 1 - 2d on all of F*
    bool fiber_difference = false;    // (iv) BB[b] - AA[b] = chi(b) on all of F*
    bool zero_sum_identity = false;   // (v)  A1 + Am1 = B1 + Bm1 = closed form

    bool pass() const {
        return same_fiber_counts && cross_fiber_counts && mixed_counts && fiber_difference &&
               zero_sum_identity;
    }
};

// Evaluates the five counting laws element-wise; failures are verdict entries,
// never exceptions.
inline counting_laws_verdict verify_counting_laws(const field& f) {
    const character_table ct = build_character_table(f);
    const fiber_sets fib = fibers(ct);
    const rep_count_table t = build_rep_counts(f, fib);
    const std::int64_t q = f.order();
    const std::int64_t d = d_value(f.p(), f.m());

    counting_laws_verdict v;
    v.same_fiber_counts = true;
    v.cross_fiber_counts = true;
    for (index_t s : fib.squares) {
        v.same_fiber_counts &= (t.counts_aa[s] == d - 1);
        v.cross_fiber_counts &= (t.counts_bb[s] == d);
    }
    for (index_t n : fib.nonsquares) {
        v.same_fiber_counts &= (t.counts_bb[n] == d - 1);
        v.cross_fiber_counts &= (t.counts_aa[n] == d);
    }

    v.mixed_counts = true;
    v.fiber_difference = true;
    for (index_t i = 1; i < q; ++i) {
        v.mixed_counts &= (t.counts_mixed[i] == q - 1 - 2 * d);
        v.fiber_difference &= (t.counts_bb[i] - t.counts_aa[i] == ct.chi[i]);
    }

    const std::int64_t a_sum = t.counts_aa[fib.squares.front()] + t.counts_aa[fib.nonsquares.front()];
    const std::int64_t b_sum = t.counts_bb[fib.squares.front()] + t.counts_bb[fib.nonsquares.front()];
    const std::int64_t expected_sum =
        (f.p() % 4 == 1) ? (q - 3) / 2 : (q - 2 - (f.m() % 2 == 0 ? 1 : -1)) / 2;
    v.zero_sum_identity = (a_sum == expected_sum) && (a_sum == b_sum);
    return v;
}

}  // namespace quadchar
