// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "quadchar/character.hpp"
#include "quadchar/field.hpp"
#include "quadchar/pair_counts.hpp"
#include "quadchar/subsets.hpp"

namespace quadchar {

struct partition {
    field fld;
    std::vector<index_t> set_a;  // sorted, nonzero indices; set B is the complement in F*
};

struct condition_witness {
    index_t index;
    std::int64_t observed;
    std::int64_t expected;
};

struct converse_verdict {
    bool cardinality = false;  // |A| = (p^m - 1)/2
    bool one_in_a = false;     // 1 in A
    bool a_counts = false;     // every a in A is a sum of two A-elements in d-1 ways
    bool b_counts = false;     // every b in B is a sum of two A-elements in d ways

    bool extended_run = false;  // full counting profile requested
    bool bb_counts = false;     // B-pair counts: d-1 on B, d on A
    bool mixed_counts = false;  // mixed count = p^m - 1 - 2d on all of F*

    bool is_character_partition = false;  // A equals the square fiber
    std::vector<condition_witness> failures;

    bool conditions_pass() const {
        return cardinality && one_in_a && a_counts && b_counts &&
               (!extended_run || (bb_counts && mixed_counts));
    }
};

namespace detail {

inline constexpr std::size_t max_witnesses = 16;

inline void add_witness(converse_verdict& v, index_t idx, std::int64_t obs, std::int64_t exp) {
    if (v.failures.size() < max_witnesses) v.failures.push_back({idx, obs, exp});
}

inline std::vector<index_t> validated_sorted_set(const field& f, std::vector<index_t> set_a) {
    std::sort(set_a.begin(), set_a.end());
    for (index_t i : set_a) {
        if (i == 0) raise(errc::zero_in_partition, "0 cannot belong to the partition");
        if (i < 0 || i >= f.order()) raise(errc::index_out_of_range, "index " + std::to_string(i));
    }
    if (std::adjacent_find(set_a.begin(), set_a.end()) != set_a.end())
        raise(errc::invalid_argument, "duplicate index in partition set");
    return set_a;
}

}  // namespace detail

// Tests the four partition conditions (cardinality, 1 in A, and the two
// counting laws over ordered A-pairs); with extended = true also runs the
// B-pair and mixed-count laws of the full counting profile.
inline converse_verdict verify_partition(const partition& part, bool extended = false) {
    const field& f = part.fld;
    const std::int64_t q = f.order();
    const std::int64_t d = d_value(f.p(), f.m());
    const std::vector<index_t> a = detail::validated_sorted_set(f, part.set_a);

    std::vector<char> in_a(q, 0);
    for (index_t i : a) in_a[i] = 1;

    converse_verdict v;
    v.cardinality = (static_cast<std::int64_t>(a.size()) == (q - 1) / 2);
    v.one_in_a = q > 1 && in_a[1] != 0;

    const std::vector<std::int64_t> counts = count_pair_sums(f, a, a);
    v.a_counts = true;
    v.b_counts = true;
    for (index_t i = 1; i < q; ++i) {
        if (in_a[i]) {
            if (counts[i] != d - 1) {
                v.a_counts = false;
                detail::add_witness(v, i, counts[i], d - 1);
            }
        } else if (counts[i] != d) {
            v.b_counts = false;
            detail::add_witness(v, i, counts[i], d);
        }
    }

    if (extended) {
        v.extended_run = true;
        std::vector<index_t> b;
        b.reserve(q - 1 - a.size());
        for (index_t i = 1; i < q; ++i)
            if (!in_a[i]) b.push_back(i);

        const std::vector<std::int64_t> bb = count_pair_sums(f, b, b);
        v.bb_counts = true;
        for (index_t i = 1; i < q; ++i) {
            const std::int64_t expect = in_a[i] ? d : d - 1;
            if (bb[i] != expect) {
                v.bb_counts = false;
                detail::add_witness(v, i, bb[i], expect);
            }
        }

        std::vector<std::int64_t> mixed = count_pair_sums(f, a, b);
        v.mixed_counts = true;
        for (index_t i = 1; i < q; ++i) {
            if (2 * mixed[i] != q - 1 - 2 * d) {
                v.mixed_counts = false;
                detail::add_witness(v, i, 2 * mixed[i], q - 1 - 2 * d);
            }
        }
    }

    const fiber_sets fib = fibers(build_character_table(f));
    v.is_character_partition = (a == fib.squares);
    return v;
}

namespace detail {

// Fast test of the two counting laws for a candidate bitmask (bit i <-> index
// i+1), with early abort as soon as any running count exceeds its ceiling.
inline bool counting_laws_hold(std::uint64_t mask, std::int64_t q, std::int64_t d,
                               const std::vector<std::int32_t>& add_table,
                               std::vector<std::int32_t>& counts,
                               std::vector<index_t>& support) {
    support.clear();
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
        support.push_back(static_cast<index_t>(__builtin_ctzll(bits)) + 1);

    std::fill(counts.begin(), counts.end(), 0);
    for (index_t x : support) {
        const std::int32_t* row = add_table.data() + x * q;
        for (index_t y : support) {
            const std::int32_t s = row[y];
            if (s == 0) {
                ++counts[0];
                continue;  // sums to zero are unconstrained
            }
            const std::int64_t limit = d - ((mask >> (s - 1)) & 1);
            if (++counts[s] > limit) return false;
        }
    }
    for (index_t i = 1; i < q; ++i)
        if (counts[i] != d - static_cast<std::int64_t>((mask >> (i - 1)) & 1)) return false;
    return true;
}

inline std::vector<std::int32_t> build_add_table(const field& f) {
    const index_adder add(f);
    const std::int64_t q = f.order();
    std::vector<std::int32_t> table(q * q);
    for (index_t x = 0; x < q; ++x)
        for (index_t y = 0; y < q; ++y) table[x * q + y] = static_cast<std::int32_t>(add(x, y));
    return table;
}

inline void sort_partitions(std::vector<partition>& parts) {
    std::sort(parts.begin(), parts.end(),
              [](const partition& a, const partition& b) { return a.set_a < b.set_a; });
}

}  // namespace detail

// Enumerates every half-size subset of F* (optionally anchored at 1) as a
// bitmask in colex order and returns the ones satisfying the counting laws.
// The enumeration space is split into contiguous rank ranges per worker;
// worker count never changes the result.
inline std::vector<partition> exhaustive_uniqueness(const field& f, bool require_one_in_a,
                                                    std::uint64_t candidate_cap = 10'000'000,
                                                    unsigned workers = 0) {
    const std::int64_t q = f.order();
    const int n = static_cast<int>(q - 1);
    const int h = n / 2;
    if (n > 62) raise(errc::enumeration_cap_exceeded, "too many nonzero indices for bitmask enumeration");

    const int nn = require_one_in_a ? n - 1 : n;
    const int kk = require_one_in_a ? h - 1 : h;
    const std::uint64_t total = detail::binomial(nn, kk);
    if (total == detail::binomial_clamp || total > candidate_cap)
        raise(errc::enumeration_cap_exceeded,
              "candidate count exceeds the enumeration cap " + std::to_string(candidate_cap));

    const std::int64_t d = d_value(f.p(), f.m());
    const std::vector<std::int32_t> add_table = detail::build_add_table(f);

    unsigned w = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
    if (static_cast<std::uint64_t>(w) > total) w = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));

    std::vector<std::vector<std::uint64_t>> hits(w);
    auto run_range = [&](unsigned worker_id, std::uint64_t begin, std::uint64_t count) {
        std::vector<std::int32_t> counts(q);
        std::vector<index_t> support;
        support.reserve(h);
        std::uint64_t raw = detail::subset_mask_at_rank(begin, nn, kk);
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t mask = require_one_in_a ? (raw << 1) | 1 : raw;
            if (detail::counting_laws_hold(mask, q, d, add_table, counts, support))
                hits[worker_id].push_back(mask);
            if (i + 1 < count) raw = detail::next_same_popcount(raw);
        }
    };

    if (w <= 1) {
        run_range(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t per = total / w, extra = total % w;
        std::uint64_t begin = 0;
        for (unsigned i = 0; i < w; ++i) {
            const std::uint64_t count = per + (i < extra ? 1 : 0);
            threads.emplace_back(run_range, i, begin, count);
            begin += count;
        }
        for (auto& t : threads) t.join();
    }

    std::vector<partition> found;
    for (const auto& chunk : hits)
        for (std::uint64_t mask : chunk) {
            partition part{f, {}};
            for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
                part.set_a.push_back(static_cast<index_t>(__builtin_ctzll(bits)) + 1);
            const converse_verdict v = verify_partition(part);
            if (v.cardinality && v.a_counts && v.b_counts && (!require_one_in_a || v.one_in_a))
                found.push_back(std::move(part));
        }
    detail::sort_partitions(found);
    return found;
}

// Depth-first subset construction equivalent to exhaustive_uniqueness but with
// incremental bounds: a branch dies as soon as some element's running A-pair
// count exceeds its ceiling or the surviving pairs cannot reach the floor.
inline std::vector<partition> prune_search(const field& f, bool require_one_in_a = false,
                                           std::int64_t order_cap = 49) {
    const std::int64_t q = f.order();
    if (q > std::min<std::int64_t>(order_cap, hard_order_cap))
        raise(errc::enumeration_cap_exceeded,
              "field order " + std::to_string(q) + " exceeds the pruned-search cap");
    const std::int64_t d = d_value(f.p(), f.m());
    const std::int64_t h = (q - 1) / 2;
    const std::vector<std::int32_t> add_table = detail::build_add_table(f);

    // decided: 0 undecided, 1 in A, 2 in B
    std::vector<std::int8_t> decided(q, 0);
    std::vector<std::int32_t> count(q, 0);  // ordered pairs with both ends decided-A
    std::vector<std::int32_t> live(q, 0);   // ordered pairs with no end decided-B
    for (index_t x = 1; x < q; ++x)
        for (index_t y = 1; y < q; ++y) ++live[add_table[x * q + y]];

    std::vector<index_t> chosen_a;
    chosen_a.reserve(h);
    std::vector<partition> found;

    auto feasible = [&]() {
        for (index_t i = 1; i < q; ++i) {
            const std::int64_t ceiling = decided[i] == 1 ? d - 1 : d;
            const std::int64_t floor = decided[i] == 2 ? d : d - 1;
            if (count[i] > ceiling || live[i] < floor) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, index_t v) -> void {
        if (v == q) {
            if (static_cast<std::int64_t>(chosen_a.size()) != h) return;
            partition part{f, chosen_a};
            const converse_verdict verdict = verify_partition(part);
            if (verdict.cardinality && verdict.a_counts && verdict.b_counts &&
                (!require_one_in_a || verdict.one_in_a))
                found.push_back(std::move(part));
            return;
        }
        const std::int64_t remaining = q - v;
        if (static_cast<std::int64_t>(chosen_a.size()) + remaining < h) return;

        if (static_cast<std::int64_t>(chosen_a.size()) < h) {
            for (index_t w : chosen_a) count[add_table[v * q + w]] += 2;
            count[add_table[v * q + v]] += 1;
            chosen_a.push_back(v);
            decided[v] = 1;
            if (feasible()) self(self, v + 1);
            decided[v] = 0;
            chosen_a.pop_back();
            count[add_table[v * q + v]] -= 1;
            for (index_t w : chosen_a) count[add_table[v * q + w]] -= 2;
        }

        const bool must_take = static_cast<std::int64_t>(chosen_a.size()) + remaining <= h;
        const bool anchored = require_one_in_a && v == 1;
        if (!must_take && !anchored) {
            for (index_t w = 1; w < q; ++w) {
                if (w == v)
                    live[add_table[v * q + v]] -= 1;
                else if (decided[w] != 2)
                    live[add_table[v * q + w]] -= 2;
            }
            decided[v] = 2;
            if (feasible()) self(self, v + 1);
            decided[v] = 0;
            for (index_t w = 1; w < q; ++w) {
                if (w == v)
                    live[add_table[v * q + v]] += 1;
                else if (decided[w] != 2)
                    live[add_table[v * q + w]] += 2;
            }
        }
    };
    dfs(dfs, 1);

    detail::sort_partitions(found);
    return found;
}

}  // namespace quadchar
