// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstring>
#include <map>
#include <span>
#include <vector>

#include "quadchar/character.hpp"
#include "quadchar/field.hpp"
#include "quadchar/pair_counts.hpp"
#include "quadchar/subsets.hpp"

namespace quadchar {

// Dense polynomials in m variables with exponents reduced modulo
// (x_1^p - 1, ..., x_m^p - 1): coefficient of prod x_j^(b_j) lives at the
// little-endian index of (b_1, ..., b_m), the same indexing as field elements.
enum class coeff_domain { integers, mod_p };

struct ring_poly {
    field fld;
    coeff_domain domain;
    std::vector<std::int64_t> coeffs;  // length p^m
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) raise(errc::coefficient_overflow, "integer coefficient overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) raise(errc::coefficient_overflow, "integer coefficient overflow");
    return r;
}

inline void require_compatible(const ring_poly& a, const ring_poly& b) {
    if (!(a.fld == b.fld) || a.domain != b.domain)
        raise(errc::domain_mismatch, "ring operands have different fields or coefficient domains");
}

}  // namespace detail

inline ring_poly ring_zero(const field& f, coeff_domain d) {
    return ring_poly{f, d, std::vector<std::int64_t>(f.order(), 0)};
}

inline ring_poly ring_constant(const field& f, coeff_domain d, std::int64_t v) {
    ring_poly r = ring_zero(f, d);
    r.coeffs[0] = d == coeff_domain::mod_p ? ((v % f.p()) + f.p()) % f.p() : v;
    return r;
}

inline ring_poly ring_monomial(const field& f, coeff_domain d, index_t exponent_index,
                               std::int64_t v = 1) {
    if (exponent_index < 0 || exponent_index >= f.order())
        raise(errc::index_out_of_range, "exponent index " + std::to_string(exponent_index));
    ring_poly r = ring_zero(f, d);
    r.coeffs[exponent_index] = d == coeff_domain::mod_p ? ((v % f.p()) + f.p()) % f.p() : v;
    return r;
}

inline ring_poly to_mod_p(const ring_poly& a) {
    ring_poly r{a.fld, coeff_domain::mod_p, a.coeffs};
    for (auto& c : r.coeffs) c = ((c % a.fld.p()) + a.fld.p()) % a.fld.p();
    return r;
}

inline ring_poly ring_add(const ring_poly& a, const ring_poly& b) {
    detail::require_compatible(a, b);
    ring_poly r = a;
    if (a.domain == coeff_domain::mod_p) {
        const std::int64_t p = a.fld.p();
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            r.coeffs[i] += b.coeffs[i];
            if (r.coeffs[i] >= p) r.coeffs[i] -= p;
        }
    } else {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            r.coeffs[i] = detail::checked_add(r.coeffs[i], b.coeffs[i]);
    }
    return r;
}

inline ring_poly ring_sub(const ring_poly& a, const ring_poly& b) {
    detail::require_compatible(a, b);
    ring_poly r = a;
    if (a.domain == coeff_domain::mod_p) {
        const std::int64_t p = a.fld.p();
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            r.coeffs[i] -= b.coeffs[i];
            if (r.coeffs[i] < 0) r.coeffs[i] += p;
        }
    } else {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            r.coeffs[i] = detail::checked_add(r.coeffs[i], -b.coeffs[i]);
    }
    return r;
}

// Schoolbook O(p^2m) convolution with coordinate-wise exponent addition mod p.
inline ring_poly ring_mul(const ring_poly& a, const ring_poly& b) {
    detail::require_compatible(a, b);
    const std::int64_t q = a.fld.order();
    ring_poly out = ring_zero(a.fld, a.domain);

    if (a.domain == coeff_domain::mod_p) {
        // coefficients < p <= 2^20 and q <= 2^20 terms: fits int64, reduce once
        if (a.fld.m() == 1) {
            const std::int64_t p = a.fld.p();
            for (index_t i = 0; i < q; ++i) {
                const std::int64_t ai = a.coeffs[i];
                if (ai == 0) continue;
                for (index_t j = 0; j < p - i; ++j) out.coeffs[i + j] += ai * b.coeffs[j];
                for (index_t j = p - i; j < p; ++j) out.coeffs[i + j - p] += ai * b.coeffs[j];
            }
        } else {
            const index_adder add(a.fld);
            for (index_t i = 0; i < q; ++i) {
                const std::int64_t ai = a.coeffs[i];
                if (ai == 0) continue;
                for (index_t j = 0; j < q; ++j)
                    if (b.coeffs[j] != 0) out.coeffs[add(i, j)] += ai * b.coeffs[j];
            }
        }
        const std::int64_t p = a.fld.p();
        for (auto& c : out.coeffs) c %= p;
    } else {
        const index_adder add(a.fld);
        for (index_t i = 0; i < q; ++i) {
            const std::int64_t ai = a.coeffs[i];
            if (ai == 0) continue;
            for (index_t j = 0; j < q; ++j)
                if (b.coeffs[j] != 0) {
                    auto& slot = out.coeffs[add(i, j)];
                    slot = detail::checked_add(slot, detail::checked_mul(ai, b.coeffs[j]));
                }
        }
    }
    return out;
}

inline ring_poly ring_pow(const ring_poly& a, std::int64_t e) {
    if (e < 0) raise(errc::invalid_argument, "negative exponent");
    ring_poly r = ring_constant(a.fld, a.domain, 1);
    ring_poly base = a;
    while (e > 0) {
        if (e & 1) r = ring_mul(r, base);
        base = ring_mul(base, base);
        e >>= 1;
    }
    return r;
}

// Sum of coefficients = evaluation at the all-one point.
inline std::int64_t eval_all_ones(const ring_poly& a) {
    std::int64_t s = 0;
    for (std::int64_t c : a.coeffs) s = detail::checked_add(s, c);
    return a.domain == coeff_domain::mod_p ? ((s % a.fld.p()) + a.fld.p()) % a.fld.p() : s;
}

struct fiber_polys {
    ring_poly squares;     // 0/1 coefficients supported on the square indices
    ring_poly nonsquares;  // 0/1 coefficients supported on the non-square indices
};

inline fiber_polys build_fiber_polys(const field& f, const fiber_sets& fib) {
    fiber_polys out{ring_zero(f, coeff_domain::integers), ring_zero(f, coeff_domain::integers)};
    for (index_t i : fib.squares) out.squares.coeffs[i] = 1;
    for (index_t i : fib.nonsquares) out.nonsquares.coeffs[i] = 1;
    return out;
}

// 1 + (square poly) + (non-square poly) covers every exponent vector once.
inline bool check_partition_identity(const field& f) {
    const fiber_polys fp = build_fiber_polys(f, fibers(build_character_table(f)));
    ring_poly s = ring_add(ring_add(ring_constant(f, coeff_domain::integers, 1), fp.squares),
                           fp.nonsquares);
    for (std::int64_t c : s.coeffs)
        if (c != 1) return false;
    return true;
}

namespace detail {

// Exact rank of a small integer matrix (fraction-free elimination).
inline int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const std::int64_t a = rows[rank][col], b = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = checked_add(checked_mul(rows[r][c], a), -checked_mul(rows[rank][c], b));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace detail

// {1, square poly, non-square poly} spans a 3-dimensional subspace.
inline bool check_linear_independence(const field& f) {
    const fiber_polys fp = build_fiber_polys(f, fibers(build_character_table(f)));
    std::vector<std::vector<std::int64_t>> rows(3);
    rows[0] = ring_constant(f, coeff_domain::integers, 1).coeffs;
    rows[1] = fp.squares.coeffs;
    rows[2] = fp.nonsquares.coeffs;
    return detail::integer_rank(std::move(rows)) == 3;
}

// sq^2 + sq = nsq^2 + nsq for the two fiber polynomials, with integer
// coefficients in the quotient ring; the
// polynomial form of the chi-difference counting law.
inline bool check_square_identity(const field& f) {
    const fiber_polys fp = build_fiber_polys(f, fibers(build_character_table(f)));
    const ring_poly lhs = ring_add(ring_mul(fp.squares, fp.squares), fp.squares);
    const ring_poly rhs = ring_add(ring_mul(fp.nonsquares, fp.nonsquares), fp.nonsquares);
    return lhs.coeffs == rhs.coeffs;
}

// Verifier for the fundamental mod-p equation
//   a(x)^2 + a(x) = d * (prod_j (x_j - 1)^(p-1) - 1) + c
// against a candidate support set. The right side is expanded once by
// repeated ring multiplication; check() is then O(|set|^2 + p^m).
class eqfund_checker {
public:
    explicit eqfund_checker(const field& f)
        : fld_(f), add_(f), rhs_(f.order(), 0) {
        const std::int64_t p = f.p(), q = f.order();
        const std::int64_t d = d_value(f.p(), f.m()) % p;
        const bool minus_one_is_square = (p % 4 == 1) || (f.m() % 2 == 0);
        const std::int64_t c = minus_one_is_square ? ((q - 1) / 2) % p : 0;

        ring_poly prod = ring_constant(f, coeff_domain::mod_p, 1);
        index_t var_index = 1;  // index of the exponent vector e_j is p^j
        for (std::int64_t j = 0; j < f.m(); ++j, var_index *= p) {
            ring_poly base = ring_monomial(f, coeff_domain::mod_p, var_index, 1);
            base.coeffs[0] = p - 1;  // x_j - 1
            prod = ring_mul(prod, ring_pow(base, p - 1));
        }
        expansion_all_ones_ = true;
        for (std::int64_t v : prod.coeffs) expansion_all_ones_ &= (v == 1);

        for (index_t i = 0; i < q; ++i) rhs_[i] = (d * prod.coeffs[i]) % p;
        rhs_[0] = ((rhs_[0] - d + c) % p + p) % p;
    }

    bool check(std::span<const index_t> set_a) const {
        const std::int64_t p = fld_.p(), q = fld_.order();
        for (index_t i : set_a)
            if (i <= 0 || i >= q) raise(errc::index_out_of_range, "set index " + std::to_string(i));

        std::vector<std::int64_t> counts(q, 0);
        for (index_t x : set_a)
            for (index_t y : set_a) ++counts[add_(x, y)];
        for (index_t i : set_a) ++counts[i];  // the linear term a(x)
        for (index_t i = 0; i < q; ++i)
            if (counts[i] % p != rhs_[i]) return false;
        return true;
    }

    const std::vector<std::int64_t>& rhs() const { return rhs_; }
    const index_adder& adder() const { return add_; }

    // prod_j (x_j - 1)^(p-1) expands to the all-ones polynomial mod p; kept as
    // a cross-check of the expansion path.
    bool expansion_is_all_ones() const { return expansion_all_ones_; }

private:
    field fld_;
    index_adder add_;
    std::vector<std::int64_t> rhs_;
    bool expansion_all_ones_ = false;
};

inline bool check_eqfund(const field& f, std::span<const index_t> set_a) {
    return eqfund_checker(f).check(set_a);
}

namespace detail {

// Substitute x_var = 1 into a dense coefficient vector: sums coefficients
// along the var-th digit. The result lives on the indices with digit var = 0.
inline std::vector<std::int64_t> collapse_at_one(const field& f,
                                                 const std::vector<std::int64_t>& coeffs,
                                                 std::int64_t var) {
    std::int64_t stride = 1;
    for (std::int64_t j = 0; j < var; ++j) stride *= f.p();
    std::vector<std::int64_t> acc(f.order(), 0);
    for (index_t i = 0; i < f.order(); ++i) {
        const std::int64_t digit = (i / stride) % f.p();
        acc[i - digit * stride] = checked_add(acc[i - digit * stride], coeffs[i]);
    }
    return acc;
}

}  // namespace detail

struct divisibility_report {
    std::vector<bool> divisible_by_variable;  // (x_j - 1) divides (sq - nsq) as exact integer polynomials
    bool square_identity = false;             // the downstream identity, for contrast
};

// Probes whether sq - nsq is divisible by each (x_j - 1) over the integers
// (substitute x_j = 1, check the rest vanishes). Reported, not asserted:
// the answer is yes for m = 1 and can be no for m >= 2 while the square
// identity still holds.
inline divisibility_report probe_difference_divisibility(const field& f) {
    const fiber_polys fp = build_fiber_polys(f, fibers(build_character_table(f)));
    std::vector<std::int64_t> diff(f.order());
    for (index_t i = 0; i < f.order(); ++i) diff[i] = fp.squares.coeffs[i] - fp.nonsquares.coeffs[i];

    divisibility_report rep;
    rep.divisible_by_variable.resize(f.m());
    for (std::int64_t j = 0; j < f.m(); ++j) {
        const std::vector<std::int64_t> acc = detail::collapse_at_one(f, diff, j);
        bool all_zero = true;
        for (std::int64_t v : acc) all_zero &= (v == 0);
        rep.divisible_by_variable[j] = all_zero;
    }
    rep.square_identity = check_square_identity(f);
    return rep;
}

// F_p[t]/(t-1)^k in the shifted variable u = t - 1, so the ideal is u^k.
// An element is invertible iff its u^0 coefficient is nonzero mod p.
struct series_ring {
    std::int64_t p, k;

    std::vector<std::int64_t> mul(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b) const {
        std::vector<std::int64_t> out(k, 0);
        for (std::int64_t i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (std::int64_t j = 0; j < k - i; ++j) out[i + j] += a[i] * b[j];
        }
        for (auto& c : out) c %= p;
        return out;
    }
};

struct sqrt_census_result {
    std::int64_t p = 0, k = 0;
    std::int64_t max_roots = 0;
    std::int64_t invertible_squares = 0;
    std::map<std::int64_t, std::int64_t> histogram;  // root count -> #invertible square values
};

// Squares every element of F_p[t]/(t-1)^k and counts, for each invertible
// square value, its invertible square roots. Exhaustive, so p^k is capped.
inline sqrt_census_result sqrt_census(std::int64_t p, std::int64_t k,
                                      std::int64_t order_cap = default_order_cap) {
    if (p == 2) raise(errc::even_prime, "p must be an odd prime");
    if (!detail::is_prime(p)) raise(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) raise(errc::invalid_argument, "k must be >= 1");
    const std::int64_t n = detail::ipow_capped(p, k, std::min(order_cap, hard_order_cap));
    if (n < 0) raise(errc::cap_exceeded, "p^k exceeds the exhaustive cap");

    const series_ring ring{p, k};
    std::vector<std::int64_t> roots(n, 0);
    std::vector<std::int64_t> elem(k);
    for (std::int64_t idx = 0; idx < n; ++idx) {
        std::int64_t v = idx;
        for (std::int64_t j = 0; j < k; ++j) {
            elem[j] = v % p;
            v /= p;
        }
        if (elem[0] == 0) continue;  // not invertible
        const std::vector<std::int64_t> sq = ring.mul(elem, elem);
        std::int64_t sq_idx = 0, w = 1;
        for (std::int64_t j = 0; j < k; ++j) {
            sq_idx += sq[j] * w;
            w *= p;
        }
        ++roots[sq_idx];
    }

    sqrt_census_result res;
    res.p = p;
    res.k = k;
    for (std::int64_t idx = 0; idx < n; ++idx) {
        if (roots[idx] == 0) continue;
        ++res.invertible_squares;
        ++res.histogram[roots[idx]];
        if (roots[idx] > res.max_roots) res.max_roots = roots[idx];
    }
    return res;
}

struct solution_census {
    std::vector<std::vector<index_t>> solutions;  // supports satisfying the fundamental equation
    std::uint64_t candidates = 0;
};

// Tests every 0/1 polynomial supported on (p^m-1)/2 nonzero exponent vectors
// against the fundamental equation mod p. The search-based converse must find
// exactly the same two supports.
inline solution_census quadratic_solution_census(const field& f, std::int64_t order_cap = 27) {
    const std::int64_t q = f.order();
    if (q > std::min(order_cap, hard_order_cap))
        raise(errc::cap_exceeded, "field order " + std::to_string(q) + " exceeds the census cap");

    const int n = static_cast<int>(q - 1);
    const int h = n / 2;
    const std::uint64_t total = detail::binomial(n, h);
    const eqfund_checker chk(f);
    const std::vector<std::int64_t>& rhs = chk.rhs();
    const index_adder& add = chk.adder();
    const std::int64_t p = f.p();

    std::vector<std::int32_t> counts(q);
    std::vector<index_t> support(h);

    solution_census out;
    std::uint64_t mask = (std::uint64_t(1) << h) - 1;
    for (std::uint64_t r = 0; r < total; ++r, mask = detail::next_same_popcount(mask)) {
        std::uint64_t bits = mask;
        for (int i = 0; i < h; ++i) {
            support[i] = static_cast<index_t>(__builtin_ctzll(bits)) + 1;
            bits &= bits - 1;
        }
        std::memset(counts.data(), 0, counts.size() * sizeof(counts[0]));
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) ++counts[add(support[i], support[j])];
        for (int i = 0; i < h; ++i) ++counts[support[i]];
        bool ok = true;
        for (index_t t = 0; t < q && ok; ++t) ok = (counts[t] % p == rhs[t]);
        if (ok) out.solutions.push_back(support);
    }
    out.candidates = total;
    return out;
}

}  // namespace quadchar
