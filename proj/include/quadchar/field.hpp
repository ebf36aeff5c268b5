// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadchar/errors.hpp"

namespace quadchar {

using index_t = std::int64_t;

// Default ceiling on the field order p^m. Keeps the O(p^2m) counting kernels
// interactive. Callers may raise it up to hard_order_cap.
inline constexpr std::int64_t default_order_cap = 4096;
inline constexpr std::int64_t hard_order_cap = 1 << 20;

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return (a * b) % p;  // operands < 2^20, no overflow
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// p^m, or -1 if the result would exceed `limit`.
inline std::int64_t ipow_capped(std::int64_t p, std::int64_t m, std::int64_t limit) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        if (r > limit / p) return -1;
        r *= p;
    }
    return r;
}

// Dense univariate polynomials over Z_p, little-endian coefficients.
using zp_poly = std::vector<std::int64_t>;

inline int poly_degree(const zp_poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a * b reduced modulo the monic polynomial f.
inline zp_poly pmod_mul(const zp_poly& a, const zp_poly& b, const zp_poly& f, std::int64_t p) {
    const int n = static_cast<int>(f.size()) - 1;  // deg f
    zp_poly conv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
    }
    for (auto& c : conv) c %= p;
    for (int i = static_cast<int>(conv.size()) - 1; i >= n; --i) {
        const std::int64_t c = conv[i] % p;
        if (c == 0) continue;
        conv[i] = 0;
        for (int j = 0; j < n; ++j) conv[i - n + j] = (conv[i - n + j] + c * (p - f[j])) % p;
    }
    conv.resize(n);
    for (auto& c : conv) c = ((c % p) + p) % p;
    return conv;
}

inline zp_poly pmod_pow(zp_poly base, std::int64_t e, const zp_poly& f, std::int64_t p) {
    const int n = static_cast<int>(f.size()) - 1;
    zp_poly r(n, 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = pmod_mul(r, base, f, p);
        base = pmod_mul(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline zp_poly poly_mod(zp_poly a, const zp_poly& b, std::int64_t p) {
    const int db = poly_degree(b);
    const std::int64_t lead_inv = powmod(b[db], p - 2, p);
    int da = poly_degree(a);
    while (da >= db) {
        const std::int64_t c = mulmod(a[da], lead_inv, p);
        for (int j = 0; j <= db; ++j) a[da - db + j] = ((a[da - db + j] - c * b[j]) % p + p) % p;
        da = poly_degree(a);
    }
    return a;
}

inline zp_poly poly_gcd(zp_poly a, zp_poly b, std::int64_t p) {
    while (poly_degree(b) >= 0) {
        zp_poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test for a monic f of degree m over Z_p:
// x^(p^m) == x (mod f), and gcd(x^(p^(m/q)) - x, f) = 1 for every prime q | m.
inline bool is_irreducible(const zp_poly& f, std::int64_t p) {
    const int m = static_cast<int>(f.size()) - 1;
    if (m == 1) return true;
    zp_poly x(m, 0);
    x[1] = 1;

    zp_poly xq = pmod_pow(x, ipow_capped(p, m, std::int64_t(1) << 62), f, p);
    if (xq != x) return false;

    std::vector<std::int64_t> prime_divisors;
    std::int64_t rem = m;
    for (std::int64_t q = 2; q * q <= rem; ++q)
        if (rem % q == 0) {
            prime_divisors.push_back(q);
            while (rem % q == 0) rem /= q;
        }
    if (rem > 1) prime_divisors.push_back(rem);

    for (std::int64_t q : prime_divisors) {
        zp_poly g = pmod_pow(x, ipow_capped(p, m / q, std::int64_t(1) << 62), f, p);
        g[1] = ((g[1] - 1) % p + p) % p;  // g - x
        zp_poly d = poly_gcd(f, g, p);
        if (poly_degree(d) != 0) return false;
    }
    return true;
}

// Smallest monic irreducible of degree m, coefficients compared as the tuple
// (a_{m-1}, ..., a_0) in increasing numeric order.
inline zp_poly lex_smallest_irreducible(std::int64_t p, std::int64_t m) {
    zp_poly f(m + 1, 0);
    f[m] = 1;
    if (m == 1) return f;  // x itself
    const std::int64_t total = ipow_capped(p, m, std::int64_t(1) << 62);
    for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t v = t;
        for (std::int64_t j = 0; j < m; ++j) {  // a_0 is the least significant digit of t
            f[j] = v % p;
            v /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    raise(errc::invalid_argument, "no irreducible polynomial found");  // unreachable
}

}  // namespace detail

struct field_element {
    std::vector<std::int64_t> coeffs;  // length m, each in [0, p)

    friend bool operator==(const field_element&, const field_element&) = default;
};

// F_{p^m} = Z_p[x] / (modulus), elements in the basis {1, g, ..., g^(m-1)}
// where g is the residue class of x. Immutable after construction; all
// operations are pure and safe for concurrent use.
class field {
public:
    field(std::int64_t p, std::int64_t m,
          std::optional<std::vector<std::int64_t>> modulus = std::nullopt,
          std::int64_t order_cap = default_order_cap)
        : p_(p), m_(m) {
        if (p == 2) raise(errc::even_prime, "p must be an odd prime");
        if (!detail::is_prime(p)) raise(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
        if (m < 1) raise(errc::invalid_argument, "m must be >= 1");
        const std::int64_t cap = std::min(order_cap, hard_order_cap);
        order_ = detail::ipow_capped(p, m, cap);
        if (order_ < 0)
            raise(errc::order_cap_exceeded,
                  "p^m exceeds the order cap " + std::to_string(cap));
        if (modulus) {
            modulus_ = std::move(*modulus);
            if (static_cast<std::int64_t>(modulus_.size()) != m + 1)
                raise(errc::invalid_argument, "modulus must have degree m");
            for (auto& c : modulus_) c = ((c % p) + p) % p;
            if (modulus_[m] != 1) raise(errc::invalid_argument, "modulus must be monic");
            if (!detail::is_irreducible(modulus_, p))
                raise(errc::reducible_modulus, "modulus is reducible over Z_p");
        } else {
            modulus_ = detail::lex_smallest_irreducible(p, m);
        }
    }

    std::int64_t p() const { return p_; }
    std::int64_t m() const { return m_; }
    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    friend bool operator==(const field& a, const field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

    field_element zero() const { return field_element{std::vector<std::int64_t>(m_, 0)}; }

    field_element one() const { return from_constant(1); }

    field_element from_constant(std::int64_t c) const {
        field_element e = zero();
        e.coeffs[0] = ((c % p_) + p_) % p_;
        return e;
    }

    // Builds an element from arbitrary integer coefficients, reducing mod p.
    field_element element(std::vector<std::int64_t> coeffs) const {
        if (static_cast<std::int64_t>(coeffs.size()) != m_)
            raise(errc::invalid_argument, "coefficient vector must have length m");
        for (auto& c : coeffs) c = ((c % p_) + p_) % p_;
        return field_element{std::move(coeffs)};
    }

    // Little-endian base-p index: idx = sum coeffs[j] * p^j.
    index_t index_of(const field_element& e) const {
        index_t idx = 0, w = 1;
        for (std::int64_t j = 0; j < m_; ++j) {
            idx += e.coeffs[j] * w;
            w *= p_;
        }
        return idx;
    }

    field_element element_at(index_t idx) const {
        if (idx < 0 || idx >= order_) raise(errc::index_out_of_range, "element index " + std::to_string(idx));
        field_element e = zero();
        for (std::int64_t j = 0; j < m_; ++j) {
            e.coeffs[j] = idx % p_;
            idx /= p_;
        }
        return e;
    }

    field_element add(const field_element& a, const field_element& b) const {
        field_element r = zero();
        for (std::int64_t j = 0; j < m_; ++j) {
            std::int64_t s = a.coeffs[j] + b.coeffs[j];
            r.coeffs[j] = s >= p_ ? s - p_ : s;
        }
        return r;
    }

    field_element neg(const field_element& a) const {
        field_element r = zero();
        for (std::int64_t j = 0; j < m_; ++j) r.coeffs[j] = a.coeffs[j] == 0 ? 0 : p_ - a.coeffs[j];
        return r;
    }

    field_element sub(const field_element& a, const field_element& b) const { return add(a, neg(b)); }

    field_element mul(const field_element& a, const field_element& b) const {
        return field_element{detail::pmod_mul(a.coeffs, b.coeffs, modulus_, p_)};
    }

    field_element pow(const field_element& a, std::int64_t e) const {
        if (e < 0) raise(errc::invalid_argument, "negative exponent");
        field_element r = one();
        field_element base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    field_element inv(const field_element& a) const {
        if (a == zero()) raise(errc::zero_inverse, "inverse of zero");
        return pow(a, order_ - 2);
    }

    // N(b) = b^((p^m-1)/(p-1)); lands in the prime subfield.
    std::int64_t norm(const field_element& a) const {
        if (a == zero()) return 0;
        const field_element n = pow(a, (order_ - 1) / (p_ - 1));
        for (std::int64_t j = 1; j < m_; ++j)
            if (n.coeffs[j] != 0)
                raise(errc::norm_not_in_prime_field, "norm has a nonzero coefficient beyond the constant");
        return n.coeffs[0];
    }

    // b^((p^m-1)/2), which is 1 or -1 for b != 0.
    int euler_criterion(const field_element& a) const {
        if (a == zero()) raise(errc::zero_element, "euler criterion of zero");
        const field_element r = pow(a, (order_ - 1) / 2);
        if (r == one()) return +1;
        if (r == neg(one())) return -1;
        raise(errc::non_unit_result, "euler power is neither 1 nor -1");
    }

    index_t add_index(index_t a, index_t b) const { return index_of(add(element_at(a), element_at(b))); }
    index_t neg_index(index_t a) const { return index_of(neg(element_at(a))); }
    index_t mul_index(index_t a, index_t b) const { return index_of(mul(element_at(a), element_at(b))); }

private:
    std::int64_t p_, m_, order_;
    std::vector<std::int64_t> modulus_;
};

// Legendre symbol (a|p) via a^((p-1)/2) mod p.
inline int legendre(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0) raise(errc::invalid_argument, "p must be an odd prime");
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    const std::int64_t r = detail::powmod(a, (p - 1) / 2, p);
    if (r == 1) return +1;
    if (r == p - 1) return -1;
    raise(errc::invalid_argument, "p is not prime");
}

// Digit-wise mod-p addition of element indices, the shared primitive of the
// counting and ring-multiplication kernels (field addition and exponent
// addition are the same map on indices).
class index_adder {
public:
    explicit index_adder(const field& f) : p_(f.p()), m_(f.m()), order_(f.order()) {
        if (m_ > 1) {
            digits_.resize(static_cast<std::size_t>(order_) * m_);
            for (index_t i = 0; i < order_; ++i) {
                index_t v = i;
                for (std::int64_t j = 0; j < m_; ++j) {
                    digits_[i * m_ + j] = static_cast<std::int32_t>(v % p_);
                    v /= p_;
                }
            }
        }
    }

    index_t operator()(index_t a, index_t b) const {
        if (m_ == 1) {
            const index_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        const std::int32_t* da = digits_.data() + a * m_;
        const std::int32_t* db = digits_.data() + b * m_;
        index_t out = 0, w = 1;
        for (std::int64_t j = 0; j < m_; ++j) {
            std::int64_t s = da[j] + db[j];
            if (s >= p_) s -= p_;
            out += s * w;
            w *= p_;
        }
        return out;
    }

    std::int64_t order() const { return order_; }

private:
    std::int64_t p_, m_, order_;
    std::vector<std::int32_t> digits_;
};

}  // namespace quadchar
