// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace quadchar {

enum class errc {
    invalid_argument,
    not_prime,
    even_prime,
    reducible_modulus,
    order_cap_exceeded,
    zero_inverse,
    norm_not_in_prime_field,
    zero_element,
    non_unit_result,
    character_mismatch,
    non_integer_d,
    index_out_of_range,
    domain_mismatch,
    coefficient_overflow,
    non_constant_fiber_counts,
    cap_exceeded,
    enumeration_cap_exceeded,
    zero_in_partition,
    malformed_file,
    field_mismatch,
};

inline const char* to_string(errc c) {
    switch (c) {
        case errc::invalid_argument: return "invalid_argument";
        case errc::not_prime: return "not_prime";
        case errc::even_prime: return "even_prime";
        case errc::reducible_modulus: return "reducible_modulus";
        case errc::order_cap_exceeded: return "order_cap_exceeded";
        case errc::zero_inverse: return "zero_inverse";
        case errc::norm_not_in_prime_field: return "norm_not_in_prime_field";
        case errc::zero_element: return "zero_element";
        case errc::non_unit_result: return "non_unit_result";
        case errc::character_mismatch: return "character_mismatch";
        case errc::non_integer_d: return "non_integer_d";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::domain_mismatch: return "domain_mismatch";
        case errc::coefficient_overflow: return "coefficient_overflow";
        case errc::non_constant_fiber_counts: return "non_constant_fiber_counts";
        case errc::cap_exceeded: return "cap_exceeded";
        case errc::enumeration_cap_exceeded: return "enumeration_cap_exceeded";
        case errc::zero_in_partition: return "zero_in_partition";
        case errc::malformed_file: return "malformed_file";
        case errc::field_mismatch: return "field_mismatch";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace quadchar
