// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "quadchar/character.hpp"
#include "quadchar/converse.hpp"
#include "quadchar/field.hpp"

namespace quadchar {

using qjson = nlohmann::ordered_json;

namespace detail {

inline const qjson& member(const qjson& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        raise(errc::malformed_file, std::string("missing key '") + key + "'");
    return j.at(key);
}

inline std::int64_t int_member(const qjson& j, const char* key) {
    const qjson& v = member(j, key);
    if (!v.is_number_integer()) raise(errc::malformed_file, std::string("key '") + key + "' is not an integer");
    return v.get<std::int64_t>();
}

inline std::vector<std::int64_t> int_array_member(const qjson& j, const char* key) {
    const qjson& v = member(j, key);
    if (!v.is_array()) raise(errc::malformed_file, std::string("key '") + key + "' is not an array");
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer())
            raise(errc::malformed_file, std::string("key '") + key + "' has a non-integer entry");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

}  // namespace detail

inline qjson field_to_json(const field& f) {
    return qjson{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

inline field field_from_json(const qjson& j, std::int64_t order_cap = default_order_cap) {
    const std::int64_t p = detail::int_member(j, "p");
    const std::int64_t m = detail::int_member(j, "m");
    std::optional<std::vector<std::int64_t>> modulus;
    if (j.contains("modulus")) modulus = detail::int_array_member(j, "modulus");
    return field(p, m, std::move(modulus), order_cap);
}

inline qjson fibers_to_json(const field& f, const fiber_sets& fib) {
    return qjson{{"field", field_to_json(f)}, {"squares", fib.squares}, {"nonsquares", fib.nonsquares}};
}

inline qjson partition_to_json(const partition& part) {
    return qjson{{"field", field_to_json(part.fld)}, {"setA", part.set_a}};
}

inline partition partition_from_json(const qjson& j, std::int64_t order_cap = default_order_cap) {
    field f = field_from_json(detail::member(j, "field"), order_cap);
    std::vector<std::int64_t> set_a = detail::int_array_member(j, "setA");
    std::sort(set_a.begin(), set_a.end());
    for (std::int64_t i : set_a) {
        if (i == 0) raise(errc::zero_in_partition, "setA contains 0");
        if (i < 0 || i >= f.order()) raise(errc::index_out_of_range, "setA index " + std::to_string(i));
    }
    if (std::adjacent_find(set_a.begin(), set_a.end()) != set_a.end())
        raise(errc::malformed_file, "setA contains duplicate indices");
    return partition{std::move(f), std::move(set_a)};
}

inline partition load_partition(const std::string& path, const field* expected = nullptr,
                                std::int64_t order_cap = default_order_cap) {
    std::ifstream in(path);
    if (!in) raise(errc::malformed_file, "cannot open " + path);
    qjson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(errc::malformed_file, path + ": " + e.what());
    }
    partition part = partition_from_json(j, order_cap);
    if (expected != nullptr && !(part.fld == *expected))
        raise(errc::field_mismatch, "partition file field differs from the requested field");
    return part;
}

inline void save_partition(const partition& part, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(errc::malformed_file, "cannot write " + path);
    out << partition_to_json(part).dump(2) << '\n';
}

inline qjson verdict_to_json(const converse_verdict& v) {
    qjson j{{"cardinality", v.cardinality},
            {"one_in_A", v.one_in_a},
            {"a_counts", v.a_counts},
            {"b_counts", v.b_counts}};
    if (v.extended_run)
        j["extended"] = qjson{{"bb_counts", v.bb_counts}, {"mixed_counts", v.mixed_counts}};
    else
        j["extended"] = nullptr;
    j["is_character_partition"] = v.is_character_partition;
    j["pass"] = v.conditions_pass();
    qjson failures = qjson::array();
    for (const condition_witness& w : v.failures)
        failures.push_back(qjson{{"index", w.index}, {"observed", w.observed}, {"expected", w.expected}});
    j["failures"] = std::move(failures);
    return j;
}

inline void save_verdict(const converse_verdict& v, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(errc::malformed_file, "cannot write " + path);
    out << verdict_to_json(v).dump(2) << '\n';
}

}  // namespace quadchar
