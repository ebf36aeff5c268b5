// SPDX-License-Identifier: Apache-2.0
#include "quadchar/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace quadchar;

namespace {

class temp_file {
public:
    explicit temp_file(const std::string& name)
        : path_(std::string(::testing::TempDir()) + name) {}
    ~temp_file() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }
    void write(const std::string& text) const {
        std::ofstream out(path_);
        out << text;
    }

private:
    std::string path_;
};

}  // namespace

TEST(FieldJson, StableSerialization) {
    field f(3, 2);
    EXPECT_EQ(field_to_json(f).dump(), R"({"p":3,"m":2,"modulus":[1,0,1]})");
    const field back = field_from_json(field_to_json(f));
    EXPECT_TRUE(back == f);
}

TEST(FieldJson, MissingModulusUsesDefault) {
    const field f = field_from_json(qjson{{"p", 7}, {"m", 1}});
    EXPECT_EQ(f.modulus(), (std::vector<std::int64_t>{0, 1}));
}

TEST(FieldJson, MalformedShapes) {
    for (const char* text : {R"({"m":1})", R"({"p":"x","m":1})", R"({"p":5,"m":1,"modulus":3})"}) {
        try {
            field_from_json(qjson::parse(text));
            FAIL() << "expected malformed_file for " << text;
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::malformed_file);
        }
    }
}

TEST(FibersJson, F9Export) {
    field f(3, 2);
    const qjson j = fibers_to_json(f, fibers(build_character_table(f)));
    EXPECT_EQ(j["squares"], (std::vector<std::int64_t>{1, 2, 3, 6}));
    EXPECT_EQ(j["nonsquares"], (std::vector<std::int64_t>{4, 5, 7, 8}));
    EXPECT_EQ(j["field"]["p"], 3);
}

TEST(PartitionFile, RoundTripIsIdentity) {
    temp_file file("partition_roundtrip.json");
    field f(7, 1);
    const partition part{f, {1, 2, 4}};
    save_partition(part, file.path());
    const partition back = load_partition(file.path());
    EXPECT_TRUE(back.fld == f);
    EXPECT_EQ(back.set_a, part.set_a);
}

TEST(PartitionFile, LoadSortsIndices) {
    temp_file file("partition_unsorted.json");
    file.write(R"({"field":{"p":7,"m":1,"modulus":[0,1]},"setA":[4,1,2]})");
    EXPECT_EQ(load_partition(file.path()).set_a, (std::vector<index_t>{1, 2, 4}));
}

TEST(PartitionFile, ErrorCases) {
    struct {
        const char* text;
        errc expected;
    } cases[] = {
        {R"({"field":{"p":7,"m":1},"setA":[0,1]})", errc::zero_in_partition},
        {R"({"field":{"p":9,"m":1},"setA":[1]})", errc::not_prime},
        {R"({"field":{"p":7,"m":1},"setA":[1,99]})", errc::index_out_of_range},
        {R"({"field":{"p":7,"m":1},"setA":[1,1,2]})", errc::malformed_file},
        {R"(this is not json)", errc::malformed_file},
        {R"({"setA":[1]})", errc::malformed_file},
    };
    for (const auto& c : cases) {
        temp_file file("partition_error.json");
        file.write(c.text);
        try {
            load_partition(file.path());
            FAIL() << "expected error for " << c.text;
        } catch (const error& e) {
            EXPECT_EQ(e.code(), c.expected) << c.text;
        }
    }
}

TEST(PartitionFile, FieldMismatchAgainstExpected) {
    temp_file file("partition_mismatch.json");
    field f5(5, 1), f7(7, 1);
    save_partition({f5, {1, 4}}, file.path());
    EXPECT_NO_THROW(load_partition(file.path(), &f5));
    try {
        load_partition(file.path(), &f7);
        FAIL() << "expected field_mismatch";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::field_mismatch);
    }
}

TEST(VerdictJson, CarriesConditionsAndWitnesses) {
    field f(7, 1);
    const converse_verdict good = verify_partition({f, {1, 2, 4}});
    const qjson jg = verdict_to_json(good);
    EXPECT_TRUE(jg["pass"].get<bool>());
    EXPECT_TRUE(jg["is_character_partition"].get<bool>());
    EXPECT_TRUE(jg["extended"].is_null());
    EXPECT_TRUE(jg["failures"].empty());

    const converse_verdict bad = verify_partition({f, {1, 2, 3}});
    const qjson jb = verdict_to_json(bad);
    EXPECT_FALSE(jb["pass"].get<bool>());
    ASSERT_FALSE(jb["failures"].empty());
    for (const auto& w : jb["failures"]) {
        EXPECT_TRUE(w.contains("index"));
        EXPECT_TRUE(w.contains("observed"));
        EXPECT_TRUE(w.contains("expected"));
    }

    temp_file file("verdict.json");
    save_verdict(bad, file.path());
    std::ifstream in(file.path());
    qjson parsed;
    in >> parsed;
    EXPECT_EQ(parsed, jb);
}

TEST(VerdictJson, ExtendedBlockPresentWhenRun) {
    field f(7, 1);
    const qjson j = verdict_to_json(verify_partition({f, {1, 2, 4}}, true));
    ASSERT_TRUE(j["extended"].is_object());
    EXPECT_TRUE(j["extended"]["bb_counts"].get<bool>());
    EXPECT_TRUE(j["extended"]["mixed_counts"].get<bool>());
}
