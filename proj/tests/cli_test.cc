// Copyright 2026 The assocmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <random>
#include <sstream>

#include "assocmem/cli/formats.h"
#include "assocmem/cli/run.h"
#include "assocmem/errors.h"
#include "assocmem/hebbian.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace assocmem;
using namespace assocmem::cli;
using assocmem::testing::bv;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("assocmem_cli_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string file(const std::string &name, std::string_view contents) {
        auto p = dir_ / name;
        write_file(p, contents);
        return p.string();
    }
    std::string path(const std::string &name) {
        return (dir_ / name).string();
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST(parse_memories_text, comments_and_blank_lines) {
    auto set = parse_memories_text("# two memories\n\n1 1 1 1\n  1 -1 +1 -1  # trailing\n");
    ASSERT_EQ(set.n, 4u);
    ASSERT_EQ(set.memories, (std::vector<BipolarVector>{bv({1, 1, 1, 1}), bv({1, -1, 1, -1})}));
}

TEST(parse_memories_text, bad_token_reports_position) {
    try {
        parse_memories_text("1 1 1\n1 2 1\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        ASSERT_EQ(e.line(), 2u);
        ASSERT_EQ(e.column(), 3u);
        ASSERT_EQ(e.token(), "2");
    }
    ASSERT_THROW(parse_memories_text("# nothing\n"), ParseError);
    ASSERT_THROW(parse_memories_text("1 1\n1 1 1\n"), DimensionMismatch);
}

TEST(parse_memories_text, round_trip) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 100; k++) {
        auto mem = assocmem::testing::random_memories(std::uniform_int_distribution<size_t>(1, 30)(rng),
                                            std::uniform_int_distribution<size_t>(1, 8)(rng), rng);
        ASSERT_EQ(parse_memories_text(format_memories(mem)).memories, mem);
    }
}

TEST(parse_proximity_text, validation) {
    auto p = parse_proximity_text("0 1.5\n1.5 0\n");
    ASSERT_EQ(p(0, 1), 1.5);
    ASSERT_THROW(parse_proximity_text("0 1 1 1\n1 0 1 1\n1 1 0 1\n"), DimensionMismatch);
    ASSERT_THROW(parse_proximity_text("0 x\n1 0\n"), ParseError);
    try {
        parse_proximity_text("0 1 2\n1 0 1\n3 1 0\n");
        FAIL() << "expected asymmetry error";
    } catch (const std::invalid_argument &e) {
        std::string what = e.what();
        ASSERT_NE(what.find("(1, 3)"), std::string::npos) << what;
    }
}

TEST(parse_start, one_based_entries) {
    auto s = parse_start("1:+1,4:-1", 4);
    ASSERT_EQ(s.size(), 2u);
    ASSERT_EQ(s[0].neuron, 0u);
    ASSERT_EQ(s[0].value, 1);
    ASSERT_EQ(s[1].neuron, 3u);
    ASSERT_EQ(s[1].value, -1);
    ASSERT_THROW(parse_start("5:+1", 4), std::invalid_argument);
    ASSERT_THROW(parse_start("0:+1", 4), std::invalid_argument);
    ASSERT_THROW(parse_start("1:+1,1:-1", 4), std::invalid_argument);
    ASSERT_THROW(parse_start("1=+1", 4), ParseError);
    ASSERT_THROW(parse_start("1:2", 4), ParseError);
}

TEST(parse_lists, states_and_counts) {
    ASSERT_EQ(parse_state("1,-1,1"), bv({1, -1, 1}));
    ASSERT_EQ(parse_state("1 -1 1"), bv({1, -1, 1}));
    ASSERT_THROW(parse_state("1,0"), ParseError);
    ASSERT_EQ(parse_count_list("5:20:5"), (std::vector<size_t>{5, 10, 15, 20}));
    ASSERT_EQ(parse_count_list("3,7"), (std::vector<size_t>{3, 7}));
    ASSERT_EQ(parse_real_list("0.6,0.8"), (std::vector<double>{0.6, 0.8}));
}

TEST(weights_json, round_trip_and_validation) {
    auto t = train(assocmem::testing::two_memory_set());
    auto text = dump(weights_to_json(t, Json::object()));
    ASSERT_EQ(weights_from_json_text(text), t);
    ASSERT_THROW(weights_from_json_text("{"), ParseError);
    ASSERT_THROW(weights_from_json_text(R"({"format":"other","format_version":1,"n":1,"matrix":[[0]]})"), ParseError);
    ASSERT_THROW(weights_from_json_text(R"({"format":"assocmem-weights","format_version":1,"n":2,"matrix":[[0,1],[2,0]]})"),
                 std::invalid_argument);
}

TEST_F(CliFiles, train_writes_expected_weights) {
    auto mem = file("mem.txt", "1 1 1 1\n1 -1 1 -1\n");
    auto r = invoke({"train", "--memories", mem, "--out", path("w.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    ASSERT_EQ(parse_weights(path("w.json")), train(assocmem::testing::two_memory_set()));
}

TEST_F(CliFiles, spread_recovers_memory) {
    auto mem = file("mem.txt", "1 1 1 1\n1 -1 1 -1\n");
    ASSERT_EQ(invoke({"train", "--memories", mem, "--out", path("w.json")}).code, kExitOk);
    auto r = invoke({"spread", "--weights", path("w.json"), "--start", "1:+1", "--memories", mem});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = Json::parse(r.out);
    ASSERT_EQ(j["result"]["final_state"], Json::parse("[1,1,1,1]"));
    ASSERT_EQ(j["result"]["matched_memory"], 1);
}

TEST_F(CliFiles, exit_codes) {
    auto mem = file("mem.txt", "1 1 1 1\n1 -1 1 -1\n");
    ASSERT_EQ(invoke({"train", "--memories", mem, "--out", path("w.json")}).code, kExitOk);
    auto w = path("w.json");

    ASSERT_EQ(invoke({}).code, kExitUsage);
    ASSERT_EQ(invoke({"recall", "--weights", w, "--state", "1,1,1,1", "--bogus"}).code, kExitUsage);
    ASSERT_EQ(invoke({"recall", "--weights", w, "--state", "1,1,1,1", "--async", "--schedule", "random"}).code,
              kExitUsage);
    ASSERT_EQ(invoke({"capacity", "--n", "20", "--m-list", "1", "--trials", "50"}).code, kExitUsage);
    ASSERT_EQ(invoke({"collapse"}).code, kExitUsage);

    auto bad = file("bad.txt", "1 1\n1 x\n");
    ASSERT_EQ(invoke({"train", "--memories", bad, "--out", path("x.json")}).code, kExitParse);
    ASSERT_EQ(invoke({"recall", "--weights", w, "--state", "1,1"}).code, kExitDimension);
    ASSERT_EQ(invoke({"capacity", "--n", "5", "--m-list", "1", "--trials", "50", "--seed", "1"}).code, kExitParameter);
    ASSERT_EQ(invoke({"collapse", "--amps", "0.5,0.5", "--samples", "10", "--seed", "1"}).code, kExitParameter);
    ASSERT_EQ(invoke({"train", "--memories", path("missing.txt"), "--out", path("x.json")}).code, kExitIo);
    ASSERT_EQ(invoke({"--version"}).code, kExitOk);
}

TEST_F(CliFiles, reports_are_byte_identical) {
    std::vector<std::string> args{"capacity", "--n", "20", "--m-list", "1:5:2", "--trials", "50", "--seed", "3"};
    auto a = invoke(args);
    args.insert(args.end(), {"--threads", "2"});
    auto b = invoke(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    ASSERT_EQ(a.out, b.out);

    std::vector<std::string> col{"collapse", "--amps", "0.6,0.8", "--samples", "1000", "--seed", "9", "--emit-samples"};
    ASSERT_EQ(invoke(col).out, invoke(col).out);
}
