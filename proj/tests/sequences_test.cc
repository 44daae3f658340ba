// Copyright 2026 The qwalk Authors
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

#include "qwalk/sequences.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace qwalk;

namespace {

std::vector<CoinName> names(std::string_view s) {
    std::vector<CoinName> out;
    for (char c : s) {
        out.push_back(parse_coin_name(c));
    }
    return out;
}

std::vector<std::string> labels(const std::vector<CoinSequence> &seqs) {
    std::vector<std::string> out;
    for (const auto &s : seqs) {
        out.push_back(s.label());
    }
    return out;
}

/// Coin stream for steps 1..n.
std::string stream(const CoinSequence &s, int n) {
    std::string out;
    for (int t = 1; t <= n; t++) {
        out.push_back(coin_symbol(s.name_at(t)));
    }
    return out;
}

}  // namespace

TEST(sequences, parse) {
    EXPECT_EQ(CoinSequence::parse("XXH...").pattern(), names("XXH"));
    EXPECT_EQ(CoinSequence::parse("h").pattern(), names("H"));
    EXPECT_EQ(CoinSequence::parse("mmF").label(), "MMF");
    EXPECT_THROW(CoinSequence::parse("XQZ"), std::invalid_argument);
    EXPECT_THROW(CoinSequence::parse(""), std::invalid_argument);
    EXPECT_THROW(CoinSequence::parse("..."), std::invalid_argument);
    EXPECT_THROW(CoinSequence::parse("XX.H"), std::invalid_argument);
    EXPECT_THROW(CoinSequence(std::vector<CoinName>{}), std::invalid_argument);
}

TEST(sequences, label_round_trip) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; k++) {
        std::string label;
        int len = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < len; i++) {
            label.push_back("HFMX"[rng() % 4]);
        }
        EXPECT_EQ(CoinSequence::parse(label).label(), label);
        EXPECT_EQ(CoinSequence::parse(label + "...").label(), label);
    }
}

TEST(sequences, coin_at_indexing) {
    auto xxh = CoinSequence::parse("XXH");
    EXPECT_EQ(xxh.name_at(1), CoinName::X);
    EXPECT_EQ(xxh.name_at(2), CoinName::X);
    EXPECT_EQ(xxh.name_at(3), CoinName::H);
    EXPECT_EQ(xxh.name_at(4), CoinName::X);
    EXPECT_EQ(xxh.coin_at(3), named_coin(CoinName::H));
    EXPECT_EQ(xxh.coin_at(4), named_coin(CoinName::X));
    EXPECT_EQ(CoinSequence::parse("H").coin_at(1000), named_coin(CoinName::H));
    EXPECT_THROW(xxh.coin_at(0), std::invalid_argument);
}

TEST(sequences, coin_at_is_periodic) {
    for (const char *label : {"H", "XXH", "MMF", "XHXHF", "FMXHHX"}) {
        auto s = CoinSequence::parse(label);
        for (int i = 1; i <= 60; i++) {
            ASSERT_EQ(s.coin_at(i), s.coin_at(i + static_cast<int>(s.period())));
        }
    }
}

TEST(sequences, repetitions_generate_identical_streams) {
    EXPECT_EQ(stream(CoinSequence::parse("H"), 100), stream(CoinSequence::parse("HH"), 100));
    EXPECT_EQ(stream(CoinSequence::parse("XH"), 100), stream(CoinSequence::parse("XHXH"), 100));
    EXPECT_EQ(stream(CoinSequence::parse("XXH"), 100), stream(CoinSequence::parse("XXHXXH"), 100));
}

TEST(sequences, primitive_period) {
    EXPECT_EQ(CoinSequence::parse("H").primitive_period(), 1u);
    EXPECT_EQ(CoinSequence::parse("HHH").primitive_period(), 1u);
    EXPECT_EQ(CoinSequence::parse("HXHX").primitive_period(), 2u);
    EXPECT_EQ(CoinSequence::parse("XXHXXH").primitive_period(), 3u);
    EXPECT_EQ(CoinSequence::parse("XXHXX").primitive_period(), 5u);
}

TEST(sequences, enumerate_small_alphabets) {
    std::vector<CoinName> hx{CoinName::H, CoinName::X};
    EXPECT_EQ(labels(enumerate_patterns(hx, 1)), (std::vector<std::string>{"H", "X"}));
    EXPECT_EQ(labels(enumerate_patterns(hx, 2)), (std::vector<std::string>{"H", "X", "HX", "XH"}));
    EXPECT_THROW(enumerate_patterns(hx, 7), std::out_of_range);
    EXPECT_TRUE(enumerate_patterns(hx, 0).empty());
}

TEST(sequences, enumerate_includes_paper_families) {
    auto all = labels(enumerate_patterns(ALL_COIN_NAMES, 3));
    for (const char *want : {"XXH", "XHH", "HHX", "MMF", "FFM", "MMH", "HHM"}) {
        EXPECT_NE(std::find(all.begin(), all.end(), want), all.end()) << want;
    }
}

TEST(sequences, enumerate_matches_brute_force_stream_dedup) {
    // Oracle: collapse every raw pattern by the coin stream it generates over
    // lcm(1..6) = 60 steps; one representative per stream must remain.
    std::vector<CoinName> alphabet{CoinName::H, CoinName::F, CoinName::X};
    for (int max_period = 1; max_period <= 5; max_period++) {
        std::set<std::string> expected_streams;
        std::vector<std::string> raw{""};
        for (int len = 1; len <= max_period; len++) {
            std::vector<std::string> next;
            for (const auto &prefix : raw) {
                for (CoinName n : alphabet) {
                    next.push_back(prefix + coin_symbol(n));
                }
            }
            raw = next;
            for (const auto &p : raw) {
                expected_streams.insert(stream(CoinSequence::parse(p), 60));
            }
        }
        auto got = enumerate_patterns(alphabet, max_period);
        std::set<std::string> got_streams;
        for (const auto &s : got) {
            got_streams.insert(stream(s, 60));
        }
        EXPECT_EQ(got_streams.size(), got.size()) << "duplicate stream at max_period " << max_period;
        EXPECT_EQ(got_streams, expected_streams) << "max_period " << max_period;
    }
}

TEST(sequences, enumerate_guard_size) {
    // Number of primitive words of length n over k letters: sum_{d|n} mu(d) k^{n/d}.
    auto got = enumerate_patterns(ALL_COIN_NAMES, 6);
    size_t expected = 4 + 12 + 60 + 240 + 1020 + 4020;
    EXPECT_EQ(got.size(), expected);
}
