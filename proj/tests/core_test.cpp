// Copyright 2026 The dupcode Authors
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


#include <gtest/gtest.h>

#include <random>

#include "dupcode/error.hpp"
#include "dupcode/word.hpp"
#include "test_util.hpp"

namespace dupcode {
namespace {

using testing::w;

TEST(WordTest, ParseAndFormat) {
  EXPECT_EQ(w(3, "1012121").str(), "1012121");
  EXPECT_EQ(Word::parse("10,0,13", 17).str(), "10,0,13");
  EXPECT_EQ(Word::parse("", 17).size(), 0u);
  EXPECT_THROW(w(2, "102"), ParameterError);
  EXPECT_THROW(Word::parse("1,17", 17), ParameterError);
  EXPECT_THROW(Word::parse("1,,2", 17), ParameterError);
  EXPECT_THROW(Word(1), ParameterError);
}

TEST(WordTest, CountSymbol) {
  EXPECT_EQ(count_symbol(w(3, "1000112"), 0), 3u);
  EXPECT_EQ(count_symbol(w(3, ""), 0), 0u);
  EXPECT_EQ(count_symbol(w(2, "0000"), 0), 4u);
  EXPECT_THROW(count_symbol(w(2, "01"), 2), ParameterError);
}

TEST(WordTest, HammingMetrics) {
  EXPECT_EQ(hamming_weight(w(3, "1112")), 4u);
  const Word u = w(3, "1012121");
  EXPECT_EQ(hamming_distance(u, u), 0u);
  EXPECT_THROW(hamming_distance(u, w(3, "1012112121")), ParameterError);
  EXPECT_THROW(hamming_distance(w(2, "01"), w(3, "01")), ParameterError);
  EXPECT_EQ(hamming_distance(w(3, "0120"), w(3, "0210")), 2u);
}

TEST(WordTest, AddScaledUnit) {
  EXPECT_EQ(add_scaled_unit(w(3, "1012012121"), 5, 1).str(), "1012112121");
  EXPECT_EQ(add_scaled_unit(w(3, "1012"), 2, 0), w(3, "1012"));
  EXPECT_EQ(add_scaled_unit(w(2, "00"), 2, 1).str(), "01");
  EXPECT_THROW(add_scaled_unit(w(2, "00"), 0, 1), ParameterError);
  EXPECT_THROW(add_scaled_unit(w(2, "00"), 3, 1), ParameterError);
}

TEST(WordTest, Blocks) {
  auto v = blocks(w(2, "110010"), 2);
  ASSERT_EQ(v.blocks.size(), 3u);
  EXPECT_EQ(v.blocks[0].str(), "11");
  EXPECT_EQ(v.blocks[1].str(), "00");
  EXPECT_EQ(v.blocks[2].str(), "10");
  v = blocks(w(2, "11001"), 2);
  ASSERT_EQ(v.blocks.size(), 3u);
  EXPECT_EQ(v.blocks[2].str(), "1");
  EXPECT_TRUE(blocks(w(2, ""), 3).blocks.empty());
}

TEST(WordProperties, WeightPlusZerosIsLength) {
  for (unsigned q : {2u, 3u}) {
    testing::for_each_word(q, 6, [&](const Word& u) {
      EXPECT_EQ(hamming_weight(u) + count_symbol(u, 0), u.size());
    });
  }
}

TEST(WordProperties, AddScaledUnitNegationInverts) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned q = 2 + rng() % 4;
    const std::size_t n = 1 + rng() % 12;
    std::vector<Symbol> s(n);
    for (auto& c : s) c = static_cast<Symbol>(rng() % q);
    const Word u(q, s);
    const std::size_t i = 1 + rng() % n;
    const Symbol a = static_cast<Symbol>(rng() % q);
    const Word back =
        add_scaled_unit(add_scaled_unit(u, i, a), i,
                        static_cast<Symbol>((q - a) % q));
    EXPECT_EQ(back, u);
  }
}

TEST(WordProperties, BlocksConcatenateToParent) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 0; n <= 9; ++n) {
      testing::for_each_word(2, n, [&](const Word& z) {
        const auto v = blocks(z, k);
        Word joined(2);
        for (std::size_t b = 0; b < v.blocks.size(); ++b) {
          if (b + 1 < v.blocks.size() || n % k == 0) {
            EXPECT_EQ(v.blocks[b].size(), k);
          } else {
            EXPECT_EQ(v.blocks[b].size(), n % k);
          }
          joined = joined.concat(v.blocks[b]);
        }
        EXPECT_EQ(joined, z);
      });
    }
  }
}

}  // namespace
}  // namespace dupcode
