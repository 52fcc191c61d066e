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

#include "dupcode/channel.hpp"
#include "dupcode/error.hpp"
#include "dupcode/transform.hpp"
#include "test_util.hpp"

namespace dupcode {
namespace {

using testing::w;

TEST(PhiTest, ReferenceVectors) {
  EXPECT_EQ(phi(w(3, "1012121"), 3).str(), "101,1112");
  EXPECT_EQ(phi(w(3, "1012012121"), 3).str(), "101,1000112");
  EXPECT_EQ(phi(w(3, "1012112121"), 3).str(), "101,1100012");
  EXPECT_EQ(phi(w(2, "0000"), 1).str(), "0,000");
  EXPECT_THROW(phi(w(2, "01"), 3), ParameterError);
}

TEST(PhiTest, Inverse) {
  EXPECT_EQ(phi_inv(TransformPair{w(3, "101"), w(3, "1112"), 3}).str(),
            "1012121");
  EXPECT_EQ(phi_inv(TransformPair{w(2, "111"), w(2, "010111"), 3}).str(),
            "111101010");
  EXPECT_EQ(phi_inv(w(2, "111101010"), 3).str(), "111010000");
  EXPECT_EQ(phi_inv(TransformPair{w(2, "0"), w(2, "000"), 1}).str(), "0000");
  EXPECT_THROW(phi_inv(TransformPair{w(2, "01"), w(2, "0"), 3}),
               ParameterError);
}

TEST(MuTest, Examples) {
  EXPECT_EQ(mu(w(3, "1000112"), 3).str(), "1112");
  EXPECT_EQ(mu(w(2, "11"), 2).str(), "11");
  EXPECT_EQ(mu(w(2, "0000010"), 3).str(), "0010");
  EXPECT_EQ(mu(w(2, ""), 3).str(), "");
}

TEST(RootTest, Examples) {
  EXPECT_EQ(root(w(3, "1012012121"), 3).str(), "1012121");
  EXPECT_EQ(root(w(3, "1012121"), 3).str(), "1012121");
  EXPECT_EQ(root(w(3, "12122022002200"), 3).str(), "12122002200");
  EXPECT_EQ(root(w(3, "12122122002200"), 3).str(), "12122002200");
  EXPECT_EQ(root(w(3, "12122022202200"), 3).str(), "12122022200");
  EXPECT_EQ(root(w(3, "12122120002200"), 3).str(), "12120002200");
  EXPECT_THROW(root(w(3, "12"), 3), ParameterError);
}

TEST(RllTest, Examples) {
  EXPECT_TRUE(is_rll(w(3, "1112"), 3));
  EXPECT_FALSE(is_rll(w(3, "1000112"), 3));
  EXPECT_FALSE(is_rll(w(2, "10010"), 2));
  EXPECT_TRUE(is_rll(w(2, "10101"), 2));
  EXPECT_FALSE(is_irreducible(w(3, "1012012121"), 3));
  EXPECT_TRUE(is_irreducible(w(3, "1012121"), 3));
}

TEST(SigmaTest, Examples) {
  const Word u = w(2, "111010111");
  EXPECT_EQ(sigma_distance(u, u, 3), 0u);
  EXPECT_EQ(sigma_distance(u, w(2, "111101010"), 3), 4u);
  EXPECT_EQ(sigma_coefficients(w(2, "000"), w(2, "100"), 1).str(), "111");
  EXPECT_EQ(sigma_distance(w(2, "000"), w(2, "100"), 1), 3u);
  EXPECT_THROW(sigma_distance(u, w(2, "11"), 3), ParameterError);
}

TEST(EpsilonTest, Examples) {
  EXPECT_EQ(epsilon_word(1, 4, 2, 3).str(), "1020");
  EXPECT_EQ(epsilon_word(4, 4, 2, 3).str(), "0001");
  EXPECT_EQ(epsilon_word(2, 3, 1, 2).str(), "011");
  EXPECT_THROW(epsilon_word(0, 3, 1, 2), ParameterError);
  EXPECT_THROW(epsilon_word(4, 3, 1, 2), ParameterError);
}

TEST(TransformProperties, Bijection) {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t n = k; n <= 8; ++n) {
        testing::for_each_word(q, n, [&](const Word& x) {
          ASSERT_EQ(phi_inv(phi(x, k)), x);
        });
      }
    }
  }
}

TEST(TransformProperties, Linearity) {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t n = k; n <= 6; ++n) {
        testing::for_each_word(q, n, [&](const Word& x) {
          const Word fx = phi(x, k).joined();
          for (std::size_t i = 1; i <= n; ++i) {
            for (Symbol a = 1; a < q; ++a) {
              const Word lhs = phi(add_scaled_unit(x, i, a), k).joined();
              const Word eps = epsilon_word(i, n, k, q);
              std::vector<Symbol> rhs(n);
              for (std::size_t j = 0; j < n; ++j) {
                rhs[j] = static_cast<Symbol>((fx[j] + a * eps[j]) % q);
              }
              ASSERT_EQ(lhs, Word(q, rhs));
            }
          }
        });
      }
    }
  }
}

TEST(TransformProperties, RootMatchesRandomRemovalOrder) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    const std::size_t n = k + rng() % 20;
    std::vector<Symbol> s(n);
    // Small alphabets and a bias toward repeats make removals likely.
    for (auto& c : s) c = static_cast<Symbol>(rng() % 2);
    const Word x(3, s);
    ASSERT_EQ(testing::naive_root(x, k, rng), root(x, k)) << x.str();
  }
}

TEST(TransformProperties, DuplicationInsertsZerosInTail) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const unsigned q = 2 + rng() % 2;
    const std::size_t k = 1 + rng() % 4;
    const std::size_t n = k + rng() % 8;
    std::vector<Symbol> s(n);
    for (auto& c : s) c = static_cast<Symbol>(rng() % q);
    const Word x(q, s);
    const std::size_t pos = rng() % (n - k + 1);
    const Word xd = apply_event(x, Duplication{pos}, k);
    const auto before = phi(x, k);
    const auto after = phi(xd, k);
    EXPECT_EQ(after.head, before.head);
    auto expected = before.tail.vec();
    expected.insert(expected.begin() + static_cast<long>(pos), k, 0);
    EXPECT_EQ(after.tail.vec(), expected);
  }
}

TEST(TransformProperties, RootIsIrreducibleFixedPoint) {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t n = k; n <= 8; ++n) {
        testing::for_each_word(q, n, [&](const Word& x) {
          const Word r = root(x, k);
          ASSERT_TRUE(is_irreducible(r, k));
          ASSERT_EQ(root(r, k), r);
          ASSERT_EQ(detail::root_length(x.vec(), k, q), r.size());
          ASSERT_EQ(is_irreducible(x, k), is_rll(phi(x, k).tail, k));
          ASSERT_EQ(is_irreducible(x, k), r == x);
        });
      }
    }
  }
}

TEST(TransformProperties, SigmaIsSymbolDistanceOfInverses) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned q = 2 + rng() % 3;
    const std::size_t k = 1 + rng() % 3;
    const std::size_t n = k + rng() % 8;
    std::vector<Symbol> a(n), b(n);
    for (auto& c : a) c = static_cast<Symbol>(rng() % q);
    for (auto& c : b) c = static_cast<Symbol>(rng() % q);
    const Word u(q, a), v(q, b);
    EXPECT_EQ(sigma_distance(u, v, k),
              hamming_distance(phi_inv(u, k), phi_inv(v, k)));
  }
}

}  // namespace
}  // namespace dupcode
