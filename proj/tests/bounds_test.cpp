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

#include <set>

#include "dupcode/bounds.hpp"
#include "dupcode/correct.hpp"
#include "dupcode/detect.hpp"
#include "dupcode/error.hpp"
#include "dupcode/transform.hpp"
#include "test_util.hpp"

namespace dupcode {
namespace {

using testing::w;

TEST(RllTest, SmallValues) {
  EXPECT_EQ(rll_count(2, 2, 2), 3);
  EXPECT_EQ(rll_count(3, 3, 0), 1);
  EXPECT_EQ(rll_count(2, 1, 5), 1);  // only 11111
  EXPECT_EQ(rll_count(2, 2, 10), 144);  // Fibonacci
}

TEST(RllTest, MatchesEnumeration) {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t m = 0; m <= (q == 2 ? 12u : 8u); ++m) {
        std::size_t count = 0;
        testing::for_each_word(q, m, [&](const Word& z) { count += is_rll(z, k); });
        EXPECT_EQ(rll_count(q, k, m), count) << q << " " << k << " " << m;
      }
    }
  }
}

TEST(RllTest, BlockMonotonicity) {
  for (unsigned q : {2u, 3u, 4u}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t m = k; m <= 30; ++m) {
        BigInt floor = rll_count(q, k, m - k) * (q - 1);
        for (std::size_t i = 1; i < k; ++i) floor *= q;
        EXPECT_GE(rll_count(q, k, m), floor);
      }
    }
  }
}

TEST(IrrTest, MatchesEnumeration) {
  EXPECT_EQ(irr_count(2, 2, 4), 12);
  EXPECT_EQ(irr_count(2, 1, 2), 2);
  EXPECT_THROW(irr_count(2, 3, 2), ParameterError);
  for (unsigned q : {2u, 3u}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t n = k; n <= (q == 2 ? 10u : 7u); ++n) {
        std::size_t count = 0;
        testing::for_each_word(q, n, [&](const Word& x) {
          count += root(x, k) == x;
        });
        EXPECT_EQ(irr_count(q, k, n), count);
      }
    }
  }
}

TEST(MTest, MatchesReachableRoots) {
  EXPECT_EQ(big_M(2, 2, 4), 16);
  for (unsigned q : {2u, 3u}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t n = k; n <= (q == 2 ? 10u : 7u); ++n) {
        std::set<Word> roots;
        testing::for_each_word(q, n, [&](const Word& y) {
          roots.insert(root(y, k));
        });
        EXPECT_EQ(big_M(q, k, n), roots.size()) << q << k << n;
        if (q + k >= 4) EXPECT_GE(2 * irr_count(q, k, n), big_M(q, k, n));
      }
    }
  }
}

TEST(LowerBoundTest, Values) {
  EXPECT_EQ(gv_lower(2, 2, 4), BigRational(16, 8));
  EXPECT_EQ(psquared_lower(2, 2, 4), BigRational(16, 18));
  EXPECT_THROW(gv_lower(2, 2, 3), ParameterError);
  EXPECT_THROW(gv_lower(2, 1, 4), ParameterError);
  EXPECT_THROW(psquared_lower(2, 1, 4), ParameterError);
  EXPECT_EQ(to_decimal(BigRational(16, 18), 4), "0.8888");
  EXPECT_EQ(to_decimal(BigRational(5, 2), 0), "2");
  EXPECT_EQ(to_decimal(BigRational(-1, 4), 3), "-0.250");
}

TEST(LowerBoundTest, ConstructedFamilyMeetsPSquaredBound) {
  for (auto [q, k, n] : {std::tuple{2u, 2u, 8u}, {2u, 3u, 9u}, {3u, 2u, 6u},
                         {3u, 3u, 7u}}) {
    std::size_t best = 0;
    const unsigned p = p_of_k(k);
    for (unsigned i = 0; i < p; ++i) {
      for (unsigned j = 0; j < p; ++j) {
        best = std::max(best,
                        enumerate_code({DetectKind::kCij, {q, k, n, i, j}}).size());
      }
    }
    EXPECT_GE(BigRational(best), psquared_lower(q, k, n));
  }
}

TEST(VTest, ExactWithinBoundAndMean) {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t k : {2u, 3u}) {
      for (std::size_t n = 2 * k; n <= 2 * k + 2; ++n) {
        std::size_t total = 0, count = 0;
        for (const Word& x : enumerate_irreducible(q, k, n)) {
          const VExact v = v_exact(x, k);
          ASSERT_TRUE(v.stabilized) << x.str();
          EXPECT_GE(v.count, 1u);
          EXPECT_LE(static_cast<long>(v.count), v_bound(x, k)) << x.str();
          total += v.count;
          ++count;
        }
        // mean <= 2(n-k)(q-1)/q, cross-multiplied.
        EXPECT_LE(total * q, 2 * (n - k) * (q - 1) * count)
            << q << " " << k << " " << n;
      }
    }
  }
}

TEST(VTest, BoundFormula) {
  // tail of 1012121 (k=3) is 1112, weight 4.
  EXPECT_EQ(v_bound(w(3, "1012121"), 3), 4 * 2 - 4 * 1);
  EXPECT_EQ(v_bound(w(2, "1010"), 2), 2);
  EXPECT_THROW(v_exact(w(2, "1111"), 2), ParameterError);
}

TEST(RateTest, Identities) {
  BigInt full = 1;
  for (int i = 0; i < 10; ++i) full *= 3;
  EXPECT_DOUBLE_EQ(rate(full, 10, 3), 1.0);
  EXPECT_NEAR(redundancy(full, 10, 3), 0.0, 1e-12);
  const BigInt size = 12345;
  EXPECT_NEAR(redundancy(size, 20, 2), 20 * (1 - rate(size, 20, 2)), 1e-9);
  EXPECT_THROW(rate(0, 3, 2), ParameterError);
  const EccRateBounds e = ecc_rate_bound(2, 3);
  EXPECT_NEAR(e.lower, 1 - 2.0 / 3, 1e-12);
  EXPECT_LT(e.lower, e.upper);
  EXPECT_LT(e.upper, 1.0);
}

TEST(RateTest, WBlockRedundancyIsExact) {
  for (unsigned q : {2u, 3u, 5u}) {
    for (std::size_t k = 3; k <= 6; ++k) {
      for (std::size_t n = k; n <= 5 * k; ++n) {
        const WBlockCode c(q, k, n);
        // redundancy = count * log_q(q/(q-1)) exactly:
        // |C| * q^count == (q-1)^count * q^n.
        BigInt lhs = c.size(), rhs = 1;
        for (std::size_t i = 0; i < c.forced_count(); ++i) {
          lhs *= q;
          rhs *= q - 1;
        }
        for (std::size_t i = 0; i < n; ++i) rhs *= q;
        ASSERT_EQ(lhs, rhs);
        if (n % k == 0) EXPECT_EQ(c.forced_count() * k, 2 * n);
        EXPECT_LE(c.forced_count() * k, 2 * n);
        EXPECT_NEAR(redundancy(c.size(), n, q),
                    c.forced_count() * std::log(q / (q - 1.0)) / std::log(q),
                    1e-9);
        EXPECT_LE(redundancy(c.size(), n, q),
                  w_redundancy_bound(q, k, n) + 1e-9);
      }
    }
  }
}

TEST(ReportTest, Fields) {
  const BoundReport r = bound_report(2, 2, 6);
  ASSERT_EQ(r.rll_counts.size(), 7u);
  EXPECT_EQ(r.rll_counts[2], 3);
  EXPECT_EQ(r.irr_count, irr_count(2, 2, 6));
  EXPECT_EQ(r.M, big_M(2, 2, 6));
  ASSERT_TRUE(r.gv_lower.has_value());
  EXPECT_EQ(*r.gv_lower, gv_lower(2, 2, 6));
  EXPECT_TRUE(r.rates.count("ecc_rate_lower"));
  EXPECT_FALSE(bound_report(2, 1, 4).psquared_lower.has_value());
}

}  // namespace
}  // namespace dupcode
