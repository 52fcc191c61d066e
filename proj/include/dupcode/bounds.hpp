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


#ifndef DUPCODE_BOUNDS_HPP
#define DUPCODE_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dupcode/channel.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Words of length m over Z_q with no 0^k substring. Tracks the trailing
/// zero-run length (states 0..k-1).
BigInt rll_count(unsigned q, std::size_t k, std::size_t m);

/// Irreducible words of length n: q^k * rll_count(n-k).
BigInt irr_count(unsigned q, std::size_t k, std::size_t n);

/// Number of irreducible words with a duplication descendant of length n:
/// sum over 1 <= i <= n/k of q^k * rll_count(n - ik).
BigInt big_M(unsigned q, std::size_t k, std::size_t n);

/// M / (4(n-k)). Requires n >= 2k >= 4.
BigRational gv_lower(unsigned q, std::size_t k, std::size_t n);
/// M / (2(k+1)^2). Requires n >= k >= 2.
BigRational psquared_lower(unsigned q, std::size_t k, std::size_t n);

struct VExact {
  std::size_t count = 0;
  std::size_t horizon = 0;
  bool stabilized = false;
};

/// |rt(D^{*(<=1)}(x)) cap Sigma^n| with n = |x|, from the restricted root
/// closure. `stabilized` is false if the horizon cap was hit while the set
/// was still growing.
VExact v_exact(const Word& x, std::size_t k, const ClosureOptions& options = {});

/// (n-k)(q-1) - wt(tail(phi(x)))(q-2).
long v_bound(const Word& x, std::size_t k);

/// n - log_q(size).
double redundancy(const BigInt& size, std::size_t n, unsigned q);
/// log_q(size) / n.
double rate(const BigInt& size, std::size_t n, unsigned q);

/// n * (2/k) * log_q(q/(q-1)).
double w_redundancy_bound(unsigned q, std::size_t k, std::size_t n);

struct EccRateBounds {
  /// 1 - (2/k) log_q(q/(q-1)), the achievable rate without o(1) terms.
  double lower = 0;
  /// 1 - (q-1) log_q(e) / q^(k+2), the upper bound without o(1) terms.
  double upper = 0;
};
EccRateBounds ecc_rate_bound(unsigned q, std::size_t k);

struct BoundReport {
  unsigned q = 2;
  std::size_t k = 1;
  std::size_t n = 1;
  /// Index m holds rll_count(q, k, m) for m = 0..n.
  std::vector<BigInt> rll_counts;
  BigInt irr_count;
  BigInt M;
  /// Absent outside the domain of the respective bound.
  std::optional<BigRational> gv_lower;
  std::optional<BigRational> psquared_lower;
  std::map<std::string, double> rates;
};

BoundReport bound_report(unsigned q, std::size_t k, std::size_t n);

/// Decimal rendering with `digits` fractional digits, rounded toward zero.
std::string to_decimal(const BigRational& value, unsigned digits = 6);

}  // namespace dupcode

#endif  // DUPCODE_BOUNDS_HPP
