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


#include "dupcode/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "dupcode/error.hpp"
#include "dupcode/transform.hpp"

namespace dupcode {

namespace {

void check(unsigned q, std::size_t k) {
  (void)Alphabet(q);
  if (k < 1) throw ParameterError("k must be >= 1");
}

BigInt pow_big(unsigned base, std::size_t e) {
  BigInt out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

double log_q(const BigInt& v, unsigned q) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  return static_cast<double>(log(Float(v)) / log(Float(q)));
}

}  // namespace

BigInt rll_count(unsigned q, std::size_t k, std::size_t m) {
  check(q, k);
  std::vector<BigInt> state(k, 0);
  state[0] = 1;
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<BigInt> next(k, 0);
    BigInt total = 0;
    for (std::size_t s = 0; s < k; ++s) {
      total += state[s];
      if (s + 1 < k) next[s + 1] += state[s];
    }
    next[0] += total * (q - 1);
    state = std::move(next);
  }
  BigInt sum = 0;
  for (const BigInt& v : state) sum += v;
  return sum;
}

BigInt irr_count(unsigned q, std::size_t k, std::size_t n) {
  check(q, k);
  if (n < k) throw ParameterError("irr_count needs n >= k");
  return pow_big(q, k) * rll_count(q, k, n - k);
}

BigInt big_M(unsigned q, std::size_t k, std::size_t n) {
  check(q, k);
  BigInt sum = 0;
  for (std::size_t i = 1; i * k <= n; ++i) sum += rll_count(q, k, n - i * k);
  return sum * pow_big(q, k);
}

BigRational gv_lower(unsigned q, std::size_t k, std::size_t n) {
  if (k < 2 || n < 2 * k) {
    throw ParameterError("gv_lower needs n >= 2k >= 4");
  }
  return BigRational(big_M(q, k, n), BigInt(4 * (n - k)));
}

BigRational psquared_lower(unsigned q, std::size_t k, std::size_t n) {
  if (k < 2 || n < k) throw ParameterError("psquared_lower needs n >= k >= 2");
  return BigRational(big_M(q, k, n), BigInt(2 * (k + 1) * (k + 1)));
}

VExact v_exact(const Word& x, std::size_t k, const ClosureOptions& options) {
  if (k < 2 || x.size() < 2 * k) {
    throw ParameterError("v_exact needs n >= 2k >= 4");
  }
  if (!is_irreducible(x, k)) throw ParameterError("v_exact needs x irreducible");
  ClosureOptions opts = options;
  opts.length_filter = x.size();
  const RootClosure c = noisy_root_closure(x, k, NoiseModel::kRestricted, opts);
  return {c.roots.size(), c.horizon, c.stabilized};
}

long v_bound(const Word& x, std::size_t k) {
  if (x.size() < k) throw ParameterError("v_bound needs |x| >= k");
  const long n = static_cast<long>(x.size()), q = x.q();
  const long wt = static_cast<long>(hamming_weight(phi(x, k).tail));
  return (n - static_cast<long>(k)) * (q - 1) - wt * (q - 2);
}

double redundancy(const BigInt& size, std::size_t n, unsigned q) {
  if (size < 1) throw ParameterError("code size must be >= 1");
  return static_cast<double>(n) - log_q(size, q);
}

double rate(const BigInt& size, std::size_t n, unsigned q) {
  if (size < 1) throw ParameterError("code size must be >= 1");
  if (n == 0) throw ParameterError("rate needs n >= 1");
  return log_q(size, q) / static_cast<double>(n);
}

double w_redundancy_bound(unsigned q, std::size_t k, std::size_t n) {
  check(q, k);
  return static_cast<double>(n) * 2.0 / static_cast<double>(k) *
         std::log(static_cast<double>(q) / (q - 1)) / std::log(q);
}

EccRateBounds ecc_rate_bound(unsigned q, std::size_t k) {
  check(q, k);
  const double lq = std::log(static_cast<double>(q));
  EccRateBounds out;
  out.lower = 1.0 - w_redundancy_bound(q, k, 1);
  out.upper = 1.0 - (q - 1) / lq / std::pow(static_cast<double>(q),
                                               static_cast<double>(k + 2));
  return out;
}

BoundReport bound_report(unsigned q, std::size_t k, std::size_t n) {
  check(q, k);
  if (n < k) throw ParameterError("bounds need n >= k");
  BoundReport r;
  r.q = q;
  r.k = k;
  r.n = n;
  for (std::size_t m = 0; m <= n; ++m) r.rll_counts.push_back(rll_count(q, k, m));
  r.irr_count = irr_count(q, k, n);
  r.M = big_M(q, k, n);
  if (k >= 2 && n >= 2 * k) r.gv_lower = gv_lower(q, k, n);
  if (k >= 2) r.psquared_lower = psquared_lower(q, k, n);
  r.rates["irr_rate"] = rate(r.irr_count, n, q);
  r.rates["irr_redundancy"] = redundancy(r.irr_count, n, q);
  r.rates["w_redundancy_bound"] = w_redundancy_bound(q, k, n);
  const EccRateBounds e = ecc_rate_bound(q, k);
  r.rates["ecc_rate_lower"] = e.lower;
  r.rates["ecc_rate_upper"] = e.upper;
  return r;
}

std::string to_decimal(const BigRational& value, unsigned digits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(value), den = denominator(value);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  BigInt scale = pow_big(10, digits);
  BigInt scaled = num * scale / den;
  std::string whole = BigInt(scaled / scale).str();
  if (digits == 0) return sign + whole;
  std::string frac = BigInt(scaled % scale).str();
  frac.insert(0, digits - frac.size(), '0');
  return sign + whole + "." + frac;
}

}  // namespace dupcode
