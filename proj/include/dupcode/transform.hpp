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

#ifndef DUPCODE_TRANSFORM_HPP
#define DUPCODE_TRANSFORM_HPP

#include <cstddef>
#include <string>

#include "dupcode/word.hpp"

namespace dupcode {

/// The k-discrete-derivative of a word x with |x| >= k:
///   head = x_1 .. x_k
///   tail = x_{k+1} .. x_n - x_1 .. x_{n-k}   (entrywise mod q)
///
/// A length-k tandem duplication of x leaves the head alone and inserts 0^k
/// into the tail, which is what makes roots cheap to compute here.
struct TransformPair {
  Word head;
  Word tail;
  std::size_t k = 1;

  unsigned q() const noexcept { return head.q(); }
  /// head followed by tail, i.e. the full transform word.
  Word joined() const { return head.concat(tail); }
  /// "head,tail", the conventional display form.
  std::string str() const { return head.str() + "," + tail.str(); }

  friend bool operator==(const TransformPair&, const TransformPair&) = default;
};

TransformPair phi(const Word& x, std::size_t k);
Word phi_inv(const TransformPair& p);

/// Inverse transform of a full transform word (head and tail concatenated).
Word phi_inv(const Word& joined, std::size_t k);

/// Every maximal run of m zeros becomes a run of m mod k zeros.
Word mu(const Word& z, std::size_t k);

/// The duplication root: phi_inv(head, mu(tail)).
Word root(const Word& x, std::size_t k);

/// True iff z has no 0^k substring.
bool is_rll(const Word& z, std::size_t k);

/// True iff x equals its own root.
bool is_irreducible(const Word& x, std::size_t k);

/// epsilon_i = phi(e_i) as a length-n word: e_i - e_{i+k} when i <= n-k,
/// otherwise e_i. i is 1-based.
Word epsilon_word(std::size_t i, std::size_t n, std::size_t k, unsigned q);

/// Coefficients a_1..a_n with v - u = sum a_i * epsilon_i, from the sweep
/// a_i = (v_i - u_i) + a_{i-k}.
Word sigma_coefficients(const Word& u, const Word& v, std::size_t k);

/// Number of nonzero coefficients in sigma_coefficients(u, v, k).
std::size_t sigma_distance(const Word& u, const Word& v, std::size_t k);

namespace detail {

// Raw-buffer kernels used on enumeration hot paths. `out` is overwritten.
void root_into(const std::vector<Symbol>& x, std::size_t k, unsigned q,
               std::vector<Symbol>& out);
std::size_t root_length(const std::vector<Symbol>& x, std::size_t k,
                        unsigned q);

}  // namespace detail

}  // namespace dupcode

#endif  // DUPCODE_TRANSFORM_HPP
