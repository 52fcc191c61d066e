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


#ifndef DUPCODE_TESTS_TEST_UTIL_HPP
#define DUPCODE_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "dupcode/word.hpp"

namespace dupcode::testing {

// Every word of length n over Z_q in lexicographic order.
inline std::vector<Word> all_words(unsigned q, std::size_t n) {
  std::vector<Word> out;
  std::vector<Symbol> s(n, 0);
  while (true) {
    out.push_back(Word::unchecked(q, s));
    std::size_t i = n;
    while (i > 0 && s[i - 1] == q - 1) s[--i] = 0;
    if (i == 0) break;
    ++s[i - 1];
  }
  return out;
}

// Calls f on every word of length n over Z_q without materializing them.
template <typename F>
void for_each_word(unsigned q, std::size_t n, F&& f) {
  std::vector<Symbol> s(n, 0);
  while (true) {
    f(Word::unchecked(q, s));
    std::size_t i = n;
    while (i > 0 && s[i - 1] == q - 1) s[--i] = 0;
    if (i == 0) break;
    ++s[i - 1];
  }
}

// Root by repeated removal of tandem repeats uu, |u| = k, chosen in random
// order. Independent of the transform-based implementation.
inline Word naive_root(const Word& x, std::size_t k, std::mt19937_64& rng) {
  std::vector<Symbol> s = x.vec();
  while (true) {
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i + 2 * k <= s.size(); ++i) {
      if (std::equal(s.begin() + i, s.begin() + i + k, s.begin() + i + k)) {
        starts.push_back(i);
      }
    }
    if (starts.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
    const std::size_t i = starts[pick(rng)];
    s.erase(s.begin() + i + k, s.begin() + i + 2 * k);
  }
  return Word::unchecked(x.q(), std::move(s));
}

inline Word naive_root(const Word& x, std::size_t k) {
  std::mt19937_64 rng(0);
  return naive_root(x, k, rng);
}

inline Word w(unsigned q, const char* text) { return Word::parse(text, q); }

}  // namespace dupcode::testing

#endif  // DUPCODE_TESTS_TEST_UTIL_HPP
