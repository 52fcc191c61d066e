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

#ifndef DUPCODE_WORD_HPP
#define DUPCODE_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dupcode {

using Symbol = std::uint16_t;

/// Largest supported alphabet size.
inline constexpr unsigned kMaxAlphabet = 1u << 16;

/// The alphabet Z_q. Only carries its size; arithmetic is mod q.
class Alphabet {
 public:
  explicit Alphabet(unsigned q);

  unsigned size() const noexcept { return q_; }

  Symbol add(Symbol a, Symbol b) const noexcept {
    return static_cast<Symbol>((static_cast<unsigned>(a) + b) % q_);
  }
  Symbol sub(Symbol a, Symbol b) const noexcept {
    return static_cast<Symbol>((static_cast<unsigned>(a) + q_ - b) % q_);
  }
  Symbol mul(Symbol a, Symbol b) const noexcept {
    return static_cast<Symbol>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  Symbol neg(Symbol a) const noexcept {
    return static_cast<Symbol>((q_ - a) % q_);
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  unsigned q_;
};

/// A finite string over Z_q. Values are immutable once built; every symbol
/// is checked to lie in [0, q).
///
/// Indexing with operator[] is 0-based. Public operations that take a
/// "position" use 1-based positions.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned q);
  Word(unsigned q, std::vector<Symbol> symbols);
  Word(unsigned q, std::initializer_list<Symbol> symbols);

  /// Skips the range check. For callers that built `symbols` with mod-q
  /// arithmetic already.
  static Word unchecked(unsigned q, std::vector<Symbol> symbols) noexcept;

  static Word zeros(unsigned q, std::size_t n);
  static Word constant(unsigned q, std::size_t n, Symbol value);

  /// Parses the textual form: a digit string when q <= 10, otherwise
  /// comma-separated decimal integers. Rejects out-of-range symbols.
  static Word parse(std::string_view text, unsigned q);
  std::string str() const;

  unsigned q() const noexcept { return q_; }
  Alphabet alphabet() const { return Alphabet(q_); }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t index) const noexcept { return symbols_[index]; }
  /// 1-based access.
  Symbol at(std::size_t position) const;

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const std::vector<Symbol>& vec() const noexcept { return symbols_; }

  /// Subword starting at 0-based `offset` of length `count`.
  Word slice(std::size_t offset, std::size_t count) const;
  Word concat(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  unsigned q_ = 2;
  std::vector<Symbol> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// |u|_a.
std::size_t count_symbol(const Word& u, Symbol a);

/// wt(u).
std::size_t hamming_weight(const Word& u);

/// d(u, v); throws ParameterError on length or alphabet mismatch.
std::size_t hamming_distance(const Word& u, const Word& v);

/// u + a * e_i, with i 1-based.
Word add_scaled_unit(const Word& u, std::size_t i, Symbol a);

/// Non-overlapping length-k blocks B_1 ... B_ceil(n/k); the last block is
/// shorter when k does not divide n.
struct BlockView {
  Word parent;
  std::size_t k = 1;
  std::vector<Word> blocks;
};

BlockView blocks(const Word& z, std::size_t k);

/// Throws ParameterError unless u and v share q.
void require_same_alphabet(const Word& u, const Word& v);

}  // namespace dupcode

template <>
struct std::hash<dupcode::Word> : dupcode::WordHash {};

#endif  // DUPCODE_WORD_HPP
