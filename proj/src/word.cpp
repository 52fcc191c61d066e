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

#include "dupcode/word.hpp"

#include <algorithm>
#include <charconv>

#include "dupcode/error.hpp"

namespace dupcode {

namespace {

void check_q(unsigned q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw ParameterError("alphabet size must satisfy 2 <= q <= 65536, got " +
                         std::to_string(q));
  }
}

}  // namespace

Alphabet::Alphabet(unsigned q) : q_(q) { check_q(q); }

Word::Word(unsigned q) : q_(q) { check_q(q); }

Word::Word(unsigned q, std::vector<Symbol> symbols)
    : q_(q), symbols_(std::move(symbols)) {
  check_q(q);
  for (Symbol s : symbols_) {
    if (s >= q) {
      throw ParameterError("symbol " + std::to_string(s) +
                           " out of range for q=" + std::to_string(q));
    }
  }
}

Word::Word(unsigned q, std::initializer_list<Symbol> symbols)
    : Word(q, std::vector<Symbol>(symbols)) {}

Word Word::unchecked(unsigned q, std::vector<Symbol> symbols) noexcept {
  Word w;
  w.q_ = q;
  w.symbols_ = std::move(symbols);
  return w;
}

Word Word::zeros(unsigned q, std::size_t n) { return constant(q, n, 0); }

Word Word::constant(unsigned q, std::size_t n, Symbol value) {
  return Word(q, std::vector<Symbol>(n, value));
}

Word Word::parse(std::string_view text, unsigned q) {
  check_q(q);
  std::vector<Symbol> out;
  if (q <= 10) {
    out.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParameterError(std::string("invalid symbol character '") + c +
                             "'");
      }
      out.push_back(static_cast<Symbol>(c - '0'));
    }
  } else if (!text.empty()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view field = text.substr(start, end - start);
      unsigned value = 0;
      auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw ParameterError("invalid symbol field '" + std::string(field) +
                             "'");
      }
      if (value >= q) {
        throw ParameterError("symbol " + std::to_string(value) +
                             " out of range for q=" + std::to_string(q));
      }
      out.push_back(static_cast<Symbol>(value));
      start = end + 1;
    }
  }
  return Word(q, std::move(out));
}

std::string Word::str() const {
  std::string out;
  if (q_ <= 10) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Symbol Word::at(std::size_t position) const {
  if (position < 1 || position > symbols_.size()) {
    throw ParameterError("position " + std::to_string(position) +
                         " out of range 1.." + std::to_string(symbols_.size()));
  }
  return symbols_[position - 1];
}

Word Word::slice(std::size_t offset, std::size_t count) const {
  if (offset > symbols_.size() || count > symbols_.size() - offset) {
    throw ParameterError("slice out of range");
  }
  return unchecked(q_, std::vector<Symbol>(symbols_.begin() + offset,
                                           symbols_.begin() + offset + count));
}

Word Word::concat(const Word& other) const {
  require_same_alphabet(*this, other);
  std::vector<Symbol> out;
  out.reserve(symbols_.size() + other.size());
  out.insert(out.end(), symbols_.begin(), symbols_.end());
  out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
  return unchecked(q_, std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over (q, symbols).
  std::uint64_t h = 1469598103934665603ull ^ w.q();
  for (Symbol s : w.symbols()) {
    h ^= s + 1u;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (u.q() != v.q()) {
    throw ParameterError("alphabet mismatch: q=" + std::to_string(u.q()) +
                         " vs q=" + std::to_string(v.q()));
  }
}

std::size_t count_symbol(const Word& u, Symbol a) {
  if (a >= u.q()) throw ParameterError("symbol out of range");
  return static_cast<std::size_t>(
      std::count(u.symbols().begin(), u.symbols().end(), a));
}

std::size_t hamming_weight(const Word& u) {
  return u.size() - count_symbol(u, 0);
}

std::size_t hamming_distance(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  if (u.size() != v.size()) {
    throw ParameterError("hamming distance needs equal lengths, got " +
                         std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

Word add_scaled_unit(const Word& u, std::size_t i, Symbol a) {
  if (i < 1 || i > u.size()) {
    throw ParameterError("position " + std::to_string(i) + " out of range 1.." +
                         std::to_string(u.size()));
  }
  if (a >= u.q()) throw ParameterError("scale out of range");
  std::vector<Symbol> out = u.vec();
  out[i - 1] = Alphabet(u.q()).add(out[i - 1], a);
  return Word::unchecked(u.q(), std::move(out));
}

BlockView blocks(const Word& z, std::size_t k) {
  if (k < 1) throw ParameterError("block length must be >= 1");
  BlockView view{z, k, {}};
  for (std::size_t off = 0; off < z.size(); off += k) {
    view.blocks.push_back(z.slice(off, std::min(k, z.size() - off)));
  }
  return view;
}

}  // namespace dupcode
