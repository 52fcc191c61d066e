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


#ifndef DUPCODE_CORRECT_HPP
#define DUPCODE_CORRECT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dupcode/channel.hpp"
#include "dupcode/detect.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(unsigned q);

/// Shortened Hamming code over the prime field F_q. Column i is the
/// parity-check column of symbol i.
struct HammingCode {
  unsigned q = 2;
  std::size_t r = 1;
  std::size_t n = 0;
  std::vector<std::vector<Symbol>> columns;

  /// H x over F_q.
  std::vector<Symbol> syndrome(const Word& x) const;
  /// Syndrome read as a base-q integer, first component most significant.
  std::uint64_t coset_index(const Word& x) const;
  std::uint64_t coset_count() const;
};

/// Smallest r with n(q-1) + 1 <= q^r.
std::size_t hamming_redundancy(unsigned q, std::size_t n);

/// Columns are the lexicographically first n normalized vectors of F_q^r
/// (first nonzero entry equal to 1).
HammingCode shortened_hamming(unsigned q, std::size_t n);

/// x in C_{i,j} and phi(x) in coset `ell` of the length-n shortened
/// Hamming code.
bool cijl_member(const Word& x, const AuxParams& params, std::uint64_t ell);

/// C_{i,j,ell}, sorted.
std::vector<Word> enumerate_cijl(const AuxParams& params, std::uint64_t ell,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Every length-k window of z has Hamming weight at least 2. Requires
/// |z| >= k.
bool is_W(const Word& z, std::size_t k);

/// y in D^{*,<=1}(x): y arises from x by exact k-duplications and at most
/// one substitution at any stage. Polynomial; only duplications that land
/// between the two transform coordinates touched by the substitution have
/// to precede it, all others commute past it.
bool reachable_with_one_substitution(const Word& x, const Word& y,
                                     std::size_t k);

/// Length-n words whose 1-based positions j = 0 or k-1 (mod k) are
/// nonzero and whose other positions are free. Every k-window holds one
/// position of each class, so the set lies in W. Words are numbered in
/// lexicographic order by a mixed-radix index.
class WBlockCode {
 public:
  WBlockCode(unsigned q, std::size_t k, std::size_t n);

  unsigned q() const { return q_; }
  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  /// Whether 0-based position i must be nonzero.
  bool forced(std::size_t i) const;
  std::size_t forced_count() const { return forced_count_; }
  /// Number of words, (q-1)^forced * q^(n-forced).
  const BigInt& size() const { return size_; }
  /// floor(log_q size()).
  std::size_t payload_length() const { return payload_length_; }

  Word encode_index(const BigInt& index) const;
  std::optional<BigInt> decode_index(const Word& z) const;
  /// payload: exactly payload_length() symbols, read base q.
  Word encode(const Word& payload) const;
  /// nullopt unless z is the image of some payload.
  std::optional<Word> decode(const Word& z) const;

 private:
  unsigned q_;
  std::size_t k_, n_;
  std::size_t forced_count_ = 0;
  BigInt size_;
  BigInt payload_space_;
  std::size_t payload_length_ = 0;
};

/// Encodes into the shortest block code whose payload length equals
/// |payload|.
Word w_block_encode(const Word& payload, std::size_t k);
/// Inverse of w_block_encode; throws ParameterError on a non-image word.
Word w_block_decode(const Word& z, std::size_t k);

// ---------------------------------------------------------------------------
// Single-substitution-correcting duplication code.

enum class TailRole : std::uint8_t { kInfo, kParity, kSpare, kCushion };

/// Layout of the 1S-correcting code. The symbol word is phi_inv(1^k, t)
/// where t = info blocks followed by parity blocks, each of length k. A
/// parity block holds k-2 slots and then two cushion 1's; the first r
/// slots overall are parity coordinates and the rest are spare 1's.
struct EccCodeSpec {
  unsigned q = 2;
  std::size_t k = 3;
  std::size_t r = 2;
  /// (q^r - 1)/(q - 1).
  std::size_t N = 3;
  std::size_t info_blocks = 0;
  std::size_t parity_blocks = 0;
  std::size_t n = 0;
  std::vector<TailRole> tail_roles;
  /// 0-based tail indices of the parity coordinates.
  std::vector<std::size_t> parity_coords;
  /// Per symbol position, its column of the Hamming part of the check
  /// matrix.
  std::vector<std::vector<Symbol>> hamming_columns;
};

enum class DedupOrder { kLeftmost, kRandom };

struct EccDecodeOptions {
  DedupOrder order = DedupOrder::kLeftmost;
  std::uint64_t seed = 0;
};

struct EccDecodeReport {
  bool ok = false;
  std::optional<Word> payload;
  std::size_t dedup_steps = 0;
  /// 1-based symbol position fixed by syndrome decoding.
  std::optional<std::size_t> corrected_position;
};

class EccCode {
 public:
  /// Largest layout (most info blocks) whose check matrix has nonzero,
  /// pairwise independent columns and an invertible parity system.
  /// Requires q prime, k >= 3, r >= 2.
  static EccCode build(unsigned q, std::size_t k, std::size_t r);

  const EccCodeSpec& spec() const { return spec_; }
  std::size_t n() const { return spec_.n; }
  std::size_t payload_length() const { return info_.payload_length(); }
  /// Number of codewords, q^payload_length().
  BigInt size() const;

  Word encode(const Word& payload) const;
  EccDecodeReport decode(const Word& y,
                         const EccDecodeOptions& options = {}) const;
  bool is_codeword(const Word& x) const;
  /// Payload carried by a codeword, or nullopt.
  std::optional<Word> payload_of(const Word& x) const;
  /// Every codeword in payload order. Throws CapExceeded above `cap`.
  std::vector<Word> codewords(std::size_t cap = kDefaultEnumerationCap) const;

 private:
  EccCode(EccCodeSpec spec, WBlockCode info);
  bool prepare(std::uint64_t attempt);
  std::vector<Symbol> residual(const std::vector<Symbol>& x) const;
  struct Fix {
    Word codeword;
    Word payload;
    std::optional<std::size_t> position;
  };
  std::optional<Fix> correct(const std::vector<Symbol>& x) const;

  EccCodeSpec spec_;
  WBlockCode info_;
  /// Tail coordinates fixed to 1 and checked by structural rows.
  std::vector<std::size_t> fixed_coords_;
  std::vector<std::vector<Symbol>> parity_inverse_;
  std::unordered_map<std::string, std::pair<std::size_t, Symbol>> table_;
};

Word ecc_encode(const Word& payload, const EccCode& code);
EccDecodeReport ecc_decode(const Word& y, const EccCode& code,
                           const EccDecodeOptions& options = {});

}  // namespace dupcode

#endif  // DUPCODE_CORRECT_HPP
