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


#ifndef DUPCODE_DETECT_HPP
#define DUPCODE_DETECT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "dupcode/channel.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

/// Smallest odd integer larger than k-1.
unsigned p_of_k(std::size_t k);

/// Z_l(z): zeros in the blocks B_t(z) whose 1-based index t is congruent
/// to l mod 4.
std::size_t z_sum(const Word& z, unsigned ell, std::size_t k);

struct AuxResidues {
  unsigned i = 0;
  unsigned j = 0;
  friend bool operator==(const AuxResidues&, const AuxResidues&) = default;
};

/// (Z_0 + 2 Z_2 mod p, Z_1 + 2 Z_3 mod p).
AuxResidues aux_residues(const Word& z, std::size_t k);

struct AuxParams {
  unsigned q = 2;
  std::size_t k = 2;
  std::size_t n = 2;
  unsigned i = 0;
  unsigned j = 0;

  unsigned p() const { return p_of_k(k); }
  /// Throws ParameterError unless q >= 2, k >= 1 and i, j < p.
  void validate() const;
};

/// Membership in the auxiliary code; z is the tested string itself.
bool aux_member(const Word& z, const AuxParams& params);

/// Membership in C_{i,j}: tail(phi(x)) is RLL and lies in the auxiliary
/// code. |x| must equal params.n.
bool cij_member(const Word& x, const AuxParams& params);

/// All words of length m over Z_q without 0^k, sorted.
std::vector<Word> enumerate_rll(unsigned q, std::size_t k, std::size_t m,
                                std::size_t cap = kDefaultEnumerationCap);

/// Irr(n), sorted.
std::vector<Word> enumerate_irreducible(unsigned q, std::size_t k,
                                        std::size_t n,
                                        std::size_t cap =
                                            kDefaultEnumerationCap);

/// How Z_l is read when computing zeta_l for the constructive subcode.
enum class ZetaReading {
  /// Blocks of the symbol-domain word phi_inv(0^k y).
  kSymbolDomain,
  /// Blocks of the transform-domain word 0^k y.
  kTransformDomain,
  /// Blocks of y numbered by where they land in the codeword tail
  /// B_0 B_1 B_2 B_3 y, i.e. zeta_l = Z_{l+1 mod 4}(y).
  kTailAligned,
};

std::string_view to_string(ZetaReading reading);
ZetaReading parse_zeta_reading(std::string_view name);

/// The reading under which every constructed word lands in C_{0,0}.
inline constexpr ZetaReading kDefaultZetaReading = ZetaReading::kTailAligned;

/// beta_0 .. beta_3 for y.
std::array<std::size_t, 4> construct3_betas(const Word& y, std::size_t k,
                                            ZetaReading reading =
                                                kDefaultZetaReading);

/// phi_inv(B B_0 B_1 B_2 B_3 y) with B_i = 0^{beta_i} 1^{k - beta_i}.
/// Requires k >= 2, q + k >= 4, |B| = k and y RLL.
Word construct3_encode(const Word& B, const Word& y, std::size_t k,
                       ZetaReading reading = kDefaultZetaReading);

/// Splits a constructed word back into (B, y).
std::pair<Word, Word> construct3_split(const Word& c, std::size_t k);

enum class DetectKind { kIrr, kAux, kCij, kC3 };

std::string_view to_string(DetectKind kind);

struct DetectCodeSpec {
  DetectKind kind = DetectKind::kCij;
  AuxParams params;
  ZetaReading reading = kDefaultZetaReading;
};

/// Exact codeword set, sorted. kAux enumerates C^aux_{i,j}(rll(n)).
std::vector<Word> enumerate_code(const DetectCodeSpec& spec,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Membership predicate matching enumerate_code.
bool detect_member(const Word& x, const DetectCodeSpec& spec);

/// Either a recovered codeword or a detected error.
struct DecodeOutcome {
  std::optional<Word> codeword;

  bool detected_error() const { return !codeword.has_value(); }
  friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;
};

/// Root-matching decoder over a hash index of irreducible codewords of one
/// length.
class DetectDecoder {
 public:
  DetectDecoder(const std::vector<Word>& code, std::size_t k);

  DecodeOutcome decode(const Word& y) const;
  bool contains(const Word& c) const { return index_.count(c) > 0; }
  std::size_t size() const { return index_.size(); }
  std::size_t n() const { return n_; }

 private:
  std::size_t k_;
  std::size_t n_ = 0;
  std::unordered_set<Word> index_;
};

}  // namespace dupcode

#endif  // DUPCODE_DETECT_HPP
