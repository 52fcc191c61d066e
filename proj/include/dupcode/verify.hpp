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


#ifndef DUPCODE_VERIFY_HPP
#define DUPCODE_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dupcode/channel.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

enum class VerifyProperty { kDuplication, kOneNoisyDup, kOneSubDetect, kOneSubCorrect };
enum class VerifyStatus { kCertified, kCounterexampleFound, kHorizonInconclusive };

/// "dup", "1nd", "1s-detect", "1s-correct".
std::string_view to_string(VerifyProperty p);
VerifyProperty parse_property(std::string_view name);
/// "certified", "counterexample", "inconclusive".
std::string_view to_string(VerifyStatus s);

/// Two codewords and a word both reach (kind "collision"), or a channel
/// output of c1 that the decoder maps elsewhere (kind "decode"; c2 is the
/// wrong decision, absent on a missed exact-duplication decode).
struct Witness {
  std::string kind = "collision";
  Word c1;
  std::optional<Word> c2;
  Word collision;
  EventTrace from_c1;
  std::optional<EventTrace> from_c2;

  /// The traces start at the codewords and end at `collision`.
  bool replays(std::size_t k) const;
};

struct VerifyOptions {
  /// Minimum closure horizon.
  std::size_t t_max = 2;
  /// Horizon at which a still-growing closure is given up on.
  std::size_t t_cap = 6;
  std::size_t cap = kDefaultEnumerationCap;
};

struct VerifyReport {
  VerifyProperty property = VerifyProperty::kDuplication;
  unsigned q = 2;
  std::size_t k = 1;
  std::size_t n = 0;
  std::size_t code_size = 0;
  /// Largest closure horizon explored (0 where no closure is needed).
  std::size_t horizon = 0;
  /// Ordered codeword pairs covered by the root comparison.
  std::size_t pairs_checked = 0;
  /// Roots (or decoded channel outputs) examined.
  std::size_t words_checked = 0;
  VerifyStatus status = VerifyStatus::kCertified;
  std::optional<Witness> witness;
};

/// Decision for a channel output: a codeword, or nullopt for a detected
/// error.
using Decoder = std::function<std::optional<Word>(const Word&)>;

/// Roots pairwise distinct. Exact, by the common-descendant criterion.
VerifyReport verify_duplication_code(const std::vector<Word>& code,
                                     std::size_t k);

/// rt(c2) != rt(c1) and rt(c2) outside the restricted single-noise root
/// closure of c1, for all ordered pairs.
VerifyReport verify_1nd(const std::vector<Word>& code, std::size_t k,
                        const VerifyOptions& options = {});

/// As verify_1nd with the unrestricted closure.
VerifyReport verify_1s_detect(const std::vector<Word>& code, std::size_t k,
                              const VerifyOptions& options = {});

/// Root sets of D^{*,<=1}(c) pairwise disjoint. Both cones are closed under
/// exact duplication, so they meet iff their root sets do. With a decoder,
/// also checks every output with at most t_max duplications and one
/// substitution decodes to its origin.
VerifyReport verify_1s_correct(const std::vector<Word>& code, std::size_t k,
                               const VerifyOptions& options = {},
                               const Decoder& decoder = {});

/// Channel outputs of x with at most t_max duplications (counting a noisy
/// one) and at most one noise event, each with a trace. Deduplicated.
struct TracedWord {
  Word word;
  EventTrace trace;
  bool noisy = false;
};
std::vector<TracedWord> traced_cone(const Word& x, std::size_t k,
                                    std::size_t t_max, NoiseModel model,
                                    std::size_t cap = kDefaultEnumerationCap);

struct SweepReport {
  std::size_t checked = 0;
  /// Decoded to a different codeword.
  std::size_t wrong = 0;
  /// Noise-free output not decoded to its origin.
  std::size_t missed = 0;
  /// Noisy output reported as an error (allowed for detecting codes).
  std::size_t detected = 0;
  std::optional<Witness> witness;
};

/// With `must_decode`, a detected error on a noisy output is a failure too
/// (correcting codes); otherwise only wrong or missed decodes are.
SweepReport decoder_sweep(const std::vector<Word>& code, std::size_t k,
                          std::size_t t_max, NoiseModel model,
                          const Decoder& decoder, bool must_decode = false,
                          std::size_t cap = kDefaultEnumerationCap);

}  // namespace dupcode

#endif  // DUPCODE_VERIFY_HPP
