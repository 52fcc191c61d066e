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

#ifndef DUPCODE_CHANNEL_HPP
#define DUPCODE_CHANNEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dupcode/word.hpp"

namespace dupcode {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Exact tandem duplication. `pos` is the 0-based start of the template;
/// the copy lands right after it.
struct Duplication {
  std::size_t pos = 0;
  friend bool operator==(const Duplication&, const Duplication&) = default;
};

/// Duplication whose copy then has `value` added at 1-based `offset`
/// (1..k) inside the copy.
struct NoisyDuplication {
  std::size_t pos = 0;
  std::size_t offset = 1;
  Symbol value = 1;
  friend bool operator==(const NoisyDuplication&,
                         const NoisyDuplication&) = default;
};

/// Unrestricted substitution: adds `value` at 1-based symbol index `pos`.
struct Substitution {
  std::size_t pos = 1;
  Symbol value = 1;
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

using ChannelEvent = std::variant<Duplication, NoisyDuplication, Substitution>;

Word apply_event(const Word& x, const ChannelEvent& e, std::size_t k);

/// `DUP pos=1`, `NDUP pos=1 off=1 val=1`, `SUB pos=5 val=2`.
std::string format_event(const ChannelEvent& e);
ChannelEvent parse_event(std::string_view line);

struct EventTrace {
  Word origin;
  std::vector<ChannelEvent> events;

  /// Applies the events in order and returns the final word.
  Word replay(std::size_t k) const;
  /// One event per line, each terminated by '\n'.
  std::string str() const;
  static EventTrace parse(const Word& origin, std::string_view text);

  friend bool operator==(const EventTrace&, const EventTrace&) = default;
};

/// D^{t(p)}(x): t duplications of which exactly p (0 or 1) are noisy.
/// Sorted and deduplicated. Throws CapExceeded when any intermediate set
/// grows past `cap` words.
std::vector<Word> descendants_restricted(const Word& x, std::size_t k,
                                         std::size_t t, unsigned p,
                                         std::size_t cap =
                                             kDefaultEnumerationCap);

/// D^{t,p}(x): t duplications and p (0 or 1) unrestricted substitutions
/// interleaved at any stage.
std::vector<Word> descendants_unrestricted(const Word& x, std::size_t k,
                                           std::size_t t, unsigned p,
                                           std::size_t cap =
                                               kDefaultEnumerationCap);

/// rt(S), optionally keeping only roots of one length. Sorted, unique.
std::vector<Word> root_set(const std::vector<Word>& words, std::size_t k,
                           std::optional<std::size_t> length_filter = {});

/// All z' obtained from z by one k-switch: a length-L block v with
/// 1 <= L <= k-1 and v != 0^L trades places with the all-zero block of the
/// same length exactly k positions away (either direction).
std::vector<Word> k_switch_variants(const Word& z, std::size_t k);

bool differ_by_k_switch(const Word& a, const Word& b, std::size_t k);

/// Exact duplications taking x to y, or nullopt if y is not in D^*(x).
/// Blocks are inserted left to right.
std::optional<EventTrace> duplication_path(const Word& x, const Word& y,
                                           std::size_t k);

/// The shortest common exact-duplication descendant of a and b. Exists iff
/// root(a) == root(b).
std::optional<Word> common_descendant(const Word& a, const Word& b,
                                      std::size_t k);

// ---------------------------------------------------------------------------
// Substitution classifiers.

enum class RootEffect { kUnchanged, kLengthChanged, kAmbiguous };

/// Which branch of the noisy-duplication case analysis applied.
enum class NoisyRule {
  kLastBlock,   // substitution within the last k symbols
  kZeroWindow,  // the k-1 transform symbols after it are all zero
  kCase1a,      // ambiguous (C1)
  kCase1b,
  kCase1c,
  kCase2a,
  kCase2b,
  kCase2c,  // ambiguous (C2)
};

struct NoisyClassification {
  RootEffect effect = RootEffect::kUnchanged;
  NoisyRule rule = NoisyRule::kLastBlock;
  /// Sign of |rt(x')| - |rt(x)|.
  int length_sign = 0;
  /// Exact |rt(x')| - |rt(x)| where the case analysis pins it down.
  std::optional<long> length_delta;
};

std::string_view to_string(NoisyRule rule);
std::string_view to_string(RootEffect effect);

/// Closed-form classification of the substitution carried by a noisy
/// duplication applied to x (x is the word before the duplication).
/// Requires k >= 2.
NoisyClassification classify_noisy_substitution(const Word& x,
                                                const NoisyDuplication& e,
                                                std::size_t k);

enum class SubstitutionRegion { kHead, kTailOnly, kInterior };

/// What the unrestricted case analysis predicts for x + a*e_i.
enum class AmbiguityShape {
  /// The root length changes by `length_delta` != 0.
  kLengthChange,
  /// Same root length, and d(phi(rt x), phi(rt x')) <= distance_bound.
  kNearby,
  /// Same root length and the root tails differ by one k-switch.
  kKSwitch,
};

enum class LocalChange { kShrinks, kKeeps, kGrows };

struct SubstitutionPrediction {
  SubstitutionRegion region = SubstitutionRegion::kInterior;
  /// Appendix-style label, e.g. "I.1a", "II", "head", "tail".
  std::string rule;
  long length_delta = 0;
  AmbiguityShape shape = AmbiguityShape::kNearby;
  std::size_t distance_bound = 0;
  /// Case II only: effect left and right of the separating nonzero symbol.
  std::optional<LocalChange> left, right;
};

/// Closed-form prediction for an unrestricted substitution adding `a` at
/// 1-based symbol position `pos` of x. Requires k >= 2, a != 0.
SubstitutionPrediction classify_substitution(const Word& x, std::size_t pos,
                                             Symbol a, std::size_t k);

// ---------------------------------------------------------------------------
// Root closures of single-noise cones, with one witness trace per root.

enum class NoiseModel { kRestricted, kUnrestricted };

struct RootWitness {
  Word root;
  EventTrace trace;
};

struct RootClosure {
  /// Sorted by root.
  std::vector<RootWitness> roots;
  /// Largest total duplication count explored.
  std::size_t horizon = 0;
  /// True iff the last explored level contributed no new root.
  bool stabilized = false;
};

struct ClosureOptions {
  /// Minimum horizon (total duplications, counting a noisy one).
  std::size_t t_min = 2;
  /// Horizon at which exploration stops even if not stabilized.
  std::size_t t_cap = 6;
  std::optional<std::size_t> length_filter;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Roots of the cone with exactly one noise event: rt(D^{*(1)}(x)) for the
/// restricted model, rt(D^{*,1}(x)) for the unrestricted one. Duplications
/// after the noise event never change the root, so level s enumerates the
/// distinct exact descendants with s duplications and applies the noise
/// event to each.
RootClosure noisy_root_closure(const Word& x, std::size_t k, NoiseModel model,
                               const ClosureOptions& options = {});

}  // namespace dupcode

#endif  // DUPCODE_CHANNEL_HPP
