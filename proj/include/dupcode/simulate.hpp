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


#ifndef DUPCODE_SIMULATE_HPP
#define DUPCODE_SIMULATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

#include "dupcode/channel.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

/// Seeded uniform integer source. Wraps std::mt19937_64, whose output
/// sequence is fixed by the standard, and draws bounded integers by
/// rejection so results do not depend on the library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi]. Requires lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

enum class Noise { kNone, kRestricted, kUnrestricted };

Noise parse_noise(std::string_view name);
std::string_view to_string(Noise noise);

/// Random channel run with t duplications.
///
/// Draw order (each draw is one Rng::uniform call):
///   restricted:    noisy step in [0, t-1], then per step the template
///                  start in [0, len-k]; at the noisy step the offset in
///                  [1, k] and the value in [1, q-1] follow its start.
///   unrestricted:  stage in [0, t], then per stage s = 0..t: if s is the
///                  chosen stage, position in [1, len] and value in
///                  [1, q-1]; if s < t, a template start.
///   none:          one template start per step.
std::pair<Word, EventTrace> simulate(const Word& x, std::size_t k,
                                     std::size_t t, Noise noise,
                                     std::uint64_t seed);

}  // namespace dupcode

#endif  // DUPCODE_SIMULATE_HPP
