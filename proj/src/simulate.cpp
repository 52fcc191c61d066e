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


#include "dupcode/simulate.hpp"

#include <limits>
#include <string>

#include "dupcode/error.hpp"

namespace dupcode {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw ParameterError("empty sampling range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + v % range;
}

Noise parse_noise(std::string_view name) {
  if (name == "none") return Noise::kNone;
  if (name == "restricted") return Noise::kRestricted;
  if (name == "unrestricted") return Noise::kUnrestricted;
  throw ParameterError("unknown noise model '" + std::string(name) + "'");
}

std::string_view to_string(Noise noise) {
  switch (noise) {
    case Noise::kNone: return "none";
    case Noise::kRestricted: return "restricted";
    case Noise::kUnrestricted: return "unrestricted";
  }
  return "?";
}

std::pair<Word, EventTrace> simulate(const Word& x, std::size_t k,
                                     std::size_t t, Noise noise,
                                     std::uint64_t seed) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (t > 0 && x.size() < k) throw ParameterError("word shorter than k");
  if (noise == Noise::kRestricted && t < 1) {
    throw ParameterError("restricted noise needs at least one duplication");
  }
  if (noise == Noise::kUnrestricted && x.empty()) {
    throw ParameterError("cannot substitute into an empty word");
  }
  const unsigned q = x.q();
  Rng rng(seed);
  EventTrace trace{x, {}};
  Word w = x;
  auto push = [&](ChannelEvent e) {
    w = apply_event(w, e, k);
    trace.events.push_back(e);
  };
  auto draw_pos = [&] { return rng.uniform(0, w.size() - k); };

  switch (noise) {
    case Noise::kNone:
      for (std::size_t s = 0; s < t; ++s) push(Duplication{draw_pos()});
      break;
    case Noise::kRestricted: {
      const std::size_t noisy = rng.uniform(0, t - 1);
      for (std::size_t s = 0; s < t; ++s) {
        const std::size_t pos = draw_pos();
        if (s != noisy) {
          push(Duplication{pos});
          continue;
        }
        const std::size_t off = rng.uniform(1, k);
        const auto val = static_cast<Symbol>(rng.uniform(1, q - 1));
        push(NoisyDuplication{pos, off, val});
      }
      break;
    }
    case Noise::kUnrestricted: {
      const std::size_t stage = rng.uniform(0, t);
      for (std::size_t s = 0; s <= t; ++s) {
        if (s == stage) {
          const std::size_t pos = rng.uniform(1, w.size());
          const auto val = static_cast<Symbol>(rng.uniform(1, q - 1));
          push(Substitution{pos, val});
        }
        if (s < t) push(Duplication{draw_pos()});
      }
      break;
    }
  }
  return {std::move(w), std::move(trace)};
}

}  // namespace dupcode
