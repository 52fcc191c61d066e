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

#include "dupcode/channel.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dupcode/error.hpp"
#include "dupcode/transform.hpp"

namespace dupcode {

namespace {

std::vector<Symbol> duplicate(const std::vector<Symbol>& x, std::size_t pos,
                              std::size_t k) {
  std::vector<Symbol> out;
  out.reserve(x.size() + k);
  out.insert(out.end(), x.begin(), x.begin() + static_cast<long>(pos + k));
  out.insert(out.end(), x.begin() + static_cast<long>(pos),
             x.begin() + static_cast<long>(pos + k));
  out.insert(out.end(), x.begin() + static_cast<long>(pos + k), x.end());
  return out;
}

void check_dup_pos(const Word& x, std::size_t pos, std::size_t k) {
  if (k < 1) throw ParameterError("duplication length k must be >= 1");
  if (x.size() < k || pos > x.size() - k) {
    throw ParameterError("duplication template start " + std::to_string(pos) +
                         " invalid for length " + std::to_string(x.size()) +
                         " and k=" + std::to_string(k));
  }
}

void check_value(const Word& x, Symbol value) {
  if (value == 0 || value >= x.q()) {
    throw ParameterError("noise value must be a nonzero symbol of Z_" +
                         std::to_string(x.q()));
  }
}

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw CapExceeded("enumeration exceeded cap of " + std::to_string(cap) +
                      " words");
  }
}

std::vector<Word> sorted(std::unordered_set<Word>&& set) {
  std::vector<Word> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Word apply_event(const Word& x, const ChannelEvent& e, std::size_t k) {
  const unsigned q = x.q();
  return std::visit(
      [&](const auto& ev) -> Word {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, Duplication>) {
          check_dup_pos(x, ev.pos, k);
          return Word::unchecked(q, duplicate(x.vec(), ev.pos, k));
        } else if constexpr (std::is_same_v<T, NoisyDuplication>) {
          check_dup_pos(x, ev.pos, k);
          check_value(x, ev.value);
          if (ev.offset < 1 || ev.offset > k) {
            throw ParameterError("noisy duplication offset must be in 1..k");
          }
          auto out = duplicate(x.vec(), ev.pos, k);
          Symbol& s = out[ev.pos + k + ev.offset - 1];
          s = static_cast<Symbol>((s + ev.value) % q);
          return Word::unchecked(q, std::move(out));
        } else {
          check_value(x, ev.value);
          return add_scaled_unit(x, ev.pos, ev.value);
        }
      },
      e);
}

std::string format_event(const ChannelEvent& e) {
  return std::visit(
      [](const auto& ev) -> std::string {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, Duplication>) {
          return "DUP pos=" + std::to_string(ev.pos);
        } else if constexpr (std::is_same_v<T, NoisyDuplication>) {
          return "NDUP pos=" + std::to_string(ev.pos) +
                 " off=" + std::to_string(ev.offset) +
                 " val=" + std::to_string(ev.value);
        } else {
          return "SUB pos=" + std::to_string(ev.pos) +
                 " val=" + std::to_string(ev.value);
        }
      },
      e);
}

ChannelEvent parse_event(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind;
  in >> kind;
  std::map<std::string, std::size_t> fields;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("malformed event field '" + token + "'");
    }
    std::size_t value = 0;
    const char* first = token.data() + eq + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParameterError("malformed event value in '" + token + "'");
    }
    fields[token.substr(0, eq)] = value;
  }
  auto get = [&](const char* name) {
    auto it = fields.find(name);
    if (it == fields.end()) {
      throw ParameterError(std::string("event missing field '") + name + "'");
    }
    return it->second;
  };
  auto expect_fields = [&](std::size_t n) {
    if (fields.size() != n) throw ParameterError("unexpected event fields");
  };
  if (kind == "DUP") {
    expect_fields(1);
    return Duplication{get("pos")};
  }
  if (kind == "NDUP") {
    expect_fields(3);
    return NoisyDuplication{get("pos"), get("off"),
                            static_cast<Symbol>(get("val"))};
  }
  if (kind == "SUB") {
    expect_fields(2);
    return Substitution{get("pos"), static_cast<Symbol>(get("val"))};
  }
  throw ParameterError("unknown event kind '" + kind + "'");
}

Word EventTrace::replay(std::size_t k) const {
  Word w = origin;
  for (const auto& e : events) w = apply_event(w, e, k);
  return w;
}

std::string EventTrace::str() const {
  std::string out;
  for (const auto& e : events) out += format_event(e) + "\n";
  return out;
}

EventTrace EventTrace::parse(const Word& origin, std::string_view text) {
  EventTrace trace{origin, {}};
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      trace.events.push_back(parse_event(line));
    }
    start = end + 1;
  }
  return trace;
}

std::vector<Word> descendants_restricted(const Word& x, std::size_t k,
                                         std::size_t t, unsigned p,
                                         std::size_t cap) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (p > 1) throw ParameterError("at most one noisy duplication supported");
  if (p > t) throw ParameterError("need t >= p");
  if (t > 0 && x.size() < k) throw ParameterError("word shorter than k");
  const unsigned q = x.q();
  // level[used] holds words with `used` noisy duplications so far.
  std::unordered_set<Word> level[2];
  level[0].insert(x);
  for (std::size_t step = 0; step < t; ++step) {
    const std::size_t remaining = t - step - 1;
    std::unordered_set<Word> next[2];
    for (unsigned used = 0; used <= p; ++used) {
      for (const Word& w : level[used]) {
        const auto& s = w.vec();
        for (std::size_t pos = 0; pos + k <= s.size(); ++pos) {
          auto d = duplicate(s, pos, k);
          // Only keep exact branches that can still reach exactly p noisy.
          if (used + remaining >= p) {
            next[used].insert(Word::unchecked(q, d));
          }
          if (used == 0 && p == 1) {
            for (std::size_t off = 0; off < k; ++off) {
              const std::size_t at = pos + k + off;
              const Symbol orig = d[at];
              for (Symbol a = 1; a < q; ++a) {
                d[at] = static_cast<Symbol>((orig + a) % q);
                next[1].insert(Word::unchecked(q, d));
              }
              d[at] = orig;
            }
          }
        }
      }
      check_cap(next[0].size() + next[1].size(), cap);
    }
    level[0] = std::move(next[0]);
    level[1] = std::move(next[1]);
  }
  return sorted(std::move(level[p]));
}

std::vector<Word> descendants_unrestricted(const Word& x, std::size_t k,
                                           std::size_t t, unsigned p,
                                           std::size_t cap) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (p > 1) throw ParameterError("at most one substitution supported");
  if (t > 0 && x.size() < k) throw ParameterError("word shorter than k");
  const unsigned q = x.q();
  auto substitute_all = [&](const std::unordered_set<Word>& in,
                            std::unordered_set<Word>& out) {
    for (const Word& w : in) {
      auto s = w.vec();
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Symbol orig = s[i];
        for (Symbol a = 1; a < q; ++a) {
          s[i] = static_cast<Symbol>((orig + a) % q);
          out.insert(Word::unchecked(q, s));
        }
        s[i] = orig;
      }
    }
    check_cap(out.size(), cap);
  };
  std::unordered_set<Word> clean{x};
  std::unordered_set<Word> noisy;
  if (p == 1) substitute_all(clean, noisy);
  for (std::size_t step = 0; step < t; ++step) {
    std::unordered_set<Word> next_clean, next_noisy;
    for (unsigned used = 0; used <= p; ++used) {
      const auto& src = used ? noisy : clean;
      auto& dst = used ? next_noisy : next_clean;
      for (const Word& w : src) {
        for (std::size_t pos = 0; pos + k <= w.size(); ++pos) {
          dst.insert(Word::unchecked(q, duplicate(w.vec(), pos, k)));
        }
      }
      check_cap(dst.size(), cap);
    }
    if (p == 1) substitute_all(next_clean, next_noisy);
    clean = std::move(next_clean);
    noisy = std::move(next_noisy);
  }
  return sorted(std::move(p == 1 ? noisy : clean));
}

std::vector<Word> root_set(const std::vector<Word>& words, std::size_t k,
                           std::optional<std::size_t> length_filter) {
  std::unordered_set<Word> roots;
  for (const Word& w : words) {
    Word r = root(w, k);
    if (!length_filter || r.size() == *length_filter) roots.insert(std::move(r));
  }
  return sorted(std::move(roots));
}

std::vector<Word> k_switch_variants(const Word& z, std::size_t k) {
  std::unordered_set<Word> out;
  const auto& s = z.vec();
  const std::size_t n = s.size();
  for (std::size_t len = 1; len < k; ++len) {
    for (std::size_t a = 0; a + k + len <= n; ++a) {
      const std::size_t b = a + k;
      const bool a_zero = std::all_of(s.begin() + a, s.begin() + a + len,
                                      [](Symbol c) { return c == 0; });
      const bool b_zero = std::all_of(s.begin() + b, s.begin() + b + len,
                                      [](Symbol c) { return c == 0; });
      if (a_zero == b_zero) continue;
      auto t = s;
      std::swap_ranges(t.begin() + a, t.begin() + a + len, t.begin() + b);
      out.insert(Word::unchecked(z.q(), std::move(t)));
    }
  }
  return sorted(std::move(out));
}

bool differ_by_k_switch(const Word& a, const Word& b, std::size_t k) {
  if (a.q() != b.q() || a.size() != b.size() || a == b) return false;
  const auto variants = k_switch_variants(a, k);
  return std::binary_search(variants.begin(), variants.end(), b);
}

// ---------------------------------------------------------------------------

std::string_view to_string(NoisyRule rule) {
  switch (rule) {
    case NoisyRule::kLastBlock: return "last-block";
    case NoisyRule::kZeroWindow: return "zero-window";
    case NoisyRule::kCase1a: return "1a";
    case NoisyRule::kCase1b: return "1b";
    case NoisyRule::kCase1c: return "1c";
    case NoisyRule::kCase2a: return "2a";
    case NoisyRule::kCase2b: return "2b";
    case NoisyRule::kCase2c: return "2c";
  }
  return "?";
}

std::string_view to_string(RootEffect effect) {
  switch (effect) {
    case RootEffect::kUnchanged: return "unchanged";
    case RootEffect::kLengthChanged: return "length-changed";
    case RootEffect::kAmbiguous: return "ambiguous";
  }
  return "?";
}

namespace {

std::vector<Symbol> tail_of(const std::vector<Symbol>& x, std::size_t k,
                            unsigned q) {
  std::vector<Symbol> z(x.size() - k);
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = static_cast<Symbol>((x[i + k] + q - x[i]) % q);
  }
  return z;
}

std::size_t zeros_left(const std::vector<Symbol>& z, std::size_t idx) {
  std::size_t m = 0;
  while (idx > 0 && z[idx - 1] == 0) --idx, ++m;
  return m;
}

std::size_t zeros_right(const std::vector<Symbol>& z, std::size_t idx) {
  std::size_t m = 0;
  while (idx + 1 < z.size() && z[idx + 1] == 0) ++idx, ++m;
  return m;
}

// Change of |mu(z)| when the single symbol z[idx] becomes `next`, computed
// from the zero runs on each side of idx.
long single_change_delta(const std::vector<Symbol>& z, std::size_t idx,
                         Symbol next, std::size_t k) {
  const Symbol prev = z[idx];
  if ((prev == 0) == (next == 0)) return 0;
  const std::size_t ml = zeros_left(z, idx);
  const std::size_t mr = zeros_right(z, idx);
  const long jump =
      static_cast<long>((ml + mr + 1) / k - ml / k - mr / k) *
      static_cast<long>(k);
  return prev == 0 ? jump : -jump;
}

LocalChange local_kind(long delta) {
  return delta < 0 ? LocalChange::kShrinks
                   : (delta > 0 ? LocalChange::kGrows : LocalChange::kKeeps);
}

}  // namespace

NoisyClassification classify_noisy_substitution(const Word& x,
                                                const NoisyDuplication& e,
                                                std::size_t k) {
  if (k < 2) throw ParameterError("classification needs k >= 2");
  check_dup_pos(x, e.pos, k);
  check_value(x, e.value);
  if (e.offset < 1 || e.offset > k) {
    throw ParameterError("noisy duplication offset must be in 1..k");
  }
  const unsigned q = x.q();
  const auto xd = duplicate(x.vec(), e.pos, k);
  const auto z = tail_of(xd, k, q);
  const Symbol b = e.value;
  // 1-based symbol position of the substitution in the duplicated word.
  const std::size_t ell = e.pos + k + e.offset;
  NoisyClassification out;
  // 0-based tail indices: the substitution lands at s, its echo b' at s+k.
  const std::size_t s = ell - k - 1;
  if (ell > xd.size() - k) {
    // Only z_s moves. Zeros left of the inserted block can absorb the
    // change, so the length is computed rather than assumed to grow.
    out.rule = NoisyRule::kLastBlock;
    const long delta = single_change_delta(z, s, b, k);
    out.length_delta = delta;
    out.length_sign = delta > 0 ? 1 : (delta < 0 ? -1 : 0);
    out.effect =
        delta == 0 ? RootEffect::kAmbiguous : RootEffect::kLengthChanged;
    return out;
  }
  const Symbol bp = z[s + k];
  std::size_t first = s + 1;
  while (first < s + k && z[first] == 0) ++first;
  if (first == s + k) {
    out.rule = NoisyRule::kZeroWindow;
    if (bp == b) {
      out.effect = RootEffect::kUnchanged;
      out.length_sign = 0;
      out.length_delta = 0;
    } else {
      out.effect = RootEffect::kLengthChanged;
      out.length_sign = 1;
    }
    return out;
  }
  // z = u 0^{pk+m+i-1} [0] 0^{k-i} v b' w with v starting at `first`.
  const std::size_t i = k - (first - s) + 1;
  const std::size_t run = zeros_left(z, s) + 1 + (first - s - 1);
  if (run < k) {
    throw ParameterError("event does not insert a zero run of length k");
  }
  const std::size_t m = run % k;
  const std::size_t m1 = zeros_left(z, s + k);
  const std::size_t m2 = zeros_right(z, s + k);
  const bool joins = m2 / k < (m1 + m2 + 1) / k;
  const long kk = static_cast<long>(k);
  auto set = [&](NoisyRule rule, long delta) {
    out.rule = rule;
    out.length_delta = delta;
    out.length_sign = delta > 0 ? 1 : (delta < 0 ? -1 : 0);
    out.effect =
        delta == 0 ? RootEffect::kAmbiguous : RootEffect::kLengthChanged;
  };
  if (i <= k - m) {
    if (bp == b && joins) {
      set(NoisyRule::kCase1a, 0);
    } else if (bp == 0 && joins) {
      set(NoisyRule::kCase1b, 2 * kk);
    } else {
      set(NoisyRule::kCase1c, kk);
    }
  } else {
    if (bp == b && joins) {
      set(NoisyRule::kCase2a, -kk);
    } else if (bp == 0 && joins) {
      set(NoisyRule::kCase2b, kk);
    } else {
      set(NoisyRule::kCase2c, 0);
    }
  }
  return out;
}

SubstitutionPrediction classify_substitution(const Word& x, std::size_t pos,
                                             Symbol a, std::size_t k) {
  if (k < 2) throw ParameterError("classification needs k >= 2");
  if (x.size() < k) throw ParameterError("word shorter than k");
  if (pos < 1 || pos > x.size()) throw ParameterError("position out of range");
  check_value(x, a);
  const unsigned q = x.q();
  const Alphabet alpha(q);
  const std::size_t n = x.size();
  const auto z = tail_of(x.vec(), k, q);
  SubstitutionPrediction out;

  auto finish_same_length = [&](std::size_t bound) {
    out.shape = out.length_delta == 0 ? AmbiguityShape::kNearby
                                      : AmbiguityShape::kLengthChange;
    out.distance_bound = bound;
  };

  if (pos <= k) {
    // Head symbol changes; the tail symbol k later (if any) moves by -a.
    out.region = SubstitutionRegion::kHead;
    out.rule = "head";
    if (pos <= z.size()) {
      out.length_delta =
          single_change_delta(z, pos - 1, alpha.sub(z[pos - 1], a), k);
    }
    finish_same_length(2);
    return out;
  }
  if (pos > n - k) {
    out.region = SubstitutionRegion::kTailOnly;
    out.rule = "tail";
    const std::size_t idx = pos - k - 1;
    out.length_delta = single_change_delta(z, idx, alpha.add(z[idx], a), k);
    finish_same_length(1);
    return out;
  }

  // Both tail indices l = pos-k-1 and r = pos-1 move: z_l += a, z_r -= a.
  out.region = SubstitutionRegion::kInterior;
  const std::size_t l = pos - k - 1;
  const std::size_t r = pos - 1;
  const Symbol a1 = z[l];
  const Symbol a2 = z[r];
  const Symbol a1n = alpha.add(a1, a);
  const Symbol a2n = alpha.sub(a2, a);
  const bool v_zero = std::all_of(z.begin() + static_cast<long>(l + 1),
                                  z.begin() + static_cast<long>(r),
                                  [](Symbol c) { return c == 0; });
  const long kk = static_cast<long>(k);
  if (v_zero) {
    const std::size_t m1 = zeros_left(z, l);
    const std::size_t m4 = zeros_right(z, r);
    const long sk =
        static_cast<long>((m1 + m4 + k + 1) / k - m1 / k - m4 / k) * kk;
    if (a1 != 0 && a2 != 0) {
      if (a1n != 0 && a2n != 0) {
        out.rule = "I.1a";
        out.length_delta = 0;
        finish_same_length(2);
      } else if (a1n == 0 && a2n == 0) {
        out.rule = "I.1c";
        out.length_delta = -sk;
        finish_same_length(0);
      } else {
        out.rule = "I.1b";
        out.length_delta = -kk;
        finish_same_length(0);
      }
    } else if (a1 != 0) {
      if (a1n != 0) {
        out.rule = "I.2a";
        out.length_delta = kk;
        finish_same_length(0);
      } else {
        out.rule = "I.2b";
        out.length_delta = 0;
        finish_same_length(1);
      }
    } else if (a2 != 0) {
      if (a2n != 0) {
        out.rule = "I.3a";
        out.length_delta = kk;
        finish_same_length(0);
      } else {
        out.rule = "I.3b";
        out.length_delta = 0;
        finish_same_length(1);
      }
    } else {
      out.rule = "I.4";
      out.length_delta = sk;
      finish_same_length(0);
    }
    return out;
  }

  // A nonzero symbol between l and r separates the two changes, so each
  // side moves the root length independently.
  out.rule = "II";
  const long dl = single_change_delta(z, l, a1n, k);
  const long dr = single_change_delta(z, r, a2n, k);
  out.left = local_kind(dl);
  out.right = local_kind(dr);
  out.length_delta = dl + dr;
  if (out.length_delta != 0) {
    out.shape = AmbiguityShape::kLengthChange;
  } else if (dl != 0) {
    out.shape = AmbiguityShape::kKSwitch;
  } else {
    out.shape = AmbiguityShape::kNearby;
    out.distance_bound = 2;
  }
  return out;
}

// ---------------------------------------------------------------------------

RootClosure noisy_root_closure(const Word& x, std::size_t k, NoiseModel model,
                               const ClosureOptions& options) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (x.size() < k) throw ParameterError("word shorter than k");
  if (options.t_cap < options.t_min) {
    throw ParameterError("closure horizon cap below minimum");
  }
  const unsigned q = x.q();
  const bool restricted = model == NoiseModel::kRestricted;

  struct Entry {
    std::vector<Symbol> word;
    std::vector<ChannelEvent> events;
  };
  std::vector<Entry> level{{x.vec(), {}}};
  std::map<Word, EventTrace> roots;
  std::vector<Symbol> scratch, rbuf;

  auto offer = [&](const std::vector<Symbol>& w,
                   const std::vector<ChannelEvent>& prefix,
                   const ChannelEvent& noise) {
    if (options.length_filter &&
        detail::root_length(w, k, q) != *options.length_filter) {
      return false;
    }
    detail::root_into(w, k, q, rbuf);
    Word r = Word::unchecked(q, rbuf);
    if (roots.count(r)) return false;
    EventTrace trace{x, prefix};
    trace.events.push_back(noise);
    roots.emplace(std::move(r), std::move(trace));
    return true;
  };

  // Level s: noise applied after s exact duplications. Restricted noise
  // is itself a duplication, so horizon h covers levels 0..h-1; an
  // unrestricted substitution adds none, so levels 0..h.
  RootClosure out;
  for (std::size_t s = 0;; ++s) {
    bool grew = false;
    for (const Entry& e : level) {
      const auto& w = e.word;
      if (restricted) {
        for (std::size_t pos = 0; pos + k <= w.size(); ++pos) {
          scratch = duplicate(w, pos, k);
          for (std::size_t off = 1; off <= k; ++off) {
            const std::size_t at = pos + k + off - 1;
            const Symbol orig = scratch[at];
            for (Symbol a = 1; a < q; ++a) {
              scratch[at] = static_cast<Symbol>((orig + a) % q);
              grew |= offer(scratch, e.events, NoisyDuplication{pos, off, a});
            }
            scratch[at] = orig;
          }
        }
      } else {
        scratch = w;
        for (std::size_t i = 0; i < w.size(); ++i) {
          const Symbol orig = scratch[i];
          for (Symbol a = 1; a < q; ++a) {
            scratch[i] = static_cast<Symbol>((orig + a) % q);
            grew |= offer(scratch, e.events, Substitution{i + 1, a});
          }
          scratch[i] = orig;
        }
      }
    }
    const std::size_t horizon = restricted ? s + 1 : s;
    out.horizon = horizon;
    if (horizon >= options.t_min && (!grew || horizon >= options.t_cap)) {
      out.stabilized = !grew;
      break;
    }
    // Next exact level, deduplicated, in a deterministic order.
    std::unordered_map<Word, std::vector<ChannelEvent>> next;
    for (const Entry& e : level) {
      for (std::size_t pos = 0; pos + k <= e.word.size(); ++pos) {
        Word d = Word::unchecked(q, duplicate(e.word, pos, k));
        if (next.count(d)) continue;
        auto events = e.events;
        events.push_back(Duplication{pos});
        next.emplace(std::move(d), std::move(events));
      }
    }
    check_cap(next.size(), options.cap);
    std::vector<Entry> sorted_level;
    sorted_level.reserve(next.size());
    for (auto& [w, ev] : next) sorted_level.push_back({w.vec(), std::move(ev)});
    std::sort(sorted_level.begin(), sorted_level.end(),
              [](const Entry& a, const Entry& b) { return a.word < b.word; });
    level = std::move(sorted_level);
  }
  out.roots.reserve(roots.size());
  for (auto& [r, trace] : roots) out.roots.push_back({r, std::move(trace)});
  return out;
}

namespace {

struct Runs {
  std::vector<std::size_t> zeros;  // one more entry than symbols
  std::vector<Symbol> symbols;
};

Runs runs_of(const Word& z) {
  Runs out;
  std::size_t run = 0;
  for (Symbol s : z.symbols()) {
    if (s == 0) {
      ++run;
      continue;
    }
    out.zeros.push_back(run);
    out.symbols.push_back(s);
    run = 0;
  }
  out.zeros.push_back(run);
  return out;
}

}  // namespace

std::optional<EventTrace> duplication_path(const Word& x, const Word& y,
                                           std::size_t k) {
  require_same_alphabet(x, y);
  if (k < 1 || x.size() < k || y.size() < x.size()) return std::nullopt;
  const TransformPair tx = phi(x, k), ty = phi(y, k);
  if (tx.head != ty.head) return std::nullopt;
  const Runs rx = runs_of(tx.tail), ry = runs_of(ty.tail);
  if (rx.symbols != ry.symbols) return std::nullopt;
  EventTrace trace{x, {}};
  std::size_t at = 0;  // tail index where the current run starts
  for (std::size_t i = 0; i < rx.zeros.size(); ++i) {
    if (ry.zeros[i] < rx.zeros[i] || (ry.zeros[i] - rx.zeros[i]) % k) {
      return std::nullopt;
    }
    for (std::size_t b = 0; b < (ry.zeros[i] - rx.zeros[i]) / k; ++b) {
      trace.events.push_back(Duplication{at});
    }
    at += ry.zeros[i] + 1;
  }
  return trace;
}

std::optional<Word> common_descendant(const Word& a, const Word& b,
                                      std::size_t k) {
  require_same_alphabet(a, b);
  if (k < 1 || a.size() < k || b.size() < k) return std::nullopt;
  if (root(a, k) != root(b, k)) return std::nullopt;
  const TransformPair ta = phi(a, k), tb = phi(b, k);
  const Runs ra = runs_of(ta.tail), rb = runs_of(tb.tail);
  // Same root: same head, same nonzero skeleton, runs equal mod k.
  std::vector<Symbol> tail;
  for (std::size_t i = 0; i < ra.zeros.size(); ++i) {
    tail.insert(tail.end(), std::max(ra.zeros[i], rb.zeros[i]), 0);
    if (i < ra.symbols.size()) tail.push_back(ra.symbols[i]);
  }
  return phi_inv(TransformPair{ta.head, Word::unchecked(a.q(), std::move(tail)),
                               k});
}

}  // namespace dupcode
