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


#include "dupcode/verify.hpp"

#include <unordered_map>

#include "dupcode/error.hpp"
#include "dupcode/transform.hpp"

namespace dupcode {

std::string_view to_string(VerifyProperty p) {
  switch (p) {
    case VerifyProperty::kDuplication: return "dup";
    case VerifyProperty::kOneNoisyDup: return "1nd";
    case VerifyProperty::kOneSubDetect: return "1s-detect";
    case VerifyProperty::kOneSubCorrect: return "1s-correct";
  }
  return "?";
}

VerifyProperty parse_property(std::string_view name) {
  for (auto p : {VerifyProperty::kDuplication, VerifyProperty::kOneNoisyDup,
                 VerifyProperty::kOneSubDetect, VerifyProperty::kOneSubCorrect}) {
    if (to_string(p) == name) return p;
  }
  throw ParameterError("unknown property '" + std::string(name) + "'");
}

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kCertified: return "certified";
    case VerifyStatus::kCounterexampleFound: return "counterexample";
    case VerifyStatus::kHorizonInconclusive: return "inconclusive";
  }
  return "?";
}

bool Witness::replays(std::size_t k) const {
  if (from_c1.origin != c1 || from_c1.replay(k) != collision) return false;
  if (from_c2) {
    if (!c2 || from_c2->origin != *c2 || from_c2->replay(k) != collision) {
      return false;
    }
  }
  return true;
}

namespace {

VerifyReport start(VerifyProperty property, const std::vector<Word>& code,
                   std::size_t k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  VerifyReport r;
  r.property = property;
  r.k = k;
  r.code_size = code.size();
  if (!code.empty()) {
    r.q = code.front().q();
    r.n = code.front().size();
  }
  for (const Word& c : code) {
    require_same_alphabet(c, code.front());
    if (c.size() < k) throw ParameterError("codeword shorter than k");
  }
  return r;
}

EventTrace concat(EventTrace a, const EventTrace& b) {
  a.events.insert(a.events.end(), b.events.begin(), b.events.end());
  return a;
}

/// Witness for traces ending at words with equal roots.
Witness merge(const Word& c1, const EventTrace& t1, const Word& c2,
              const EventTrace& t2, std::size_t k) {
  const Word w1 = t1.replay(k), w2 = t2.replay(k);
  const Word z = *common_descendant(w1, w2, k);
  Witness w;
  w.c1 = c1;
  w.c2 = c2;
  w.collision = z;
  w.from_c1 = concat(t1, *duplication_path(w1, z, k));
  w.from_c2 = concat(t2, *duplication_path(w2, z, k));
  return w;
}

/// First pair of codewords with equal roots, if any.
std::optional<Witness> equal_roots(const std::vector<Word>& code,
                                   std::size_t k) {
  std::unordered_map<Word, std::size_t> seen;
  for (std::size_t i = 0; i < code.size(); ++i) {
    auto [it, fresh] = seen.emplace(root(code[i], k), i);
    if (!fresh) {
      const Word& c1 = code[it->second];
      return merge(c1, EventTrace{c1, {}}, code[i], EventTrace{code[i], {}}, k);
    }
  }
  return std::nullopt;
}

VerifyReport detect_property(VerifyProperty property, NoiseModel model,
                             const std::vector<Word>& code, std::size_t k,
                             const VerifyOptions& options) {
  VerifyReport r = start(property, code, k);
  if (auto w = equal_roots(code, k)) {
    r.status = VerifyStatus::kCounterexampleFound;
    r.witness = std::move(w);
    return r;
  }
  std::unordered_map<Word, std::size_t> owner;
  for (std::size_t i = 0; i < code.size(); ++i) owner[root(code[i], k)] = i;

  ClosureOptions copts;
  copts.t_min = options.t_max;
  copts.t_cap = std::max(options.t_max, options.t_cap);
  copts.cap = options.cap;
  bool all_stable = true;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const RootClosure c = noisy_root_closure(code[i], k, model, copts);
    r.horizon = std::max(r.horizon, c.horizon);
    all_stable = all_stable && c.stabilized;
    r.pairs_checked += code.size() - 1;
    for (const RootWitness& rw : c.roots) {
      ++r.words_checked;
      auto it = owner.find(rw.root);
      if (it == owner.end() || it->second == i) continue;
      const Word& c2 = code[it->second];
      r.status = VerifyStatus::kCounterexampleFound;
      r.witness = merge(code[i], rw.trace, c2, EventTrace{c2, {}}, k);
      return r;
    }
  }
  r.status = all_stable ? VerifyStatus::kCertified
                        : VerifyStatus::kHorizonInconclusive;
  return r;
}

}  // namespace

VerifyReport verify_duplication_code(const std::vector<Word>& code,
                                     std::size_t k) {
  VerifyReport r = start(VerifyProperty::kDuplication, code, k);
  r.pairs_checked = code.size() < 2 ? 0 : code.size() * (code.size() - 1) / 2;
  r.words_checked = code.size();
  if (auto w = equal_roots(code, k)) {
    r.status = VerifyStatus::kCounterexampleFound;
    r.witness = std::move(w);
  }
  return r;
}

VerifyReport verify_1nd(const std::vector<Word>& code, std::size_t k,
                        const VerifyOptions& options) {
  return detect_property(VerifyProperty::kOneNoisyDup, NoiseModel::kRestricted,
                         code, k, options);
}

VerifyReport verify_1s_detect(const std::vector<Word>& code, std::size_t k,
                              const VerifyOptions& options) {
  return detect_property(VerifyProperty::kOneSubDetect,
                         NoiseModel::kUnrestricted, code, k, options);
}

VerifyReport verify_1s_correct(const std::vector<Word>& code, std::size_t k,
                               const VerifyOptions& options,
                               const Decoder& decoder) {
  VerifyReport r = start(VerifyProperty::kOneSubCorrect, code, k);
  if (auto w = equal_roots(code, k)) {
    r.status = VerifyStatus::kCounterexampleFound;
    r.witness = std::move(w);
    return r;
  }
  ClosureOptions copts;
  copts.t_min = options.t_max;
  copts.t_cap = std::max(options.t_max, options.t_cap);
  copts.cap = options.cap;
  // root -> (codeword index, trace from that codeword)
  std::unordered_map<Word, std::pair<std::size_t, EventTrace>> owner;
  for (std::size_t i = 0; i < code.size(); ++i) {
    owner.emplace(root(code[i], k), std::make_pair(i, EventTrace{code[i], {}}));
  }
  bool all_stable = true;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const RootClosure c =
        noisy_root_closure(code[i], k, NoiseModel::kUnrestricted, copts);
    r.horizon = std::max(r.horizon, c.horizon);
    all_stable = all_stable && c.stabilized;
    r.pairs_checked += code.size() - 1;
    for (const RootWitness& rw : c.roots) {
      ++r.words_checked;
      auto [it, fresh] = owner.emplace(rw.root, std::make_pair(i, rw.trace));
      if (fresh || it->second.first == i) continue;
      const std::size_t j = it->second.first;
      r.status = VerifyStatus::kCounterexampleFound;
      r.witness = merge(code[j], it->second.second, code[i], rw.trace, k);
      return r;
    }
  }
  if (decoder) {
    const SweepReport s = decoder_sweep(code, k, options.t_max,
                                        NoiseModel::kUnrestricted, decoder,
                                        true, options.cap);
    r.words_checked += s.checked;
    if (s.witness) {
      r.status = VerifyStatus::kCounterexampleFound;
      r.witness = s.witness;
      return r;
    }
  }
  r.status = all_stable ? VerifyStatus::kCertified
                        : VerifyStatus::kHorizonInconclusive;
  return r;
}

std::vector<TracedWord> traced_cone(const Word& x, std::size_t k,
                                    std::size_t t_max, NoiseModel model,
                                    std::size_t cap) {
  if (x.size() < k) throw ParameterError("word shorter than k");
  const unsigned q = x.q();
  // level[p] holds words with the current duplication count and p noise
  // events.
  std::unordered_map<Word, EventTrace> level[2];
  std::unordered_map<Word, bool> emitted[2];
  std::vector<TracedWord> out;
  level[0].emplace(x, EventTrace{x, {}});
  std::size_t total = 1;
  auto emit = [&](const Word& w, const EventTrace& t, unsigned p) {
    if (emitted[p].emplace(w, true).second) out.push_back({w, t, p == 1});
  };
  auto add_subs = [&](const std::unordered_map<Word, EventTrace>& from,
                      std::unordered_map<Word, EventTrace>& to) {
    for (const auto& [w, t] : from) {
      for (std::size_t i = 1; i <= w.size(); ++i) {
        for (Symbol a = 1; a < q; ++a) {
          const ChannelEvent e = Substitution{i, a};
          EventTrace nt = t;
          nt.events.push_back(e);
          to.emplace(apply_event(w, e, k), std::move(nt));
        }
      }
    }
  };
  if (model == NoiseModel::kUnrestricted) add_subs(level[0], level[1]);
  for (std::size_t s = 0;; ++s) {
    for (unsigned p = 0; p < 2; ++p) {
      for (const auto& [w, t] : level[p]) emit(w, t, p);
    }
    if (s == t_max) break;
    std::unordered_map<Word, EventTrace> next[2];
    for (unsigned p = 0; p < 2; ++p) {
      for (const auto& [w, t] : level[p]) {
        for (std::size_t pos = 0; pos + k <= w.size(); ++pos) {
          EventTrace nt = t;
          nt.events.push_back(Duplication{pos});
          next[p].emplace(apply_event(w, Duplication{pos}, k), std::move(nt));
          if (p == 0 && model == NoiseModel::kRestricted) {
            for (std::size_t off = 1; off <= k; ++off) {
              for (Symbol a = 1; a < q; ++a) {
                const ChannelEvent e = NoisyDuplication{pos, off, a};
                EventTrace mt = t;
                mt.events.push_back(e);
                next[1].emplace(apply_event(w, e, k), std::move(mt));
              }
            }
          }
        }
      }
    }
    if (model == NoiseModel::kUnrestricted) add_subs(next[0], next[1]);
    total += next[0].size() + next[1].size();
    if (total > cap) throw CapExceeded("traced cone exceeds the cap");
    level[0] = std::move(next[0]);
    level[1] = std::move(next[1]);
  }
  return out;
}

SweepReport decoder_sweep(const std::vector<Word>& code, std::size_t k,
                          std::size_t t_max, NoiseModel model,
                          const Decoder& decoder, bool must_decode,
                          std::size_t cap) {
  SweepReport r;
  for (const Word& c : code) {
    for (const TracedWord& tw : traced_cone(c, k, t_max, model, cap)) {
      ++r.checked;
      const std::optional<Word> got = decoder(tw.word);
      if (got && *got == c) continue;
      if (got) {
        ++r.wrong;
      } else if (!tw.noisy) {
        ++r.missed;
      } else {
        ++r.detected;
        if (!must_decode) continue;
      }
      if (!r.witness) {
        Witness w;
        w.kind = "decode";
        w.c1 = c;
        w.c2 = got;
        w.collision = tw.word;
        w.from_c1 = tw.trace;
        r.witness = std::move(w);
      }
    }
  }
  return r;
}

}  // namespace dupcode
