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


#include "dupcode/detect.hpp"

#include <algorithm>
#include <string>

#include "dupcode/error.hpp"
#include "dupcode/transform.hpp"

namespace dupcode {

unsigned p_of_k(std::size_t k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  return static_cast<unsigned>(2 * (k / 2) + 1);
}

std::size_t z_sum(const Word& z, unsigned ell, std::size_t k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (ell > 3) throw ParameterError("block class must be in 0..3");
  std::size_t total = 0;
  for (std::size_t off = 0, t = 1; off < z.size(); off += k, ++t) {
    if (t % 4 != ell) continue;
    const std::size_t end = std::min(off + k, z.size());
    for (std::size_t i = off; i < end; ++i) total += z[i] == 0;
  }
  return total;
}

AuxResidues aux_residues(const Word& z, std::size_t k) {
  const unsigned p = p_of_k(k);
  std::array<std::size_t, 4> zs{};
  for (std::size_t off = 0, t = 1; off < z.size(); off += k, ++t) {
    const std::size_t end = std::min(off + k, z.size());
    for (std::size_t i = off; i < end; ++i) zs[t % 4] += z[i] == 0;
  }
  return {static_cast<unsigned>((zs[0] + 2 * zs[2]) % p),
          static_cast<unsigned>((zs[1] + 2 * zs[3]) % p)};
}

void AuxParams::validate() const {
  if (q < 2) throw ParameterError("q must be >= 2");
  if (k < 1) throw ParameterError("k must be >= 1");
  if (i >= p() || j >= p()) {
    throw ParameterError("residues i, j must be below p=" +
                         std::to_string(p()));
  }
}

bool aux_member(const Word& z, const AuxParams& params) {
  params.validate();
  return aux_residues(z, params.k) == AuxResidues{params.i, params.j};
}

bool cij_member(const Word& x, const AuxParams& params) {
  params.validate();
  if (x.size() != params.n) {
    throw ParameterError("word length " + std::to_string(x.size()) +
                         " does not match n=" + std::to_string(params.n));
  }
  if (x.q() != params.q) throw ParameterError("alphabet mismatch");
  if (params.n < params.k) throw ParameterError("C_ij needs n >= k");
  const Word tail = phi(x, params.k).tail;
  return is_rll(tail, params.k) && aux_member(tail, params);
}

std::vector<Word> enumerate_rll(unsigned q, std::size_t k, std::size_t m,
                                std::size_t cap) {
  if (k < 1) throw ParameterError("k must be >= 1");
  (void)Alphabet(q);
  std::vector<Word> out;
  std::vector<Symbol> s(m, 0);
  // Depth-first in lexicographic order, tracking the trailing zero run.
  auto rec = [&](auto&& self, std::size_t i, std::size_t run) -> void {
    if (i == m) {
      if (out.size() >= cap) {
        throw CapExceeded("RLL enumeration exceeded cap of " +
                          std::to_string(cap) + " words");
      }
      out.push_back(Word::unchecked(q, s));
      return;
    }
    for (unsigned a = 0; a < q; ++a) {
      if (a == 0 && run + 1 >= k) continue;
      s[i] = static_cast<Symbol>(a);
      self(self, i + 1, a == 0 ? run + 1 : 0);
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

std::vector<Word> all_heads(unsigned q, std::size_t k) {
  std::vector<Word> out;
  std::vector<Symbol> s(k, 0);
  while (true) {
    out.push_back(Word::unchecked(q, s));
    std::size_t i = k;
    while (i > 0 && s[i - 1] == q - 1) s[--i] = 0;
    if (i == 0) break;
    ++s[i - 1];
  }
  return out;
}

template <typename Keep>
std::vector<Word> irreducible_where(unsigned q, std::size_t k, std::size_t n,
                                    std::size_t cap, Keep keep) {
  if (n < k) throw ParameterError("need n >= k");
  const auto tails = enumerate_rll(q, k, n - k, cap);
  std::vector<Word> kept;
  for (const Word& z : tails) {
    if (keep(z)) kept.push_back(z);
  }
  const auto heads = all_heads(q, k);
  if (kept.size() > 0 && heads.size() > cap / kept.size()) {
    throw CapExceeded("code enumeration exceeded cap of " +
                      std::to_string(cap) + " words");
  }
  std::vector<Word> out;
  out.reserve(heads.size() * kept.size());
  for (const Word& y : heads) {
    for (const Word& z : kept) out.push_back(phi_inv(TransformPair{y, z, k}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Word> enumerate_irreducible(unsigned q, std::size_t k,
                                        std::size_t n, std::size_t cap) {
  return irreducible_where(q, k, n, cap, [](const Word&) { return true; });
}

std::string_view to_string(ZetaReading reading) {
  switch (reading) {
    case ZetaReading::kSymbolDomain: return "symbol";
    case ZetaReading::kTransformDomain: return "transform";
    case ZetaReading::kTailAligned: return "tail-aligned";
  }
  return "?";
}

ZetaReading parse_zeta_reading(std::string_view name) {
  if (name == "symbol") return ZetaReading::kSymbolDomain;
  if (name == "transform") return ZetaReading::kTransformDomain;
  if (name == "tail-aligned") return ZetaReading::kTailAligned;
  throw ParameterError("unknown zeta reading '" + std::string(name) + "'");
}

std::array<std::size_t, 4> construct3_betas(const Word& y, std::size_t k,
                                            ZetaReading reading) {
  if (k < 2) throw ParameterError("construction needs k >= 2");
  const unsigned q = y.q();
  std::array<std::size_t, 4> zeta{};
  switch (reading) {
    case ZetaReading::kSymbolDomain: {
      const Word w = phi_inv(Word::zeros(q, k).concat(y), k);
      for (unsigned l = 0; l < 4; ++l) zeta[l] = z_sum(w, l, k);
      break;
    }
    case ZetaReading::kTransformDomain: {
      const Word w = Word::zeros(q, k).concat(y);
      for (unsigned l = 0; l < 4; ++l) zeta[l] = z_sum(w, l, k);
      break;
    }
    case ZetaReading::kTailAligned:
      for (unsigned l = 0; l < 4; ++l) zeta[l] = z_sum(y, (l + 1) % 4, k);
      break;
  }
  const std::size_t p = p_of_k(k);
  std::array<std::size_t, 4> beta{};
  for (unsigned i = 0; i < 2; ++i) {
    const std::size_t c = (p - (zeta[i] + 2 * zeta[i + 2]) % p) % p;
    beta[i + 2] = c / 2;
    beta[i] = c - 2 * beta[i + 2];
  }
  for (std::size_t b : beta) {
    if (b >= k) throw ParameterError("beta out of range [0, k)");
  }
  return beta;
}

Word construct3_encode(const Word& B, const Word& y, std::size_t k,
                       ZetaReading reading) {
  require_same_alphabet(B, y);
  const unsigned q = B.q();
  if (k < 2) throw ParameterError("construction needs k >= 2");
  if (q + k < 4) throw ParameterError("construction needs q + k >= 4");
  if (B.size() != k) throw ParameterError("B must have length k");
  if (!is_rll(y, k)) throw ParameterError("y must not contain 0^k");
  const auto beta = construct3_betas(y, k, reading);
  std::vector<Symbol> tail;
  tail.reserve(4 * k + y.size());
  for (std::size_t b : beta) {
    tail.insert(tail.end(), b, 0);
    tail.insert(tail.end(), k - b, 1);
  }
  tail.insert(tail.end(), y.vec().begin(), y.vec().end());
  return phi_inv(TransformPair{B, Word::unchecked(q, std::move(tail)), k});
}

std::pair<Word, Word> construct3_split(const Word& c, std::size_t k) {
  if (c.size() < 5 * k) throw ParameterError("word shorter than 5k");
  const auto t = phi(c, k);
  return {t.head, t.tail.slice(4 * k, t.tail.size() - 4 * k)};
}

std::string_view to_string(DetectKind kind) {
  switch (kind) {
    case DetectKind::kIrr: return "irr";
    case DetectKind::kAux: return "aux";
    case DetectKind::kCij: return "cij";
    case DetectKind::kC3: return "c3";
  }
  return "?";
}

std::vector<Word> enumerate_code(const DetectCodeSpec& spec, std::size_t cap) {
  const AuxParams& a = spec.params;
  a.validate();
  switch (spec.kind) {
    case DetectKind::kIrr:
      return enumerate_irreducible(a.q, a.k, a.n, cap);
    case DetectKind::kAux: {
      auto out = enumerate_rll(a.q, a.k, a.n, cap);
      std::erase_if(out, [&](const Word& z) { return !aux_member(z, a); });
      return out;
    }
    case DetectKind::kCij:
      return irreducible_where(a.q, a.k, a.n, cap, [&](const Word& z) {
        return aux_member(z, a);
      });
    case DetectKind::kC3: {
      if (a.n < 5 * a.k) throw ParameterError("C3 needs n >= 5k");
      const auto ys = enumerate_rll(a.q, a.k, a.n - 5 * a.k, cap);
      const auto heads = all_heads(a.q, a.k);
      if (heads.size() > cap / ys.size()) {
        throw CapExceeded("code enumeration exceeded cap");
      }
      std::vector<Word> out;
      for (const Word& B : heads) {
        for (const Word& y : ys) {
          out.push_back(construct3_encode(B, y, a.k, spec.reading));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

bool detect_member(const Word& x, const DetectCodeSpec& spec) {
  const AuxParams& a = spec.params;
  a.validate();
  if (x.q() != a.q || x.size() != a.n) return false;
  switch (spec.kind) {
    case DetectKind::kIrr:
      return a.n >= a.k && is_irreducible(x, a.k);
    case DetectKind::kAux:
      return is_rll(x, a.k) && aux_member(x, a);
    case DetectKind::kCij:
      return a.n >= a.k && cij_member(x, a);
    case DetectKind::kC3: {
      if (a.n < 5 * a.k) return false;
      auto [B, y] = construct3_split(x, a.k);
      return is_rll(y, a.k) && construct3_encode(B, y, a.k, spec.reading) == x;
    }
  }
  return false;
}

DetectDecoder::DetectDecoder(const std::vector<Word>& code, std::size_t k)
    : k_(k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  for (const Word& c : code) {
    if (index_.empty()) n_ = c.size();
    if (c.size() != n_) throw ParameterError("codewords differ in length");
    if (c.size() < k || !is_irreducible(c, k)) {
      throw ParameterError("codeword " + c.str() + " is not irreducible");
    }
    index_.insert(c);
  }
}

DecodeOutcome DetectDecoder::decode(const Word& y) const {
  if (y.size() < k_ || index_.empty()) return {};
  if (detail::root_length(y.vec(), k_, y.q()) != n_) return {};
  Word r = root(y, k_);
  if (!index_.count(r)) return {};
  return {std::move(r)};
}

}  // namespace dupcode
