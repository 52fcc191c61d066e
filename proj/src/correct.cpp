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


#include "dupcode/correct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "dupcode/error.hpp"
#include "dupcode/simulate.hpp"
#include "dupcode/transform.hpp"

namespace dupcode {

namespace {

using Vec = std::vector<Symbol>;

unsigned mod_inv(unsigned a, unsigned q) {
  // Fermat, q prime.
  unsigned result = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

std::string key_of(const Vec& v) { return std::string(v.begin(), v.end()); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Symbol s) { return s == 0; });
}

/// Scales v so that its first nonzero entry is 1.
Vec normalized(Vec v, unsigned q) {
  auto it = std::find_if(v.begin(), v.end(), [](Symbol s) { return s != 0; });
  if (it == v.end()) return v;
  const unsigned inv = mod_inv(*it, q);
  for (Symbol& s : v) s = static_cast<Symbol>(s * inv % q);
  return v;
}

/// Solves the square system via the inverse; nullopt if singular.
std::optional<std::vector<Vec>> invert(std::vector<Vec> a, unsigned q) {
  const std::size_t m = a.size();
  std::vector<Vec> inv(m, Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const unsigned s = mod_inv(a[col][col], q);
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] = static_cast<Symbol>(a[col][j] * s % q);
      inv[col][j] = static_cast<Symbol>(inv[col][j] * s % q);
    }
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const unsigned f = a[row][col];
      for (std::size_t j = 0; j < m; ++j) {
        a[row][j] = static_cast<Symbol>((a[row][j] + q * q - f * a[col][j]) % q);
        inv[row][j] =
            static_cast<Symbol>((inv[row][j] + q * q - f * inv[col][j]) % q);
      }
    }
  }
  return inv;
}

BigInt pow_big(unsigned base, std::size_t e) {
  BigInt out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

void require_prime(unsigned q) {
  if (!is_prime(q)) {
    throw ParameterError("q=" + std::to_string(q) +
                         " is not prime; the Hamming code needs a field");
  }
}

}  // namespace

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hamming codes.

std::vector<Symbol> HammingCode::syndrome(const Word& x) const {
  if (x.q() != q || x.size() != n) {
    throw ParameterError("syndrome: word does not match the code (q=" +
                         std::to_string(q) + ", n=" + std::to_string(n) + ")");
  }
  Vec s(r, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      s[j] = static_cast<Symbol>((s[j] + columns[i][j] * x[i]) % q);
    }
  }
  return s;
}

std::uint64_t HammingCode::coset_index(const Word& x) const {
  std::uint64_t v = 0;
  for (Symbol s : syndrome(x)) v = v * q + s;
  return v;
}

std::uint64_t HammingCode::coset_count() const {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < r; ++i) c *= q;
  return c;
}

std::size_t hamming_redundancy(unsigned q, std::size_t n) {
  require_prime(q);
  std::size_t r = 1;
  // n(q-1) + 1 <= q^r
  BigInt need = BigInt(n) * (q - 1) + 1, have = q;
  while (have < need) {
    have *= q;
    ++r;
  }
  return r;
}

HammingCode shortened_hamming(unsigned q, std::size_t n) {
  require_prime(q);
  if (n < 1) throw ParameterError("Hamming code length must be >= 1");
  HammingCode code;
  code.q = q;
  code.n = n;
  code.r = hamming_redundancy(q, n);
  // Lexicographic walk over F_q^r, first component most significant,
  // keeping normalized vectors.
  Vec v(code.r, 0);
  while (code.columns.size() < n) {
    std::size_t j = code.r;
    while (j > 0) {
      --j;
      if (++v[j] < q) break;
      v[j] = 0;
    }
    if (!is_zero(v) && normalized(v, q) == v) code.columns.push_back(v);
  }
  return code;
}

bool cijl_member(const Word& x, const AuxParams& params, std::uint64_t ell) {
  if (!cij_member(x, params)) return false;
  const Word z = phi(x, params.k).joined();
  return shortened_hamming(params.q, z.size()).coset_index(z) == ell;
}

std::vector<Word> enumerate_cijl(const AuxParams& params, std::uint64_t ell,
                                 std::size_t cap) {
  require_prime(params.q);
  const HammingCode h = shortened_hamming(params.q, params.n);
  std::vector<Word> out;
  for (Word& x : enumerate_code({DetectKind::kCij, params}, cap)) {
    if (h.coset_index(phi(x, params.k).joined()) == ell) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

bool is_W(const Word& z, std::size_t k) {
  if (k < 1 || z.size() < k) {
    throw ParameterError("is_W needs k >= 1 and |z| >= k");
  }
  std::size_t weight = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    weight += z[i] != 0;
    if (i >= k) weight -= z[i - k] != 0;
    if (i + 1 >= k && weight < 2) return false;
  }
  return true;
}

namespace {

/// Zero-run skeleton: v = 0^{runs[0]} s_0 0^{runs[1]} s_1 ... 0^{runs.back()}.
struct Skeleton {
  std::vector<std::size_t> runs;
  Vec symbols;
};

Skeleton skeleton(const Vec& v) {
  Skeleton out;
  std::size_t run = 0;
  for (Symbol s : v) {
    if (s == 0) {
      ++run;
      continue;
    }
    out.runs.push_back(run);
    out.symbols.push_back(s);
    run = 0;
  }
  out.runs.push_back(run);
  return out;
}

/// v is w with some 0^k blocks inserted.
bool zero_insertion_of(const Skeleton& v, const Vec& w, std::size_t k) {
  const Skeleton sw = skeleton(w);
  if (sw.symbols != v.symbols) return false;
  for (std::size_t i = 0; i < sw.runs.size(); ++i) {
    if (v.runs[i] < sw.runs[i] || (v.runs[i] - sw.runs[i]) % k) return false;
  }
  return true;
}

}  // namespace

bool reachable_with_one_substitution(const Word& x, const Word& y,
                                     std::size_t k) {
  require_same_alphabet(x, y);
  if (x.size() < k || y.size() < x.size() || (y.size() - x.size()) % k) {
    return false;
  }
  const unsigned q = x.q();
  const TransformPair tx = phi(x, k), ty = phi(y, k);
  const Vec head_y = ty.head.vec();
  const Skeleton sv = skeleton(ty.tail.vec());
  if (tx.head == ty.head && zero_insertion_of(sv, tx.tail.vec(), k)) {
    return true;
  }
  // Substitution adding a at symbol p of z: head[p] += a when p < k,
  // tail[p-k] += a, tail[p] -= a.
  auto try_sub = [&](const Vec& z_head, const Vec& z_tail, std::size_t p) {
    for (unsigned a = 1; a < q; ++a) {
      Vec h = z_head, t = z_tail;
      if (p < k) h[p] = static_cast<Symbol>((h[p] + a) % q);
      if (p >= k) t[p - k] = static_cast<Symbol>((t[p - k] + a) % q);
      if (p < t.size()) t[p] = static_cast<Symbol>((t[p] + q - a) % q);
      if (h == head_y && zero_insertion_of(sv, t, k)) return true;
    }
    return false;
  };
  const Vec hx = tx.head.vec(), ux = tx.tail.vec();
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (try_sub(hx, ux, p)) return true;
  }
  if (y.size() == x.size()) return false;
  // Blocks inserted before the substitution matter only if they hold a
  // touched coordinate (p - k or p). Those two are k apart, so at most two
  // such blocks exist.
  for (std::size_t m = 0; m <= ux.size(); ++m) {
    Vec z = ux;
    z.insert(z.begin() + static_cast<std::ptrdiff_t>(m), k, 0);
    for (std::size_t p = m; p < m + 2 * k && p < z.size() + k; ++p) {
      if (try_sub(hx, z, p)) return true;
    }
  }
  if (y.size() < x.size() + 2 * k) return false;
  // Blocks at m1 <= m2 in x's tail occupy [m1, m1+k) and [m2+k, m2+2k)
  // afterwards; p - k must sit in the first and p in the second.
  for (std::size_t m1 = 0; m1 <= ux.size(); ++m1) {
    for (std::size_t m2 = m1; m2 < m1 + k && m2 <= ux.size(); ++m2) {
      Vec z = ux;
      z.insert(z.begin() + static_cast<std::ptrdiff_t>(m2), k, 0);
      z.insert(z.begin() + static_cast<std::ptrdiff_t>(m1), k, 0);
      for (std::size_t p = m2 + k; p < m1 + 2 * k; ++p) {
        if (try_sub(hx, z, p)) return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// W-block code.

WBlockCode::WBlockCode(unsigned q, std::size_t k, std::size_t n)
    : q_(q), k_(k), n_(n) {
  (void)Alphabet(q);
  if (k < 3) throw ParameterError("W-block code needs k >= 3");
  if (n < k) throw ParameterError("W-block code needs n >= k");
  for (std::size_t i = 0; i < n; ++i) forced_count_ += forced(i);
  size_ = pow_big(q - 1, forced_count_) * pow_big(q, n - forced_count_);
  payload_space_ = 1;
  while (payload_space_ * q <= size_) {
    payload_space_ *= q;
    ++payload_length_;
  }
}

bool WBlockCode::forced(std::size_t i) const {
  const std::size_t j = (i + 1) % k_;
  return j == 0 || j == k_ - 1;
}

Word WBlockCode::encode_index(const BigInt& index) const {
  if (index < 0 || index >= size_) {
    throw ParameterError("W-block index out of range");
  }
  Vec out(n_);
  BigInt rest = index;
  for (std::size_t i = n_; i-- > 0;) {
    const unsigned radix = forced(i) ? q_ - 1 : q_;
    const unsigned digit = static_cast<unsigned>(rest % radix);
    rest /= radix;
    out[i] = static_cast<Symbol>(forced(i) ? digit + 1 : digit);
  }
  return Word::unchecked(q_, std::move(out));
}

std::optional<BigInt> WBlockCode::decode_index(const Word& z) const {
  if (z.q() != q_ || z.size() != n_) return std::nullopt;
  BigInt index = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (forced(i)) {
      if (z[i] == 0) return std::nullopt;
      index = index * (q_ - 1) + (z[i] - 1);
    } else {
      index = index * q_ + z[i];
    }
  }
  return index;
}

Word WBlockCode::encode(const Word& payload) const {
  if (payload.q() != q_ || payload.size() != payload_length_) {
    throw ParameterError("W-block payload must have " +
                         std::to_string(payload_length_) + " symbols over q=" +
                         std::to_string(q_));
  }
  BigInt index = 0;
  for (Symbol s : payload.symbols()) index = index * q_ + s;
  return encode_index(index);
}

std::optional<Word> WBlockCode::decode(const Word& z) const {
  auto index = decode_index(z);
  if (!index || *index >= payload_space_) return std::nullopt;
  Vec out(payload_length_);
  BigInt rest = *index;
  for (std::size_t i = payload_length_; i-- > 0;) {
    out[i] = static_cast<Symbol>(static_cast<unsigned>(rest % q_));
    rest /= q_;
  }
  return Word::unchecked(q_, std::move(out));
}

Word w_block_encode(const Word& payload, std::size_t k) {
  if (payload.empty()) throw ParameterError("empty W-block payload");
  if (k < 3) throw ParameterError("W-block code needs k >= 3");
  // Payload length grows by at most one per extra symbol, so the scan
  // below hits |payload| exactly.
  for (std::size_t n = k;; ++n) {
    WBlockCode code(payload.q(), k, n);
    if (code.payload_length() == payload.size()) return code.encode(payload);
    if (code.payload_length() > payload.size()) {
      throw ParameterError("no W-block length carries this payload length");
    }
  }
}

Word w_block_decode(const Word& z, std::size_t k) {
  if (k < 3 || z.size() < k) {
    throw ParameterError("W-block decode needs k >= 3 and |z| >= k");
  }
  auto out = WBlockCode(z.q(), k, z.size()).decode(z);
  if (!out || out->empty()) throw ParameterError("not a W-block codeword");
  return *out;
}

// ---------------------------------------------------------------------------
// 1S-correcting code.
//
// Check system over the symbol word x (rows, all mod q):
//   head rows        x_j = 1 for j <= k
//   fixed rows       x_{c+k} - x_c = 1 for every fixed tail coordinate c
//   Hamming rows     sum_j h_j x_j = 0
// The Hamming columns h_j are picked so that the full columns are nonzero
// and pairwise independent. Then any two solutions are at Hamming distance
// >= 3, and a single substitution is located from its residual.

EccCode::EccCode(EccCodeSpec spec, WBlockCode info)
    : spec_(std::move(spec)), info_(std::move(info)) {}

bool EccCode::prepare(std::uint64_t attempt) {
  const unsigned q = spec_.q;
  const std::size_t k = spec_.k, n = spec_.n, r = spec_.r;

  fixed_coords_.clear();
  for (std::size_t c = 0; c < n - k; ++c) {
    const TailRole role = spec_.tail_roles[c];
    bool fixed = role == TailRole::kSpare || role == TailRole::kCushion;
    // Over F_2 the forced info symbols are constants too.
    if (q == 2 && role == TailRole::kInfo) fixed = info_.forced(c);
    if (fixed) fixed_coords_.push_back(c);
  }
  std::vector<std::size_t> row_of(n - k, SIZE_MAX);
  for (std::size_t i = 0; i < fixed_coords_.size(); ++i) {
    row_of[fixed_coords_[i]] = k + i;
  }
  const std::size_t srows = k + fixed_coords_.size();

  // Candidate Hamming columns, in lexicographic order; later attempts use
  // shuffled orders.
  std::vector<Vec> candidates;
  {
    Vec v(r, 0);
    for (;;) {
      candidates.push_back(v);
      std::size_t j = r;
      while (j > 0) {
        --j;
        if (++v[j] < q) break;
        v[j] = 0;
      }
      if (is_zero(v)) break;
    }
  }
  if (attempt > 0) {
    std::mt19937_64 gen(attempt);
    std::shuffle(candidates.begin(), candidates.end(), gen);
  }

  std::unordered_map<std::string, bool> used;
  spec_.hamming_columns.assign(n, Vec(r, 0));
  std::vector<Vec> full(n);
  for (std::size_t m = 0; m < n; ++m) {
    Vec structural(srows, 0);
    if (m < k) structural[m] = 1;
    if (m >= k && row_of[m - k] != SIZE_MAX) {
      structural[row_of[m - k]] = static_cast<Symbol>(
          (structural[row_of[m - k]] + 1) % q);
    }
    if (m < n - k && row_of[m] != SIZE_MAX) {
      structural[row_of[m]] =
          static_cast<Symbol>((structural[row_of[m]] + q - 1) % q);
    }
    bool placed = false;
    for (const Vec& h : candidates) {
      Vec col = structural;
      col.insert(col.end(), h.begin(), h.end());
      if (is_zero(col)) continue;
      const std::string key = key_of(normalized(col, q));
      if (used.count(key)) continue;
      used[key] = true;
      spec_.hamming_columns[m] = h;
      full[m] = std::move(col);
      placed = true;
      break;
    }
    if (!placed) return false;
  }

  // Parity coordinate c moves x at c+k, c+2k, ...
  std::vector<Vec> a(r, Vec(r, 0));
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t m = spec_.parity_coords[t] + k; m < n; m += k) {
      for (std::size_t j = 0; j < r; ++j) {
        a[j][t] = static_cast<Symbol>(
            (a[j][t] + spec_.hamming_columns[m][j]) % q);
      }
    }
  }
  auto inv = invert(a, q);
  if (!inv) return false;
  parity_inverse_ = std::move(*inv);

  table_.clear();
  for (std::size_t m = 0; m < n; ++m) {
    for (unsigned s = 1; s < q; ++s) {
      Vec v = full[m];
      for (Symbol& e : v) e = static_cast<Symbol>(e * s % q);
      table_[key_of(v)] = {m, static_cast<Symbol>(s)};
    }
  }
  return true;
}

EccCode EccCode::build(unsigned q, std::size_t k, std::size_t r) {
  require_prime(q);
  if (k < 3) throw ParameterError("the correcting code needs k >= 3");
  if (r < 2) throw ParameterError("the correcting code needs r >= 2");
  std::size_t N = 1, pw = 1;
  for (std::size_t i = 1; i < r; ++i) {
    pw *= q;
    N += pw;
    if (N > 1'000'000) throw ParameterError("r too large");
  }
  const std::size_t parity_blocks = (r + k - 3) / (k - 2);
  constexpr std::uint64_t kAttempts = 64;
  for (std::size_t info = N; info >= 1; --info) {
    EccCodeSpec spec;
    spec.q = q;
    spec.k = k;
    spec.r = r;
    spec.N = N;
    spec.info_blocks = info;
    spec.parity_blocks = parity_blocks;
    spec.n = k * (1 + info + parity_blocks);
    spec.tail_roles.assign(info * k, TailRole::kInfo);
    std::size_t slots = 0;
    for (std::size_t b = 0; b < parity_blocks; ++b) {
      for (std::size_t s = 0; s < k - 2; ++s, ++slots) {
        if (slots < r) {
          spec.parity_coords.push_back(spec.tail_roles.size());
          spec.tail_roles.push_back(TailRole::kParity);
        } else {
          spec.tail_roles.push_back(TailRole::kSpare);
        }
      }
      spec.tail_roles.push_back(TailRole::kCushion);
      spec.tail_roles.push_back(TailRole::kCushion);
    }
    EccCode code(std::move(spec), WBlockCode(q, k, info * k));
    if (code.payload_length() == 0) continue;
    for (std::uint64_t attempt = 0; attempt < kAttempts; ++attempt) {
      if (code.prepare(attempt)) return code;
    }
  }
  throw ParameterError("no correcting-code layout exists for these q, k, r");
}

BigInt EccCode::size() const { return pow_big(spec_.q, payload_length()); }

Word EccCode::encode(const Word& payload) const {
  const unsigned q = spec_.q;
  const std::size_t k = spec_.k, n = spec_.n, r = spec_.r;
  Word info = info_.encode(payload);
  Vec tail(n - k, 1);
  std::copy(info.symbols().begin(), info.symbols().end(), tail.begin());
  for (std::size_t c : spec_.parity_coords) tail[c] = 0;
  Word x0 = phi_inv(TransformPair{Word::constant(q, k, 1),
                                  Word::unchecked(q, tail), k});
  Vec s(r, 0);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < r; ++j) {
      s[j] = static_cast<Symbol>((s[j] + spec_.hamming_columns[m][j] * x0[m]) %
                                 q);
    }
  }
  for (std::size_t t = 0; t < r; ++t) {
    unsigned p = 0;
    for (std::size_t j = 0; j < r; ++j) p += parity_inverse_[t][j] * (q - s[j]);
    tail[spec_.parity_coords[t]] = static_cast<Symbol>(p % q);
  }
  return phi_inv(TransformPair{Word::constant(q, k, 1),
                               Word::unchecked(q, std::move(tail)), k});
}

std::vector<Symbol> EccCode::residual(const std::vector<Symbol>& x) const {
  const unsigned q = spec_.q;
  const std::size_t k = spec_.k;
  Vec out;
  out.reserve(k + fixed_coords_.size() + spec_.r);
  for (std::size_t j = 0; j < k; ++j) {
    out.push_back(static_cast<Symbol>((x[j] + q - 1) % q));
  }
  for (std::size_t c : fixed_coords_) {
    out.push_back(static_cast<Symbol>((x[c + k] + 2 * q - x[c] - 1) % q));
  }
  for (std::size_t j = 0; j < spec_.r; ++j) {
    unsigned s = 0;
    for (std::size_t m = 0; m < x.size(); ++m) {
      s += spec_.hamming_columns[m][j] * x[m];
    }
    out.push_back(static_cast<Symbol>(s % q));
  }
  return out;
}

std::optional<Word> EccCode::payload_of(const Word& x) const {
  const std::size_t k = spec_.k;
  if (x.q() != spec_.q || x.size() != spec_.n) return std::nullopt;
  if (!is_zero(residual(x.vec()))) return std::nullopt;
  const TransformPair t = phi(x, k);
  for (std::size_t c = 0; c < t.tail.size(); ++c) {
    const TailRole role = spec_.tail_roles[c];
    if ((role == TailRole::kSpare || role == TailRole::kCushion) &&
        t.tail[c] != 1) {
      return std::nullopt;
    }
  }
  return info_.decode(t.tail.slice(0, spec_.info_blocks * k));
}

bool EccCode::is_codeword(const Word& x) const {
  return payload_of(x).has_value();
}

std::optional<EccCode::Fix> EccCode::correct(
    const std::vector<Symbol>& x) const {
  Vec fixed = x;
  std::optional<std::size_t> where;
  const Vec res = residual(x);
  if (!is_zero(res)) {
    auto it = table_.find(key_of(res));
    if (it == table_.end()) return std::nullopt;
    const auto [m, a] = it->second;
    fixed[m] = static_cast<Symbol>((fixed[m] + spec_.q - a) % spec_.q);
    where = m + 1;
  }
  Word codeword = Word::unchecked(spec_.q, std::move(fixed));
  auto payload = payload_of(codeword);
  if (!payload) return std::nullopt;
  return Fix{std::move(codeword), std::move(*payload), where};
}

namespace {

/// Deletes 0^k runs from v until |v| <= target. Returns the step count.
std::size_t dedup(Vec& v, std::size_t k, std::size_t target, DedupOrder order,
                  Rng* rng) {
  std::size_t steps = 0;
  while (v.size() > target) {
    std::vector<std::size_t> starts;
    std::size_t run = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      run = v[i] == 0 ? run + 1 : 0;
      if (run >= k) {
        starts.push_back(i + 1 - k);
        if (order == DedupOrder::kLeftmost) break;
      }
    }
    if (starts.empty()) break;
    std::size_t at = starts.front();
    if (order == DedupOrder::kRandom && rng) {
      at = starts[rng->uniform(0, starts.size() - 1)];
    }
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(at),
            v.begin() + static_cast<std::ptrdiff_t>(at + k));
    ++steps;
  }
  return steps;
}

}  // namespace

EccDecodeReport EccCode::decode(const Word& y,
                                const EccDecodeOptions& options) const {
  const unsigned q = spec_.q;
  const std::size_t k = spec_.k, n = spec_.n;
  EccDecodeReport report;
  if (y.q() != q || y.size() < n || (y.size() - n) % k != 0) return report;

  Rng rng(options.seed);
  const TransformPair t = phi(y, k);
  const Word& u = t.head;
  Vec v = t.tail.vec();
  report.dedup_steps = dedup(v, k, n - k, options.order, &rng);

  auto attempt = [&](const Vec& tail) {
    return correct(
        phi_inv(TransformPair{u, Word::unchecked(q, tail), k}).vec());
  };

  if (v.size() == n - k) {
    if (auto got = attempt(v)) {
      report.ok = true;
      report.payload = std::move(got->payload);
      report.corrected_position = got->position;
    }
    return report;
  }

  // No 0^k left but the tail is still too long: the substitution broke a
  // duplicated zero run. A window of weight one marks a candidate symbol;
  // pushing it k places right restores the run. Several windows can
  // qualify and a wrong one may land within one substitution of another
  // codeword, so each candidate is checked against y itself.
  std::vector<std::size_t> lone;
  std::size_t weight = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    weight += v[i] != 0;
    if (i >= k) weight -= v[i - k] != 0;
    if (i + 1 >= k && weight == 1) {
      for (std::size_t j = i + 1 - k; j <= i; ++j) {
        if (v[j] != 0) lone.push_back(j);
      }
    }
  }
  std::sort(lone.begin(), lone.end());
  lone.erase(std::unique(lone.begin(), lone.end()), lone.end());

  std::optional<Fix> agreed;
  std::size_t steps = 0;
  for (std::size_t j : lone) {
    Vec w = v;
    if (j + k < w.size()) w[j + k] = static_cast<Symbol>((w[j + k] + w[j]) % q);
    w[j] = 0;
    const std::size_t more = dedup(w, k, n - k, options.order, &rng);
    if (w.size() != n - k) continue;
    auto got = attempt(w);
    if (!got || (agreed && agreed->codeword == got->codeword)) continue;
    if (!reachable_with_one_substitution(got->codeword, y, k)) continue;
    if (agreed) return report;  // two consistent codewords
    agreed = std::move(got);
    steps = more;
  }
  if (agreed) {
    report.ok = true;
    report.payload = std::move(agreed->payload);
    report.corrected_position = agreed->position;
    report.dedup_steps += steps;
  }
  return report;
}

std::vector<Word> EccCode::codewords(std::size_t cap) const {
  const BigInt total = size();
  if (total > cap) throw CapExceeded("codeword count exceeds the cap");
  const std::size_t count = static_cast<std::size_t>(total);
  const std::size_t len = payload_length();
  std::vector<Word> out;
  out.reserve(count);
  Vec p(len, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    out.push_back(encode(Word::unchecked(spec_.q, p)));
    for (std::size_t j = len; j-- > 0;) {
      if (++p[j] < spec_.q) break;
      p[j] = 0;
    }
  }
  return out;
}

Word ecc_encode(const Word& payload, const EccCode& code) {
  return code.encode(payload);
}

EccDecodeReport ecc_decode(const Word& y, const EccCode& code,
                           const EccDecodeOptions& options) {
  return code.decode(y, options);
}

}  // namespace dupcode
