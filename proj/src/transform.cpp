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

#include "dupcode/transform.hpp"

#include "dupcode/error.hpp"

namespace dupcode {

namespace {

void require_k(std::size_t k) {
  if (k < 1) throw ParameterError("duplication length k must be >= 1");
}

void require_length(const Word& x, std::size_t k) {
  require_k(k);
  if (x.size() < k) {
    throw ParameterError("word of length " + std::to_string(x.size()) +
                         " is shorter than k=" + std::to_string(k));
  }
}

}  // namespace

TransformPair phi(const Word& x, std::size_t k) {
  require_length(x, k);
  const unsigned q = x.q();
  const std::size_t n = x.size();
  std::vector<Symbol> tail(n - k);
  for (std::size_t i = 0; i + k < n; ++i) {
    tail[i] = static_cast<Symbol>((x[i + k] + q - x[i]) % q);
  }
  return {x.slice(0, k), Word::unchecked(q, std::move(tail)), k};
}

Word phi_inv(const TransformPair& p) {
  require_same_alphabet(p.head, p.tail);
  if (p.head.size() != p.k) {
    throw ParameterError("transform head must have length k");
  }
  const unsigned q = p.q();
  std::vector<Symbol> x(p.head.vec());
  x.resize(p.k + p.tail.size());
  for (std::size_t i = 0; i < p.tail.size(); ++i) {
    x[p.k + i] = static_cast<Symbol>((p.tail[i] + x[i]) % q);
  }
  return Word::unchecked(q, std::move(x));
}

Word phi_inv(const Word& joined, std::size_t k) {
  require_length(joined, k);
  return phi_inv(TransformPair{joined.slice(0, k),
                               joined.slice(k, joined.size() - k), k});
}

Word mu(const Word& z, std::size_t k) {
  require_k(k);
  std::vector<Symbol> out;
  out.reserve(z.size());
  std::size_t run = 0;
  for (Symbol s : z.symbols()) {
    if (s == 0) {
      ++run;
      continue;
    }
    out.insert(out.end(), run % k, 0);
    run = 0;
    out.push_back(s);
  }
  out.insert(out.end(), run % k, 0);
  return Word::unchecked(z.q(), std::move(out));
}

namespace detail {

void root_into(const std::vector<Symbol>& x, std::size_t k, unsigned q,
               std::vector<Symbol>& out) {
  out.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
  // Walk the tail, keeping each zero run modulo k, and rebuild the symbol
  // word on the fly: out_{j+k} = t_j + out_j.
  std::size_t run = 0;
  auto emit = [&](Symbol t) {
    out.push_back(static_cast<Symbol>((t + out[out.size() - k]) % q));
  };
  for (std::size_t i = k; i < x.size(); ++i) {
    const Symbol t = static_cast<Symbol>((x[i] + q - x[i - k]) % q);
    if (t == 0) {
      ++run;
      continue;
    }
    for (std::size_t r = 0; r < run % k; ++r) emit(0);
    run = 0;
    emit(t);
  }
  for (std::size_t r = 0; r < run % k; ++r) emit(0);
}

std::size_t root_length(const std::vector<Symbol>& x, std::size_t k,
                        unsigned q) {
  std::size_t len = k;
  std::size_t run = 0;
  for (std::size_t i = k; i < x.size(); ++i) {
    if (x[i] == x[i - k]) {
      ++run;
    } else {
      len += run % k + 1;
      run = 0;
    }
  }
  (void)q;
  return len + run % k;
}

}  // namespace detail

Word root(const Word& x, std::size_t k) {
  require_length(x, k);
  std::vector<Symbol> out;
  detail::root_into(x.vec(), k, x.q(), out);
  return Word::unchecked(x.q(), std::move(out));
}

bool is_rll(const Word& z, std::size_t k) {
  require_k(k);
  std::size_t run = 0;
  for (Symbol s : z.symbols()) {
    run = s == 0 ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

bool is_irreducible(const Word& x, std::size_t k) {
  require_length(x, k);
  std::size_t run = 0;
  for (std::size_t i = k; i < x.size(); ++i) {
    run = x[i] == x[i - k] ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

Word epsilon_word(std::size_t i, std::size_t n, std::size_t k, unsigned q) {
  require_k(k);
  if (i < 1 || i > n) {
    throw ParameterError("epsilon index " + std::to_string(i) +
                         " out of range 1.." + std::to_string(n));
  }
  std::vector<Symbol> out(n, 0);
  out[i - 1] = 1;
  if (i + k <= n) out[i + k - 1] = static_cast<Symbol>(q - 1);
  return Word(q, std::move(out));
}

Word sigma_coefficients(const Word& u, const Word& v, std::size_t k) {
  require_k(k);
  require_same_alphabet(u, v);
  if (u.size() != v.size()) {
    throw ParameterError("substitution distance needs equal lengths");
  }
  const unsigned q = u.q();
  std::vector<Symbol> a(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    unsigned ai = (v[i] + q - u[i]) % q;
    if (i >= k) ai = (ai + a[i - k]) % q;
    a[i] = static_cast<Symbol>(ai);
  }
  return Word::unchecked(q, std::move(a));
}

std::size_t sigma_distance(const Word& u, const Word& v, std::size_t k) {
  return hamming_weight(sigma_coefficients(u, v, k));
}

}  // namespace dupcode
