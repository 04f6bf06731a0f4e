// Copyright 2026 The qkdpa Authors
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

#include "qkdpa/detail/limb_kernels.hpp"

#if defined(__x86_64__)
#include <x86intrin.h>
#endif

#include <algorithm>
#include <cassert>

namespace qkdpa::detail {

using DLimb = unsigned __int128;

namespace {

#if defined(__x86_64__)
inline unsigned char add_carry(unsigned char c, Limb a, Limb b, Limb* out) {
  unsigned long long t;
  c = _addcarry_u64(c, a, b, &t);
  *out = t;
  return c;
}
inline unsigned char sub_borrow(unsigned char c, Limb a, Limb b, Limb* out) {
  unsigned long long t;
  c = _subborrow_u64(c, a, b, &t);
  *out = t;
  return c;
}
#else
inline unsigned char add_carry(unsigned char c, Limb a, Limb b, Limb* out) {
  const Limb s = a + c;
  const Limb t = s + b;
  *out = t;
  return static_cast<unsigned char>((s < a) | (t < s));
}
inline unsigned char sub_borrow(unsigned char c, Limb a, Limb b, Limb* out) {
  const Limb d = a - b;
  *out = d - c;
  return static_cast<unsigned char>((a < b) | (d < c));
}
#endif

// r[0, n) = a + b + c over n limbs; r may alias a or b.
unsigned char add_loop(Limb* r, const Limb* a, const Limb* b, std::size_t n,
                       unsigned char c) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    Limb t0, t1, t2, t3;
    c = add_carry(c, a[i], b[i], &t0);
    c = add_carry(c, a[i + 1], b[i + 1], &t1);
    c = add_carry(c, a[i + 2], b[i + 2], &t2);
    c = add_carry(c, a[i + 3], b[i + 3], &t3);
    r[i] = t0;
    r[i + 1] = t1;
    r[i + 2] = t2;
    r[i + 3] = t3;
  }
  for (; i < n; ++i) c = add_carry(c, a[i], b[i], &r[i]);
  return c;
}

unsigned char sub_loop(Limb* r, const Limb* a, const Limb* b, std::size_t n,
                       unsigned char c) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    Limb t0, t1, t2, t3;
    c = sub_borrow(c, a[i], b[i], &t0);
    c = sub_borrow(c, a[i + 1], b[i + 1], &t1);
    c = sub_borrow(c, a[i + 2], b[i + 2], &t2);
    c = sub_borrow(c, a[i + 3], b[i + 3], &t3);
    r[i] = t0;
    r[i + 1] = t1;
    r[i + 2] = t2;
    r[i + 3] = t3;
  }
  for (; i < n; ++i) c = sub_borrow(c, a[i], b[i], &r[i]);
  return c;
}

}  // namespace

Limb add_n(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b) {
  assert(r.size() == a.size() && a.size() >= b.size());
  Limb carry = add_loop(r.data(), a.data(), b.data(), b.size(), 0);
  for (std::size_t i = b.size(); i < a.size(); ++i) {
    r[i] = a[i] + carry;
    carry = r[i] < carry;
  }
  return carry;
}

Limb add_into(LimbSpan r, ConstLimbSpan a) {
  assert(a.size() <= r.size());
  Limb carry = add_loop(r.data(), r.data(), a.data(), a.size(), 0);
  for (std::size_t i = a.size(); carry && i < r.size(); ++i) {
    r[i] += 1;
    carry = r[i] == 0;
  }
  return carry;
}

Limb add_1(LimbSpan r, Limb v) {
  for (std::size_t i = 0; i < r.size() && v; ++i) {
    r[i] += v;
    v = r[i] < v;
  }
  return v;
}

Limb sub_n(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b) {
  assert(r.size() == a.size() && a.size() >= b.size());
  Limb borrow = sub_loop(r.data(), a.data(), b.data(), b.size(), 0);
  for (std::size_t i = b.size(); i < a.size(); ++i) {
    const Limb x = a[i];
    r[i] = x - borrow;
    borrow = x < borrow;
  }
  return borrow;
}

Limb sub_into(LimbSpan r, ConstLimbSpan a) {
  assert(a.size() <= r.size());
  Limb borrow = sub_loop(r.data(), r.data(), a.data(), a.size(), 0);
  for (std::size_t i = a.size(); borrow && i < r.size(); ++i) {
    borrow = r[i] == 0;
    r[i] -= 1;
  }
  return borrow;
}

Limb sub_1(LimbSpan r, Limb v) {
  for (std::size_t i = 0; i < r.size() && v; ++i) {
    const Limb x = r[i];
    r[i] = x - v;
    v = x < v;
  }
  return v;
}

Limb addmul_1(LimbSpan r, ConstLimbSpan a, Limb m) {
  Limb carry = 0;
  Limb* rp = r.data();
  const Limb* ap = a.data();
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const DLimb t0 = static_cast<DLimb>(ap[i]) * m + rp[i] + carry;
    rp[i] = static_cast<Limb>(t0);
    const DLimb t1 = static_cast<DLimb>(ap[i + 1]) * m + rp[i + 1] +
                     static_cast<Limb>(t0 >> 64);
    rp[i + 1] = static_cast<Limb>(t1);
    const DLimb t2 = static_cast<DLimb>(ap[i + 2]) * m + rp[i + 2] +
                     static_cast<Limb>(t1 >> 64);
    rp[i + 2] = static_cast<Limb>(t2);
    const DLimb t3 = static_cast<DLimb>(ap[i + 3]) * m + rp[i + 3] +
                     static_cast<Limb>(t2 >> 64);
    rp[i + 3] = static_cast<Limb>(t3);
    carry = static_cast<Limb>(t3 >> 64);
  }
  for (; i < n; ++i) {
    const DLimb t = static_cast<DLimb>(ap[i]) * m + rp[i] + carry;
    rp[i] = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  return carry;
}

// Runs from the top down, so r may sit at or above a in memory.
Limb lshift(LimbSpan r, ConstLimbSpan a, unsigned bits) {
  assert(r.size() == a.size() && bits < 64);
  const std::size_t n = a.size();
  if (bits == 0) {
    std::copy_backward(a.begin(), a.end(), r.end());
    return 0;
  }
  if (n == 0) return 0;
  const unsigned back = 64 - bits;
  Limb hi = a[n - 1];
  const Limb out = hi >> back;
  for (std::size_t i = n - 1; i > 0; --i) {
    const Limb lo = a[i - 1];
    r[i] = (hi << bits) | (lo >> back);
    hi = lo;
  }
  r[0] = hi << bits;
  return out;
}

// Runs from the bottom up, so r may sit at or below a in memory.
Limb rshift(LimbSpan r, ConstLimbSpan a, unsigned bits) {
  assert(r.size() == a.size() && bits < 64);
  const std::size_t n = a.size();
  if (bits == 0) {
    std::copy(a.begin(), a.end(), r.begin());
    return 0;
  }
  if (n == 0) return 0;
  const unsigned back = 64 - bits;
  Limb lo = a[0];
  const Limb out = lo << back;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Limb hi = a[i + 1];
    r[i] = (lo >> bits) | (hi << back);
    lo = hi;
  }
  r[n - 1] = lo >> bits;
  return out;
}

int compare_n(ConstLimbSpan a, ConstLimbSpan b) {
  assert(a.size() == b.size());
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::size_t normalized_size(ConstLimbSpan a) {
  std::size_t n = a.size();
  while (n > 0 && a[n - 1] == 0) --n;
  return n;
}

bool is_zero(ConstLimbSpan a) {
  return std::all_of(a.begin(), a.end(), [](Limb x) { return x == 0; });
}

void extract_bits(LimbSpan dst, ConstLimbSpan src, std::size_t bit_offset,
                  std::size_t nbits) {
  std::fill(dst.begin(), dst.end(), Limb{0});
  const std::size_t word = bit_offset / kLimbBits;
  const unsigned shift = static_cast<unsigned>(bit_offset % kLimbBits);
  const std::size_t out_limbs =
      std::min(dst.size(), (nbits + kLimbBits - 1) / kLimbBits);
  for (std::size_t i = 0; i < out_limbs; ++i) {
    const std::size_t j = word + i;
    if (j >= src.size()) break;
    Limb v = src[j] >> shift;
    if (shift && j + 1 < src.size()) v |= src[j + 1] << (kLimbBits - shift);
    dst[i] = v;
  }
  if (out_limbs > 0 && nbits % kLimbBits) {
    dst[out_limbs - 1] &= (Limb{1} << (nbits % kLimbBits)) - 1;
  }
}

void mul_schoolbook(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b) {
  assert(r.size() == a.size() + b.size());
  std::fill(r.begin(), r.end(), Limb{0});
  if (a.size() < b.size()) std::swap(a, b);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) continue;
    r[j + a.size()] = addmul_1(r.subspan(j, a.size()), a, b[j]);
  }
}

}  // namespace qkdpa::detail
