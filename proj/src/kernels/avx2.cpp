// Copyright 2026 The boundkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>

#include "boundkit/corpus_model.hpp"
#include "boundkit/kernels.hpp"

namespace boundkit::kernels::avx2 {
namespace {

// Byte-expansion table: bit i of the index becomes byte i of the value.
constexpr std::array<std::uint64_t, 256> make_expand_table() {
  std::array<std::uint64_t, 256> t{};
  for (std::uint32_t m = 0; m < 256; ++m) {
    std::uint64_t v = 0;
    for (std::uint32_t bit = 0; bit < 8; ++bit) {
      if (m & (1u << bit)) v |= std::uint64_t{1} << (8 * bit);
    }
    t[m] = v;
  }
  return t;
}

constexpr auto kExpand = make_expand_table();

// Local copy so no inline function from a shared header is emitted with AVX2
// code generation in this translation unit.
bool tail_is_separator(char32_t c, bool space_only) {
  if (space_only || c == 0x20) return c == 0x20;
  if (c >= 0x09 && c <= 0x0D) return true;
  switch (c) {
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

inline __m256i eq(__m256i v, std::uint32_t c) {
  return _mm256_cmpeq_epi32(v, _mm256_set1_epi32(static_cast<int>(c)));
}

// lo <= v <= lo + span, unsigned.
inline __m256i in_range(__m256i v, std::uint32_t lo, std::uint32_t span) {
  const __m256i shifted = _mm256_sub_epi32(v, _mm256_set1_epi32(static_cast<int>(lo)));
  const __m256i clamped = _mm256_min_epu32(shifted, _mm256_set1_epi32(static_cast<int>(span)));
  return _mm256_cmpeq_epi32(clamped, shifted);
}

inline __m256i whitespace_lanes(__m256i v) {
  __m256i m = _mm256_or_si256(eq(v, 0x20), in_range(v, 0x09, 4));
  // Everything else in White_Space is >= U+0085.
  if (_mm256_testz_si256(v, _mm256_set1_epi32(~0x7F))) return m;
  m = _mm256_or_si256(m, eq(v, 0x85));
  m = _mm256_or_si256(m, eq(v, 0xA0));
  m = _mm256_or_si256(m, eq(v, 0x1680));
  m = _mm256_or_si256(m, in_range(v, 0x2000, 10));
  m = _mm256_or_si256(m, in_range(v, 0x2028, 1));
  m = _mm256_or_si256(m, eq(v, 0x202F));
  m = _mm256_or_si256(m, eq(v, 0x205F));
  m = _mm256_or_si256(m, eq(v, 0x3000));
  return m;
}

inline __m256i abs_diff(const std::int64_t* a, const std::int64_t* b) {
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i d = _mm256_sub_epi64(va, vb);
  const __m256i sign = _mm256_cmpgt_epi64(_mm256_setzero_si256(), d);
  return _mm256_sub_epi64(_mm256_xor_si256(d, sign), sign);
}

}  // namespace

void separator_mask(std::span<const char32_t> text, SegmentationMode mode,
                    std::span<std::uint8_t> out) {
  const std::size_t n = text.size();
  std::size_t i = 0;
  const bool space_only = mode == SegmentationMode::kSpaceOnly;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(text.data() + i));
    const __m256i m = space_only ? eq(v, 0x20) : whitespace_lanes(v);
    const auto bits = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)));
    std::memcpy(out.data() + i, &kExpand[bits], 8);
  }
  for (; i < n; ++i) out[i] = tail_is_separator(text[i], space_only) ? 1 : 0;
}

std::uint64_t abs_diff_sum(std::span<const std::int64_t> a,
                           std::span<const std::int64_t> b) {
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, abs_diff(a.data() + i, b.data() + i));
  alignas(32) std::array<std::uint64_t, 4> lanes;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
  std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    const std::int64_t d = a[i] - b[i];
    sum += static_cast<std::uint64_t>(d < 0 ? -d : d);
  }
  return sum;
}

std::size_t count_abs_diff_above(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t threshold) {
  const std::size_t n = a.size();
  const __m256i thr = _mm256_set1_epi64x(threshold);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i gt = _mm256_cmpgt_epi64(abs_diff(a.data() + i, b.data() + i), thr);
    count += static_cast<std::size_t>(
        std::popcount(static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(gt)))));
  }
  for (; i < n; ++i) {
    const std::int64_t d = a[i] - b[i];
    count += (d < 0 ? -d : d) > threshold;
  }
  return count;
}

}  // namespace boundkit::kernels::avx2
