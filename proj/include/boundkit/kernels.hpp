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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a scalar reference in
// kernels::scalar and, where the build supports it, an AVX2 variant in
// kernels::avx2. The unqualified entry points dispatch on the ISA detected at
// startup (overridable with set_isa for testing and benchmarking).

namespace boundkit {

enum class SegmentationMode : std::uint8_t;

namespace kernels {

enum class Isa : std::uint8_t { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

// True when both the binary and the running CPU support `isa`.
bool isa_available(Isa isa) noexcept;
Isa active_isa() noexcept;
// Returns false (and leaves the active ISA unchanged) if unavailable.
bool set_isa(Isa isa) noexcept;

// out[i] = 1 if text[i] separates words under `mode`, else 0.
// out.size() must be >= text.size().
void separator_mask(std::span<const char32_t> text, SegmentationMode mode,
                    std::span<std::uint8_t> out);

// Sum of |a[i] - b[i]|. Inputs are labels, so |a[i] - b[i]| < 2^62 is assumed.
std::uint64_t abs_diff_sum(std::span<const std::int64_t> a,
                           std::span<const std::int64_t> b);

// Number of i with |a[i] - b[i]| > threshold.
std::size_t count_abs_diff_above(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t threshold);

namespace scalar {
void separator_mask(std::span<const char32_t> text, SegmentationMode mode,
                    std::span<std::uint8_t> out);
std::uint64_t abs_diff_sum(std::span<const std::int64_t> a,
                           std::span<const std::int64_t> b);
std::size_t count_abs_diff_above(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t threshold);
}  // namespace scalar

#if defined(BOUNDKIT_HAVE_AVX2)
namespace avx2 {
void separator_mask(std::span<const char32_t> text, SegmentationMode mode,
                    std::span<std::uint8_t> out);
std::uint64_t abs_diff_sum(std::span<const std::int64_t> a,
                           std::span<const std::int64_t> b);
std::size_t count_abs_diff_above(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t threshold);
}  // namespace avx2
#endif

}  // namespace kernels
}  // namespace boundkit
