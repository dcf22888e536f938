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

#include <atomic>

#include "boundkit/corpus_model.hpp"
#include "boundkit/kernels.hpp"

namespace boundkit::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(BOUNDKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() noexcept { return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar; }

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
  return isa == Isa::kScalar || (isa == Isa::kAvx2 && cpu_has_avx2());
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

void separator_mask(std::span<const char32_t> text, SegmentationMode mode,
                    std::span<std::uint8_t> out) {
#if defined(BOUNDKIT_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::separator_mask(text, mode, out);
#endif
  scalar::separator_mask(text, mode, out);
}

std::uint64_t abs_diff_sum(std::span<const std::int64_t> a,
                           std::span<const std::int64_t> b) {
#if defined(BOUNDKIT_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::abs_diff_sum(a, b);
#endif
  return scalar::abs_diff_sum(a, b);
}

std::size_t count_abs_diff_above(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t threshold) {
#if defined(BOUNDKIT_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::count_abs_diff_above(a, b, threshold);
#endif
  return scalar::count_abs_diff_above(a, b, threshold);
}

}  // namespace boundkit::kernels
