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

#include <cstdint>

#include "boundkit/corpus_model.hpp"
#include "boundkit/kernels.hpp"

namespace boundkit::kernels::scalar {

void separator_mask(std::span<const char32_t> text, SegmentationMode mode,
                    std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    out[i] = is_separator(text[i], mode) ? 1 : 0;
  }
}

std::uint64_t abs_diff_sum(std::span<const std::int64_t> a,
                           std::span<const std::int64_t> b) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = a[i] - b[i];
    sum += static_cast<std::uint64_t>(d < 0 ? -d : d);
  }
  return sum;
}

std::size_t count_abs_diff_above(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t threshold) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = a[i] - b[i];
    n += (d < 0 ? -d : d) > threshold;
  }
  return n;
}

}  // namespace boundkit::kernels::scalar
