// Copyright 2026 The Safe3Step Authors
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

#include <cmath>
#include <cstddef>

#include "s3s/sweep_kernels.hpp"

namespace s3s::kernels {

// Reference kernel. The SIMD variants are tested for bitwise equality
// against this one, so the operation order here is part of the contract.
double sweep_scalar(const SweepArgs& a) {
  const std::size_t n = a.next.size();
  double max_delta = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const std::int32_t begin = a.offsets[t];
    const std::int32_t end = a.offsets[t + 1];
    const double r = a.ratings[t];
    double next = r;
    if (end > begin) {
      double acc = 0.0;
      for (std::int32_t k = begin; k < end; ++k) {
        const double term =
            a.ratings[static_cast<std::size_t>(a.opponents[k])] + a.margins[k];
        acc = acc + term;
      }
      const double mean = acc / static_cast<double>(end - begin);
      next = 0.5 * (r + mean);
    }
    a.next[t] = next;
    const double delta = std::fabs(next - r);
    if (delta > max_delta) max_delta = delta;
  }
  return max_delta;
}

}  // namespace s3s::kernels
