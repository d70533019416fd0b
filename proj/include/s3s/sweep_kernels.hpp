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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace s3s::kernels {

enum class Isa : std::uint8_t { kScalar, kAvx2 };

/// One relaxation sweep of the rating system, stored as a CSR schedule:
/// team t's games occupy [offsets[t], offsets[t+1]) of `opponents` and
/// `margins`, where margins[k] is the neutral-field margin of that game seen
/// from t. Every kernel computes, for each team,
///
///   mean = (sum_k (ratings[opponents[k]] + margins[k])) / degree
///   next = 0.5 * (ratings[t] + mean)
///
/// summing k in ascending order, so all kernels agree bit for bit. Teams
/// with no games keep their rating. Returns max_t |next[t] - ratings[t]|.
struct SweepArgs {
  std::span<const double> ratings;
  std::span<const std::int32_t> offsets;  // size = teams + 1
  std::span<const std::int32_t> opponents;
  std::span<const double> margins;
  std::span<double> next;
};

using SweepFn = double (*)(const SweepArgs&);

double sweep_scalar(const SweepArgs& args);

#if defined(S3S_HAVE_AVX2_KERNEL)
double sweep_avx2(const SweepArgs& args);
#endif

bool cpu_has_avx2() noexcept;

// Whether a kernel for `isa` is compiled in and the CPU can run it.
bool isa_available(Isa isa) noexcept;

// Widest available kernel.
Isa best_isa() noexcept;

// Throws s3s::Error if `isa` is not available.
SweepFn select_sweep(Isa isa);

std::string_view isa_name(Isa isa) noexcept;

}  // namespace s3s::kernels
