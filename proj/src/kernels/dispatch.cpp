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

#include "s3s/error.hpp"
#include "s3s/sweep_kernels.hpp"

namespace s3s::kernels {

bool cpu_has_avx2() noexcept {
#if (defined(__GNUC__) || defined(__clang__)) && \
    (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(S3S_HAVE_AVX2_KERNEL)
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept {
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

SweepFn select_sweep(Isa isa) {
  if (!isa_available(isa)) {
    throw Error("sweep kernel '" + std::string(isa_name(isa)) +
                "' is not available on this build or CPU");
  }
  switch (isa) {
    case Isa::kScalar:
      return &sweep_scalar;
    case Isa::kAvx2:
#if defined(S3S_HAVE_AVX2_KERNEL)
      return &sweep_avx2;
#else
      break;
#endif
  }
  return &sweep_scalar;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace s3s::kernels
