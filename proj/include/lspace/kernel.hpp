// Copyright (c) 2026 The lspace Authors. All Rights Reserved.
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

#include <cstdint>
#include <vector>

namespace lspace {

// Integer problem behind the sup/inf over k of the floor-sum formulas.
//
// For k = 1..period define
//   G(k) = base + sum_t plus_t(k) - sum_t minus_t(k),
// where each term walks the residues W(k) = (W(k-1) + step) mod period,
// W(0) = 0. A slope a/b with period P contributes the step (P/b)*(a mod b),
// so that W(k) = P * frac(a k / b).
struct KernelProblem {
  int64_t period = 1;
  int64_t base = 0;
  std::vector<int64_t> plus_steps;
  std::vector<int64_t> minus_steps;
};

// argmax of G(k)/k over k in [1, period]; ties go to the smallest k.
struct KernelResult {
  int64_t g = 0;
  int64_t k = 1;
};

enum class KernelImpl { Auto, Scalar, Avx2, Neon };

KernelResult best_ratio_scalar(const KernelProblem& prob);
// Return false when the variant is not compiled in, the CPU lacks it, or the
// problem exceeds the 32-bit lane range the variant relies on.
bool best_ratio_avx2(const KernelProblem& prob, KernelResult& out);
bool best_ratio_neon(const KernelProblem& prob, KernelResult& out);

// Runtime dispatch; honors set_kernel_impl.
KernelResult best_ratio(const KernelProblem& prob);

void set_kernel_impl(KernelImpl impl);
KernelImpl kernel_impl();
const char* kernel_name(KernelImpl impl);
bool cpu_has_avx2();

// Largest period the k-search accepts. Defaults to 10^6, or to the value of
// LSPACE_PERIOD_CAP when set.
uint64_t period_cap();
void set_period_cap(uint64_t cap);

}  // namespace lspace
