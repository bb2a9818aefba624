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

#include "lspace/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define LSPACE_HAVE_X86 1
#endif
#if defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace lspace {

namespace {

std::atomic<int> g_impl{static_cast<int>(KernelImpl::Auto)};
std::atomic<uint64_t> g_cap{0};

constexpr uint64_t kDefaultCap = 1000000;

// a/ka > b/kb with positive denominators.
bool ratio_greater(int64_t a, int64_t ka, int64_t b, int64_t kb) {
  return static_cast<__int128>(a) * kb > static_cast<__int128>(b) * ka;
}

// The SIMD variants keep G and k in 32 bits so a lane product fits in 64.
bool fits_i32_lanes(const KernelProblem& prob) {
  const int64_t lim = std::numeric_limits<int32_t>::max();
  if (prob.period >= lim) return false;
  __int128 terms = 1 + prob.plus_steps.size() + prob.minus_steps.size();
  __int128 bound = terms * prob.period + (prob.base < 0 ? -prob.base : prob.base);
  return bound < lim;
}

KernelResult reduce_lanes(const int64_t* g, const int64_t* k, int lanes, int64_t period) {
  KernelResult best{0, 0};
  for (int j = 0; j < lanes; ++j) {
    if (k[j] < 1 || k[j] > period) continue;
    if (best.k == 0 || ratio_greater(g[j], k[j], best.g, best.k) ||
        (!ratio_greater(best.g, best.k, g[j], k[j]) && k[j] < best.k)) {
      best = {g[j], k[j]};
    }
  }
  return best;
}

}  // namespace

KernelResult best_ratio_scalar(const KernelProblem& prob) {
  const int64_t P = prob.period;
  std::vector<int64_t> wp(prob.plus_steps.size(), 0), wm(prob.minus_steps.size(), 0);
  KernelResult best{0, 0};
  for (int64_t k = 1; k <= P; ++k) {
    int64_t g = prob.base;
    for (size_t t = 0; t < wp.size(); ++t) {
      int64_t w = wp[t] + prob.plus_steps[t];
      if (w >= P) w -= P;
      wp[t] = w;
      g += w;
    }
    for (size_t t = 0; t < wm.size(); ++t) {
      int64_t w = wm[t] + prob.minus_steps[t];
      if (w >= P) w -= P;
      wm[t] = w;
      g -= w;
    }
    if (best.k == 0 || ratio_greater(g, k, best.g, best.k)) best = {g, k};
  }
  return best;
}

#ifdef LSPACE_HAVE_X86

__attribute__((target("avx2"))) static KernelResult avx2_impl(const KernelProblem& prob) {
  const int64_t P = prob.period;
  const size_t np = prob.plus_steps.size(), nm = prob.minus_steps.size();
  // Lane j starts at k = j + 1 and advances by 4 each round.
  std::vector<int64_t> w((np + nm) * 4), step4(np + nm);
  for (size_t t = 0; t < np + nm; ++t) {
    int64_t s = t < np ? prob.plus_steps[t] : prob.minus_steps[t - np];
    for (int j = 0; j < 4; ++j) {
      w[t * 4 + j] = static_cast<int64_t>((static_cast<__int128>(s) * (j + 1)) % P);
    }
    step4[t] = static_cast<int64_t>((static_cast<__int128>(s) * 4) % P);
  }
  const __m256i vP = _mm256_set1_epi64x(P);
  const __m256i vPm1 = _mm256_set1_epi64x(P - 1);
  const __m256i vLimit = _mm256_set1_epi64x(P + 1);
  const __m256i vBase = _mm256_set1_epi64x(prob.base);
  const __m256i vFour = _mm256_set1_epi64x(4);
  __m256i vk = _mm256_setr_epi64x(1, 2, 3, 4);
  __m256i bestG = _mm256_set1_epi64x(std::numeric_limits<int32_t>::min());
  __m256i bestK = _mm256_set1_epi64x(1);

  for (int64_t k0 = 1; k0 <= P; k0 += 4) {
    __m256i g = vBase;
    for (size_t t = 0; t < np + nm; ++t) {
      __m256i wt = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&w[t * 4]));
      if (t < np) {
        g = _mm256_add_epi64(g, wt);
      } else {
        g = _mm256_sub_epi64(g, wt);
      }
      wt = _mm256_add_epi64(wt, _mm256_set1_epi64x(step4[t]));
      __m256i over = _mm256_cmpgt_epi64(wt, vPm1);
      wt = _mm256_sub_epi64(wt, _mm256_and_si256(over, vP));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(&w[t * 4]), wt);
    }
    __m256i lhs = _mm256_mul_epi32(g, bestK);
    __m256i rhs = _mm256_mul_epi32(bestG, vk);
    __m256i better = _mm256_cmpgt_epi64(lhs, rhs);
    __m256i valid = _mm256_cmpgt_epi64(vLimit, vk);
    __m256i take = _mm256_and_si256(better, valid);
    bestG = _mm256_blendv_epi8(bestG, g, take);
    bestK = _mm256_blendv_epi8(bestK, vk, take);
    vk = _mm256_add_epi64(vk, vFour);
  }

  alignas(32) int64_t gs[4], ks[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(gs), bestG);
  _mm256_store_si256(reinterpret_cast<__m256i*>(ks), bestK);
  // Lanes beyond P never took a value and still hold the sentinel at k = 1.
  for (int j = 0; j < 4; ++j) {
    if (j + 1 > P) ks[j] = 0;
  }
  return reduce_lanes(gs, ks, 4, P);
}

#endif

bool cpu_has_avx2() {
#ifdef LSPACE_HAVE_X86
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool best_ratio_avx2(const KernelProblem& prob, KernelResult& out) {
#ifdef LSPACE_HAVE_X86
  if (!cpu_has_avx2() || !fits_i32_lanes(prob)) return false;
  out = avx2_impl(prob);
  return true;
#else
  (void)prob;
  (void)out;
  return false;
#endif
}

bool best_ratio_neon(const KernelProblem& prob, KernelResult& out) {
#if defined(__ARM_NEON) && defined(__aarch64__)
  if (!fits_i32_lanes(prob)) return false;
  const int64_t P = prob.period;
  const size_t np = prob.plus_steps.size(), nm = prob.minus_steps.size();
  std::vector<int64_t> w((np + nm) * 2), step2(np + nm);
  for (size_t t = 0; t < np + nm; ++t) {
    int64_t s = t < np ? prob.plus_steps[t] : prob.minus_steps[t - np];
    w[t * 2] = s % P;
    w[t * 2 + 1] = static_cast<int64_t>((static_cast<__int128>(s) * 2) % P);
    step2[t] = static_cast<int64_t>((static_cast<__int128>(s) * 2) % P);
  }
  const int64x2_t vP = vdupq_n_s64(P);
  const int64x2_t vLimit = vdupq_n_s64(P + 1);
  int64x2_t vk = {1, 2};
  int64x2_t bestG = vdupq_n_s64(std::numeric_limits<int32_t>::min());
  int64x2_t bestK = vdupq_n_s64(1);
  for (int64_t k0 = 1; k0 <= P; k0 += 2) {
    int64x2_t g = vdupq_n_s64(prob.base);
    for (size_t t = 0; t < np + nm; ++t) {
      int64x2_t wt = vld1q_s64(&w[t * 2]);
      g = t < np ? vaddq_s64(g, wt) : vsubq_s64(g, wt);
      wt = vaddq_s64(wt, vdupq_n_s64(step2[t]));
      uint64x2_t over = vcgeq_s64(wt, vP);
      wt = vsubq_s64(wt, vandq_s64(vreinterpretq_s64_u64(over), vP));
      vst1q_s64(&w[t * 2], wt);
    }
    int64x2_t lhs = vmull_s32(vmovn_s64(g), vmovn_s64(bestK));
    int64x2_t rhs = vmull_s32(vmovn_s64(bestG), vmovn_s64(vk));
    uint64x2_t take = vandq_u64(vcgtq_s64(lhs, rhs), vcgtq_s64(vLimit, vk));
    bestG = vbslq_s64(take, g, bestG);
    bestK = vbslq_s64(take, vk, bestK);
    vk = vaddq_s64(vk, vdupq_n_s64(2));
  }
  int64_t gs[2], ks[2];
  vst1q_s64(gs, bestG);
  vst1q_s64(ks, bestK);
  if (P < 2) ks[1] = 0;
  out = reduce_lanes(gs, ks, 2, P);
  return true;
#else
  (void)prob;
  (void)out;
  return false;
#endif
}

KernelResult best_ratio(const KernelProblem& prob) {
  KernelImpl impl = kernel_impl();
  KernelResult out;
  if (impl == KernelImpl::Auto || impl == KernelImpl::Avx2) {
    if (best_ratio_avx2(prob, out)) return out;
  }
  if (impl == KernelImpl::Auto || impl == KernelImpl::Neon) {
    if (best_ratio_neon(prob, out)) return out;
  }
  return best_ratio_scalar(prob);
}

void set_kernel_impl(KernelImpl impl) { g_impl.store(static_cast<int>(impl)); }

KernelImpl kernel_impl() { return static_cast<KernelImpl>(g_impl.load()); }

const char* kernel_name(KernelImpl impl) {
  switch (impl) {
    case KernelImpl::Auto: return "auto";
    case KernelImpl::Scalar: return "scalar";
    case KernelImpl::Avx2: return "avx2";
    case KernelImpl::Neon: return "neon";
  }
  return "?";
}

uint64_t period_cap() {
  uint64_t cap = g_cap.load();
  if (cap != 0) return cap;
  cap = kDefaultCap;
  if (const char* env = std::getenv("LSPACE_PERIOD_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cap = v;
  }
  g_cap.store(cap);
  return cap;
}

void set_period_cap(uint64_t cap) { g_cap.store(cap == 0 ? kDefaultCap : cap); }

}  // namespace lspace
