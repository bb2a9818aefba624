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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lspace/errors.hpp"
#include "lspace/kernel.hpp"
#include "lspace/seifert.hpp"

using namespace lspace;

namespace {

// Direct evaluation of every G(k), no incremental residues.
KernelResult brute_force(const KernelProblem& p) {
  KernelResult best{0, 0};
  for (int64_t k = 1; k <= p.period; ++k) {
    int64_t g = p.base;
    for (int64_t s : p.plus_steps) g += (s * k) % p.period;
    for (int64_t s : p.minus_steps) g -= (s * k) % p.period;
    if (best.k == 0 || static_cast<__int128>(g) * best.k > static_cast<__int128>(best.g) * k) best = {g, k};
  }
  return best;
}

KernelProblem random_problem(std::mt19937_64& g, int64_t max_period) {
  std::uniform_int_distribution<int64_t> per(1, max_period);
  std::uniform_int_distribution<int> terms(0, 5);
  KernelProblem p;
  p.period = per(g);
  std::uniform_int_distribution<int64_t> step(0, p.period - 1);
  std::uniform_int_distribution<int64_t> base(-3 * p.period, 3 * p.period);
  p.base = base(g);
  for (int i = terms(g); i > 0; --i) p.plus_steps.push_back(step(g));
  for (int i = terms(g); i > 0; --i) p.minus_steps.push_back(step(g));
  return p;
}

struct ImplGuard {
  ~ImplGuard() { set_kernel_impl(KernelImpl::Auto); }
};

}  // namespace

TEST_CASE("scalar kernel matches brute force") {
  std::mt19937_64 g(31);
  for (int i = 0; i < 3000; ++i) {
    KernelProblem p = random_problem(g, 300);
    KernelResult a = best_ratio_scalar(p), b = brute_force(p);
    CHECK(a.g == b.g);
    CHECK(a.k == b.k);
  }
}

TEST_CASE("vector kernels match the scalar kernel") {
  std::mt19937_64 g(32);
  int ran = 0;
  for (int i = 0; i < 3000; ++i) {
    KernelProblem p = random_problem(g, i < 2000 ? 64 : 5000);
    KernelResult s = best_ratio_scalar(p), v;
    if (best_ratio_avx2(p, v)) {
      ++ran;
      CHECK(v.g == s.g);
      CHECK(v.k == s.k);
    }
    if (best_ratio_neon(p, v)) {
      ++ran;
      CHECK(v.g == s.g);
      CHECK(v.k == s.k);
    }
  }
  MESSAGE("vector kernel runs: " << ran << (cpu_has_avx2() ? " (avx2 present)" : " (no avx2)"));
  if (cpu_has_avx2()) CHECK(ran >= 3000);
}

TEST_CASE("dispatch honours the forced implementation") {
  ImplGuard guard;
  std::mt19937_64 g(33);
  KernelProblem p = random_problem(g, 200);
  KernelResult ref = best_ratio_scalar(p);
  for (KernelImpl impl : {KernelImpl::Scalar, KernelImpl::Avx2, KernelImpl::Neon, KernelImpl::Auto}) {
    set_kernel_impl(impl);
    KernelResult r = best_ratio(p);  // unsupported variants fall back
    CHECK(r.g == ref.g);
    CHECK(r.k == ref.k);
  }
}

TEST_CASE("large residues fall back to the scalar path") {
  KernelProblem p;
  p.period = 3000000000LL;
  p.plus_steps = {1};
  KernelResult out;
  CHECK_FALSE(best_ratio_avx2(p, out));
}

TEST_CASE("period cap") {
  uint64_t old = period_cap();
  set_period_cap(10);
  FiberExteriorInput in;
  in.seifert_slopes = {Slope::parse("1/7"), Slope::parse("1/11")};
  CHECK_THROWS_AS(y_minus_sup(in), Error);
  try {
    y_minus_sup(in);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
  set_period_cap(old);
  CHECK_NOTHROW(y_minus_sup(in));
}
