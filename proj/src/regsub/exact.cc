// Copyright 2026 The Authors.
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

#include "regsub/exact.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "regsub/errors.h"

namespace regsub {
namespace {

bool Feasible(const Constraint& constraint, const SubsetMask& s) {
  if (std::holds_alternative<Unconstrained>(constraint)) return true;
  if (const auto* card = std::get_if<CardinalityAtMost>(&constraint)) {
    return s.Count() <= card->k;
  }
  return std::get<Matroid>(constraint).IsIndependent(s);
}

// Smaller set first, then lexicographic on sorted element lists.
bool PreferredOnTie(const SubsetMask& a, const SubsetMask& b) {
  const int ca = a.Count();
  const int cb = b.Count();
  if (ca != cb) return ca < cb;
  const std::vector<int> ea = a.Elements();
  const std::vector<int> eb = b.Elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                      eb.end());
}

template <typename T>
T Require(const std::optional<T>& value, const char* name) {
  if (!value) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("guarantee bound needs parameter ") + name);
  }
  return *value;
}

}  // namespace

OptResult BruteForceOpt(const SetFunction& g, const ModularCost& ell,
                        const Constraint& constraint) {
  const int n = g.n();
  if (n > kMaxEnumerableN) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "brute force needs n <= 20, got n = " + std::to_string(n));
  }
  if (ell.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "g and l disagree on n");
  }
  if (const auto* m = std::get_if<Matroid>(&constraint); m && m->n() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "matroid disagrees on n");
  }
  OptResult best;
  bool have = false;
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t bits = 0; bits < count; ++bits) {
    SubsetMask s = SubsetMask::FromBits(n, bits);
    if (!Feasible(constraint, s)) continue;
    const double gv = g.Eval(s);
    const double lv = ell(s);
    const double objective = gv - lv;
    if (!have || objective > best.objective() ||
        (objective == best.objective() && PreferredOnTie(s, best.set))) {
      best = OptResult{std::move(s), gv, lv};
      have = true;
    }
  }
  return best;
}

double GuaranteeBound(BoundForm form, double g_opt, double ell_opt,
                      const BoundParams& params) {
  switch (form) {
    case BoundForm::kMatroidContinuous:
      return g_opt / std::numbers::e - ell_opt -
             5.0 * Require(params.epsilon, "epsilon") * Require(params.m, "M");
    case BoundForm::kCardinalityRandomGreedy: {
      const int k = Require(params.k, "k");
      return std::pow(1.0 - 1.0 / k, k - 1) * g_opt - ell_opt;
    }
    case BoundForm::kCardinalitySampling: {
      const int k = Require(params.k, "k");
      const double eps = Require(params.epsilon, "epsilon");
      return (1.0 - eps) * (std::pow(1.0 - 1.0 / k, k - 1) * g_opt - ell_opt);
    }
    case BoundForm::kUnconstrained: {
      const int n = Require(params.n, "n");
      return std::pow(1.0 - 1.0 / n, n - 1) * g_opt - ell_opt;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown bound form");
}

Expectation Summarize(std::vector<double> values) {
  Expectation out;
  const auto reps = static_cast<double>(values.size());
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / reps;
  if (values.size() >= 2) {
    double squares = 0.0;
    for (double v : values) squares += (v - out.mean) * (v - out.mean);
    out.std_error = std::sqrt(squares / (reps - 1.0) / reps);
  }
  out.values = std::move(values);
  return out;
}

Expectation EmpiricalExpectation(
    const std::function<double(const RngStream&)>& runner, int reps,
    uint64_t base_seed, int threads) {
  if (reps < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two replicas");
  }
  const RngStream base(base_seed);
  std::vector<double> values(reps);
  ParallelFor(reps, threads, [&](int i) {
    values[i] = runner(base.Derive(static_cast<uint64_t>(i)));
  });
  return Summarize(std::move(values));
}

void ParallelFor(int count, int threads,
                 const std::function<void(int)>& body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace regsub
