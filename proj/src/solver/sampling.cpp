// Copyright 2026 The pconn Authors
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

#include "solver/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "common/error.hpp"
#include "graph/algorithms.hpp"
#include "proper/engine.hpp"

namespace pconn {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over the combined input.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EdgeColoring random_coloring(const Graph& g, int k, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(trial_seed(seed, trial));
  std::uniform_int_distribution<int> pick(1, k);
  EdgeColoring c(k, g.size());
  for (int& x : c.color) x = pick(rng);
  return c;
}

SampleReport sample_refute(const Graph& g, int k, std::uint64_t trials, std::uint64_t seed,
                           int jobs) {
  require(k >= 1 && k <= kMaxColors, ErrorKind::kPrecondition, "k out of range");
  require(is_connected(g), ErrorKind::kDisconnected, "graph is disconnected");
  jobs = std::max(1, jobs);
  SampleReport report;
  std::mutex lock;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (std::uint64_t t = next++; t < trials; t = next++) {
        EdgeColoring c = random_coloring(g, k, seed, t);
        ConnectivityVerdict v = is_proper_connected(g, c);
        if (!v.ok) {
          PathQuery q;
          q.source = v.failing_pair->first;
          q.target = v.failing_pair->second;
          require(!proper_path_by_matching(g, c, q), ErrorKind::kInternal,
                  "reported failing pair has a proper path");
        }
        std::lock_guard<std::mutex> guard(lock);
        if (v.ok) {
          report.successes.push_back(t);
        } else {
          report.failures.push_back({t, std::move(c), *v.failing_pair});
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> guard(lock);
      if (!error) error = std::current_exception();
      next = trials;
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SampleFailure& a, const SampleFailure& b) { return a.trial < b.trial; });
  std::sort(report.successes.begin(), report.successes.end());
  return report;
}

}  // namespace pconn
