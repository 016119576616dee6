// Copyright 2026 The hqng Authors
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
#include <optional>
#include <random>

namespace hqng {

/**
 * @brief Source of scalar expectation estimates, exact or shot-sampled.
 *
 * Every call to estimate()/estimate_probability() is one quantity
 * estimation and advances `quantities()`. Algorithms that compute a
 * quantity exactly but must account for its hardware cost call charge().
 *
 * In shot mode each estimate of a +/-1 observable with mean p is
 * (2k - N) / N where k ~ Binomial(N, (1 + p) / 2) drawn from a seeded
 * mt19937_64 stream. An instance belongs to one run and is not shared
 * between threads.
 */
class ExpectationEstimator {
  public:
    static ExpectationEstimator exact();
    /// `stream` separates independent runs that share a user seed.
    static ExpectationEstimator shots(std::uint64_t n_shots, std::uint64_t seed,
                                      std::uint64_t stream = 1);

    [[nodiscard]] bool is_exact() const { return !n_shots_.has_value(); }
    [[nodiscard]] std::optional<std::uint64_t> n_shots() const {
        return n_shots_;
    }

    /// Estimate of a Pauli expectation in [-1, 1]. Inputs within 1e-10 of
    /// the interval are clamped.
    double estimate(double exact_value);
    /// Same for a probability in [0, 1] (e.g. an overlap test outcome).
    double estimate_probability(double exact_probability);
    /// Exact value, counted as one quantity without sampling noise. Used for
    /// the identity string, whose expectation is known.
    double pass_through(double exact_value);

    void charge(std::uint64_t count) { quantities_ += count; }
    [[nodiscard]] std::uint64_t quantities() const { return quantities_; }

  private:
    ExpectationEstimator() = default;

    std::optional<std::uint64_t> n_shots_;
    std::mt19937_64 rng_;
    std::uint64_t quantities_ = 0;
};

/// Free-function form of ExpectationEstimator::estimate.
inline double estimate(double exact_value, ExpectationEstimator &estimator) {
    return estimator.estimate(exact_value);
}

} // namespace hqng
