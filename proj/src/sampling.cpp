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

#include "hqng/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace hqng {

ExpectationEstimator ExpectationEstimator::exact() {
    return ExpectationEstimator{};
}

ExpectationEstimator ExpectationEstimator::shots(std::uint64_t n_shots,
                                                 std::uint64_t seed,
                                                 std::uint64_t stream) {
    if (n_shots == 0) {
        throw std::invalid_argument("shot count must be positive");
    }
    ExpectationEstimator e;
    e.n_shots_ = n_shots;
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    e.rng_.seed(seq);
    return e;
}

double ExpectationEstimator::estimate(double exact_value) {
    const double p = std::clamp(exact_value, -1.0, 1.0);
    ++quantities_;
    if (!n_shots_) {
        return exact_value;
    }
    const auto n = static_cast<std::int64_t>(*n_shots_);
    std::binomial_distribution<std::int64_t> draw(n, 0.5 * (1.0 + p));
    const auto k = draw(rng_);
    return static_cast<double>(2 * k - n) / static_cast<double>(n);
}

double ExpectationEstimator::estimate_probability(double exact_probability) {
    return 0.5 * (1.0 + estimate(2.0 * exact_probability - 1.0));
}

double ExpectationEstimator::pass_through(double exact_value) {
    ++quantities_;
    return exact_value;
}

} // namespace hqng
