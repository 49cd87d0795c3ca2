// Copyright 2026 The tspdqes Authors
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
#include <map>
#include <utility>
#include <vector>

#include "tspdqes/rational.hpp"

namespace tspdqes {

/**
 * @brief Integer image of a rational quadratic form, for exhaustive sweeps.
 *
 * Every coefficient is multiplied by the least common denominator, so a
 * value computed here is exact: divide by scale() to get the rational.
 * Variables are read from the low bits of a 64-bit mask.
 */
class ScaledQuadratic {
  public:
    enum class Domain {
        binary, ///< x_i = bit_i
        spin,   ///< s_i = 1 - 2 bit_i
    };

    ScaledQuadratic(Domain domain, const Rational &constant,
                    const std::map<std::size_t, Rational> &linear,
                    const std::map<std::pair<std::size_t, std::size_t>,
                                   Rational> &quadratic);

    [[nodiscard]] std::int64_t scale() const noexcept { return scale_; }
    [[nodiscard]] std::int64_t value(std::uint64_t mask) const noexcept;
    [[nodiscard]] Rational exact(std::int64_t scaled) const {
        return {scaled, scale_};
    }

  private:
    struct Pair {
        std::uint64_t mask;
        std::int64_t coefficient;
    };

    Domain domain_;
    std::int64_t scale_ = 1;
    std::int64_t constant_ = 0;
    std::vector<std::pair<std::uint64_t, std::int64_t>> linear_;
    std::vector<Pair> quadratic_;
};

} // namespace tspdqes
