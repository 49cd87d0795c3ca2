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
#include "tspdqes/scaled.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace tspdqes {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("coefficient scaling overflows 64 bits");
    }
    return out;
}

std::int64_t scaled(const Rational &value, std::int64_t scale) {
    return checked_mul(value.numerator(), scale / value.denominator());
}

} // namespace

ScaledQuadratic::ScaledQuadratic(
    Domain domain, const Rational &constant,
    const std::map<std::size_t, Rational> &linear,
    const std::map<std::pair<std::size_t, std::size_t>, Rational> &quadratic)
    : domain_(domain) {
    auto absorb = [this](const Rational &value) {
        const auto g = std::gcd(scale_, value.denominator());
        scale_ = checked_mul(scale_ / g, value.denominator());
    };
    absorb(constant);
    for (const auto &[index, value] : linear) {
        absorb(value);
    }
    for (const auto &[key, value] : quadratic) {
        absorb(value);
    }
    constant_ = scaled(constant, scale_);
    for (const auto &[index, value] : linear) {
        if (index >= 64) {
            throw std::length_error("variable index beyond 64-bit mask");
        }
        linear_.emplace_back(std::uint64_t{1} << index, scaled(value, scale_));
    }
    for (const auto &[key, value] : quadratic) {
        if (key.first >= 64 || key.second >= 64) {
            throw std::length_error("variable index beyond 64-bit mask");
        }
        quadratic_.push_back({(std::uint64_t{1} << key.first) |
                                  (std::uint64_t{1} << key.second),
                              scaled(value, scale_)});
    }
}

std::int64_t ScaledQuadratic::value(std::uint64_t mask) const noexcept {
    std::int64_t total = constant_;
    if (domain_ == Domain::binary) {
        for (const auto &[bit, c] : linear_) {
            if ((mask & bit) != 0) {
                total += c;
            }
        }
        for (const auto &term : quadratic_) {
            if ((mask & term.mask) == term.mask) {
                total += term.coefficient;
            }
        }
        return total;
    }
    for (const auto &[bit, c] : linear_) {
        total += (mask & bit) != 0 ? -c : c;
    }
    for (const auto &term : quadratic_) {
        total += (std::popcount(mask & term.mask) & 1) != 0 ? -term.coefficient
                                                            : term.coefficient;
    }
    return total;
}

} // namespace tspdqes
