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
#include "tspdqes/rational.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tspdqes {
namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) +
                                    "'");
    }
    return value;
}

std::int64_t pow10(int exponent) {
    std::int64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (out > std::numeric_limits<std::int64_t>::max() / 10) {
            throw std::invalid_argument("decimal exponent out of range");
        }
        out *= 10;
    }
    return out;
}

// [-]digits[.digits][e[+-]digits]
Rational parse_decimal(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    int exponent = 0;
    if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
        exponent = static_cast<int>(parse_int(text.substr(epos + 1)));
        text = text.substr(0, epos);
    }
    std::string digits;
    bool seen_point = false;
    for (char c : text) {
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            digits.push_back(c);
            if (seen_point) {
                --exponent;
            }
        } else {
            throw std::invalid_argument("not a number: '" + original + "'");
        }
    }
    if (digits.empty()) {
        throw std::invalid_argument("not a number: '" + original + "'");
    }
    Rational value(parse_int(digits));
    if (exponent > 0) {
        value *= pow10(exponent);
    } else if (exponent < 0) {
        value /= pow10(-exponent);
    }
    return negative ? -value : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return {parse_int(text.substr(0, slash)), den};
    }
    return parse_decimal(text);
}

std::string to_string(const Rational &value) {
    if (value.denominator() == 1) {
        return std::to_string(value.numerator());
    }
    return std::to_string(value.numerator()) + "/" +
           std::to_string(value.denominator());
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("non-finite number");
    }
    std::array<char, 64> buffer{};
    auto [ptr, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        throw std::invalid_argument("cannot format number");
    }
    return parse_decimal(std::string_view(buffer.data(), ptr - buffer.data()));
}

} // namespace tspdqes
