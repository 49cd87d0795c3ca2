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
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Boost 1.74's mixed rational/int equality recurses forever under C++20
// reversed-operator rewriting; these exact matches take precedence.
inline bool operator==(const rational<std::int64_t> &a, int b) {
    return a == rational<std::int64_t>(b);
}
inline bool operator==(int a, const rational<std::int64_t> &b) {
    return b == rational<std::int64_t>(a);
}

} // namespace boost

namespace tspdqes {

/// Exact coefficient type for costs, penalties and polynomial terms.
using Rational = boost::rational<std::int64_t>;

/// Parses "7", "-3/4", "2.5" or "1e-2" into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "7" for integers, "p/q" otherwise.
std::string to_string(const Rational &value);

/// Exact conversion of a finite double via its shortest round-trip decimal.
Rational rational_from_double(double value);

inline double to_double(const Rational &value) {
    return boost::rational_cast<double>(value);
}

} // namespace tspdqes
