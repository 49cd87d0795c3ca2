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
#include "tspdqes/bits.hpp"

#include <stdexcept>

namespace tspdqes {

Bitstring bits_from_mask(std::uint64_t mask, std::size_t count) {
    Bitstring bits(count, 0);
    for (std::size_t i = 0; i < count && i < 64; ++i) {
        bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    }
    return bits;
}

std::uint64_t mask_from_bits(std::span<const std::uint8_t> bits) {
    if (bits.size() > 64) {
        throw std::length_error("bitstring longer than 64 bits");
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
    std::string out(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            out[i] = '1';
        }
    }
    return out;
}

std::string format_mask(std::uint64_t mask, std::size_t count) {
    return format_bits(bits_from_mask(mask, count));
}

Bitstring parse_bits(std::string_view text) {
    Bitstring bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
    return bits;
}

} // namespace tspdqes
