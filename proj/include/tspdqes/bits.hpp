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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tspdqes {

/// One byte per variable, each 0 or 1, in variable order.
using Bitstring = std::vector<std::uint8_t>;

Bitstring bits_from_mask(std::uint64_t mask, std::size_t count);
/// Requires count <= 64.
std::uint64_t mask_from_bits(std::span<const std::uint8_t> bits);

/// Character i is bit i, so the text reads in variable order.
std::string format_bits(std::span<const std::uint8_t> bits);
std::string format_mask(std::uint64_t mask, std::size_t count);
/// Inverse of format_bits; throws std::invalid_argument on other characters.
Bitstring parse_bits(std::string_view text);

} // namespace tspdqes
