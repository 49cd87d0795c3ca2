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
#include "tspdqes/ising.hpp"

#include <algorithm>
#include <string>

#include "tspdqes/error.hpp"
#include "tspdqes/parallel.hpp"

namespace tspdqes {

IsingPolynomial::IsingPolynomial(Layout layout, int node_count,
                                 Rational constant, FieldTerms fields,
                                 CouplingTerms couplings)
    : layout_(layout), node_count_(node_count),
      order_(tspdqes::variable_order(layout, node_count)), constant_(constant),
      fields_(std::move(fields)), couplings_(std::move(couplings)) {
    std::erase_if(fields_, [](const auto &kv) { return kv.second == 0; });
    std::erase_if(couplings_, [](const auto &kv) { return kv.second == 0; });
}

Rational IsingPolynomial::evaluate_spins(std::span<const int> spins) const {
    if (spins.size() != order_.size()) {
        throw std::invalid_argument("spin configuration has wrong length");
    }
    Rational total = constant_;
    for (const auto &[i, h] : fields_) {
        total += h * spins[i];
    }
    for (const auto &[key, j] : couplings_) {
        total += j * (spins[key.first] * spins[key.second]);
    }
    return total;
}

ScaledQuadratic IsingPolynomial::compile() const {
    return {ScaledQuadratic::Domain::spin, constant_, fields_, couplings_};
}

IsingPolynomial to_ising(const PseudoBooleanPolynomial &poly) {
    if (poly.degree() > 2) {
        throw ValidationError("Ising form needs a polynomial of degree <= 2");
    }
    Rational constant = poly.constant();
    IsingPolynomial::FieldTerms fields;
    IsingPolynomial::CouplingTerms couplings;
    // c x = c/2 - (c/2) s
    for (const auto &[i, c] : poly.linear()) {
        constant += c / 2;
        fields[i] -= c / 2;
    }
    // c x y = c/4 (1 - s - s' + s s')
    for (const auto &[key, c] : poly.quadratic()) {
        const Rational quarter = c / 4;
        constant += quarter;
        fields[key.first] -= quarter;
        fields[key.second] -= quarter;
        couplings[key] += quarter;
    }
    return {poly.layout(), poly.node_count(), constant, std::move(fields),
            std::move(couplings)};
}

Rational energy_of_bitstring(const IsingPolynomial &ising,
                             std::span<const std::uint8_t> bits) {
    if (bits.size() != ising.spin_count()) {
        throw std::invalid_argument(
            "bitstring has " + std::to_string(bits.size()) + " bits, expected " +
            std::to_string(ising.spin_count()));
    }
    std::vector<int> spins(bits.size());
    std::transform(bits.begin(), bits.end(), spins.begin(),
                   [](std::uint8_t b) { return b != 0 ? -1 : 1; });
    return ising.evaluate_spins(spins);
}

Rational energy_of_bitstring(const IsingPolynomial &ising, std::uint64_t mask) {
    return energy_of_bitstring(ising, bits_from_mask(mask, ising.spin_count()));
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap || n >= 64) {
        throw SizeCapError("enumerating 2^" + std::to_string(n) +
                           " states exceeds the cap of 2^" +
                           std::to_string(cap));
    }
}

} // namespace

std::vector<SpectrumEntry> spectrum(const IsingPolynomial &ising,
                                    std::size_t cap, unsigned threads) {
    const std::size_t n = ising.spin_count();
    check_cap(n, cap);
    const auto compiled = ising.compile();
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::pair<std::int64_t, std::uint64_t>> scaled(states);
    parallel_for(states, threads, [&](std::size_t z) {
        scaled[z] = {compiled.value(z), z};
    });
    std::sort(scaled.begin(), scaled.end());
    std::vector<SpectrumEntry> out;
    out.reserve(states);
    for (const auto &[value, z] : scaled) {
        out.push_back({z, compiled.exact(value)});
    }
    return out;
}

GroundStates ground_states(const IsingPolynomial &ising, std::size_t cap,
                           unsigned threads) {
    const std::size_t n = ising.spin_count();
    check_cap(n, cap);
    const auto compiled = ising.compile();
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::int64_t> values(states);
    parallel_for(states, threads,
                 [&](std::size_t z) { values[z] = compiled.value(z); });
    const auto best = *std::min_element(values.begin(), values.end());
    GroundStates out{compiled.exact(best), {}};
    for (std::size_t z = 0; z < states; ++z) {
        if (values[z] == best) {
            out.states.push_back(z);
        }
    }
    return out;
}

} // namespace tspdqes
