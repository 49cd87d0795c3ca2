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
#include "tspdqes/quantum.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tspdqes/error.hpp"

namespace tspdqes {

namespace {

std::size_t checked_dimension(int qubits) {
    if (qubits < 0 || qubits > kMaxQubits) {
        throw SizeCapError("qubit count " + std::to_string(qubits) +
                           " outside 0.." + std::to_string(kMaxQubits));
    }
    return std::size_t{1} << qubits;
}

} // namespace

QuantumState::QuantumState(int qubits)
    : qubits_(qubits), amplitudes_(checked_dimension(qubits), Complex{0.0, 0.0}) {
    amplitudes_[0] = 1.0;
}

QuantumState::QuantumState(int qubits, std::vector<Complex> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}

QuantumState QuantumState::basis(int qubits, std::uint64_t index) {
    QuantumState state(qubits);
    if (index >= state.dimension()) {
        throw std::out_of_range("basis index outside the state space");
    }
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[index] = 1.0;
    return state;
}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes,
                                           double tolerance) {
    const auto size = amplitudes.size();
    if (size == 0 || !std::has_single_bit(size)) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    const int qubits = std::countr_zero(size);
    checked_dimension(qubits);
    QuantumState state(qubits, std::move(amplitudes));
    if (std::abs(state.norm() - 1.0) > tolerance) {
        throw std::invalid_argument("state is not normalized");
    }
    return state;
}

double QuantumState::norm() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::uint64_t QuantumState::most_probable() const {
    std::uint64_t best = 0;
    double best_probability = -1.0;
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        const double p = std::norm(amplitudes_[z]);
        if (p > best_probability) {
            best_probability = p;
            best = z;
        }
    }
    return best;
}

void QuantumState::check_qubit(int q) const {
    if (q < 0 || q >= qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside 0.." +
                                std::to_string(qubits_ - 1));
    }
}

void QuantumState::check_pair(int a, int b) const {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
}

void QuantumState::apply_h(int q) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    const double r = std::numbers::sqrt2 / 2.0;
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        if ((z & bit) == 0) {
            const Complex a0 = amplitudes_[z];
            const Complex a1 = amplitudes_[z | bit];
            amplitudes_[z] = r * (a0 + a1);
            amplitudes_[z | bit] = r * (a0 - a1);
        }
    }
}

void QuantumState::apply_s(int q) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        if ((z & bit) != 0) {
            amplitudes_[z] *= Complex{0.0, 1.0};
        }
    }
}

void QuantumState::apply_x(int q) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        if ((z & bit) == 0) {
            std::swap(amplitudes_[z], amplitudes_[z | bit]);
        }
    }
}

void QuantumState::apply_cx(int control, int target) {
    check_pair(control, target);
    const std::size_t c = std::size_t{1} << control;
    const std::size_t t = std::size_t{1} << target;
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        if ((z & c) != 0 && (z & t) == 0) {
            std::swap(amplitudes_[z], amplitudes_[z | t]);
        }
    }
}

void QuantumState::apply_cz(int a, int b) {
    check_pair(a, b);
    const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        if ((z & both) == both) {
            amplitudes_[z] = -amplitudes_[z];
        }
    }
}

void QuantumState::apply_ry(int q, double theta) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        if ((z & bit) == 0) {
            const Complex a0 = amplitudes_[z];
            const Complex a1 = amplitudes_[z | bit];
            amplitudes_[z] = c * a0 - s * a1;
            amplitudes_[z | bit] = s * a0 + c * a1;
        }
    }
}

void QuantumState::apply_rz(int q, double theta) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    const Complex up = std::polar(1.0, -theta / 2.0);
    const Complex down = std::conj(up);
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        amplitudes_[z] *= (z & bit) == 0 ? up : down;
    }
}

void QuantumState::apply_rzz(int a, int b, double theta) {
    check_pair(a, b);
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    const Complex even = std::polar(1.0, -theta / 2.0);
    const Complex odd = std::conj(even);
    for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
        amplitudes_[z] *= (std::popcount(z & mask) & 1) == 0 ? even : odd;
    }
}

void apply_gate(QuantumState &state, const Gate &gate) {
    const auto [a, b] = gate.qubits;
    switch (gate.kind) {
    case GateKind::h:
        state.apply_h(a);
        break;
    case GateKind::s:
        state.apply_s(a);
        break;
    case GateKind::x:
        state.apply_x(a);
        break;
    case GateKind::cx:
        state.apply_cx(a, b);
        break;
    case GateKind::cz:
        state.apply_cz(a, b);
        break;
    case GateKind::ry:
        state.apply_ry(a, gate.angle);
        break;
    case GateKind::rz:
        state.apply_rz(a, gate.angle);
        break;
    case GateKind::rzz:
        state.apply_rzz(a, b, gate.angle);
        break;
    }
}

QuantumState with_gate(QuantumState state, const Gate &gate) {
    apply_gate(state, gate);
    return state;
}

std::string format_pauli(PauliString pauli) {
    std::string out(3, 'I');
    for (int q = 0; q < 3; ++q) {
        const bool x = ((pauli.x >> q) & 1U) != 0;
        const bool z = ((pauli.z >> q) & 1U) != 0;
        out[static_cast<std::size_t>(q)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

PauliString parse_pauli(std::string_view text) {
    if (text.size() != 3) {
        throw std::invalid_argument("Pauli string must have 3 characters");
    }
    PauliString pauli;
    for (int q = 0; q < 3; ++q) {
        const auto bit = static_cast<std::uint8_t>(1U << q);
        switch (text[static_cast<std::size_t>(q)]) {
        case 'I':
            break;
        case 'X':
            pauli.x |= bit;
            break;
        case 'Z':
            pauli.z |= bit;
            break;
        case 'Y':
            pauli.x |= bit;
            pauli.z |= bit;
            break;
        default:
            throw std::invalid_argument("unknown Pauli '" + std::string(text) +
                                        "'");
        }
    }
    return pauli;
}

bool commutes(PauliString a, PauliString b) {
    return ((std::popcount(static_cast<unsigned>(a.x & b.z)) +
             std::popcount(static_cast<unsigned>(a.z & b.x))) &
            1) == 0;
}

std::array<Complex, 8> apply_pauli(PauliString pauli,
                                   const std::array<Complex, 8> &state) {
    // i^{|x&z|} X^x Z^z |k> = i^{|x&z|} (-1)^{|z&k|} |k ^ x>
    static constexpr std::array<Complex, 4> kPowersOfI{
        Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
    const Complex phase =
        kPowersOfI[static_cast<std::size_t>(std::popcount(
                       static_cast<unsigned>(pauli.x & pauli.z))) %
                   4];
    std::array<Complex, 8> out{};
    for (unsigned k = 0; k < 8; ++k) {
        const double sign = (std::popcount(pauli.z & k) & 1) != 0 ? -1.0 : 1.0;
        out[k ^ pauli.x] += phase * sign * state[k];
    }
    return out;
}

std::string MubBasis::label() const {
    return format_pauli(generators[0]) + "," + format_pauli(generators[1]) + "," +
           format_pauli(generators[2]);
}

namespace {

// Same content as data/mub3_classes.txt (checked by the test suite).
constexpr std::array<MubClassRow, 9> kMubClasses{{
    {{"ZII", "IZI", "IIZ"}, {"ZII", "IZI", "ZZI", "IIZ", "ZIZ", "IZZ", "ZZZ"}},
    {{"XII", "IXI", "IIX"}, {"XII", "IXI", "XXI", "IIX", "XIX", "IXX", "XXX"}},
    {{"XZI", "ZXI", "IIY"}, {"XZI", "ZXI", "YYI", "IIY", "XZY", "ZXY", "YYY"}},
    {{"XZZ", "ZYI", "ZIX"}, {"XZZ", "ZYI", "YXZ", "ZIX", "YZY", "IYX", "XXY"}},
    {{"XIZ", "IYI", "ZIY"}, {"XIZ", "IYI", "XYZ", "ZIY", "YIX", "ZYY", "YYX"}},
    {{"YZZ", "ZXZ", "ZZX"}, {"YZZ", "ZXZ", "XYI", "ZZX", "XIY", "IYY", "YXX"}},
    {{"YIZ", "IXZ", "ZZY"}, {"YIZ", "IXZ", "YXI", "ZZY", "XZX", "ZYX", "XYY"}},
    {{"YII", "IYZ", "IZX"}, {"YII", "IYZ", "YYZ", "IZX", "YZX", "IXY", "YXY"}},
    {{"YZI", "ZYZ", "IZY"}, {"YZI", "ZYZ", "XXZ", "IZY", "YIY", "ZXX", "XYX"}},
}};

using Matrix8 = std::array<std::array<Complex, 8>, 8>;

Matrix8 pauli_matrix(PauliString pauli) {
    Matrix8 m{};
    for (std::size_t k = 0; k < 8; ++k) {
        std::array<Complex, 8> e{};
        e[k] = 1.0;
        const auto column = apply_pauli(pauli, e);
        for (std::size_t r = 0; r < 8; ++r) {
            m[r][k] = column[r];
        }
    }
    return m;
}

Matrix8 multiply(const Matrix8 &a, const Matrix8 &b) {
    Matrix8 out{};
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t k = 0; k < 8; ++k) {
            if (a[i][k] == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < 8; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

// Joint eigenvector of the generators with eigenvalues (-1)^{bit j of k}:
// the projector prod_j (I + s_j G_j) / 2 has rank one; take its largest
// column.
std::array<Complex, 8> joint_eigenvector(const std::array<PauliString, 3> &gens,
                                         unsigned pattern) {
    Matrix8 projector{};
    for (std::size_t i = 0; i < 8; ++i) {
        projector[i][i] = 1.0;
    }
    for (unsigned j = 0; j < 3; ++j) {
        const double sign = ((pattern >> j) & 1U) != 0 ? -1.0 : 1.0;
        auto factor = pauli_matrix(gens[j]);
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                factor[r][c] = 0.5 * ((r == c ? 1.0 : 0.0) + sign * factor[r][c]);
            }
        }
        projector = multiply(projector, factor);
    }
    std::size_t best_column = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < 8; ++c) {
        double column_norm = 0.0;
        for (std::size_t r = 0; r < 8; ++r) {
            column_norm += std::norm(projector[r][c]);
        }
        if (column_norm > best_norm + 1e-12) {
            best_norm = column_norm;
            best_column = c;
        }
    }
    std::array<Complex, 8> state{};
    const double scale = 1.0 / std::sqrt(best_norm);
    for (std::size_t r = 0; r < 8; ++r) {
        state[r] = projector[r][best_column] * scale;
    }
    for (const auto &a : state) {
        if (std::abs(a) > 1e-12) {
            const Complex phase = std::conj(a) / std::abs(a);
            for (auto &b : state) {
                b *= phase;
                if (std::abs(b.real()) < 1e-15) {
                    b.real(0.0);
                }
                if (std::abs(b.imag()) < 1e-15) {
                    b.imag(0.0);
                }
            }
            break;
        }
    }
    return state;
}

} // namespace

std::span<const MubClassRow> mub_class_table() { return kMubClasses; }

const MubLibrary &build_mubs_3q() {
    static const MubLibrary library = [] {
        MubLibrary lib;
        for (std::size_t b = 0; b < kMubClasses.size(); ++b) {
            auto &basis = lib.bases_[b];
            for (std::size_t j = 0; j < 3; ++j) {
                basis.generators[j] = parse_pauli(kMubClasses[b].generators[j]);
            }
            for (std::size_t j = 0; j < 7; ++j) {
                basis.stabilizers[j] = parse_pauli(kMubClasses[b].members[j]);
            }
            for (unsigned k = 0; k < 8; ++k) {
                basis.states[k] = joint_eigenvector(basis.generators, k);
            }
        }
        return lib;
    }();
    return library;
}

QuantumState embed_state(const std::array<Complex, 8> &local,
                         const std::array<int, 3> &positions, int qubits) {
    QuantumState state(qubits);
    for (int p : positions) {
        if (p < 0 || p >= qubits) {
            throw std::out_of_range("embedding position " + std::to_string(p) +
                                    " outside 0.." + std::to_string(qubits - 1));
        }
    }
    if (positions[0] == positions[1] || positions[0] == positions[2] ||
        positions[1] == positions[2]) {
        throw std::invalid_argument("embedding positions must be distinct");
    }
    std::vector<Complex> amplitudes(state.dimension(), Complex{0.0, 0.0});
    for (unsigned k = 0; k < 8; ++k) {
        std::size_t index = 0;
        for (unsigned j = 0; j < 3; ++j) {
            if (((k >> j) & 1U) != 0) {
                index |= std::size_t{1} << positions[j];
            }
        }
        amplitudes[index] = local[k];
    }
    return QuantumState::from_amplitudes(std::move(amplitudes));
}

double expectation(const IsingPolynomial &ising, const QuantumState &state) {
    if (ising.spin_count() != static_cast<std::size_t>(state.qubit_count())) {
        throw std::invalid_argument("Hamiltonian acts on " +
                                    std::to_string(ising.spin_count()) +
                                    " qubits, state has " +
                                    std::to_string(state.qubit_count()));
    }
    const auto compiled = ising.compile();
    const auto scale = static_cast<double>(compiled.scale());
    double total = 0.0;
    const auto amplitudes = state.amplitudes();
    for (std::size_t z = 0; z < amplitudes.size(); ++z) {
        const double p = std::norm(amplitudes[z]);
        if (p == 0.0) {
            continue;
        }
        total += p * (static_cast<double>(compiled.value(z)) / scale);
    }
    return total;
}

DiagonalHamiltonian::DiagonalHamiltonian(const IsingPolynomial &ising)
    : qubits_(static_cast<int>(ising.spin_count())) {
    const auto dimension = checked_dimension(qubits_);
    const auto compiled = ising.compile();
    const auto scale = static_cast<double>(compiled.scale());
    energies_.resize(dimension);
    for (std::size_t z = 0; z < dimension; ++z) {
        energies_[z] = static_cast<double>(compiled.value(z)) / scale;
    }
}

double DiagonalHamiltonian::expectation(const QuantumState &state) const {
    if (state.qubit_count() != qubits_) {
        throw std::invalid_argument("state size does not match Hamiltonian");
    }
    double total = 0.0;
    const auto amplitudes = state.amplitudes();
    for (std::size_t z = 0; z < amplitudes.size(); ++z) {
        total += std::norm(amplitudes[z]) * energies_[z];
    }
    return total;
}

} // namespace tspdqes
