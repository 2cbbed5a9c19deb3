#include "qotto/spectrum.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

namespace qotto {

namespace {

// Sparse basis amplitudes: (0-based position, amplitude). Normalized on use.
using Amplitudes = std::initializer_list<std::pair<int, double>>;

ComplexVector unit_vector(int dim, Amplitudes amps) {
    ComplexVector v = ComplexVector::Zero(dim);
    for (const auto& [pos, amp] : amps) v(pos) = amp;
    return v / v.norm();
}

std::array<ComplexVector, kBiquartitLevels> make_biquartit_vectors() {
    const double r3 = std::sqrt(3.0);
    // Basis position = 4 * a + b with a, b = 0..3 <-> m = 3/2 .. -3/2.
    return {
        unit_vector(16, {{7, 1.0}, {10, -2.0 / r3}, {13, 1.0}}),
        unit_vector(16, {{2, 1.0}, {5, -2.0 / r3}, {8, 1.0}}),
        unit_vector(16, {{11, -1.0}, {14, 1.0}}),
        unit_vector(16, {{7, -1.0}, {13, 1.0}}),
        unit_vector(16, {{15, 1.0}}),
        unit_vector(16, {{2, -1.0}, {8, 1.0}}),
        unit_vector(16, {{1, -1.0}, {4, 1.0}}),
        unit_vector(16, {{3, -1.0}, {6, 1.0}, {9, -1.0}, {12, 1.0}}),
        unit_vector(16, {{3, 1.0}, {6, -1.0 / 3.0}, {9, -1.0 / 3.0}, {12, 1.0}}),
        unit_vector(16, {{3, -1.0}, {6, -1.0}, {9, 1.0}, {12, 1.0}}),
        unit_vector(16, {{3, 1.0}, {6, 3.0}, {9, 3.0}, {12, 1.0}}),
        unit_vector(16, {{0, 1.0}}),
        unit_vector(16, {{11, 1.0}, {14, 1.0}}),
        unit_vector(16, {{7, 1.0}, {10, r3}, {13, 1.0}}),
        unit_vector(16, {{2, 1.0}, {5, r3}, {8, 1.0}}),
        unit_vector(16, {{1, 1.0}, {4, 1.0}}),
    };
}

std::array<ComplexVector, kBiqubitLevels> make_biqubit_vectors() {
    // Basis: up-up, up-down, down-up, down-down.
    return {
        unit_vector(4, {{1, 1.0}, {2, -1.0}}),
        unit_vector(4, {{1, 1.0}, {2, 1.0}}),
        unit_vector(4, {{3, 1.0}}),
        unit_vector(4, {{0, 1.0}}),
    };
}

}  // namespace

std::array<double, kBiquartitLevels> biquartit_levels(double h, double j) {
    return {
        -h - 11.0 * j,      h - 11.0 * j,       -2.0 * h - 3.0 * j, -h - 3.0 * j,
        -3.0 * h + 9.0 * j, h - 3.0 * j,        2.0 * h - 3.0 * j,  -15.0 * j,
        -11.0 * j,          -3.0 * j,           9.0 * j,            3.0 * h + 9.0 * j,
        -2.0 * h + 9.0 * j, -h + 9.0 * j,       h + 9.0 * j,        2.0 * h + 9.0 * j,
    };
}

std::array<double, kBiqubitLevels> biqubit_levels(double h, double j) {
    return {-3.0 * j, j, -h + j, h + j};
}

std::vector<double> levels(SpinKind kind, double h, double j) {
    if (kind == SpinKind::ThreeHalves) {
        const auto e = biquartit_levels(h, j);
        return {e.begin(), e.end()};
    }
    const auto e = biqubit_levels(h, j);
    return {e.begin(), e.end()};
}

const std::array<ComplexVector, kBiquartitLevels>& biquartit_eigenvectors() {
    static const auto vectors = make_biquartit_vectors();
    return vectors;
}

const std::array<ComplexVector, kBiqubitLevels>& biqubit_eigenvectors() {
    static const auto vectors = make_biqubit_vectors();
    return vectors;
}

std::span<const ComplexVector> eigenvectors(SpinKind kind) {
    if (kind == SpinKind::ThreeHalves) return biquartit_eigenvectors();
    return biqubit_eigenvectors();
}

Spectrum spectrum(SpinKind kind, double h, double j) {
    const auto energies = levels(kind, h, j);
    const auto vectors = eigenvectors(kind);
    Spectrum out{kind, {}};
    out.levels.reserve(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
        out.levels.push_back({static_cast<int>(i) + 1, energies[i], vectors[i]});
    }
    return out;
}

ComplexMatrix projector(SpinKind kind, int index) {
    const int count = level_count(kind);
    if (index < 1 || index > count) {
        throw std::out_of_range("projector: level index " + std::to_string(index) +
                                " outside 1.." + std::to_string(count));
    }
    const auto& v = eigenvectors(kind)[static_cast<std::size_t>(index - 1)];
    return v * v.adjoint();
}

ComplexMatrix projector(int index) {
    return projector(SpinKind::ThreeHalves, index);
}

}  // namespace qotto
