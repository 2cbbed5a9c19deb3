#pragma once

#include <array>
#include <span>
#include <vector>

#include "qotto/spin_algebra.hpp"

namespace qotto {

inline constexpr int kBiquartitLevels = 16;
inline constexpr int kBiqubitLevels = 4;

/// Number of levels of the two-particle system (16 or 4).
constexpr int level_count(SpinKind kind) noexcept {
    return kind == SpinKind::ThreeHalves ? kBiquartitLevels : kBiqubitLevels;
}

/// One analytic energy branch. `index` is 1-based and stays attached to the
/// same eigenvector for every (h, J); it is not an ascending-energy rank.
struct Level {
    int index;
    double energy;
    ComplexVector eigenvector;
};

struct Spectrum {
    SpinKind kind;
    std::vector<Level> levels;
};

/// Biquartit energies e_1..e_16:
///   e1 = -h-11J  e2 = h-11J   e3 = -2h-3J  e4 = -h-3J
///   e5 = -3h+9J  e6 = h-3J    e7 = 2h-3J   e8 = -15J
///   e9 = -11J    e10 = -3J    e11 = 9J     e12 = 3h+9J
///   e13 = -2h+9J e14 = -h+9J  e15 = h+9J   e16 = 2h+9J
std::array<double, kBiquartitLevels> biquartit_levels(double h, double j);

/// Biqubit energies (singlet, triplet m=0, m=-1, m=+1) = (-3J, J, -h+J, h+J).
std::array<double, kBiqubitLevels> biqubit_levels(double h, double j);

/// Energies in level-index order for either substance.
std::vector<double> levels(SpinKind kind, double h, double j);

/// The 16 field- and coupling-independent eigenvectors, unit-normalized,
/// in level-index order. Components use the kron(left, right) basis with
/// each factor ordered m = 3/2, 1/2, -1/2, -3/2.
const std::array<ComplexVector, kBiquartitLevels>& biquartit_eigenvectors();

/// Biqubit eigenvectors paired with biqubit_levels.
const std::array<ComplexVector, kBiqubitLevels>& biqubit_eigenvectors();

/// Eigenvectors for either substance, in level-index order.
std::span<const ComplexVector> eigenvectors(SpinKind kind);

Spectrum spectrum(SpinKind kind, double h, double j);

/// P_i = |e_i><e_i| for the biquartit, 1 <= index <= 16.
/// Throws std::out_of_range otherwise.
ComplexMatrix projector(int index);

/// Projector for either substance, 1 <= index <= level_count(kind).
ComplexMatrix projector(SpinKind kind, int index);

}  // namespace qotto
