#pragma once

#include <array>

#include "qotto/spin_algebra.hpp"

namespace qotto {

/// Identity plus the 15 generalized Gell-Mann matrices of dimension 4,
/// ordered as identity, 6 symmetric, 6 antisymmetric, 3 diagonal.
/// Non-identity elements satisfy tr(C_i^2) = 2; norms[i]^2 = tr(C_i^2) / 4.
struct OperatorBasis {
    std::array<Eigen::Matrix4cd, 16> elements;
    std::array<double, 16> norms{};
};

/// R_ij = tr(rho (C_i x C_j)) / (n_i n_j), so R(0,0) = tr(rho) = 1.
struct BlochDecomposition {
    Eigen::Matrix<double, 16, 16> r;
};

const OperatorBasis& su4_basis();

/// Throws std::invalid_argument unless rho is 16x16.
BlochDecomposition bloch_decompose(const ComplexMatrix& rho, const OperatorBasis& basis);

/// Inverse of bloch_decompose: sum_ij R_ij / (16 n_i n_j) * (C_i x C_j).
ComplexMatrix bloch_reassemble(const BlochDecomposition& bloch, const OperatorBasis& basis);

/// m_SM = sqrt( 1/(D-1) * sum_ij (R_i0 R_0j - R_ij)^2 ), D = 16.
/// Vanishes on product states.
double m_sm(const BlochDecomposition& bloch);

/// m_SM of the biquartit Gibbs state at (h, J, beta).
double thermal_m_sm(double h, double j, double beta);

}  // namespace qotto
