#pragma once

#include <complex>
#include <Eigen/Dense>

namespace qotto {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class SpinKind { Half, ThreeHalves };

/// Single-particle Hilbert-space dimension: 2 for spin 1/2, 4 for spin 3/2.
constexpr int spin_dimension(SpinKind kind) noexcept {
    return kind == SpinKind::Half ? 2 : 4;
}

/// Spin quantum number s (1/2 or 3/2).
constexpr double spin_value(SpinKind kind) noexcept {
    return kind == SpinKind::Half ? 0.5 : 1.5;
}

struct SpinMatrices {
    ComplexMatrix s1;
    ComplexMatrix s2;
    ComplexMatrix s3;
};

/// Spin component matrices in the S3 eigenbasis ordered by descending
/// magnetic quantum number (m = s, s-1, ..., -s).
SpinMatrices spin_matrices(SpinKind kind);

/// Kronecker product; entry (i*dimB + k, j*dimB + l) = A(i,j) * B(k,l).
/// The first factor is the left particle.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Zeeman part h (E x S3 + S3 x E).
ComplexMatrix zeeman_hamiltonian(SpinKind kind, double h);

/// Isotropic exchange part 4J (S1 x S1 + S2 x S2 + S3 x S3).
ComplexMatrix exchange_hamiltonian(SpinKind kind, double j);

/// Two identical spins in a field along z with isotropic exchange:
/// H = h (E x S3 + S3 x E) + 4J S.S  (magnetic moment and k_B set to 1).
ComplexMatrix build_hamiltonian(SpinKind kind, double h, double j);

/// Largest |M(i,j) - conj(M(j,i))| relative to the largest |M(i,j)|.
double hermiticity_defect(const ComplexMatrix& m);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    ComplexMatrix vectors;   // orthonormal columns, column k pairs with values(k)
};

/// Self-contained cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Sweeps over all upper off-diagonal pairs, annihilating each with a
/// complex Givens rotation, until the off-diagonal Frobenius norm drops
/// below 1e-14 of the total norm. Throws std::invalid_argument when the
/// input is not square or not Hermitian to within 1e-14 (relative), and
/// std::runtime_error if the sweep limit is exhausted.
EigenSystem diagonalize_hermitian(const ComplexMatrix& m);

/// Largest |entry| of a matrix.
double max_abs(const ComplexMatrix& m);

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

}  // namespace qotto
