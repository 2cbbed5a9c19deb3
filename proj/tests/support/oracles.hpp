#pragma once

// Reference computations used only by tests. None of them goes through the
// analytic spectrum or the closed-form reductions they are compared with.

#include <cmath>
#include <random>
#include <vector>

#include "qotto/spin_algebra.hpp"

namespace qotto::testing {

/// Z = sum_i exp(-beta e_i), summed directly without shifting.
inline double direct_partition_function(const std::vector<double>& energies, double beta) {
    double z = 0.0;
    for (double e : energies) z += std::exp(-beta * e);
    return z;
}

/// Single spin-3/2 in field h: Boltzmann weights over m = 3/2 .. -3/2 with
/// energy h*m.
inline std::vector<double> single_quartit_gibbs(double h, double beta) {
    std::vector<double> p;
    double z = 0.0;
    for (double m : {1.5, 0.5, -0.5, -1.5}) {
        p.push_back(std::exp(-beta * h * m));
        z += p.back();
    }
    for (double& x : p) x /= z;
    return p;
}

/// exp(-beta H) / Z from a numerical eigendecomposition of H.
inline ComplexMatrix gibbs_by_diagonalization(const ComplexMatrix& h, double beta) {
    const auto es = diagonalize_hermitian(h);
    const double shift = -beta * (beta >= 0.0 ? es.values.minCoeff() : es.values.maxCoeff());
    Eigen::VectorXd w(es.values.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::exp(-beta * es.values(i) - shift);
    w /= w.sum();
    return es.vectors * w.asDiagonal() * es.vectors.adjoint();
}

/// Random probability vector of length n with entries bounded away from 0.
inline std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> p(n);
    double sum = 0.0;
    for (double& x : p) sum += (x = u(rng));
    for (double& x : p) x /= sum;
    return p;
}

/// Random density matrix A A^dagger / tr(A A^dagger).
inline ComplexMatrix random_density(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    ComplexMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace qotto::testing
