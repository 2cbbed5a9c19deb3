#include "qotto/spin_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qotto {

namespace {

constexpr double kHermitianTolerance = 1e-14;
constexpr double kJacobiThreshold = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

}  // namespace

SpinMatrices spin_matrices(SpinKind kind) {
    const int dim = spin_dimension(kind);
    const double s = spin_value(kind);
    const Complex i_unit{0.0, 1.0};

    // Ladder operator S+ in the |s, m> basis with m descending; row r <-> m = s - r.
    ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
    for (int r = 1; r < dim; ++r) {
        const double m = s - r;
        raise(r - 1, r) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    }
    const ComplexMatrix lower = raise.adjoint();

    SpinMatrices out;
    out.s1 = 0.5 * (raise + lower);
    out.s2 = -0.5 * i_unit * (raise - lower);
    out.s3 = ComplexMatrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) out.s3(r, r) = s - r;
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix zeeman_hamiltonian(SpinKind kind, double h) {
    const int dim = spin_dimension(kind);
    const auto s = spin_matrices(kind);
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    return h * (kron(id, s.s3) + kron(s.s3, id));
}

ComplexMatrix exchange_hamiltonian(SpinKind kind, double j) {
    const auto s = spin_matrices(kind);
    return 4.0 * j * (kron(s.s1, s.s1) + kron(s.s2, s.s2) + kron(s.s3, s.s3));
}

ComplexMatrix build_hamiltonian(SpinKind kind, double h, double j) {
    return zeeman_hamiltonian(kind, h) + exchange_hamiltonian(kind, j);
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    const double scale = max_abs(m);
    if (scale == 0.0) return 0.0;
    return max_abs(m - m.adjoint()) / scale;
}

EigenSystem diagonalize_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("diagonalize_hermitian: matrix is not square");
    }
    if (hermiticity_defect(m) > kHermitianTolerance) {
        throw std::invalid_argument("diagonalize_hermitian: matrix is not Hermitian");
    }

    const Eigen::Index n = m.rows();
    ComplexMatrix a = 0.5 * (m + m.adjoint());
    ComplexMatrix v = ComplexMatrix::Identity(n, n);
    const double total = a.norm();

    int sweep = 0;
    while (off_diagonal_norm(a) > kJacobiThreshold * total) {
        if (++sweep > kMaxSweeps) {
            throw std::runtime_error("diagonalize_hermitian: Jacobi sweeps did not converge");
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;

                // Phase the pair to a real off-diagonal, then apply the real
                // Jacobi rotation. G = diag(1, conj(phase)) * [[c, s], [-s, c]].
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const Complex g_pp = c;
                const Complex g_pq = s;
                const Complex g_qp = -s * std::conj(phase);
                const Complex g_qq = c * std::conj(phase);

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * g_pp + akq * g_qp;
                    a(k, q) = akp * g_pq + akq * g_qq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
                    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * g_pp + vkq * g_qp;
                    v(k, q) = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigenSystem out{Eigen::VectorXd(n), ComplexMatrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto src = order[static_cast<std::size_t>(k)];
        out.values(k) = a(src, src).real();
        out.vectors.col(k) = v.col(src);
    }
    return out;
}

}  // namespace qotto
