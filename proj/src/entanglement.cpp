#include "qotto/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "qotto/gibbs_thermo.hpp"

namespace qotto {

namespace {

OperatorBasis make_su4_basis() {
    constexpr int d = 4;
    const Complex i_unit{0.0, 1.0};
    OperatorBasis basis;
    std::size_t next = 0;
    basis.elements[next++] = Eigen::Matrix4cd::Identity();

    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.elements[next++] = m;
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
            m(j, k) = -i_unit;
            m(k, j) = i_unit;
            basis.elements[next++] = m;
        }
    }
    for (int l = 1; l < d; ++l) {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int k = 0; k < l; ++k) m(k, k) = scale;
        m(l, l) = -l * scale;
        basis.elements[next++] = m;
    }

    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        const auto& c = basis.elements[i];
        basis.norms[i] = std::sqrt((c * c).trace().real() / d);
    }
    return basis;
}

}  // namespace

const OperatorBasis& su4_basis() {
    static const OperatorBasis basis = make_su4_basis();
    return basis;
}

BlochDecomposition bloch_decompose(const ComplexMatrix& rho, const OperatorBasis& basis) {
    if (rho.rows() != 16 || rho.cols() != 16) {
        throw std::invalid_argument("bloch_decompose: expected a 16x16 density matrix");
    }
    BlochDecomposition out;
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            const ComplexMatrix cij = kron(basis.elements[static_cast<std::size_t>(i)],
                                           basis.elements[static_cast<std::size_t>(j)]);
            // tr(rho * C) without forming the product.
            const Complex tr = (rho.transpose().cwiseProduct(cij)).sum();
            out.r(i, j) = tr.real() / (basis.norms[static_cast<std::size_t>(i)] *
                                       basis.norms[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

ComplexMatrix bloch_reassemble(const BlochDecomposition& bloch, const OperatorBasis& basis) {
    ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            const double ni = basis.norms[static_cast<std::size_t>(i)];
            const double nj = basis.norms[static_cast<std::size_t>(j)];
            rho += (bloch.r(i, j) / (16.0 * ni * nj)) *
                   kron(basis.elements[static_cast<std::size_t>(i)],
                        basis.elements[static_cast<std::size_t>(j)]);
        }
    }
    return rho;
}

double m_sm(const BlochDecomposition& bloch) {
    const auto& r = bloch.r;
    const auto dim = r.rows();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double d = r(i, 0) * r(0, j) - r(i, j);
            sum += d * d;
        }
    }
    return std::sqrt(sum / static_cast<double>(dim - 1));
}

double thermal_m_sm(double h, double j, double beta) {
    return m_sm(bloch_decompose(gibbs_density_matrix(h, j, beta), su4_basis()));
}

}  // namespace qotto
