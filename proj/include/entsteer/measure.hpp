// Copyright 2026 The entsteer Authors
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

/// \file measure.hpp
/// Projective measurement bases (Pauli eigenbases, mutually unbiased bases
/// in prime dimension) and joint outcome distributions.

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "entsteer/qcore.hpp"

namespace entsteer {

/// Orthonormal basis of C^dim; column k is the vector for outcome k.
class MeasurementBasis {
  public:
    static MeasurementBasis validate(ComplexMatrix vectors) {
        detail::require(vectors.rows() >= 1 && vectors.rows() == vectors.cols(),
                        "measurement basis needs dim vectors of length dim");
        const auto n = vectors.rows();
        const double dev = (vectors.adjoint() * vectors - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
        detail::require(dev <= kStateTol, "measurement basis is not orthonormal (deviation " +
                                              std::to_string(dev) + ")");
        return MeasurementBasis(std::move(vectors));
    }

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(vectors_.rows()); }
    [[nodiscard]] const ComplexMatrix &vectors() const noexcept { return vectors_; }
    [[nodiscard]] ComplexVector vector(int k) const { return vectors_.col(k); }
    [[nodiscard]] ComplexMatrix projector(int k) const { return vectors_.col(k) * vectors_.col(k).adjoint(); }

    /// Entrywise complex conjugate, the partner basis that makes
    /// |phi+> perfectly correlated in every outcome.
    [[nodiscard]] MeasurementBasis conjugate() const { return MeasurementBasis(vectors_.conjugate()); }

    /// max |sum_k P_k - 1|.
    [[nodiscard]] double completeness_deviation() const {
        ComplexMatrix sum = ComplexMatrix::Zero(dim(), dim());
        for (int k = 0; k < dim(); ++k) {
            sum += projector(k);
        }
        return (sum - ComplexMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
    }

  private:
    explicit MeasurementBasis(ComplexMatrix v) : vectors_(std::move(v)) {}

    ComplexMatrix vectors_;
};

/// Eigenbasis of n.sigma for a unit vector n, outcome 0 = eigenvalue +1.
inline MeasurementBasis axis_basis(const RealVector3 &n) {
    detail::require(std::abs(n.norm() - 1.0) <= 1e-9, "measurement axis must be a unit vector");
    ComplexMatrix op = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 3; ++i) {
        op += n(i) * pauli(i + 1);
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(op);
    ComplexMatrix v(2, 2);
    v.col(0) = es.eigenvectors().col(1);
    v.col(1) = es.eigenvectors().col(0);
    return MeasurementBasis::validate(std::move(v));
}

/// Eigenbases of sigma_x, sigma_y, sigma_z, in that order; outcome 0 is +1.
inline std::vector<MeasurementBasis> pauli_bases() {
    using namespace std::complex_literals;
    const double r = std::numbers::sqrt2 / 2.0;
    ComplexMatrix x(2, 2);
    x << r, r, r, -r;
    ComplexMatrix y(2, 2);
    y << r, r, 1.0i * r, -1.0i * r;
    ComplexMatrix z = ComplexMatrix::Identity(2, 2);
    return {MeasurementBasis::validate(x), MeasurementBasis::validate(y), MeasurementBasis::validate(z)};
}

constexpr bool is_prime(int n) noexcept {
    if (n < 2) {
        return false;
    }
    for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

/// First m of the d + 1 mutually unbiased bases for prime d.
///
/// The computational basis comes first. For odd d, basis k = 0..d-1 has
/// vectors (e_j)_l = omega^(k l^2 + j l) / sqrt(d), omega = exp(2 pi i / d).
/// For d = 2 the family is (sigma_z, sigma_x, sigma_y).
inline std::vector<MeasurementBasis> mub_prime(int d, int m) {
    if (!is_prime(d)) {
        throw InvalidArgument("mub_prime: d = " + std::to_string(d) + " is not prime; prime-power MUBs not implemented");
    }
    detail::require(m >= 1 && m <= d + 1, "mub_prime: m must lie in [1, d + 1]");
    detail::require(d <= kMaxDim, "mub_prime: dimension too large");
    std::vector<MeasurementBasis> out;
    out.reserve(static_cast<std::size_t>(m));
    if (d == 2) {
        auto p = pauli_bases();
        const MeasurementBasis *order[] = {&p[2], &p[0], &p[1]};
        for (int k = 0; k < m; ++k) {
            out.push_back(*order[k]);
        }
        return out;
    }
    out.push_back(MeasurementBasis::validate(ComplexMatrix::Identity(d, d)));
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k + 1 < m; ++k) {
        ComplexMatrix v(d, d);
        for (int j = 0; j < d; ++j) {
            for (int l = 0; l < d; ++l) {
                // Reduce the exponent mod d first to keep the phase exact.
                const long long e = (static_cast<long long>(k) * l * l + static_cast<long long>(j) * l) % d;
                const double phase = 2.0 * std::numbers::pi * static_cast<double>(e) / d;
                v(l, j) = std::polar(norm, phase);
            }
        }
        out.push_back(MeasurementBasis::validate(std::move(v)));
    }
    return out;
}

/// Largest | |<e_i|f_j>|^2 - 1/d | over all cross-basis pairs.
inline double mub_overlap_deviation(std::span<const MeasurementBasis> bases) {
    double worst = 0.0;
    for (std::size_t x = 0; x < bases.size(); ++x) {
        for (std::size_t y = x + 1; y < bases.size(); ++y) {
            detail::require(bases[x].dim() == bases[y].dim(), "check_mub: bases of unequal dimension");
            const double target = 1.0 / bases[x].dim();
            const ComplexMatrix g = bases[x].vectors().adjoint() * bases[y].vectors();
            worst = std::max(worst, (g.cwiseAbs2().array() - target).abs().maxCoeff());
        }
    }
    return worst;
}

inline bool check_mub(std::span<const MeasurementBasis> bases, double tol = 1e-9) {
    return mub_overlap_deviation(bases) <= tol;
}

/// Outcome table p(i, j) for Alice outcome i and Bob outcome j.
class JointDistribution {
  public:
    /// Clamps entries within -1e-12 of zero and checks normalization.
    static JointDistribution validate(Eigen::MatrixXd table) {
        detail::require(table.rows() >= 1 && table.cols() >= 1, "joint distribution must be nonempty");
        if (table.minCoeff() < -kClampTol) {
            throw InvalidArgument("joint distribution has a negative entry " + std::to_string(table.minCoeff()));
        }
        table = table.cwiseMax(0.0);
        const double sum = table.sum();
        detail::require(std::abs(sum - 1.0) <= kStateTol,
                        "joint distribution sums to " + std::to_string(sum));
        return JointDistribution(std::move(table));
    }

    [[nodiscard]] int n_a() const noexcept { return static_cast<int>(p_.rows()); }
    [[nodiscard]] int n_b() const noexcept { return static_cast<int>(p_.cols()); }
    [[nodiscard]] const Eigen::MatrixXd &table() const noexcept { return p_; }
    [[nodiscard]] double operator()(int i, int j) const { return p_(i, j); }
    /// Alice's marginal p_i (row sums).
    [[nodiscard]] Eigen::VectorXd marginal_a() const { return p_.rowwise().sum(); }
    /// Bob's marginal (column sums).
    [[nodiscard]] Eigen::VectorXd marginal_b() const { return p_.colwise().sum().transpose(); }

    static constexpr double kClampTol = 1e-12;

  private:
    explicit JointDistribution(Eigen::MatrixXd p) : p_(std::move(p)) {}

    Eigen::MatrixXd p_;
};

/// p_ij = Tr[(P_i (x) P_j) rho].
inline JointDistribution joint_distribution(const DensityMatrix &rho, const MeasurementBasis &basis_a,
                                            const MeasurementBasis &basis_b) {
    const int da = basis_a.dim();
    const int db = basis_b.dim();
    if (rho.dim() != da * db) {
        throw InvalidArgument("joint_distribution: state dimension " + std::to_string(rho.dim()) +
                              " does not match bases " + std::to_string(da) + " x " + std::to_string(db));
    }
    // <e_i f_j| rho |e_i f_j> via the product basis matrix.
    const ComplexMatrix w = tensor(basis_a.vectors(), basis_b.vectors());
    const ComplexMatrix rotated = w.adjoint() * rho.matrix() * w;
    Eigen::MatrixXd p(da, db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
            p(i, j) = rotated(i * db + j, i * db + j).real();
        }
    }
    return JointDistribution::validate(std::move(p));
}

/// Outcome distribution of a single-system measurement.
inline Eigen::VectorXd outcome_distribution(const DensityMatrix &rho, const MeasurementBasis &basis) {
    detail::require(rho.dim() == basis.dim(), "outcome_distribution: dimension mismatch");
    const ComplexMatrix rotated = basis.vectors().adjoint() * rho.matrix() * basis.vectors();
    return rotated.diagonal().real();
}

} // namespace entsteer
