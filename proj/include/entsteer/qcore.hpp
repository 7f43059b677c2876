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

/// \file qcore.hpp
/// Dense complex matrices, validated density matrices, and the state
/// families used by the criteria: isotropic states, two-qubit states in
/// Bloch normal form, the one-way steerable family, and Hilbert-Schmidt
/// random states.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "entsteer/error.hpp"

namespace entsteer {

using complex_t = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector3 = Eigen::Vector3d;
using RealMatrix3 = Eigen::Matrix3d;

/// Tolerance for Hermiticity, trace, and positivity checks.
inline constexpr double kStateTol = 1e-10;
/// Largest total Hilbert-space dimension accepted by the dense routines.
inline constexpr int kMaxDim = 32 * 32;

/// Which factor of a bipartite system to keep in a partial trace.
enum class Subsystem { A, B };

/// Kronecker product; (m1 (x) m2)[r1*i + k, c2*j + l] = m1[i, j] m2[k, l].
inline ComplexMatrix tensor(const ComplexMatrix &m1, const ComplexMatrix &m2) {
    ComplexMatrix out(m1.rows() * m2.rows(), m1.cols() * m2.cols());
    for (Eigen::Index i = 0; i < m1.rows(); ++i) {
        for (Eigen::Index j = 0; j < m1.cols(); ++j) {
            out.block(i * m2.rows(), j * m2.cols(), m2.rows(), m2.cols()) = m1(i, j) * m2;
        }
    }
    return out;
}

/// Pauli matrix sigma_k for k = 1, 2, 3 (x, y, z); k = 0 gives the identity.
inline ComplexMatrix pauli(int k) {
    using namespace std::complex_literals;
    ComplexMatrix s(2, 2);
    switch (k) {
    case 0:
        s << 1.0, 0.0, 0.0, 1.0;
        break;
    case 1:
        s << 0.0, 1.0, 1.0, 0.0;
        break;
    case 2:
        s << 0.0, -1.0i, 1.0i, 0.0;
        break;
    case 3:
        s << 1.0, 0.0, 0.0, -1.0;
        break;
    default:
        throw InvalidArgument("pauli index must be in [0, 3]");
    }
    return s;
}

/// Positive, unit-trace, Hermitian operator on a dim-dimensional space.
///
/// Only constructible through validate(), so every instance satisfies the
/// state invariants to within kStateTol.
class DensityMatrix {
  public:
    /// Checks Hermiticity, trace and positivity and returns the state.
    /// Throws NotPhysical on failure.
    static DensityMatrix validate(ComplexMatrix m) {
        detail::require(m.rows() == m.cols(), "density matrix must be square");
        detail::require(m.rows() >= 1 && m.rows() <= kMaxDim, "density matrix dimension out of range");
        const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
        if (herm > kStateTol) {
            throw NotPhysical("Hermiticity violated by " + std::to_string(herm));
        }
        const complex_t tr = m.trace();
        if (std::abs(tr.real() - 1.0) > kStateTol || std::abs(tr.imag()) > kStateTol) {
            throw NotPhysical("trace differs from one by " + std::to_string(std::abs(tr - 1.0)));
        }
        // Symmetrize before the eigensolver so round-off does not leak in.
        m = (0.5 * (m + m.adjoint())).eval();
        const double min_eig = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly)
                                   .eigenvalues()
                                   .minCoeff();
        if (min_eig < -kStateTol) {
            throw NotPhysical("smallest eigenvalue " + std::to_string(min_eig));
        }
        return DensityMatrix(std::move(m));
    }

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }

    /// Eigenvalues in ascending order.
    [[nodiscard]] Eigen::VectorXd spectrum() const {
        return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(matrix_, Eigen::EigenvaluesOnly).eigenvalues();
    }

    [[nodiscard]] double purity() const { return (matrix_ * matrix_).trace().real(); }

    /// Tr[rho * op].
    [[nodiscard]] complex_t expectation(const ComplexMatrix &op) const {
        detail::require(op.rows() == matrix_.rows() && op.cols() == matrix_.cols(),
                        "observable dimension mismatch");
        return (matrix_ * op).trace();
    }

  private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}

    ComplexMatrix matrix_;
};

/// Reduced state of `rho` on subsystem `keep`, where rho lives on a
/// dims.first x dims.second dimensional product space.
inline DensityMatrix partial_trace(const DensityMatrix &rho, std::pair<int, int> dims, Subsystem keep) {
    const auto [da, db] = dims;
    detail::require(da >= 1 && db >= 1, "subsystem dimensions must be positive");
    if (rho.dim() != da * db) {
        std::ostringstream msg;
        msg << "partial_trace: state dimension " << rho.dim() << " does not equal " << da << " * " << db;
        throw InvalidArgument(msg.str());
    }
    const ComplexMatrix &m = rho.matrix();
    const int dk = keep == Subsystem::A ? da : db;
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    if (keep == Subsystem::A) {
        for (int i = 0; i < da; ++i) {
            for (int j = 0; j < da; ++j) {
                complex_t s = 0.0;
                for (int k = 0; k < db; ++k) {
                    s += m(i * db + k, j * db + k);
                }
                out(i, j) = s;
            }
        }
    } else {
        for (int i = 0; i < da; ++i) {
            out += m.block(i * db, i * db, db, db);
        }
    }
    return DensityMatrix::validate(std::move(out));
}

/// |phi+_d> = sum_i |ii> / sqrt(d).
inline ComplexVector max_entangled(int d) {
    detail::require(d >= 1, "dimension must be positive");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        v(i * d + i) = amp;
    }
    return v;
}

/// alpha |phi+_d><phi+_d| + (1 - alpha) 1 / d^2.
inline DensityMatrix make_isotropic(int d, double alpha) {
    detail::require(d >= 2 && d * d <= kMaxDim, "isotropic state: d must lie in [2, 32]");
    detail::require(alpha >= 0.0 && alpha <= 1.0, "isotropic state: alpha must lie in [0, 1]");
    const ComplexVector phi = max_entangled(d);
    const int n = d * d;
    ComplexMatrix m = alpha * (phi * phi.adjoint());
    m.diagonal().array() += (1.0 - alpha) / n;
    return DensityMatrix::validate(std::move(m));
}

/// Two-qubit state parameters: local Bloch vectors a (Alice) and b (Bob)
/// plus the diagonal of the correlation matrix, c.
struct BlochForm {
    RealVector3 a = RealVector3::Zero();
    RealVector3 b = RealVector3::Zero();
    RealVector3 c = RealVector3::Zero();

    /// True when |a|, |b| and every |c_i| are at most one (plus kStateTol).
    [[nodiscard]] bool within_unit_bounds() const {
        return a.norm() <= 1.0 + kStateTol && b.norm() <= 1.0 + kStateTol &&
               c.cwiseAbs().maxCoeff() <= 1.0 + kStateTol;
    }
};

/// The operator [1(x)1 + (a.sigma)(x)1 + 1(x)(b.sigma) + sum_i c_i sigma_i(x)sigma_i] / 4.
/// Throws NotPhysical when the result is not positive semidefinite.
inline DensityMatrix make_two_qubit(const BlochForm &bloch) {
    const ComplexMatrix id = pauli(0);
    ComplexMatrix m = tensor(id, id);
    for (int i = 0; i < 3; ++i) {
        const ComplexMatrix s = pauli(i + 1);
        m += bloch.a(i) * tensor(s, id) + bloch.b(i) * tensor(id, s) + bloch.c(i) * tensor(s, s);
    }
    m /= 4.0;
    return DensityMatrix::validate(std::move(m));
}

/// Parameters of beta |psi(theta)><psi(theta)| + (1 - beta) 1/2 (x) rho_B(theta),
/// |psi(theta)> = cos(theta)|00> + sin(theta)|11>.
struct OneWayFamilyParams {
    double theta = 0.0;
    double beta = 0.0;

    void check() const {
        detail::require(theta >= 0.0 && theta <= std::numbers::pi / 4.0 + 1e-15,
                        "one-way family: theta must lie in [0, pi/4]");
        detail::require(beta >= 0.0 && beta <= 1.0, "one-way family: beta must lie in [0, 1]");
    }
};

inline ComplexVector one_way_pure_state(double theta) {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = std::cos(theta);
    psi(3) = std::sin(theta);
    return psi;
}

inline DensityMatrix make_one_way(const OneWayFamilyParams &params) {
    params.check();
    const ComplexVector psi = one_way_pure_state(params.theta);
    const ComplexMatrix pure = psi * psi.adjoint();
    const DensityMatrix pure_state = DensityMatrix::validate(pure);
    const ComplexMatrix rho_b = partial_trace(pure_state, {2, 2}, Subsystem::B).matrix();
    ComplexMatrix m = params.beta * pure + (1.0 - params.beta) * tensor(0.5 * pauli(0), rho_b);
    return DensityMatrix::validate(std::move(m));
}

/// One draw from the Hilbert-Schmidt measure on d-dimensional states:
/// a Gaussian pure state on system (x) ancilla (ancilla dimension d) with
/// the ancilla traced out.
template <class Engine>
DensityMatrix sample_hs_random(int d, Engine &engine) {
    detail::require(d >= 2 && d <= kMaxDim, "sample_hs_random: d must lie in [2, 1024]");
    std::normal_distribution<double> normal(0.0, 1.0);
    // Column-major: g(i, k) is the amplitude of |i>_system |k>_ancilla.
    ComplexMatrix g(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index i = 0; i < d; ++i) {
            const double re = normal(engine);
            const double im = normal(engine);
            g(i, k) = complex_t(re, im);
        }
    }
    g /= g.norm();
    // Tr_ancilla |g><g| = g g^dagger.
    ComplexMatrix rho = g * g.adjoint();
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix::validate(std::move(rho));
}

/// Local Bloch vectors and correlation matrix of a two-qubit state:
/// a_i = Tr[rho sigma_i (x) 1], b_j = Tr[rho 1 (x) sigma_j],
/// T_ij = Tr[rho sigma_i (x) sigma_j].
struct PauliExpectations {
    RealVector3 a;
    RealVector3 b;
    RealMatrix3 t;
};

inline PauliExpectations pauli_expectations(const DensityMatrix &rho) {
    detail::require(rho.dim() == 4, "two-qubit routines need a 4-dimensional state");
    const ComplexMatrix id = pauli(0);
    PauliExpectations e;
    for (int i = 0; i < 3; ++i) {
        const ComplexMatrix si = pauli(i + 1);
        e.a(i) = rho.expectation(tensor(si, id)).real();
        e.b(i) = rho.expectation(tensor(id, si)).real();
        for (int j = 0; j < 3; ++j) {
            e.t(i, j) = rho.expectation(tensor(si, pauli(j + 1))).real();
        }
    }
    return e;
}

/// Local rotations bringing a two-qubit state into Bloch normal form:
/// T = rot_a diag(c) rot_b^T with rot_a, rot_b in SO(3).
struct NormalFormRotation {
    RealMatrix3 rot_a;
    RealMatrix3 rot_b;
};

/// Signed singular value decomposition of the correlation matrix.
///
/// Singular values are sorted by descending magnitude. When det(U) det(V)
/// is negative, the smallest component of c takes the sign, so both
/// rotations stay proper.
inline std::pair<BlochForm, NormalFormRotation> bloch_normal_form_with_rotation(const DensityMatrix &rho) {
    const PauliExpectations e = pauli_expectations(rho);
    Eigen::JacobiSVD<RealMatrix3> svd(e.t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    RealMatrix3 u = svd.matrixU();
    RealMatrix3 v = svd.matrixV();
    RealVector3 c = svd.singularValues();
    const double det_u = u.determinant() < 0.0 ? -1.0 : 1.0;
    const double det_v = v.determinant() < 0.0 ? -1.0 : 1.0;
    u.col(2) *= det_u;
    v.col(2) *= det_v;
    c(2) *= det_u * det_v;

    BlochForm bloch;
    bloch.a = u.transpose() * e.a;
    bloch.b = v.transpose() * e.b;
    bloch.c = c;
    return {bloch, NormalFormRotation{u, v}};
}

inline BlochForm bloch_normal_form(const DensityMatrix &rho) { return bloch_normal_form_with_rotation(rho).first; }

/// SU(2) element whose adjoint action on Bloch vectors is `rot`:
/// U (r.sigma) U^dagger = (rot r).sigma.
inline ComplexMatrix su2_from_rotation(const RealMatrix3 &rot) {
    const Eigen::AngleAxisd aa(rot);
    const double half = 0.5 * aa.angle();
    ComplexMatrix n_sigma = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 3; ++i) {
        n_sigma += aa.axis()(i) * pauli(i + 1);
    }
    using namespace std::complex_literals;
    return std::cos(half) * pauli(0) - 1.0i * std::sin(half) * n_sigma;
}

} // namespace entsteer
