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

/// \file criteria.hpp
/// Entropic steering criteria and the entropic uncertainty bounds they are
/// compared against.
///
/// Every criterion here has the shape "unsteerable => lhs >= bound"; a value
/// strictly below the bound (by more than kViolationTol) certifies steering.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "entsteer/entropy.hpp"

namespace entsteer {

inline constexpr double kViolationTol = 1e-12;

struct CriterionResult {
    double lhs = 0.0;
    double bound = 0.0;
    bool violated = false;
    /// bound - lhs; positive values mean violation.
    double margin = 0.0;
    /// Set when the criterion was not evaluated in its regular form.
    bool degenerate = false;
    std::string note;
};

inline CriterionResult make_result(double lhs, double bound) {
    CriterionResult r;
    r.lhs = lhs;
    r.bound = bound;
    r.margin = bound - lhs;
    r.violated = lhs < bound - kViolationTol;
    return r;
}

/// State-independent lower bound on summed measurement entropies, in nats.
struct UncertaintyBound {
    double value = 0.0;
    int d = 0;
    int m = 0;
    double q = 1.0;
};

namespace detail {

inline void require_tsallis_q(double q) {
    if (!(q > 1.0 && q <= 2.0)) {
        throw InvalidArgument("no bound available for q = " + std::to_string(q) + " (supported: q in (1, 2])");
    }
}

} // namespace detail

/// Shannon bound for the complete set of d + 1 MUBs:
/// (d+1) ln((d+1)/2) for odd d, (d/2) ln(d/2) + (d/2+1) ln(d/2+1) for even d.
inline UncertaintyBound bound_shannon_complete_mubs(int d) {
    detail::require(d >= 2, "bound_shannon_complete_mubs: d must be at least 2");
    const double dd = d;
    double v = 0.0;
    if (d % 2 == 1) {
        v = (dd + 1.0) * std::log((dd + 1.0) / 2.0);
    } else {
        const double h = dd / 2.0;
        v = h * std::log(h) + (h + 1.0) * std::log(h + 1.0);
    }
    return {v, d, d + 1, 1.0};
}

/// m ln_q(m d / (d + m - 1)) for m MUBs in dimension d, q in (1, 2].
inline UncertaintyBound bound_tsallis(int d, int m, double q) {
    detail::require(d >= 2, "bound_tsallis: d must be at least 2");
    detail::require(m >= 2 && m <= d + 1, "bound_tsallis: m must lie in [2, d + 1]");
    detail::require_tsallis_q(q);
    const double x = static_cast<double>(m) * d / (d + m - 1.0);
    return {m * ln_q(x, q), d, m, q};
}

/// Bound used for (d, m, q): the complete-MUB Shannon bound at q = 1 with
/// m = d + 1, the q -> 1 limit of the Tsallis bound for fewer settings, and
/// the Tsallis bound for q in (1, 2].
inline UncertaintyBound select_bound(int d, int m, double q) {
    if (is_shannon(q)) {
        detail::require(d >= 2, "select_bound: d must be at least 2");
        detail::require(m >= 2 && m <= d + 1, "select_bound: m must lie in [2, d + 1]");
        if (m == d + 1) {
            return bound_shannon_complete_mubs(d);
        }
        return {m * std::log(static_cast<double>(m) * d / (d + m - 1.0)), d, m, 1.0};
    }
    return bound_tsallis(d, m, q);
}

/// sum_k S(B_k | A_k) over Shannon conditional entropies.
inline double shannon_steering_lhs(std::span<const JointDistribution> joints) {
    double s = 0.0;
    for (const auto &j : joints) {
        s += conditional_tsallis(j, 1.0);
    }
    return s;
}

/// Probability form: (1/(q-1)) sum_k [1 - sum_ij p_ij^q / p_i^(q-1)].
/// Rows with p_i = 0 contribute nothing.
inline double tsallis_steering_lhs(std::span<const JointDistribution> joints, double q) {
    detail::require_tsallis_q(q);
    double s = 0.0;
    for (const auto &j : joints) {
        const Eigen::VectorXd pa = j.marginal_a();
        // 1 - sum_ij p_ij (p_ij / p_i)^(q-1) = -sum_ij p_ij expm1((q-1) ln(p_ij / p_i)).
        double term = 0.0;
        for (int i = 0; i < j.n_a(); ++i) {
            if (pa(i) <= 0.0) {
                continue;
            }
            for (int k = 0; k < j.n_b(); ++k) {
                const double pij = j(i, k);
                if (pij > 0.0) {
                    term -= pij * std::expm1((q - 1.0) * std::log(pij / pa(i)));
                }
            }
        }
        s += term;
    }
    return s / (q - 1.0);
}

/// Entropy form: sum_k [S_q(B_k|A_k) + (1 - q) C(A_k, B_k)]. Algebraically
/// identical to tsallis_steering_lhs.
inline double tsallis_steering_lhs_entropy_form(std::span<const JointDistribution> joints, double q) {
    detail::require_tsallis_q(q);
    double s = 0.0;
    for (const auto &j : joints) {
        s += conditional_tsallis(j, q) + (1.0 - q) * correction_term(j, q);
    }
    return s;
}

namespace detail {

inline void require_isotropic_args(int d, int m, double alpha) {
    require(d >= 2, "isotropic criterion: d must be at least 2");
    require(m >= 2, "isotropic criterion: m must be at least 2");
    require(alpha >= 0.0 && alpha <= 1.0, "isotropic criterion: alpha must lie in [0, 1]");
}

} // namespace detail

/// Criterion value for an isotropic state measured in m MUBs:
/// (m/(q-1)) (1 - d^-q {[1 + (d-1) alpha]^q + (d-1)(1 - alpha)^q}).
inline double isotropic_lhs_closed_form(int d, int m, double q, double alpha) {
    detail::require_isotropic_args(d, m, alpha);
    detail::require_tsallis_q(q);
    const double dd = d;
    const double braces = std::pow(1.0 + (dd - 1.0) * alpha, q) + (dd - 1.0) * std::pow(1.0 - alpha, q);
    return m / (q - 1.0) * (1.0 - braces / std::pow(dd, q));
}

/// Shannon counterpart: m [S(A, B) - ln d] with p_ii = [1 + (d-1) alpha]/d^2
/// (d entries) and p_ij = (1 - alpha)/d^2 (d(d-1) entries).
inline double isotropic_shannon_lhs(int d, int m, double alpha) {
    detail::require_isotropic_args(d, m, alpha);
    const double dd = d;
    const double p_diag = (1.0 + (dd - 1.0) * alpha) / (dd * dd);
    const double p_off = (1.0 - alpha) / (dd * dd);
    const auto xlogx = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
    const double joint = -(dd * xlogx(p_diag) + dd * (dd - 1.0) * xlogx(p_off));
    return m * (joint - std::log(dd));
}

/// Criterion for three Pauli settings at q = 2 on a state in Bloch normal form:
/// sum_i (1 - a_i^2 - b_i^2 - c_i^2 + 2 a_i b_i c_i) / (2 (1 - a_i^2)) >= 1.
///
/// If some |a_i| = 1 (within 1e-9) Alice's marginal is pure, the state is a
/// product and cannot steer; the result is reported as non-violating with
/// `degenerate` set.
inline CriterionResult two_qubit_pauli_q2(const BlochForm &bloch) {
    const auto &a = bloch.a;
    const auto &b = bloch.b;
    const auto &c = bloch.c;
    for (int i = 0; i < 3; ++i) {
        if (1.0 - std::abs(a(i)) <= 1e-9) {
            CriterionResult r;
            r.lhs = std::numeric_limits<double>::quiet_NaN();
            r.bound = 1.0;
            r.violated = false;
            r.margin = std::numeric_limits<double>::quiet_NaN();
            r.degenerate = true;
            r.note = "Alice's reduced state is pure along axis " + std::to_string(i + 1) + "; product state";
            return r;
        }
    }
    double lhs = 0.0;
    for (int i = 0; i < 3; ++i) {
        lhs += (1.0 - a(i) * a(i) - b(i) * b(i) - c(i) * c(i) + 2.0 * a(i) * b(i) * c(i)) / (2.0 * (1.0 - a(i) * a(i)));
    }
    return make_result(lhs, 1.0);
}

/// Probability-form criterion for arbitrary measurement axes on a state in
/// Bloch normal form. Setting k measures u_k.sigma on Alice and v_k.sigma on
/// Bob; T_k = sum_i c_i u_ik v_ik.
inline double two_qubit_general_lhs(const BlochForm &bloch, std::span<const RealVector3> axes_a,
                                    std::span<const RealVector3> axes_b, double q) {
    detail::require_tsallis_q(q);
    detail::require(axes_a.size() == axes_b.size() && !axes_a.empty(),
                    "two_qubit_general_lhs: need matching nonempty axis lists");
    const double denom_scale = std::pow(2.0, q + 1.0);
    double s = 0.0;
    for (std::size_t k = 0; k < axes_a.size(); ++k) {
        const RealVector3 &u = axes_a[k];
        const RealVector3 &v = axes_b[k];
        detail::require(std::abs(u.norm() - 1.0) <= 1e-9 && std::abs(v.norm() - 1.0) <= 1e-9,
                        "two_qubit_general_lhs: axes must be unit vectors");
        const double au = bloch.a.dot(u);
        const double bv = bloch.b.dot(v);
        const double tk = (bloch.c.array() * u.array() * v.array()).sum();
        double inner = 0.0;
        for (const double mu : {1.0, -1.0}) {
            const double marg = 1.0 + mu * au;
            if (marg <= 0.0) {
                continue;
            }
            for (const double nu : {1.0, -1.0}) {
                const double num = std::max(0.0, 1.0 + mu * au + nu * bv + mu * nu * tk);
                inner += std::pow(num, q) / (denom_scale * std::pow(marg, q - 1.0));
            }
        }
        s += 1.0 - inner;
    }
    return s / (q - 1.0);
}

inline std::array<RealVector3, 3> canonical_axes() {
    return {RealVector3::UnitX(), RealVector3::UnitY(), RealVector3::UnitZ()};
}

inline CriterionResult two_qubit_general(const BlochForm &bloch, std::span<const RealVector3> axes_a,
                                         std::span<const RealVector3> axes_b, double q) {
    const auto m = static_cast<int>(axes_a.size());
    detail::require(m >= 2 && m <= 3, "two_qubit_general: bound known for 2 or 3 settings only");
    return make_result(two_qubit_general_lhs(bloch, axes_a, axes_b, q), bound_tsallis(2, m, q).value);
}

/// Criterion from global observables A_k (x) B_k with outcomes +-1:
/// (1/(q-1)) sum_k {1 - [p(+,+) + p(-,-)]^q - [p(+,-) + p(-,+)]^q}.
/// Each table must be 2x2 with outcome 0 = +1. Shannon at q = 1.
inline double separable_entropic_lhs(std::span<const JointDistribution> joints, double q) {
    detail::require(q >= 1.0 && q <= 2.0, "separable_entropic_lhs: q must lie in [1, 2]");
    double s = 0.0;
    for (const auto &j : joints) {
        if (j.n_a() != 2 || j.n_b() != 2) {
            throw InvalidArgument("separable_entropic_lhs: global-product coarse-graining needs two-outcome "
                                  "observables");
        }
        const double same = j(0, 0) + j(1, 1);
        const double diff = j(0, 1) + j(1, 0);
        const std::array<double, 2> coarse{same, diff};
        s += detail::tsallis_sum(coarse, q);
    }
    return s;
}

/// Same criterion from the correlations T_k of the measured axis pairs:
/// (1/(q-1)) sum_k {1 - 2^-q [(1 + T_k)^q + (1 - T_k)^q]}.
inline double separable_entropic_lhs(std::span<const double> correlations, double q) {
    detail::require(q >= 1.0 && q <= 2.0, "separable_entropic_lhs: q must lie in [1, 2]");
    double s = 0.0;
    for (const double t : correlations) {
        detail::require(std::abs(t) <= 1.0 + kStateTol, "separable_entropic_lhs: |T_k| must not exceed 1");
        const std::array<double, 2> coarse{std::clamp((1.0 + t) / 2.0, 0.0, 1.0),
                                           std::clamp((1.0 - t) / 2.0, 0.0, 1.0)};
        s += detail::tsallis_sum(coarse, q);
    }
    return s;
}

/// Global-observable criterion with Pauli settings on a Bloch normal form,
/// against bound_tsallis(2, 3, q).
inline CriterionResult separable_criterion(const BlochForm &bloch, double q) {
    const std::array<double, 3> t{bloch.c(0), bloch.c(1), bloch.c(2)};
    return make_result(separable_entropic_lhs(t, q), bound_tsallis(2, 3, q).value);
}

/// Steering iff |c| > 1. Reported in "lhs >= bound" form as
/// lhs = -|c|, bound = -1.
inline CriterionResult linear_criterion(const RealVector3 &c) { return make_result(-c.norm(), -1.0); }

/// Reference threshold (d^(3/2) - 1) / (d^2 - 1) of the MUB steering
/// inequality for isotropic states.
inline double cavalcanti_threshold(int d) {
    detail::require(d >= 2, "cavalcanti_threshold: d must be at least 2");
    const double dd = d;
    return (std::pow(dd, 1.5) - 1.0) / (dd * dd - 1.0);
}

} // namespace entsteer
