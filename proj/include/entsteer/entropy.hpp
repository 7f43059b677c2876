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

/// \file entropy.hpp
/// q-logarithm, Shannon and Tsallis entropies, relative q-entropy,
/// conditional Tsallis entropy, and the nonadditivity correction C(A, B).
///
/// All logarithms are natural. Terms carrying a zero probability contribute
/// their limit value, zero.

#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "entsteer/measure.hpp"

namespace entsteer {

/// Validated probability vector: entries >= 0 summing to one within 1e-10.
class ProbVector {
  public:
    ProbVector(std::initializer_list<double> p) : ProbVector(std::vector<double>(p)) {}

    explicit ProbVector(std::vector<double> p) : p_(std::move(p)) {
        detail::require(!p_.empty(), "probability vector must be nonempty");
        double sum = 0.0;
        for (double &x : p_) {
            detail::require(x >= -JointDistribution::kClampTol, "probability vector has a negative entry");
            x = std::max(x, 0.0);
            sum += x;
        }
        detail::require(std::abs(sum - 1.0) <= kStateTol, "probability vector does not sum to one");
    }

    explicit ProbVector(const Eigen::VectorXd &p) : ProbVector(std::vector<double>(p.data(), p.data() + p.size())) {}

    [[nodiscard]] std::span<const double> values() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return p_[i]; }

  private:
    std::vector<double> p_;
};

inline bool is_shannon(double q) noexcept { return q == 1.0; }

/// (x^(1-q) - 1) / (1 - q); ln(x) at q = 1.
inline double ln_q(double x, double q) {
    detail::require(x > 0.0, "ln_q: argument must be positive");
    detail::require(q > 0.0, "ln_q: q must be positive");
    if (is_shannon(q)) {
        return std::log(x);
    }
    return std::expm1((1.0 - q) * std::log(x)) / (1.0 - q);
}

namespace detail {

inline double shannon_sum(std::span<const double> p) {
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            s -= x * std::log(x);
        }
    }
    return s;
}

/// (1 - sum p^q) / (q - 1), the closed form of -sum p^q ln_q(p).
/// Evaluated as -sum p expm1((q - 1) ln p) / (q - 1) so it stays accurate
/// as q approaches 1.
inline double tsallis_sum(std::span<const double> p, double q) {
    if (is_shannon(q)) {
        return shannon_sum(p);
    }
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            s -= x * std::expm1((q - 1.0) * std::log(x));
        }
    }
    return s / (q - 1.0);
}

inline std::span<const double> flat(const Eigen::MatrixXd &m) {
    return {m.data(), static_cast<std::size_t>(m.size())};
}

} // namespace detail

/// -sum p_i ln p_i, in nats.
inline double shannon(const ProbVector &p) { return detail::shannon_sum(p.values()); }

/// Tsallis entropy -sum p_i^q ln_q(p_i); Shannon at q = 1.
inline double tsallis(const ProbVector &p, double q) {
    detail::require(q > 0.0, "tsallis: q must be positive");
    return detail::tsallis_sum(p.values(), q);
}

/// D_q(P||R) = -sum p_i ln_q(r_i / p_i); Kullback-Leibler at q = 1.
/// Requires r_i > 0 wherever p_i > 0.
inline double relative_entropy_q(const ProbVector &p, const ProbVector &r, double q) {
    detail::require(p.size() == r.size(), "relative_entropy_q: length mismatch");
    detail::require(q >= 1.0, "relative_entropy_q: q must be at least 1");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        if (r[i] <= 0.0) {
            throw InvalidArgument("relative_entropy_q: support of P not contained in support of R");
        }
        d -= p[i] * ln_q(r[i] / p[i], q);
    }
    return d;
}

/// Joint entropy S_q(A, B) of the whole table.
inline double joint_tsallis(const JointDistribution &j, double q) {
    detail::require(q > 0.0, "joint_tsallis: q must be positive");
    return detail::tsallis_sum(detail::flat(j.table()), q);
}

/// S_q(B|A) = S_q(A, B) - S_q(A), with A the row (Alice) system.
inline double conditional_tsallis(const JointDistribution &j, double q) {
    detail::require(q >= 1.0, "conditional_tsallis: q must be at least 1");
    const Eigen::VectorXd pa = j.marginal_a();
    return joint_tsallis(j, q) - detail::tsallis_sum({pa.data(), static_cast<std::size_t>(pa.size())}, q);
}

/// C(A, B) = sum_i p_i^q [ln_q p_i]^2 - sum_ij p_ij^q ln_q(p_i) ln_q(p_ij).
inline double correction_term(const JointDistribution &j, double q) {
    detail::require(q >= 1.0, "correction_term: q must be at least 1");
    const Eigen::VectorXd pa = j.marginal_a();
    double c = 0.0;
    for (int i = 0; i < j.n_a(); ++i) {
        if (pa(i) <= 0.0) {
            continue;
        }
        const double li = ln_q(pa(i), q);
        c += std::pow(pa(i), q) * li * li;
        for (int k = 0; k < j.n_b(); ++k) {
            const double pij = j(i, k);
            if (pij > 0.0) {
                c -= std::pow(pij, q) * li * ln_q(pij, q);
            }
        }
    }
    return c;
}

} // namespace entsteer
