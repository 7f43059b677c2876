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

/// \file analysis.hpp
/// Critical noise thresholds for isotropic states, the dimension sweep
/// table, Monte-Carlo classification of random two-qubit states, and the
/// detection window for the one-way steerable family.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "entsteer/criteria.hpp"
#include "entsteer/rng.hpp"

namespace entsteer {

// ---------------------------------------------------------------------------
// Isotropic thresholds

struct ThresholdResult {
    int d = 0;
    int m = 0;
    double q = 0.0;
    double alpha_crit = 0.0;
    int iterations = 0;
    double bound = 0.0;
};

/// Criterion value for the isotropic state with the q = 1 (Shannon) or
/// q in (1, 2] (Tsallis) left-hand side.
inline double isotropic_lhs(int d, int m, double q, double alpha) {
    return is_shannon(q) ? isotropic_shannon_lhs(d, m, alpha) : isotropic_lhs_closed_form(d, m, q, alpha);
}

/// Same value computed from explicit MUBs (prime d) applied to the
/// isotropic density matrix; Bob measures the conjugate bases.
inline double isotropic_lhs_from_mubs(int d, int m, double q, double alpha) {
    const DensityMatrix rho = make_isotropic(d, alpha);
    const auto bases = mub_prime(d, m);
    std::vector<JointDistribution> joints;
    joints.reserve(bases.size());
    for (const auto &basis : bases) {
        joints.push_back(joint_distribution(rho, basis, basis.conjugate()));
    }
    return is_shannon(q) ? shannon_steering_lhs(joints) : tsallis_steering_lhs(joints, q);
}

/// Smallest white-noise visibility alpha beyond which the isotropic state
/// violates the criterion, found by bisection on [0, 1]. The left-hand side
/// is strictly decreasing in alpha.
inline ThresholdResult critical_alpha(int d, int m, double q, double tol = 1e-12) {
    detail::require(tol >= 1e-12, "critical_alpha: tol must be at least 1e-12");
    const UncertaintyBound bound = select_bound(d, m, q);
    const auto excess = [&](double alpha) { return isotropic_lhs(d, m, q, alpha) - bound.value; };
    if (excess(1.0) >= 0.0) {
        throw NoSolution("criterion never violated for this (d, m, q)");
    }
    if (excess(0.0) < 0.0) {
        throw NoSolution("criterion violated at alpha = 0 for this (d, m, q)");
    }
    double lo = 0.0;
    double hi = 1.0;
    int iterations = 0;
    while (hi - lo > tol && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    return {d, m, q, 0.5 * (lo + hi), iterations, bound.value};
}

// ---------------------------------------------------------------------------
// Dimension sweep

struct Figure1Row {
    int d = 0;
    bool supported = false;
    /// One threshold per requested q, complete MUB set (m = d + 1).
    std::vector<double> alpha;
    double alpha_cavalcanti = 0.0;
};

struct Figure1Table {
    std::vector<double> q_list;
    std::vector<Figure1Row> rows;
};

inline Figure1Table figure1_table(const std::vector<int> &dims, const std::vector<double> &q_list = {1.0, 2.0},
                                  double tol = 1e-12) {
    Figure1Table table{q_list, {}};
    for (const int d : dims) {
        detail::require(d >= 2, "figure1_table: dimensions must be at least 2");
        Figure1Row row;
        row.d = d;
        row.alpha_cavalcanti = cavalcanti_threshold(d);
        row.supported = is_prime(d);
        if (row.supported) {
            for (const double q : q_list) {
                row.alpha.push_back(critical_alpha(d, d + 1, q, tol).alpha_crit);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace detail {

inline std::string format_sig(double x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

} // namespace detail

/// CSV with header d,alpha_q<q>...,alpha_cavalcanti and 9 significant digits.
inline void write_figure1_csv(std::ostream &os, const Figure1Table &table) {
    os << "d";
    for (const double q : table.q_list) {
        os << ",alpha_q" << detail::format_sig(q, 6);
    }
    os << ",alpha_cavalcanti\n";
    for (const auto &row : table.rows) {
        os << row.d;
        for (std::size_t k = 0; k < table.q_list.size(); ++k) {
            os << ',' << (row.supported ? detail::format_sig(row.alpha[k], 9) : std::string("unsupported"));
        }
        os << ',' << detail::format_sig(row.alpha_cavalcanti, 9) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Random two-qubit ensemble

/// Verdict pattern of the three-setting criteria on one state.
enum class Category { None, AllThree, OnlyPauliQ2, OnlyLinear, Overflow };

inline constexpr std::array<Category, 5> kCategories = {Category::None, Category::AllThree, Category::OnlyPauliQ2,
                                                        Category::OnlyLinear, Category::Overflow};

inline const char *category_name(Category c) {
    switch (c) {
    case Category::None:
        return "none";
    case Category::AllThree:
        return "all_three";
    case Category::OnlyPauliQ2:
        return "only_eq21";
    case Category::OnlyLinear:
        return "only_linear";
    case Category::Overflow:
        return "overflow";
    }
    return "unknown";
}

struct StateVerdicts {
    bool pauli_q2 = false;
    bool separable_q2 = false;
    bool linear = false;
};

inline StateVerdicts evaluate_criteria(const BlochForm &bloch) {
    return {two_qubit_pauli_q2(bloch).violated, separable_criterion(bloch, 2.0).violated,
            linear_criterion(bloch.c).violated};
}

inline Category categorize(const StateVerdicts &v) {
    if (!v.pauli_q2 && !v.separable_q2 && !v.linear) {
        return Category::None;
    }
    if (v.pauli_q2 && v.separable_q2 && v.linear) {
        return Category::AllThree;
    }
    if (v.pauli_q2 && !v.separable_q2 && !v.linear) {
        return Category::OnlyPauliQ2;
    }
    if (v.linear && !v.pauli_q2 && !v.separable_q2) {
        return Category::OnlyLinear;
    }
    return Category::Overflow;
}

/// Category of draw `index` in the ensemble keyed by `seed`.
inline Category classify_draw(std::uint64_t seed, std::uint64_t index) {
    auto engine = draw_engine(seed, index);
    const DensityMatrix rho = sample_hs_random(4, engine);
    return categorize(evaluate_criteria(bloch_normal_form(rho)));
}

struct EnsembleReport {
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, kCategories.size()> counts{};

    [[nodiscard]] std::uint64_t count(Category c) const { return counts[static_cast<std::size_t>(c)]; }
    [[nodiscard]] double fraction(Category c) const {
        return n_samples == 0 ? 0.0 : static_cast<double>(count(c)) / static_cast<double>(n_samples);
    }
};

/// Classifies n Hilbert-Schmidt random two-qubit states. Results depend only
/// on (n, seed), never on the thread count.
inline EnsembleReport classify_ensemble(std::uint64_t n, std::uint64_t seed, unsigned threads = 1) {
    detail::require(n >= 1, "classify_ensemble: need at least one sample");
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(n, 1024))));
    std::vector<std::array<std::uint64_t, kCategories.size()>> partial(threads);
    const auto work = [&](unsigned t) {
        const std::uint64_t begin = n * t / threads;
        const std::uint64_t end = n * (t + 1) / threads;
        auto &local = partial[t];
        local.fill(0);
        for (std::uint64_t i = begin; i < end; ++i) {
            ++local[static_cast<std::size_t>(classify_draw(seed, i))];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
    }
    EnsembleReport report;
    report.n_samples = n;
    report.seed = seed;
    for (const auto &local : partial) {
        for (std::size_t k = 0; k < local.size(); ++k) {
            report.counts[k] += local[k];
        }
    }
    return report;
}

/// CSV with header category,count,fraction.
inline void write_ensemble_csv(std::ostream &os, const EnsembleReport &report) {
    os << "category,count,fraction\n";
    for (const Category c : kCategories) {
        os << category_name(c) << ',' << report.count(c) << ',' << detail::format_sig(report.fraction(c), 9) << '\n';
    }
}

// ---------------------------------------------------------------------------
// One-way steerable family

/// How to read the printed Bob-to-Alice condition
/// cos^2(2 theta) >= (2 beta - 1) [(2 - beta) beta^3].
enum class BobAliceReading {
    /// (2 beta - 1) / ((2 - beta) beta^3)
    Division,
    /// (2 beta - 1) (2 - beta) beta^3
    Product,
};

/// True when the family is certified unsteerable from Bob to Alice under
/// all projective measurements, for the chosen reading of the condition.
inline bool bob_to_alice_unsteerable(double theta, double beta, BobAliceReading reading) {
    const double lhs = std::pow(std::cos(2.0 * theta), 2);
    const double num = 2.0 * beta - 1.0;
    const double other = (2.0 - beta) * beta * beta * beta;
    const double rhs = reading == BobAliceReading::Division ? num / other : num * other;
    return lhs >= rhs;
}

/// Edge of the q = 2 three-Pauli detection region,
/// sqrt(3 - sqrt(1 + 8 sin^2(2 theta))) / (2 cos(2 theta)).
/// Evaluated rationalized, sqrt(2 / (3 + sqrt(1 + 8 sin^2))): the direct form
/// cancels catastrophically as theta -> pi/4.
inline double one_way_lower_bound(double theta) {
    const double s2 = std::sin(2.0 * theta);
    return std::sqrt(2.0 / (3.0 + std::sqrt(1.0 + 8.0 * s2 * s2)));
}

/// [1 + 2 sin^2(2 theta)]^(-1/2).
inline double one_way_beta_max(double theta) {
    const double s2 = std::sin(2.0 * theta);
    return 1.0 / std::sqrt(1.0 + 2.0 * s2 * s2);
}

struct OneWayWindow {
    double theta = 0.0;
    double lower = 0.0;
    double beta_max = 0.0;
    /// Bob-to-Alice condition evaluated at beta = beta_max.
    bool bob_to_alice_unsteerable_check = false;
    BobAliceReading reading = BobAliceReading::Division;

    [[nodiscard]] bool contains(double beta) const { return beta > lower && beta <= beta_max; }
};

inline OneWayWindow one_way_window(double theta, BobAliceReading reading = BobAliceReading::Division) {
    detail::require(theta > 0.0 && theta <= std::numbers::pi / 4.0 + 1e-15,
                    "one_way_window: theta must lie in (0, pi/4]");
    OneWayWindow w;
    w.theta = theta;
    w.lower = one_way_lower_bound(theta);
    w.beta_max = one_way_beta_max(theta);
    w.reading = reading;
    w.bob_to_alice_unsteerable_check = bob_to_alice_unsteerable(theta, w.beta_max, reading);
    return w;
}

struct OneWayReport {
    double theta = 0.0;
    double beta = 0.0;
    OneWayWindow window;
    bool in_window = false;
    /// Three-Pauli q = 2 criterion on the state's Bloch normal form.
    CriterionResult criterion;
    BlochForm bloch;
};

inline OneWayReport verify_one_way_threshold(double theta, double beta,
                                             BobAliceReading reading = BobAliceReading::Division) {
    OneWayReport r;
    r.theta = theta;
    r.beta = beta;
    r.window = one_way_window(theta, reading);
    r.in_window = r.window.contains(beta);
    r.bloch = bloch_normal_form(make_one_way({theta, beta}));
    r.criterion = two_qubit_pauli_q2(r.bloch);
    return r;
}

} // namespace entsteer
