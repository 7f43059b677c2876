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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
// Tolerances are pinned here, not taken from the command line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "test_support.hpp"

using namespace entsteer;
using namespace entsteer::testing;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
const int kDims[] = {2, 3, 5, 7, 11, 13};

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string &what) {
        if (!cond && ok) {
            detail << what;
        }
        ok = ok && cond;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Check ac1_isotropic_q2() {
    Check c;
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (const int d : kDims) {
        const double alpha = critical_alpha(d, d + 1, 2.0).alpha_crit;
        worst = std::max(worst, std::abs(alpha - 1.0 / std::sqrt(d + 1.0)));
    }
    const double elapsed = seconds_since(t0);
    c.expect(worst <= 1e-9, "max |alpha - 1/sqrt(d+1)| too large");
    c.expect(elapsed < 1.0, "runtime >= 1 s");
    c.detail << " max_err=" << worst << " runtime_s=" << elapsed;
    return c;
}

Check ac2_werner() {
    Check c;
    const double alpha = critical_alpha(2, 3, 2.0).alpha_crit;
    c.expect(std::abs(alpha - 0.5773503) <= 1e-6, "alpha_crit off");
    c.detail << " alpha_crit=" << alpha;
    return c;
}

Check ac3_dominance() {
    Check c;
    for (const int d : kDims) {
        const double ours = 1.0 / std::sqrt(d + 1.0);
        const double theirs = cavalcanti_threshold(d);
        // Literal form of the comparison threshold as an independent check.
        const double literal = (std::pow(d, 1.5) - 1.0) / (d * d - 1.0);
        c.expect(std::abs(theirs - literal) <= 1e-15, "comparison threshold mismatch");
        c.expect(ours < literal, "not stronger at d=" + std::to_string(d));
        c.expect(critical_alpha(d, d + 1, 2.0).alpha_crit < literal, "solver not stronger");
        c.detail << " d" << d << ':' << ours << '<' << literal;
    }
    return c;
}

Check ac4_monte_carlo() {
    Check c;
    constexpr std::uint64_t kSamples = 100000;
    constexpr std::uint64_t kSeed = 20240601;
    constexpr double kTolPp = 0.5;
    const auto t0 = Clock::now();
    const EnsembleReport r = classify_ensemble(kSamples, kSeed, 1);
    const double elapsed = seconds_since(t0);
    const std::pair<Category, double> expected[] = {
        {Category::None, 94.34}, {Category::AllThree, 3.81}, {Category::OnlyPauliQ2, 1.85}, {Category::OnlyLinear, 0.0}};
    for (const auto &[cat, pct] : expected) {
        const double got = 100.0 * r.fraction(cat);
        c.expect(std::abs(got - pct) <= kTolPp, std::string(category_name(cat)) + " outside tolerance");
    }
    c.expect(r.count(Category::OnlyLinear) == 0, "only_linear nonzero");
    c.expect(r.count(Category::Overflow) == 0, "overflow nonzero");
    c.expect(elapsed < 120.0, "runtime >= 2 min");
    c.detail << " seed=" << kSeed << " n=" << kSamples;
    for (const Category cat : kCategories) {
        c.detail << ' ' << category_name(cat) << '=' << 100.0 * r.fraction(cat) << '%';
    }
    c.detail << " runtime_s=" << elapsed;
    return c;
}

Check ac5_bell_diagonal() {
    Check c;
    Rng rng(5);
    int violated = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        BlochForm b;
        b.c = random_bell_diagonal_c(rng);
        const bool v21 = two_qubit_pauli_q2(b).violated;
        const bool v18 = separable_criterion(b, 2.0).violated;
        const bool vlin = linear_criterion(b.c).violated;
        c.expect(v21 == v18 && v18 == vlin, "verdicts differ at trial " + std::to_string(trial));
        violated += v21 ? 1 : 0;
    }
    c.detail << " violating=" << violated << "/10000";
    return c;
}

Check ac6_form_equivalence() {
    Check c;
    Rng rng(6);
    double worst = 0.0;
    for (const double q : {1.3, 1.7, 2.0}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const int da = 2 + trial % 3;
            const int db = 2 + (trial / 3) % 3;
            const std::vector<JointDistribution> joints{random_joint(da, db, rng), random_joint(da, db, rng),
                                                        random_joint(da, db, rng)};
            worst = std::max(worst, std::abs(tsallis_steering_lhs_entropy_form(joints, q) -
                                             tsallis_steering_lhs(joints, q)));
        }
    }
    c.expect(worst <= 1e-10, "entropy form vs probability form");
    double worst_limit = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::vector<JointDistribution> joints{random_joint(3, 3, rng), random_joint(3, 3, rng)};
        worst_limit = std::max(worst_limit, std::abs(tsallis_steering_lhs_entropy_form(joints, 1.0 + 1e-6) -
                                                         shannon_steering_lhs(joints)));
    }
    c.expect(worst_limit <= 1e-5, "Shannon limit");
    c.detail << " max_diff=" << worst << " shannon_limit_diff=" << worst_limit;
    return c;
}

Check ac7_bounds() {
    Check c;
    const double t = bound_tsallis(2, 3, 2.0).value;
    const double s2 = bound_shannon_complete_mubs(2).value;
    const double s3 = bound_shannon_complete_mubs(3).value;
    c.expect(t == 1.0, "bound_tsallis(2,3,2) != 1 exactly");
    c.expect(std::abs(s2 - 2.0 * std::log(2.0)) <= 1e-12, "Shannon d=2");
    c.expect(std::abs(s3 - 4.0 * std::log(2.0)) <= 1e-12, "Shannon d=3");
    c.detail << " tsallis=" << t << " shannon2=" << s2 << " shannon3=" << s3;
    return c;
}

Check ac8_mubs() {
    Check c;
    double worst_overlap = 0.0;
    double worst_prob = 0.0;
    for (const int d : {3, 5, 7, 11}) {
        const auto bases = mub_prime(d, d + 1);
        c.expect(check_mub(bases), "check_mub failed at d=" + std::to_string(d));
        worst_overlap = std::max(worst_overlap, mub_overlap_deviation(bases));
        for (const double alpha : {0.0, 0.4, 0.8, 1.0}) {
            const DensityMatrix rho = make_isotropic(d, alpha);
            for (const auto &basis : bases) {
                const JointDistribution j = joint_distribution(rho, basis, basis.conjugate());
                for (int i = 0; i < d; ++i) {
                    for (int k = 0; k < d; ++k) {
                        const double expected = i == k ? (1.0 + (d - 1) * alpha) / (d * d) : (1.0 - alpha) / (d * d);
                        worst_prob = std::max(worst_prob, std::abs(j(i, k) - expected));
                    }
                }
            }
        }
    }
    c.expect(worst_overlap < 1e-10, "overlap deviation");
    c.expect(worst_prob <= 1e-10, "isotropic probabilities");
    c.detail << " overlap_dev=" << worst_overlap << " prob_dev=" << worst_prob;
    return c;
}

Check ac9_one_way() {
    Check c;
    const OneWayWindow w = one_way_window(kPi / 8.0);
    c.expect(std::abs(w.lower - 0.6180) <= 1e-4, "lower edge");
    c.expect(std::abs(w.beta_max - 0.7071) <= 1e-4, "beta_max");
    // 50 interior points of (0, pi/4). At pi/4 itself both edges meet at
    // 1/sqrt 3 and the window is empty.
    for (int k = 1; k <= 50; ++k) {
        const double theta = k * (kPi / 4.0) / 51.0;
        const OneWayWindow g = one_way_window(theta);
        c.expect(g.lower < g.beta_max, "empty window at theta=" + std::to_string(theta));
        const double inside = 0.5 * (g.lower + g.beta_max);
        const double below = 0.98 * g.lower;
        const auto lhs = [&](double beta) {
            return two_qubit_pauli_q2(bloch_normal_form(make_one_way({theta, beta})));
        };
        c.expect(lhs(inside).violated, "no violation inside window at theta=" + std::to_string(theta));
        c.expect(!lhs(below).violated, "violation below window at theta=" + std::to_string(theta));
    }
    c.detail << " window=(" << w.lower << ", " << w.beta_max << ")";
    return c;
}

Check ac10_properties() {
    Check c;
    Rng rng(10);
    double worst_add = 0.0;
    double worst_convex = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double q = 1.0 + (trial % 5) * 0.25;
        const auto p1 = random_distribution(3, rng);
        const auto r1 = random_distribution(3, rng);
        const auto p2 = random_distribution(2, rng);
        const auto r2 = random_distribution(2, rng);
        std::vector<double> p12;
        std::vector<double> r12;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                p12.push_back(p1[i] * p2[j]);
                r12.push_back(r1[i] * r2[j]);
            }
        }
        const double d1 = relative_entropy_q(ProbVector(p1), ProbVector(r1), q);
        const double d2 = relative_entropy_q(ProbVector(p2), ProbVector(r2), q);
        const double d12 = relative_entropy_q(ProbVector(p12), ProbVector(r12), q);
        worst_add = std::max(worst_add, std::abs(d12 - (d1 + d2 + (q - 1.0) * d1 * d2)));

        const double lambda = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::vector<double> pm(3);
        std::vector<double> rm(3);
        for (std::size_t i = 0; i < 3; ++i) {
            pm[i] = lambda * p1[i] + (1 - lambda) * r1[i];
            rm[i] = lambda * r1[i] + (1 - lambda) * p1[i];
        }
        const double mixed = relative_entropy_q(ProbVector(pm), ProbVector(rm), q);
        const double split = lambda * d1 + (1 - lambda) * relative_entropy_q(ProbVector(r1), ProbVector(p1), q);
        worst_convex = std::max(worst_convex, mixed - split);
    }
    c.expect(worst_add <= 1e-10, "pseudo-additivity");
    c.expect(worst_convex <= 1e-10, "joint convexity");

    int product_violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const DensityMatrix rho = DensityMatrix::validate(tensor(random_state(2, rng).matrix(), random_state(2, rng).matrix()));
        const BlochForm b = bloch_normal_form(rho);
        product_violations += two_qubit_pauli_q2(b).violated || separable_criterion(b, 2.0).violated ||
                              linear_criterion(b.c).violated;
    }
    c.expect(product_violations == 0, "product state flagged");

    double worst_spec = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix rho = random_state(4, rng);
        const DensityMatrix back = make_two_qubit(bloch_normal_form(rho));
        worst_spec = std::max(worst_spec, (rho.spectrum() - back.spectrum()).cwiseAbs().maxCoeff());
    }
    c.expect(worst_spec <= 1e-10, "normal-form spectrum");

    const EnsembleReport serial = classify_ensemble(5000, 99, 1);
    const EnsembleReport again = classify_ensemble(5000, 99, 1);
    const EnsembleReport threaded = classify_ensemble(5000, 99, 4);
    c.expect(serial.counts == again.counts && serial.counts == threaded.counts, "ensemble not reproducible");

    c.detail << " pseudo_add=" << worst_add << " convexity_excess=" << worst_convex
             << " product_violations=" << product_violations << " spectrum_dev=" << worst_spec;
    return c;
}

} // namespace

int main() {
    const std::pair<const char *, std::function<Check()>> suite[] = {
        {"AC1 isotropic q=2 thresholds", ac1_isotropic_q2},
        {"AC2 Werner threshold", ac2_werner},
        {"AC3 comparison dominance", ac3_dominance},
        {"AC4 Monte-Carlo percentages", ac4_monte_carlo},
        {"AC5 Bell-diagonal equivalence", ac5_bell_diagonal},
        {"AC6 form equivalence", ac6_form_equivalence},
        {"AC7 uncertainty bounds", ac7_bounds},
        {"AC8 MUB validity", ac8_mubs},
        {"AC9 one-way window", ac9_one_way},
        {"AC10 property suites", ac10_properties},
    };
    int failures = 0;
    for (const auto &[name, fn] : suite) {
        Check c;
        try {
            c = fn();
        } catch (const std::exception &e) {
            c.ok = false;
            c.detail << " exception: " << e.what();
        }
        std::printf("[%s] %s:%s\n", c.ok ? "PASS" : "FAIL", name, c.detail.str().c_str());
        std::fflush(stdout);
        failures += c.ok ? 0 : 1;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
