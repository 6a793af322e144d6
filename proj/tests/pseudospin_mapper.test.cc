// Copyright 2026 The xxzswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xxzswap/pseudospin_mapper.h"

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"
#include "test_util.h"
#include "xxzswap/errors.h"

using namespace xxzswap;
using namespace xxzswap::testing;

namespace {

const DotSpec WORKED{1.0, 0.2, 0.1, 1.0};
const CouplingSpec WORKED_COUPLING{0.5, 0.0, 0.05, 0.05, 0.02};

struct ExactLevel {
    double energy;
    double mixing;
};

// Lowest state of the s branch of the truncated {n = 0, 1} x {+, -} Hamiltonian.
// Basis order: (0,+), (0,-), (1,+), (1,-); H' couples (0,s) with (1,-s).
ExactLevel truncated_ground(const DotSpec &dot, int s) {
    double h = -(std::sqrt(2.0) / 2) * dot.gradient_coupling;
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 0.5 * dot.hbar_omega0 + dot.zeeman_z;
    m(1, 1) = 0.5 * dot.hbar_omega0 - dot.zeeman_z;
    m(2, 2) = 1.5 * dot.hbar_omega0 + dot.zeeman_z;
    m(3, 3) = 1.5 * dot.hbar_omega0 - dot.zeeman_z;
    m(0, 3) = m(3, 0) = h;
    m(1, 2) = m(2, 1) = h;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(m);
    int home = s > 0 ? 0 : 1;
    int partner = s > 0 ? 3 : 2;
    int best = 0;
    for (int k = 1; k < 4; k++) {
        if (std::abs(solver.eigenvectors()(home, k)) > std::abs(solver.eigenvectors()(home, best))) {
            best = k;
        }
    }
    auto v = solver.eigenvectors().col(best);
    return {solver.eigenvalues()(best), v(partner) / v(home)};
}

double rel(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}

}  // namespace

TEST(pseudospin_mapper, worked_example_levels) {
    auto l = perturbed_levels(WORKED);
    ASSERT_NEAR(l.matrix_element, -0.07071067811865477, 1e-15);
    ASSERT_NEAR(l.c_plus, 0.11785113019775792, 1e-15);
    ASSERT_NEAR(l.c_minus, 0.05050762722761055, 1e-15);
    ASSERT_NEAR(l.e0_plus, 0.6916666666666667, 1e-15);
    ASSERT_NEAR(l.e0_minus, 0.29642857142857143, 1e-15);
    ASSERT_NEAR(l.omega, 0.3952380952380952, 1e-15);
    ASSERT_NEAR(l.e0_plus_unperturbed, 0.7, 1e-15);
    ASSERT_NEAR(l.e0_minus_unperturbed, 0.3, 1e-15);
    ASSERT_TRUE(l.warnings.empty());
}

TEST(pseudospin_mapper, worked_example_against_truncated_diagonalization) {
    auto l = perturbed_levels(WORKED);
    auto plus = truncated_ground(WORKED, +1);
    auto minus = truncated_ground(WORKED, -1);
    ASSERT_NEAR(plus.energy, 0.6917792998515511, 1e-13);
    ASSERT_NEAR(minus.energy, 0.2964376360264856, 1e-13);
    ASSERT_NEAR(plus.mixing, 0.1162582564213884, 1e-12);
    ASSERT_NEAR(minus.mixing, 0.05037943445453422, 1e-12);

    double x_plus = std::abs(l.matrix_element) / 0.6;
    double x_minus = std::abs(l.matrix_element) / 1.4;
    ASSERT_LT(rel(l.e0_plus, plus.energy), 10 * std::pow(x_plus, 3));
    ASSERT_LT(rel(l.e0_minus, minus.energy), 10 * std::pow(x_minus, 3));
    // First-order amplitudes carry a second-order relative error.
    ASSERT_LT(rel(l.c_plus, plus.mixing), 10 * std::pow(x_plus, 2));
    ASSERT_LT(rel(l.c_minus, minus.mixing), 10 * std::pow(x_minus, 2));
}

TEST(pseudospin_mapper, small_gradient_agrees_with_truncated_diagonalization) {
    for (int t = 0; t < 300; t++) {
        DotSpec dot{uniform(0.5, 2), 0, 0, 1};
        dot.zeeman_z = uniform(-0.4, 0.4) * dot.hbar_omega0;
        dot.gradient_coupling = uniform(-0.05, 0.05) * dot.hbar_omega0;
        auto l = perturbed_levels(dot);
        for (int s : {+1, -1}) {
            auto exact = truncated_ground(dot, s);
            double gap = std::abs(dot.hbar_omega0 - 2 * dot.zeeman_z * s);
            double x = std::abs(l.matrix_element) / gap;
            double e = s > 0 ? l.e0_plus : l.e0_minus;
            ASSERT_LE(rel(e, exact.energy), 10 * x * x * x + 1e-15);
        }
    }
}

TEST(pseudospin_mapper, second_order_shift_has_sign_of_denominator) {
    for (int t = 0; t < 300; t++) {
        DotSpec dot{uniform(0.5, 2), 0, 0, 1};
        dot.zeeman_z = uniform(-0.45, 0.45) * dot.hbar_omega0;
        dot.gradient_coupling = uniform(-0.3, 0.3) * dot.hbar_omega0;
        auto l = perturbed_levels(dot);
        double dp = dot.hbar_omega0 * -1 + 2 * dot.zeeman_z;
        double dm = dot.hbar_omega0 * -1 - 2 * dot.zeeman_z;
        double sp = l.e0_plus - l.e0_plus_unperturbed;
        double sm = l.e0_minus - l.e0_minus_unperturbed;
        if (sp != 0) {
            ASSERT_EQ(std::signbit(sp), std::signbit(dp));
        }
        if (sm != 0) {
            ASSERT_EQ(std::signbit(sm), std::signbit(dm));
        }
    }
}

TEST(pseudospin_mapper, zero_gradient_levels) {
    auto l = perturbed_levels(DotSpec{1, 0.15, 0, 0});
    ASSERT_EQ(l.c_plus, 0);
    ASSERT_EQ(l.c_minus, 0);
    ASSERT_NEAR(l.omega, 0.3, 1e-15);
}

TEST(pseudospin_mapper, level_errors) {
    ASSERT_THROW(perturbed_levels(DotSpec{1, 0.5, 0.1, 1}), SingularityError);
    ASSERT_THROW(perturbed_levels(DotSpec{1, -0.5, 0.0, 1}), SingularityError);
    ASSERT_THROW(perturbed_levels(DotSpec{0, 0.1, 0.1, 1}), ValidationError);
    ASSERT_THROW(perturbed_levels(DotSpec{1, 0.9, 0.3, 1}), ValidationError);
    ASSERT_THROW(perturbed_levels(DotSpec{1, std::nan(""), 0, 1}), ValidationError);
    auto strong = perturbed_levels(DotSpec{1, 0.4, 0.5, 1});
    ASSERT_FALSE(strong.warnings.empty());
}

TEST(pseudospin_mapper, worked_example_effective_params) {
    auto e = effective_params(WORKED, WORKED, WORKED_COUPLING);
    ASSERT_NEAR(e.t_plus, 0.050694444444444445, 1e-15);
    ASSERT_NEAR(e.t_minus, 0.05012755102040817, 1e-15);
    ASSERT_NEAR(e.f_plus, 0.003367175148507369, 1e-15);
    ASSERT_NEAR(e.f_minus, 0.003367175148507369, 1e-15);
    ASSERT_NEAR(e.f, 0.003367175148507369, 1e-15);
    ASSERT_NEAR(e.J_eff, 0.02032950680272109, 1e-15);
    ASSERT_NEAR(e.Delta_tilde, 0.9881701987748374, 1e-13);
    ASSERT_NEAR(e.omega_tilde, 0.3951425347701943, 1e-15);
    ASSERT_EQ(e.inhomogeneity_ratio, 1);
    ASSERT_TRUE(e.warnings.empty());
}

TEST(pseudospin_mapper, zero_gradient_restores_isotropy) {
    for (int t = 0; t < 200; t++) {
        DotSpec a{1, uniform(-0.4, 0.4), 0, uniform(0.5, 2)};
        DotSpec b = a;
        b.g_times_b = uniform(0.5, 2);
        CouplingSpec c{uniform(1, 2), uniform(0, 0.5), uniform(0.01, 0.1), uniform(0.01, 0.1), uniform(0.01, 0.1)};
        auto e = effective_params(a, b, c);
        ASSERT_EQ(e.Delta_tilde, 1);
        ASSERT_EQ(e.omega_tilde, e.omega);
        ASSERT_EQ(e.t_plus, c.t00);
        ASSERT_EQ(e.J_eff, 4 * c.t00 * c.t00 / (c.U - c.V));
    }
}

TEST(pseudospin_mapper, recomputation_from_inputs) {
    for (int t = 0; t < 200; t++) {
        DotSpec a{1, uniform(-0.3, 0.3), uniform(-0.2, 0.2), uniform(0.5, 2)};
        DotSpec b{uniform(0.9, 1.1), uniform(-0.3, 0.3), uniform(-0.2, 0.2), uniform(0.5, 2)};
        CouplingSpec c{uniform(1.5, 2), uniform(0, 0.3), uniform(0.01, 0.1), uniform(0.01, 0.1), uniform(0.01, 0.1)};
        auto li = perturbed_levels(a);
        auto lj = perturbed_levels(b);
        auto e = effective_params(a, b, c);

        double w = (li.omega + lj.omega) / 2;
        double uv = c.U - c.V;
        double tp = c.t00 + li.c_plus * lj.c_plus * c.t11;
        double tm = c.t00 + li.c_minus * lj.c_minus * c.t11;
        double fp = (li.c_plus + lj.c_minus) * c.t12;
        double fm = (li.c_minus + lj.c_plus) * c.t12;
        double f = 0.5 * (fp + b.g_times_b / a.g_times_b * fm);
        ASSERT_NEAR(e.t_plus, tp, 1e-12);
        ASSERT_NEAR(e.t_minus, tm, 1e-12);
        ASSERT_NEAR(e.f_plus, fp, 1e-12);
        ASSERT_NEAR(e.f_minus, fm, 1e-12);
        ASSERT_NEAR(e.f, f, 1e-12);
        ASSERT_NEAR(e.J_eff, 4 * tp * tm / uv, 1e-12);
        ASSERT_NEAR(e.Delta_tilde, (tp * tp + tm * tm) / (2 * tp * tm) - f * f / (tp * tm * (1 - w * w / (uv * uv))),
                    1e-12);
        ASSERT_NEAR(e.omega_tilde, w * (1 - 2 * f * f / (uv * uv - w * w)), 1e-12);
        ASSERT_NEAR(e.t_plus_ratio, tp / uv, 1e-12);
    }
}

TEST(pseudospin_mapper, effective_params_errors) {
    ASSERT_THROW(effective_params(WORKED, WORKED, CouplingSpec{1, 1, 0.05, 0.05, 0.02}), SingularityError);
    // zeeman 0.25 without gradient gives omega = 0.5 = U - V.
    DotSpec flat{1, 0.25, 0, 1};
    ASSERT_THROW(effective_params(flat, flat, CouplingSpec{1, 0.5, 0.05, 0.05, 0.02}), SingularityError);
    ASSERT_THROW(effective_params(flat, flat, CouplingSpec{2, 0.5, 0, 0, 0.02}), SingularityError);
}

TEST(pseudospin_mapper, inhomogeneity) {
    ASSERT_EQ(inhomogeneity_ratio(DotSpec{1, 0, 0, 2}, DotSpec{1, 0, 0, 3}), 1.5);
    ASSERT_EQ(inhomogeneity_ratio(DotSpec{1, 0, 0, 0}, DotSpec{1, 0, 0, 0}), 1);
    ASSERT_THROW(inhomogeneity_ratio(DotSpec{1, 0, 0, 0}, DotSpec{1, 0, 0, 1}), ValidationError);

    auto e = effective_params(DotSpec{1, 0.2, 0.1, 1}, DotSpec{1, 0.25, 0.1, 1}, WORKED_COUPLING);
    ASSERT_NE(e.omega_i, e.omega_j);
    ASSERT_EQ(e.omega, (e.omega_i + e.omega_j) / 2);
    ASSERT_FALSE(e.warnings.empty());
}

TEST(pseudospin_mapper, map_isotropic_swap) {
    EffectiveParams e{};
    e.J_eff = 0.02;
    e.Delta_tilde = 1;
    e.omega_tilde = 0;
    auto m = map_to_swap(e, 1, 0);
    ASSERT_TRUE(m.feasible);
    ASSERT_NEAR(m.tau, M_PI / 0.02, 1e-9);
    ASSERT_TRUE(m.plan.has_value());
    ASSERT_TRUE(verify_swap(*m.plan, 1e-10).passed);
}

TEST(pseudospin_mapper, map_anisotropic_swap_needs_zeeman_condition) {
    EffectiveParams e{};
    e.J_eff = 0.5;
    e.Delta_tilde = 3;
    e.omega_tilde = 0.5;  // tau = 2 pi, omega tau = pi
    auto ok = map_to_swap(e, 2, 1);
    ASSERT_TRUE(ok.feasible);
    ASSERT_NEAR(ok.zeeman_phase_residual, 0, 1e-12);
    ASSERT_TRUE(verify_swap(*ok.plan, 1e-10).passed);

    e.omega_tilde = 0.6;
    auto bad = map_to_swap(e, 2, 1);
    ASSERT_FALSE(bad.feasible);
    ASSERT_FALSE(bad.zeeman_ok);
    ASSERT_TRUE(bad.delta_ok);
    ASSERT_NEAR(bad.zeeman_phase_residual, 0.2 * M_PI, 1e-12);
    ASSERT_EQ(bad.failures.size(), 1u);
    ASSERT_FALSE(bad.plan.has_value());
}

TEST(pseudospin_mapper, map_reports_anisotropy_residual) {
    EffectiveParams e{};
    e.J_eff = 0.5;
    e.Delta_tilde = 1.7;
    e.omega_tilde = 0.5;
    auto m = map_to_swap(e, 2, 1);
    ASSERT_FALSE(m.feasible);
    ASSERT_FALSE(m.delta_ok);
    ASSERT_NEAR(m.delta_residual, 1.3, 1e-12);
    ASSERT_EQ(m.required_delta, 3);
}

TEST(pseudospin_mapper, map_other_failures) {
    EffectiveParams e{};
    e.J_eff = -0.5;
    e.Delta_tilde = 1;
    e.omega_tilde = 0;
    auto neg = map_to_swap(e, 1, 0);
    ASSERT_FALSE(neg.tau_positive);
    ASSERT_FALSE(neg.feasible);

    e.J_eff = 0.5;
    e.Delta_tilde = 2;
    auto even = map_to_swap(e, 3, 1);
    ASSERT_FALSE(even.parity_ok);
    ASSERT_FALSE(even.feasible);

    auto same = map_to_swap(e, 2, 2);
    ASSERT_FALSE(same.feasible);
    ASSERT_FALSE(same.failures.empty());
}

TEST(pseudospin_mapper, from_physical) {
    auto d = DotSpec::from_physical(2.0, 0.5, 4.0, 2.0, 0.25, 0.3, 0.1);
    double length = std::sqrt(2 * 2.0 / (0.5 * 4.0));
    ASSERT_NEAR(d.hbar_omega0, 8, 1e-15);
    ASSERT_NEAR(d.zeeman_z, 0.15, 1e-15);
    ASSERT_NEAR(d.g_times_b, 0.05, 1e-15);
    ASSERT_NEAR(d.gradient_coupling, 0.05 * length, 1e-15);
    ASSERT_THROW(DotSpec::from_physical(1, 0, 1, 1, 1, 1, 1), ValidationError);
}
