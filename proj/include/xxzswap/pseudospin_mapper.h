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

#ifndef XXZSWAP_PSEUDOSPIN_MAPPER_H
#define XXZSWAP_PSEUDOSPIN_MAPPER_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xxzswap/swap_design.h"

namespace xxzswap {

/// One electron in a parabolic dot under a slanting field B0 e_z + z b e_x.
///
/// Energies share one unit; the usual choice is hbar_omega0 = 1. Only the products
/// below enter the level structure, so raw constants are folded in up front.
struct DotSpec {
    /// Confinement energy hbar omega0. Must be positive.
    double hbar_omega0 = 1;
    /// g mu_B B0.
    double zeeman_z = 0;
    /// g mu_B b L with L = sqrt(2 hbar / (m omega0)).
    double gradient_coupling = 0;
    /// g mu_B b per unit length. Only the ratio between the two dots is used.
    double g_times_b = 0;

    /// Builds the products from raw constants (any consistent unit system).
    static DotSpec from_physical(double hbar, double effective_mass, double omega0, double g_factor,
                                 double bohr_magneton, double field_b0, double gradient_b);
};

/// Two lowest pseudospin levels of a dot, to second order in the gradient coupling.
struct PseudospinLevels {
    /// <0,s|H'|1,-s> = -(sqrt2/2) g mu_B b L; identical for both s.
    double matrix_element;
    /// Zeroth-order ground energies (1/2) hbar omega0 +- g mu_B B0.
    double e0_plus_unperturbed;
    double e0_minus_unperturbed;
    double e0_plus;
    double e0_minus;
    /// First-order admixture of |1,-s> into |0,s>.
    double c_plus;
    double c_minus;
    /// |E_{0,+} - E_{0,-}|
    double omega;
    std::vector<std::string> warnings;
};

/// Warn once an admixture coefficient exceeds this magnitude.
inline constexpr double MIXING_WARN_THRESHOLD = 0.3;

/// Throws SingularityError when a denominator E_{0,s} - E_{1,-s} vanishes (g mu_B B0 s
/// = hbar omega0 / 2) and ValidationError when |g mu_B B0| + |h| >= hbar omega0.
PseudospinLevels perturbed_levels(const DotSpec &dot);

struct CouplingSpec {
    /// On-site charging energy.
    double U = 0;
    /// Inter-dot interaction.
    double V = 0;
    /// t_ab: tunneling from level a of dot i to level b of dot j.
    double t00 = 0;
    double t11 = 0;
    double t12 = 0;
};

struct EffectiveParams {
    double J_eff;
    double Delta_tilde;
    double omega_tilde;

    double t_plus;
    double t_minus;
    double f_plus;
    double f_minus;
    double f;

    /// Transition frequencies of the individual dots and the value used in the mapping.
    double omega_i;
    double omega_j;
    double omega;
    /// (g_j b_j) / (g_i b_i)
    double inhomogeneity_ratio;
    /// t_plus / (U - V) and t_minus / (U - V); reported, not enforced.
    double t_plus_ratio;
    double t_minus_ratio;

    std::vector<std::string> warnings;
};

/// Warn when the two dots' transition frequencies differ by more than this fraction.
inline constexpr double OMEGA_MISMATCH_WARN = 0.01;

/// Effective XXZ parameters of two tunnel-coupled pseudospin dots:
///
///     t_pm  = t00 + C_{i,pm} C_{j,pm} t11
///     f_pm  = (C_{i,pm} + C_{j,mp}) t12
///     f     = (f_+ + (g_j b_j / g_i b_i) f_-) / 2
///     J     = 4 t_+ t_- / (U - V)
///     Delta = (t_+^2 + t_-^2) / (2 t_+ t_-) - f^2 / (t_+ t_- [1 - w^2/(U-V)^2])
///     w~    = w [1 - 2 f^2 / ((U-V)^2 - w^2)]
///
/// with w the mean of the two dots' transition frequencies.
///
/// Throws SingularityError for U == V, |U - V| == w, or t_+ t_- == 0.
EffectiveParams effective_params(const DotSpec &dot_i, const DotSpec &dot_j, const CouplingSpec &coupling);

/// Evaluates the formulas above from already-computed levels. `effective_params` is this
/// applied to `perturbed_levels` of both dots.
EffectiveParams effective_params_from_levels(const PseudospinLevels &levels_i, const PseudospinLevels &levels_j,
                                             double inhomogeneity_ratio, const CouplingSpec &coupling);

/// (g_j b_j) / (g_i b_i). Two zero gradients count as homogeneous (ratio 1).
double inhomogeneity_ratio(const DotSpec &dot_i, const DotSpec &dot_j);

struct SwapMapping {
    bool feasible;
    int64_t m;
    int64_t n;
    double required_delta;
    /// required_delta - Delta_tilde
    double delta_residual;
    /// (m - n) pi / J_eff. Not meaningful when J_eff == 0.
    double tau;
    /// omega_tilde tau - n pi
    double zeeman_phase_residual;
    bool parity_ok;
    bool tau_positive;
    bool delta_ok;
    bool zeeman_ok;
    std::optional<SwapPlan> plan;
    std::vector<std::string> failures;
};

inline constexpr double DEFAULT_MAPPING_TOLERANCE = 1e-6;

/// Checks whether the effective parameters realize the (m, n) swap. The anisotropy
/// residual is compared directly against `tolerance`; the Zeeman condition is compared
/// as an angle (radians). Infeasibility is returned, never thrown.
SwapMapping map_to_swap(const EffectiveParams &effective, int64_t m, int64_t n,
                        double tolerance = DEFAULT_MAPPING_TOLERANCE);

}  // namespace xxzswap

#endif
