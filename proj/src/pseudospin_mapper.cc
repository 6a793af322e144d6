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

#include <cmath>
#include <numbers>
#include <sstream>

#include "xxzswap/errors.h"

namespace xxzswap {

using std::numbers::pi;
using std::numbers::sqrt2;

DotSpec DotSpec::from_physical(double hbar, double effective_mass, double omega0, double g_factor,
                               double bohr_magneton, double field_b0, double gradient_b) {
    if (!(hbar > 0) || !(effective_mass > 0) || !(omega0 > 0)) {
        throw ValidationError("hbar, effective mass and omega0 must be positive");
    }
    double length = std::sqrt(2 * hbar / (effective_mass * omega0));
    double g_mu = g_factor * bohr_magneton;
    return DotSpec{hbar * omega0, g_mu * field_b0, g_mu * gradient_b * length, g_mu * gradient_b};
}

namespace {

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

}  // namespace

PseudospinLevels perturbed_levels(const DotSpec &dot) {
    if (!(dot.hbar_omega0 > 0) || !std::isfinite(dot.hbar_omega0)) {
        throw ValidationError("hbar_omega0 must be positive and finite, got " + fmt(dot.hbar_omega0));
    }
    if (!std::isfinite(dot.zeeman_z) || !std::isfinite(dot.gradient_coupling) || !std::isfinite(dot.g_times_b)) {
        throw ValidationError("dot parameters must be finite");
    }

    PseudospinLevels out{};
    out.matrix_element = -(sqrt2 / 2) * dot.gradient_coupling;
    double h = out.matrix_element;

    // E^(0)_{n,s} = (n + 1/2) hbar omega0 + zeeman_z s,  s = +-1
    auto unperturbed = [&](int level, int s) {
        return (level + 0.5) * dot.hbar_omega0 + dot.zeeman_z * s;
    };

    double e_plus_c = 0;
    double e_minus_c = 0;
    for (int s : {+1, -1}) {
        double e0 = unperturbed(0, s);
        double denom = e0 - unperturbed(1, -s);
        if (std::abs(denom) <= 1e-12 * dot.hbar_omega0) {
            throw SingularityError("perturbation theory breaks down: E(0," + std::string(s > 0 ? "+" : "-") +
                                   ") is degenerate with E(1," + std::string(s > 0 ? "-" : "+") +
                                   ") (zeeman_z * s = hbar_omega0 / 2)");
        }
        double c = h / denom;
        double e = e0 + h * h / denom;
        if (s > 0) {
            out.e0_plus_unperturbed = e0;
            out.e0_plus = e;
            e_plus_c = c;
        } else {
            out.e0_minus_unperturbed = e0;
            out.e0_minus = e;
            e_minus_c = c;
        }
    }

    if (std::abs(dot.zeeman_z) + std::abs(h) >= dot.hbar_omega0) {
        throw ValidationError("two-level regime requires |zeeman_z| + |<0,s|H'|1,-s>| < hbar_omega0; got " +
                              fmt(std::abs(dot.zeeman_z)) + " + " + fmt(std::abs(h)) + " vs " +
                              fmt(dot.hbar_omega0));
    }

    out.c_plus = e_plus_c;
    out.c_minus = e_minus_c;
    out.omega = std::abs(out.e0_plus - out.e0_minus);
    for (double c : {out.c_plus, out.c_minus}) {
        if (std::abs(c) > MIXING_WARN_THRESHOLD) {
            out.warnings.push_back("mixing coefficient " + fmt(c) + " exceeds " + fmt(MIXING_WARN_THRESHOLD) +
                                   "; second-order levels may be inaccurate");
        }
    }
    return out;
}

double inhomogeneity_ratio(const DotSpec &dot_i, const DotSpec &dot_j) {
    if (dot_i.g_times_b == 0) {
        if (dot_j.g_times_b == 0) {
            return 1;
        }
        throw ValidationError("dot_i.g_times_b is zero while dot_j.g_times_b is not; the ratio is undefined");
    }
    return dot_j.g_times_b / dot_i.g_times_b;
}

EffectiveParams effective_params_from_levels(const PseudospinLevels &li, const PseudospinLevels &lj,
                                             double ratio, const CouplingSpec &c) {
    EffectiveParams out{};
    out.omega_i = li.omega;
    out.omega_j = lj.omega;
    out.omega = (li.omega + lj.omega) / 2;
    out.inhomogeneity_ratio = ratio;
    if (out.omega > 0 && std::abs(li.omega - lj.omega) / out.omega > OMEGA_MISMATCH_WARN) {
        out.warnings.push_back("dot transition frequencies differ by more than 1% (" + fmt(li.omega) + " vs " +
                               fmt(lj.omega) + "); the mapping uses their mean");
    }

    double uv = c.U - c.V;
    if (uv == 0) {
        throw SingularityError("U == V: the exchange J_eff = 4 t+ t- / (U - V) diverges");
    }
    double w = out.omega;
    double gap = uv * uv - w * w;
    if (std::abs(gap) <= 1e-12 * std::max(uv * uv, w * w)) {
        throw SingularityError("resonance: |U - V| = " + fmt(std::abs(uv)) + " equals the transition frequency " +
                               fmt(w));
    }

    out.t_plus = c.t00 + li.c_plus * lj.c_plus * c.t11;
    out.t_minus = c.t00 + li.c_minus * lj.c_minus * c.t11;
    out.f_plus = (li.c_plus + lj.c_minus) * c.t12;
    out.f_minus = (li.c_minus + lj.c_plus) * c.t12;
    out.f = 0.5 * (out.f_plus + ratio * out.f_minus);

    double tt = out.t_plus * out.t_minus;
    if (tt == 0) {
        throw SingularityError("t+ t- = 0: the effective anisotropy is undefined, mapping infeasible");
    }
    out.J_eff = 4 * tt / uv;
    out.Delta_tilde = (out.t_plus * out.t_plus + out.t_minus * out.t_minus) / (2 * tt) -
                      out.f * out.f / (tt * (1 - w * w / (uv * uv)));
    out.omega_tilde = w * (1 - 2 * out.f * out.f / gap);
    out.t_plus_ratio = out.t_plus / uv;
    out.t_minus_ratio = out.t_minus / uv;
    return out;
}

EffectiveParams effective_params(const DotSpec &dot_i, const DotSpec &dot_j, const CouplingSpec &coupling) {
    auto li = perturbed_levels(dot_i);
    auto lj = perturbed_levels(dot_j);
    auto out = effective_params_from_levels(li, lj, inhomogeneity_ratio(dot_i, dot_j), coupling);
    std::vector<std::string> warnings;
    for (const auto &w : li.warnings) {
        warnings.push_back("dot_i: " + w);
    }
    for (const auto &w : lj.warnings) {
        warnings.push_back("dot_j: " + w);
    }
    warnings.insert(warnings.end(), out.warnings.begin(), out.warnings.end());
    out.warnings = std::move(warnings);
    return out;
}

SwapMapping map_to_swap(const EffectiveParams &eff, int64_t m, int64_t n, double tolerance) {
    SwapMapping out{};
    out.m = m;
    out.n = n;
    if (m == n) {
        out.failures.push_back("m == n: no swap is possible");
        out.required_delta = std::nan("");
        out.delta_residual = std::nan("");
        out.tau = std::nan("");
        out.zeeman_phase_residual = std::nan("");
        return out;
    }

    double dm = static_cast<double>(m - n);
    out.parity_ok = (m - n) % 2 != 0;
    if (!out.parity_ok) {
        out.failures.push_back("|m - n| is even: the lattice point returns each qubit to itself instead of swapping");
    }

    out.required_delta = static_cast<double>(m + n) / dm;
    out.delta_residual = out.required_delta - eff.Delta_tilde;
    out.delta_ok = std::abs(out.delta_residual) <= tolerance;
    if (!out.delta_ok) {
        out.failures.push_back("anisotropy: need " + fmt(out.required_delta) + ", have " + fmt(eff.Delta_tilde) +
                               " (residual " + fmt(out.delta_residual) + ")");
    }

    out.tau = dm * pi / eff.J_eff;
    out.tau_positive = std::isfinite(out.tau) && out.tau > 0;
    if (!out.tau_positive) {
        out.failures.push_back("exchange: (m - n) pi / J_eff = " + fmt(out.tau) + " is not a positive duration");
    }

    out.zeeman_phase_residual = eff.omega_tilde * out.tau - static_cast<double>(n) * pi;
    out.zeeman_ok = std::isfinite(out.zeeman_phase_residual) && std::abs(out.zeeman_phase_residual) <= tolerance;
    if (!out.zeeman_ok) {
        out.failures.push_back("zeeman: omega_tilde * tau - n pi = " + fmt(out.zeeman_phase_residual));
    }

    out.feasible = out.parity_ok && out.delta_ok && out.tau_positive && out.zeeman_ok;
    if (out.feasible) {
        out.plan = SwapPlan{m, n, out.tau, XxzParams(eff.J_eff, eff.Delta_tilde, eff.omega_tilde), SwapKind::Swap};
    }
    return out;
}

}  // namespace xxzswap
