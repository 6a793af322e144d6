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

#include "xxzswap/swap_design.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include "xxzswap/errors.h"
#include "xxzswap/sampling.h"

namespace xxzswap {

using std::numbers::pi;

std::string_view kind_name(SwapKind kind) {
    switch (kind) {
        case SwapKind::Swap:
            return "Swap";
        case SwapKind::ReturnToSelf:
            return "ReturnToSelf";
    }
    return "?";
}

namespace {

void require_distinct(int64_t m, int64_t n) {
    if (m == n) {
        std::ostringstream ss;
        ss << "m == n == " << m << ": phi_x would be 0 and the |01>,|10> block never mixes, so no swap is possible";
        throw ValidationError(ss.str());
    }
}

SwapKind kind_for(int64_t m, int64_t n) {
    return (m - n) % 2 != 0 ? SwapKind::Swap : SwapKind::ReturnToSelf;
}

}  // namespace

PhaseTriple SwapPlan::phases() const {
    return {params.exchange * tau, params.exchange * params.anisotropy * tau, params.zeeman * tau};
}

PhaseTriple SwapPlan::target_phases() const {
    return {static_cast<double>(m - n) * pi, static_cast<double>(m + n) * pi, static_cast<double>(n) * pi};
}

bool SwapPlan::anisotropy_at_least_one() const {
    return std::abs(params.anisotropy) >= 1;
}

SwapPlan solve_schedule(int64_t m, int64_t n, double tau) {
    require_distinct(m, n);
    if (!(tau > 0) || !std::isfinite(tau)) {
        std::ostringstream ss;
        ss << "tau must be positive and finite, got " << tau;
        throw ValidationError(ss.str());
    }
    double dm = static_cast<double>(m - n);
    double sm = static_cast<double>(m + n);
    XxzParams params(dm * pi / tau, sm / dm, static_cast<double>(n) * pi / tau);
    return SwapPlan{m, n, tau, params, kind_for(m, n)};
}

double OutcomeClass::relative_phase(double phi_h) const {
    return static_cast<double>(n) * pi + phi_h;
}

OutcomeClass classify_outcome(int64_t m, int64_t n) {
    require_distinct(m, n);
    return OutcomeClass{kind_for(m, n), n};
}

VerificationReport verify_phases(const PhaseTriple &phases, SwapKind kind, double tolerance, uint64_t state_seed) {
    Matrix4 u = propagator_matrix(phases);
    Matrix4 target = kind == SwapKind::Swap ? swap_matrix() : Matrix4::Identity();

    complex tr = (target.adjoint() * u).trace();
    VerificationReport report{};
    report.trace_overlap = std::min(1.0, std::abs(tr) / 4);
    report.global_phase = std::arg(tr);
    report.max_entry_deviation = (u - std::polar(1.0, report.global_phase) * target).cwiseAbs().maxCoeff();

    report.min_state_fidelity = 1;
    report.max_output_determinant = 0;
    for (size_t k = 0; k < VERIFY_STATE_COUNT; k++) {
        CounterStream rng(state_seed, k);
        QubitAmplitudes alpha = haar_qubit(rng);
        QubitAmplitudes beta = haar_qubit(rng);
        auto out = propagate(make_product_state(alpha, beta), phases);
        auto rho_i = reduce_to_qubit(out, Qubit::I);
        auto rho_j = reduce_to_qubit(out, Qubit::J);
        const auto &want_i = kind == SwapKind::Swap ? beta : alpha;
        const auto &want_j = kind == SwapKind::Swap ? alpha : beta;
        report.min_state_fidelity =
            std::min({report.min_state_fidelity, rho_i.fidelity_with(want_i), rho_j.fidelity_with(want_j)});
        report.max_output_determinant =
            std::max({report.max_output_determinant, purity_determinant(rho_i), purity_determinant(rho_j)});
    }

    report.passed = report.trace_overlap >= 1 - tolerance && report.min_state_fidelity >= 1 - tolerance;
    return report;
}

VerificationReport verify_swap(const SwapPlan &plan, double tolerance, uint64_t state_seed) {
    return verify_phases(plan.phases(), plan.kind, tolerance, state_seed);
}

double lattice_residual(const PhaseTriple &phases, int64_t m, int64_t n) {
    double dx = phases.x - static_cast<double>(m - n) * pi;
    double dz = phases.z - static_cast<double>(m + n) * pi;
    double dh = phases.h - static_cast<double>(n) * pi;
    return std::max({std::abs(dx), std::abs(dz), std::abs(dh)});
}

VerificationReport verify_schedule(const PulseSchedule &schedule, int64_t m, int64_t n, double tolerance) {
    auto outcome = classify_outcome(m, n);
    PhaseTriple phases = accumulate_phases(schedule);
    VerificationReport report = verify_phases(phases, outcome.kind, tolerance);
    if (lattice_residual(phases, m, n) > SCHEDULE_LATTICE_TOLERANCE) {
        report.passed = false;
    }
    return report;
}

std::vector<FeasibilityRow> delta_feasibility_scan(int64_t m_min, int64_t m_max, int64_t n_min, int64_t n_max,
                                                   double tau, double tolerance) {
    if (m_min > m_max || n_min > n_max) {
        throw ValidationError("scan ranges must be nonempty");
    }
    std::vector<FeasibilityRow> rows;
    for (int64_t m = m_min; m <= m_max; m++) {
        for (int64_t n = n_min; n <= n_max; n++) {
            if (m == n) {
                continue;
            }
            SwapPlan plan = solve_schedule(m, n, tau);
            VerificationReport report = verify_swap(plan, tolerance);
            rows.push_back(FeasibilityRow{m, n, plan.params.anisotropy, plan.kind, report.trace_overlap,
                                          report.global_phase, report.passed});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const FeasibilityRow &a, const FeasibilityRow &b) {
        return std::tie(a.anisotropy, a.m, a.n) < std::tie(b.anisotropy, b.m, b.n);
    });
    return rows;
}

}  // namespace xxzswap
