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

#include "xxzswap/dynamics_check.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xxzswap/sampling.h"
#include "xxzswap/xxz_model.h"

namespace xxzswap {

namespace {

constexpr double FAULT_PHASE = 1e-6;
// Distinct stream families so the two suites never share draws.
constexpr uint64_t PROPAGATOR_STREAM = 0;
constexpr uint64_t DETERMINANT_STREAM = 1ULL << 40;

double symmetric(CounterStream &rng, double half_width) {
    return half_width * (2 * rng.uniform() - 1);
}

}  // namespace

DynamicsCheckResult run_dynamics_check(const DynamicsCheckConfig &config) {
    DynamicsCheckResult out;
    double fault = config.inject_fault ? FAULT_PHASE : 0;

    for (size_t k = 0; k < config.propagator_cases; k++) {
        CounterStream rng(config.seed, PROPAGATOR_STREAM + k);
        XxzParams params(symmetric(rng, 5), symmetric(rng, 5), symmetric(rng, 5));
        double t = 3 * rng.uniform_open_below();
        PhaseTriple phases = accumulate_phases(PulseSchedule::constant(params, t));
        phases.x += fault;
        Matrix4 closed = propagator_matrix(phases);
        Matrix4 dense = dense_exponential_oracle(params, t);
        out.max_propagator_deviation = std::max(out.max_propagator_deviation, (closed - dense).cwiseAbs().maxCoeff());
        out.max_unitarity_defect = std::max(out.max_unitarity_defect, unitarity_defect(closed));
    }

    for (size_t k = 0; k < config.determinant_cases; k++) {
        CounterStream rng(config.seed, DETERMINANT_STREAM + k);
        QubitAmplitudes alpha = haar_qubit(rng);
        QubitAmplitudes beta = haar_qubit(rng);
        PhaseTriple phases{symmetric(rng, 4 * std::numbers::pi), symmetric(rng, 4 * std::numbers::pi),
                           symmetric(rng, 4 * std::numbers::pi)};
        auto evolved = propagate(make_product_state(alpha, beta), phases);
        double traced = purity_determinant(reduce_to_qubit(evolved, Qubit::I));
        PhaseTriple closed_phases = phases;
        closed_phases.x += fault * 1e3;
        double closed = reduced_determinant_closed_form(alpha, beta, closed_phases);
        out.max_determinant_deviation = std::max(out.max_determinant_deviation, std::abs(closed - traced));
        out.max_norm_defect = std::max(out.max_norm_defect, std::abs(evolved.norm() - 1));
    }

    out.passed = out.max_propagator_deviation < config.propagator_threshold &&
                 out.max_determinant_deviation < config.determinant_threshold;
    return out;
}

}  // namespace xxzswap
