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

#ifndef XXZSWAP_NOISE_FIDELITY_H
#define XXZSWAP_NOISE_FIDELITY_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "xxzswap/xxz_model.h"

namespace xxzswap {

inline constexpr size_t DEFAULT_SAMPLES = 1000000;

/// Phases of the (m, n) = (2, 1) swap point: (pi, 3pi, pi).
PhaseTriple default_swap_phases();

/// Independent Gaussian fluctuations of the three control angles around `mean`.
struct FluctuationSpec {
    double lambda_x = 0;
    double lambda_z = 0;
    double lambda_h = 0;
    PhaseTriple mean = default_swap_phases();

    FluctuationSpec() = default;
    FluctuationSpec(double lambda_x, double lambda_z, double lambda_h, PhaseTriple mean = default_swap_phases());
};

struct McEstimate {
    double mean;
    double std_error;
    size_t samples;
    uint64_t seed;
};

/// F = 1/5 + (8/15) sin^2(x/2) + (4/15) sin(x/2) sin(z/2 + h)
double gate_fidelity(const PhaseTriple &phases);

/// True when the phases sit (within `tolerance`) on a lattice point (m, n) with m - n odd.
bool is_swap_point(const PhaseTriple &phases, double tolerance = 1e-9);

/// Gaussian average of `gate_fidelity` around a swap point:
///
///     F_A = 7/15 + (4/15) (exp(-lx^2/2) + exp(-(lx^2 + lz^2 + 4 lh^2)/8))
///
/// The closed form only holds at swap-point means; anything else throws ContractError.
double average_fidelity_analytic(const FluctuationSpec &spec);

/// Monte Carlo estimate of the same average. Sample k draws its three normals from
/// CounterStream(seed, k), so the result is a pure function of (spec, samples, seed).
McEstimate average_fidelity_mc(const FluctuationSpec &spec, size_t samples, uint64_t seed, unsigned workers = 1);

enum class StateMeasure { HaarProduct, UniformAngles };

/// Parses "HaarProduct" / "UniformAngles" (also "haar" / "uniform-angles"). Throws ValidationError otherwise.
StateMeasure parse_state_measure(std::string_view name);
std::string_view measure_name(StateMeasure measure);

/// Average over random product inputs of |<psi| SWAP^dagger U(phases) |psi>|^2.
///
/// This is a direct state-ensemble definition of gate fidelity. It does not agree
/// with `gate_fidelity` in general: at the identity gate the Haar-product average is
/// 1/3 whereas `gate_fidelity` gives 1/5, and the ensemble average depends on phi_h at
/// phi_x = 0 while `gate_fidelity` does not. Both are reported; neither is forced.
McEstimate state_ensemble_fidelity(const PhaseTriple &phases, StateMeasure measure, size_t samples, uint64_t seed,
                                   unsigned workers = 1);

struct GridRow {
    double lambda_x;
    double lambda_z;
    double lambda_h;
    double f_analytic;
    double f_mc;
    double f_mc_stderr;
    size_t samples;
    uint64_t seed;
};

/// Fidelity surface with lambda_x = lambda_z tied to `xz_axis` and lambda_h on `h_axis`,
/// around `mean` (a swap point). Rows are ordered xz-major. Every grid point uses the
/// same seed. Axes must be nonempty, nonnegative and nondecreasing.
std::vector<GridRow> fidelity_grid(const std::vector<double> &xz_axis, const std::vector<double> &h_axis,
                                   size_t samples, uint64_t seed, const PhaseTriple &mean = default_swap_phases(),
                                   unsigned workers = 1);

}  // namespace xxzswap

#endif
