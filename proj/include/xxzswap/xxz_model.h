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

#ifndef XXZSWAP_XXZ_MODEL_H
#define XXZSWAP_XXZ_MODEL_H

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "xxzswap/quantum_core.h"

namespace xxzswap {

using Matrix4 = Eigen::Matrix4cd;

/// Two-qubit XXZ Hamiltonian
///
///     H = J (Sx Sx + Sy Sy + delta Sz Sz) + gamma (Sz_i + Sz_j),   S = sigma / 2,
///
/// with hbar = 1: `exchange` and `zeeman` are angular frequencies, `anisotropy` is dimensionless.
struct XxzParams {
    double exchange = 0;
    double anisotropy = 1;
    double zeeman = 0;

    XxzParams() = default;
    XxzParams(double exchange, double anisotropy, double zeeman);
};

/// Integrated control angles: x = int J dt, z = int J*delta dt, h = int gamma dt.
/// Stored unwrapped; multiples of pi matter.
struct PhaseTriple {
    double x = 0;
    double z = 0;
    double h = 0;

    PhaseTriple operator+(const PhaseTriple &other) const {
        return {x + other.x, z + other.z, h + other.h};
    }
    bool operator==(const PhaseTriple &other) const = default;
};

struct PulseSegment {
    XxzParams params;
    double duration;
};

/// Piecewise-constant control sequence. The anisotropy must be the same in every
/// segment; that keeps all segment Hamiltonians mutually commuting.
class PulseSchedule {
   public:
    explicit PulseSchedule(std::vector<PulseSegment> segments);
    static PulseSchedule constant(const XxzParams &params, double duration);

    const std::vector<PulseSegment> &segments() const {
        return segments_;
    }
    double total_duration() const;
    double anisotropy() const {
        return segments_.front().params.anisotropy;
    }

    /// Segments of `this` followed by segments of `next`. Throws if the anisotropies differ.
    PulseSchedule then(const PulseSchedule &next) const;

   private:
    std::vector<PulseSegment> segments_;
};

struct EigenPair {
    double energy;
    TwoQubitPureState vector;
};

/// Exact eigensystem in the fixed order |00>, |11>, (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2.
struct Spectrum {
    std::array<EigenPair, 4> pairs;
};

Spectrum eigensystem(const XxzParams &params);

/// Dense 4x4 matrix of the Hamiltonian, assembled from Pauli Kronecker products.
Matrix4 hamiltonian_matrix(const XxzParams &params);

/// Phases accumulated from time 0 up to `t`. Throws ValidationError unless 0 <= t <= total duration.
PhaseTriple accumulate_phases(const PulseSchedule &schedule, double t);
/// Phases over the whole schedule.
PhaseTriple accumulate_phases(const PulseSchedule &schedule);

/// Applies the diagonal propagator in the eigenbasis. Works on any pure state; for a
/// product input it reproduces the closed-form evolved state amplitude by amplitude.
TwoQubitPureState propagate(const TwoQubitPureState &initial, const PhaseTriple &phases);

/// Computational-basis matrix of `propagate`.
Matrix4 propagator_matrix(const PhaseTriple &phases);

/// exp(-i H t) for constant parameters, obtained by diagonalizing `hamiltonian_matrix`
/// numerically. Does not use the phase-angle closed form, so it serves as an
/// independent check on `propagator_matrix`.
Matrix4 dense_exponential_oracle(const XxzParams &params, double t);

/// Time-ordered product of `dense_exponential_oracle` over the schedule's segments.
Matrix4 dense_schedule_oracle(const PulseSchedule &schedule);

/// Det(rho_i) of the evolved product state alpha (x) beta, in closed form:
/// |a1 a2 b1 b2 - (g1^2 e^{i(z-x)} - g2^2 e^{i(z+x)}) / 4|^2.
double reduced_determinant_closed_form(const QubitAmplitudes &alpha, const QubitAmplitudes &beta,
                                       const PhaseTriple &phases);

/// SWAP in the computational basis.
Matrix4 swap_matrix();

/// U applied to a state. Throws if U is far enough from unitary to break normalization.
TwoQubitPureState apply(const Matrix4 &u, const TwoQubitPureState &state);

/// max_ab |(U U^dagger - I)_ab|
double unitarity_defect(const Matrix4 &u);

}  // namespace xxzswap

#endif
