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

#ifndef XXZSWAP_SWAP_DESIGN_H
#define XXZSWAP_SWAP_DESIGN_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "xxzswap/xxz_model.h"

namespace xxzswap {

/// What the two qubits end up holding at the end of a schedule whose phases sit on
/// an integer lattice point (m, n).
enum class SwapKind {
    /// |m - n| odd: qubit i holds qubit j's initial state and vice versa.
    Swap,
    /// |m - n| even: each qubit holds its own initial state.
    ReturnToSelf,
};

std::string_view kind_name(SwapKind kind);

/// Constant-parameter schedule hitting
///
///     phi_x = (m - n) pi,   phi_z = (m + n) pi,   phi_h = n pi
///
/// at time tau.
struct SwapPlan {
    int64_t m;
    int64_t n;
    double tau;
    XxzParams params;
    SwapKind kind;

    PhaseTriple phases() const;
    PhaseTriple target_phases() const;
    /// True when |anisotropy| >= 1.
    bool anisotropy_at_least_one() const;
};

/// Throws ValidationError when m == n (the 01/10 block would never mix) or tau <= 0.
SwapPlan solve_schedule(int64_t m, int64_t n, double tau);

struct OutcomeClass {
    SwapKind kind;
    int64_t n;

    /// Relative phase on the |1> component of qubit i's final state when the
    /// integrated Zeeman angle is `phi_h`: n pi + phi_h. It vanishes mod 2pi at phi_h = n pi.
    double relative_phase(double phi_h) const;
};

/// Throws ValidationError when m == n.
OutcomeClass classify_outcome(int64_t m, int64_t n);

struct VerificationReport {
    /// max |U - e^{i global_phase} Target| entrywise.
    double max_entry_deviation;
    /// |Tr(Target^dagger U)| / 4
    double trace_overlap;
    /// arg Tr(Target^dagger U)
    double global_phase;
    /// Smallest single-qubit fidelity seen over the random product inputs, both qubits.
    double min_state_fidelity;
    /// Largest Det(rho) of an output reduced state over the same inputs.
    double max_output_determinant;
    bool passed;
};

inline constexpr size_t VERIFY_STATE_COUNT = 50;
inline constexpr uint64_t VERIFY_STATE_SEED = 0x5eed0f5a9ULL;

/// Numerical check of a plan: operator comparison against SWAP (or identity for
/// ReturnToSelf) and state-level exchange/restoration on random product inputs.
/// Passes iff the trace overlap and every state fidelity reach 1 - tolerance.
VerificationReport verify_swap(const SwapPlan &plan, double tolerance, uint64_t state_seed = VERIFY_STATE_SEED);

/// Same check driven directly by accumulated phases and the expected outcome.
VerificationReport verify_phases(const PhaseTriple &phases, SwapKind kind, double tolerance,
                                 uint64_t state_seed = VERIFY_STATE_SEED);

/// How far a phase triple is from the (m, n) lattice point, max over the three conditions.
double lattice_residual(const PhaseTriple &phases, int64_t m, int64_t n);

inline constexpr double SCHEDULE_LATTICE_TOLERANCE = 1e-9;

/// Verifies an arbitrary piecewise schedule against (m, n). The accumulated phases must
/// satisfy the lattice conditions within SCHEDULE_LATTICE_TOLERANCE; otherwise the
/// report fails without running the state checks.
VerificationReport verify_schedule(const PulseSchedule &schedule, int64_t m, int64_t n, double tolerance);

struct FeasibilityRow {
    int64_t m;
    int64_t n;
    double anisotropy;
    SwapKind kind;
    double trace_overlap;
    double global_phase;
    bool passed;
};

inline constexpr double SCAN_TOLERANCE = 1e-10;

/// Every (m, n) with m != n in the inclusive ranges, solved at `tau` and verified.
/// Sorted by anisotropy, ties by (m, n).
std::vector<FeasibilityRow> delta_feasibility_scan(int64_t m_min, int64_t m_max, int64_t n_min, int64_t n_max,
                                                   double tau = 1.0, double tolerance = SCAN_TOLERANCE);

}  // namespace xxzswap

#endif
