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

#ifndef XXZSWAP_DYNAMICS_CHECK_H
#define XXZSWAP_DYNAMICS_CHECK_H

#include <cstddef>
#include <cstdint>

namespace xxzswap {

/// Randomized equivalence runs between the closed-form dynamics and independent routes:
/// propagator_matrix vs the dense exponential, and the closed-form reduced determinant
/// vs the partial trace of the propagated state.
struct DynamicsCheckConfig {
    uint64_t seed = 0;
    size_t propagator_cases = 500;
    size_t determinant_cases = 1000;
    double propagator_threshold = 1e-10;
    double determinant_threshold = 1e-10;
    /// Perturbs the closed-form side by a small phase error; the harness must then fail.
    bool inject_fault = false;
};

struct DynamicsCheckResult {
    double max_propagator_deviation = 0;
    double max_determinant_deviation = 0;
    double max_unitarity_defect = 0;
    double max_norm_defect = 0;
    bool passed = false;
};

DynamicsCheckResult run_dynamics_check(const DynamicsCheckConfig &config);

}  // namespace xxzswap

#endif
