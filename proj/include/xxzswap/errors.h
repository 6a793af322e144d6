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

#ifndef XXZSWAP_ERRORS_H
#define XXZSWAP_ERRORS_H

#include <stdexcept>

namespace xxzswap {

/// Bad input: non-normalized amplitudes, out-of-range times, malformed schedules, m == n.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A formula's precondition does not hold (e.g. the Gaussian-average closed form
/// evaluated away from a swap point).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A physical singularity: degenerate perturbation denominators, exchange resonances,
/// vanishing tunneling products.
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace xxzswap

#endif
