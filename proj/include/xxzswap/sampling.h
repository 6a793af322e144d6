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

#ifndef XXZSWAP_SAMPLING_H
#define XXZSWAP_SAMPLING_H

#include <cstddef>
#include <cstdint>
#include <functional>

#include "xxzswap/quantum_core.h"

namespace xxzswap {

/// Random stream keyed by (seed, index). Two streams with the same key produce the
/// same numbers no matter which thread or in what order they are created, which is
/// what makes the Monte Carlo estimators independent of worker count.
///
/// Output is the splitmix64 finalizer applied to a Weyl sequence started at a
/// hash of the key.
class CounterStream {
   public:
    CounterStream(uint64_t seed, uint64_t index);

    uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on (0, 1].
    double uniform_open_below();
    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal();

   private:
    uint64_t state_;
    double cached_normal_ = 0;
    bool has_cached_ = false;
};

uint64_t splitmix64(uint64_t x);

/// Bloch-sphere qubit with cos(theta) uniform on [-1, 1] and azimuth uniform on [0, 2pi).
QubitAmplitudes haar_qubit(CounterStream &rng);
/// Bloch-sphere qubit with theta uniform on [0, pi] and azimuth uniform on [0, 2pi).
QubitAmplitudes uniform_angle_qubit(CounterStream &rng);

/// Sum of f(k) over k in [0, count), plus the sum of squares, reduced blockwise in
/// index order. Results are bit-identical for every `workers` value.
struct IndexedMoments {
    double sum = 0;
    double sum_sq = 0;
};
IndexedMoments indexed_moments(size_t count, const std::function<double(size_t)> &f, unsigned workers = 1);

}  // namespace xxzswap

#endif
