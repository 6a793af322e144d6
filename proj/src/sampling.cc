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

#include "xxzswap/sampling.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace xxzswap {

namespace {

constexpr uint64_t GOLDEN_GAMMA = 0x9E3779B97F4A7C15ULL;
constexpr size_t BLOCK_SIZE = 1 << 14;

}  // namespace

uint64_t splitmix64(uint64_t x) {
    x += GOLDEN_GAMMA;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

CounterStream::CounterStream(uint64_t seed, uint64_t index) : state_(splitmix64(splitmix64(seed) ^ index)) {
}

uint64_t CounterStream::next_u64() {
    state_ += GOLDEN_GAMMA;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterStream::uniform_open_below() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double CounterStream::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    double r = std::sqrt(-2.0 * std::log(uniform_open_below()));
    double theta = 2.0 * std::numbers::pi * uniform();
    cached_normal_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

namespace {

QubitAmplitudes bloch_qubit(double theta, double azimuth) {
    complex a0 = std::cos(theta / 2);
    complex a1 = std::polar(std::sin(theta / 2), azimuth);
    // Renormalize away the last ulp so the constructor check never trips on round-off.
    double n = std::sqrt(std::norm(a0) + std::norm(a1));
    return QubitAmplitudes(a0 / n, a1 / n);
}

}  // namespace

QubitAmplitudes haar_qubit(CounterStream &rng) {
    double cos_theta = 2.0 * rng.uniform() - 1.0;
    double azimuth = 2.0 * std::numbers::pi * rng.uniform();
    return bloch_qubit(std::acos(cos_theta), azimuth);
}

QubitAmplitudes uniform_angle_qubit(CounterStream &rng) {
    double theta = std::numbers::pi * rng.uniform();
    double azimuth = 2.0 * std::numbers::pi * rng.uniform();
    return bloch_qubit(theta, azimuth);
}

IndexedMoments indexed_moments(size_t count, const std::function<double(size_t)> &f, unsigned workers) {
    size_t num_blocks = (count + BLOCK_SIZE - 1) / BLOCK_SIZE;
    std::vector<IndexedMoments> blocks(num_blocks);
    auto run_block = [&](size_t b) {
        IndexedMoments m;
        size_t end = std::min(count, (b + 1) * BLOCK_SIZE);
        for (size_t k = b * BLOCK_SIZE; k < end; k++) {
            double v = f(k);
            m.sum += v;
            m.sum_sq += v * v;
        }
        blocks[b] = m;
    };

    workers = std::max(1u, workers);
    if (workers == 1 || num_blocks <= 1) {
        for (size_t b = 0; b < num_blocks; b++) {
            run_block(b);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                for (size_t b = w; b < num_blocks; b += workers) {
                    run_block(b);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    IndexedMoments total;
    for (const auto &m : blocks) {
        total.sum += m.sum;
        total.sum_sq += m.sum_sq;
    }
    return total;
}

}  // namespace xxzswap
