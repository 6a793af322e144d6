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

#include "xxzswap/noise_fidelity.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "xxzswap/errors.h"
#include "xxzswap/sampling.h"

namespace xxzswap {

using std::numbers::pi;

PhaseTriple default_swap_phases() {
    return {pi, 3 * pi, pi};
}

FluctuationSpec::FluctuationSpec(double lambda_x, double lambda_z, double lambda_h, PhaseTriple mean)
    : lambda_x(lambda_x), lambda_z(lambda_z), lambda_h(lambda_h), mean(mean) {
    for (double l : {lambda_x, lambda_z, lambda_h}) {
        if (!(l >= 0) || !std::isfinite(l)) {
            std::ostringstream ss;
            ss << "fluctuation widths must be finite and nonnegative, got " << l;
            throw ValidationError(ss.str());
        }
    }
}

double gate_fidelity(const PhaseTriple &p) {
    double sx = std::sin(p.x / 2);
    return 1.0 / 5 + (8.0 / 15) * sx * sx + (4.0 / 15) * sx * std::sin(p.z / 2 + p.h);
}

namespace {

// Distance from v to the nearest integer, and that integer.
std::pair<double, double> nearest_integer(double v) {
    double r = std::round(v);
    return {std::abs(v - r), r};
}

}  // namespace

bool is_swap_point(const PhaseTriple &p, double tolerance) {
    auto [ex, kx] = nearest_integer(p.x / pi);
    auto [ez, kz] = nearest_integer(p.z / pi);
    if (ex * pi > tolerance || ez * pi > tolerance) {
        return false;
    }
    // m - n = kx must be odd, which forces m + n = kz odd as well.
    if (std::fmod(std::abs(kx), 2.0) != 1.0 || std::fmod(std::abs(kz), 2.0) != 1.0) {
        return false;
    }
    double n = (kz - kx) / 2;
    // The Zeeman angle only has to match n pi modulo 2 pi.
    auto [eh, kh] = nearest_integer((p.h - n * pi) / (2 * pi));
    (void)kh;
    return eh * 2 * pi <= tolerance;
}

double average_fidelity_analytic(const FluctuationSpec &spec) {
    if (!is_swap_point(spec.mean)) {
        std::ostringstream ss;
        ss.precision(17);
        ss << "the Gaussian-averaged closed form assumes the mean phases sit on a swap point "
              "(phi_x = (m-n)pi with m-n odd, phi_z = (m+n)pi, phi_h = n pi); got ("
           << spec.mean.x << ", " << spec.mean.z << ", " << spec.mean.h << ")";
        throw ContractError(ss.str());
    }
    double lx2 = spec.lambda_x * spec.lambda_x;
    double lz2 = spec.lambda_z * spec.lambda_z;
    double lh2 = spec.lambda_h * spec.lambda_h;
    return 7.0 / 15 + (4.0 / 15) * (std::exp(-lx2 / 2) + std::exp(-(lx2 + lz2 + 4 * lh2) / 8));
}

namespace {

// Samples are accumulated as deviations from `reference` so degenerate inputs give the
// reference back exactly and the variance does not suffer cancellation.
McEstimate finish_estimate(const IndexedMoments &m, double reference, size_t samples, uint64_t seed) {
    double n = static_cast<double>(samples);
    double mean_dev = m.sum / n;
    double var = 0;
    if (samples > 1) {
        var = std::max(0.0, (m.sum_sq - m.sum * mean_dev) / (n - 1));
    }
    return McEstimate{reference + mean_dev, std::sqrt(var / n), samples, seed};
}

void require_samples(size_t samples) {
    if (samples < 1) {
        throw ValidationError("sample count must be at least 1");
    }
}

}  // namespace

McEstimate average_fidelity_mc(const FluctuationSpec &spec, size_t samples, uint64_t seed, unsigned workers) {
    require_samples(samples);
    double reference = gate_fidelity(spec.mean);
    auto moments = indexed_moments(
        samples,
        [&](size_t k) {
            CounterStream rng(seed, k);
            PhaseTriple p{spec.mean.x + spec.lambda_x * rng.normal(), spec.mean.z + spec.lambda_z * rng.normal(),
                          spec.mean.h + spec.lambda_h * rng.normal()};
            return gate_fidelity(p) - reference;
        },
        workers);
    return finish_estimate(moments, reference, samples, seed);
}

StateMeasure parse_state_measure(std::string_view name) {
    if (name == "HaarProduct" || name == "haar") {
        return StateMeasure::HaarProduct;
    }
    if (name == "UniformAngles" || name == "uniform-angles") {
        return StateMeasure::UniformAngles;
    }
    throw ValidationError("unknown state measure '" + std::string(name) + "'; expected HaarProduct or UniformAngles");
}

std::string_view measure_name(StateMeasure measure) {
    switch (measure) {
        case StateMeasure::HaarProduct:
            return "HaarProduct";
        case StateMeasure::UniformAngles:
            return "UniformAngles";
    }
    return "?";
}

McEstimate state_ensemble_fidelity(const PhaseTriple &phases, StateMeasure measure, size_t samples, uint64_t seed,
                                   unsigned workers) {
    require_samples(samples);
    auto draw = measure == StateMeasure::HaarProduct ? haar_qubit : uniform_angle_qubit;
    auto moments = indexed_moments(
        samples,
        [&](size_t k) {
            CounterStream rng(seed, k);
            QubitAmplitudes alpha = draw(rng);
            QubitAmplitudes beta = draw(rng);
            auto out = propagate(make_product_state(alpha, beta), phases);
            // SWAP^dagger U |alpha beta>, projected on |alpha beta>, equals <beta alpha| U |alpha beta>.
            return std::norm(make_product_state(beta, alpha).inner(out));
        },
        workers);
    return finish_estimate(moments, 0.0, samples, seed);
}

std::vector<GridRow> fidelity_grid(const std::vector<double> &xz_axis, const std::vector<double> &h_axis,
                                   size_t samples, uint64_t seed, const PhaseTriple &mean, unsigned workers) {
    auto check_axis = [](const std::vector<double> &axis, const char *name) {
        if (axis.empty()) {
            throw ValidationError(std::string(name) + " axis is empty");
        }
        for (size_t k = 0; k < axis.size(); k++) {
            if (!(axis[k] >= 0) || !std::isfinite(axis[k]) || (k > 0 && axis[k] < axis[k - 1])) {
                throw ValidationError(std::string(name) + " axis must be finite, nonnegative and nondecreasing");
            }
        }
    };
    check_axis(xz_axis, "lambda_xz");
    check_axis(h_axis, "lambda_h");

    std::vector<GridRow> rows;
    rows.reserve(xz_axis.size() * h_axis.size());
    for (double lxz : xz_axis) {
        for (double lh : h_axis) {
            FluctuationSpec spec(lxz, lxz, lh, mean);
            auto mc = average_fidelity_mc(spec, samples, seed, workers);
            rows.push_back(GridRow{lxz, lxz, lh, average_fidelity_analytic(spec), mc.mean, mc.std_error, samples, seed});
        }
    }
    return rows;
}

}  // namespace xxzswap
