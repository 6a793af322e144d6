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

#include "xxzswap/quantum_core.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xxzswap/errors.h"

namespace xxzswap {

namespace {

void require_normalized(double norm_sq, const std::string &what) {
    if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > NORM_TOLERANCE) {
        std::ostringstream ss;
        ss.precision(17);
        ss << what << " is not normalized: squared norm = " << norm_sq;
        throw ValidationError(ss.str());
    }
}

}  // namespace

QubitAmplitudes::QubitAmplitudes(complex a0, complex a1, const std::string &label) : a0_(a0), a1_(a1) {
    require_normalized(std::norm(a0) + std::norm(a1), label);
}

TwoQubitPureState::TwoQubitPureState(const std::array<complex, 4> &amplitudes) : amps_(amplitudes) {
    require_normalized(std::norm(amps_[0]) + std::norm(amps_[1]) + std::norm(amps_[2]) + std::norm(amps_[3]),
                       "two-qubit state");
}

TwoQubitPureState::TwoQubitPureState(complex c00, complex c01, complex c10, complex c11)
    : TwoQubitPureState(std::array<complex, 4>{c00, c01, c10, c11}) {
}

double TwoQubitPureState::norm() const {
    double s = 0;
    for (const auto &c : amps_) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

complex TwoQubitPureState::inner(const TwoQubitPureState &other) const {
    complex s = 0;
    for (size_t k = 0; k < 4; k++) {
        s += std::conj(amps_[k]) * other.amps_[k];
    }
    return s;
}

double overlap_magnitude(const TwoQubitPureState &a, const TwoQubitPureState &b) {
    return std::abs(a.inner(b));
}

QubitDensity::QubitDensity(complex a00, complex a01, complex a10, complex a11)
    : a00_(a00), a01_(a01), a10_(a10), a11_(a11) {
    // Entries come out of partial traces, so round-off is absorbed at the same scale as norms.
    constexpr double tol = NORM_TOLERANCE;
    if (std::abs(a10 - std::conj(a01)) > tol || std::abs(a00.imag()) > tol || std::abs(a11.imag()) > tol) {
        throw ValidationError("density matrix is not Hermitian");
    }
    double trace = a00.real() + a11.real();
    if (std::abs(trace - 1.0) > tol) {
        throw ValidationError("density matrix trace is not 1");
    }
    // Eigenvalues of a unit-trace Hermitian 2x2 matrix: 1/2 +- sqrt(1/4 - det).
    double det = a00.real() * a11.real() - std::norm(a01);
    if (det < -tol || det > 0.25 + tol) {
        throw ValidationError("density matrix eigenvalues fall outside [0, 1]");
    }
}

QubitDensity QubitDensity::from_pure(const QubitAmplitudes &psi) {
    return QubitDensity(std::norm(psi.a0()), psi.a0() * std::conj(psi.a1()), psi.a1() * std::conj(psi.a0()),
                        std::norm(psi.a1()));
}

double QubitDensity::fidelity_with(const QubitAmplitudes &psi) const {
    complex v = std::conj(psi.a0()) * (a00_ * psi.a0() + a01_ * psi.a1()) +
                std::conj(psi.a1()) * (a10_ * psi.a0() + a11_ * psi.a1());
    return v.real();
}

TwoQubitPureState make_product_state(const QubitAmplitudes &alpha, const QubitAmplitudes &beta) {
    return TwoQubitPureState(alpha.a0() * beta.a0(), alpha.a0() * beta.a1(), alpha.a1() * beta.a0(),
                             alpha.a1() * beta.a1());
}

complex symmetric_overlap(const QubitAmplitudes &alpha, const QubitAmplitudes &beta) {
    return alpha.a0() * beta.a1() + alpha.a1() * beta.a0();
}

complex antisymmetric_overlap(const QubitAmplitudes &alpha, const QubitAmplitudes &beta) {
    return alpha.a0() * beta.a1() - alpha.a1() * beta.a0();
}

QubitDensity reduce_to_qubit(const TwoQubitPureState &state, Qubit which) {
    // Amplitude matrix M[a][b] with a indexing qubit i, b indexing qubit j.
    auto m = [&](int a, int b) {
        return state[2 * a + b];
    };
    auto entry = [&](int r, int c) {
        complex s = 0;
        for (int k = 0; k < 2; k++) {
            s += which == Qubit::I ? m(r, k) * std::conj(m(c, k)) : m(k, r) * std::conj(m(k, c));
        }
        return s;
    };
    switch (which) {
        case Qubit::I:
        case Qubit::J:
            return QubitDensity(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1));
    }
    throw ValidationError("invalid qubit index");
}

double purity_determinant(const QubitDensity &rho) {
    double det = (rho.a00() * rho.a11() - rho.a01() * rho.a10()).real();
    // Validation already bounded det to [-tol, 1/4 + tol]; clip the round-off.
    return std::clamp(det, 0.0, 0.25);
}

}  // namespace xxzswap
