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

#ifndef XXZSWAP_QUANTUM_CORE_H
#define XXZSWAP_QUANTUM_CORE_H

#include <array>
#include <complex>
#include <string>

namespace xxzswap {

using complex = std::complex<double>;

/// Normalization tolerance applied when constructing states.
inline constexpr double NORM_TOLERANCE = 1e-12;
/// Det(rho) below this is treated as a pure reduced state.
inline constexpr double PURITY_THRESHOLD = 1e-10;

/// Single-qubit pure state a0|0> + a1|1>. Always normalized.
class QubitAmplitudes {
   public:
    QubitAmplitudes(complex a0, complex a1, const std::string &label = "qubit");

    complex a0() const {
        return a0_;
    }
    complex a1() const {
        return a1_;
    }

   private:
    complex a0_;
    complex a1_;
};

enum class Qubit { I, J };

/// Pure two-qubit state over |00>, |01>, |10>, |11>, with qubit i as the left factor.
///
/// The global phase is stored as-is; compare with `overlap_magnitude` when
/// phase-invariance is wanted.
class TwoQubitPureState {
   public:
    explicit TwoQubitPureState(const std::array<complex, 4> &amplitudes);
    TwoQubitPureState(complex c00, complex c01, complex c10, complex c11);

    complex c00() const {
        return amps_[0];
    }
    complex c01() const {
        return amps_[1];
    }
    complex c10() const {
        return amps_[2];
    }
    complex c11() const {
        return amps_[3];
    }
    complex operator[](size_t k) const {
        return amps_[k];
    }
    const std::array<complex, 4> &amplitudes() const {
        return amps_;
    }

    double norm() const;
    /// <this|other>
    complex inner(const TwoQubitPureState &other) const;

   private:
    std::array<complex, 4> amps_;
};

/// |<a|b>|
double overlap_magnitude(const TwoQubitPureState &a, const TwoQubitPureState &b);

/// Hermitian, unit-trace, positive semidefinite 2x2 matrix.
class QubitDensity {
   public:
    QubitDensity(complex a00, complex a01, complex a10, complex a11);

    /// |psi><psi|
    static QubitDensity from_pure(const QubitAmplitudes &psi);

    complex a00() const {
        return a00_;
    }
    complex a01() const {
        return a01_;
    }
    complex a10() const {
        return a10_;
    }
    complex a11() const {
        return a11_;
    }

    /// <psi|rho|psi>, the fidelity against a pure reference state.
    double fidelity_with(const QubitAmplitudes &psi) const;

   private:
    complex a00_, a01_, a10_, a11_;
};

/// alpha (x) beta. Throws ValidationError naming the qubit if either input is not normalized.
TwoQubitPureState make_product_state(const QubitAmplitudes &alpha, const QubitAmplitudes &beta);

/// gamma_1 = a1 b2 + a2 b1
complex symmetric_overlap(const QubitAmplitudes &alpha, const QubitAmplitudes &beta);
/// gamma_2 = a1 b2 - a2 b1
complex antisymmetric_overlap(const QubitAmplitudes &alpha, const QubitAmplitudes &beta);

/// Partial trace over the complementary qubit.
QubitDensity reduce_to_qubit(const TwoQubitPureState &state, Qubit which);

/// Det(rho) = a00 a11 - a01 a10. Lies in [0, 1/4]; zero iff rho is pure.
double purity_determinant(const QubitDensity &rho);

}  // namespace xxzswap

#endif
