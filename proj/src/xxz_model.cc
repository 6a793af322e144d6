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

#include "xxzswap/xxz_model.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "xxzswap/errors.h"

namespace xxzswap {

using std::numbers::sqrt2;

XxzParams::XxzParams(double exchange, double anisotropy, double zeeman)
    : exchange(exchange), anisotropy(anisotropy), zeeman(zeeman) {
    if (!std::isfinite(exchange) || !std::isfinite(anisotropy) || !std::isfinite(zeeman)) {
        throw ValidationError("XXZ parameters must be finite");
    }
}

PulseSchedule::PulseSchedule(std::vector<PulseSegment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw ValidationError("pulse schedule must have at least one segment");
    }
    double delta = segments_.front().params.anisotropy;
    for (size_t k = 0; k < segments_.size(); k++) {
        const auto &seg = segments_[k];
        if (!(seg.duration > 0) || !std::isfinite(seg.duration)) {
            std::ostringstream ss;
            ss << "segment " << k << " has non-positive duration " << seg.duration;
            throw ValidationError(ss.str());
        }
        if (seg.params.anisotropy != delta) {
            std::ostringstream ss;
            ss << "segment " << k << " changes the anisotropy from " << delta << " to " << seg.params.anisotropy
               << "; the anisotropy must be constant within a schedule";
            throw ValidationError(ss.str());
        }
    }
}

PulseSchedule PulseSchedule::constant(const XxzParams &params, double duration) {
    return PulseSchedule({PulseSegment{params, duration}});
}

double PulseSchedule::total_duration() const {
    double total = 0;
    for (const auto &seg : segments_) {
        total += seg.duration;
    }
    return total;
}

PulseSchedule PulseSchedule::then(const PulseSchedule &next) const {
    std::vector<PulseSegment> all = segments_;
    all.insert(all.end(), next.segments_.begin(), next.segments_.end());
    return PulseSchedule(std::move(all));
}

Spectrum eigensystem(const XxzParams &p) {
    double jd = p.exchange * p.anisotropy;
    double s = 1 / sqrt2;
    return Spectrum{{
        EigenPair{jd / 4 + p.zeeman, TwoQubitPureState(1, 0, 0, 0)},
        EigenPair{jd / 4 - p.zeeman, TwoQubitPureState(0, 0, 0, 1)},
        EigenPair{-p.exchange * (p.anisotropy - 2) / 4, TwoQubitPureState(0, s, s, 0)},
        EigenPair{-p.exchange * (p.anisotropy + 2) / 4, TwoQubitPureState(0, s, -s, 0)},
    }};
}

Matrix4 hamiltonian_matrix(const XxzParams &p) {
    using Eigen::Matrix2cd;
    const complex i(0, 1);
    Matrix2cd sx, sy, sz, id;
    sx << 0, 0.5, 0.5, 0;
    sy << 0, -0.5 * i, 0.5 * i, 0;
    sz << 0.5, 0, 0, -0.5;
    id.setIdentity();
    Matrix4 xx = Eigen::kroneckerProduct(sx, sx);
    Matrix4 yy = Eigen::kroneckerProduct(sy, sy);
    Matrix4 zz = Eigen::kroneckerProduct(sz, sz);
    Matrix4 z_total = Eigen::kroneckerProduct(sz, id) + Eigen::kroneckerProduct(id, sz);
    return p.exchange * (xx + yy + p.anisotropy * zz) + p.zeeman * z_total;
}

PhaseTriple accumulate_phases(const PulseSchedule &schedule, double t) {
    double total = schedule.total_duration();
    if (!(t >= 0) || t > total) {
        std::ostringstream ss;
        ss << "time " << t << " lies outside the schedule [0, " << total << "]";
        throw ValidationError(ss.str());
    }
    PhaseTriple out;
    double remaining = t;
    for (const auto &seg : schedule.segments()) {
        if (remaining <= 0) {
            break;
        }
        double dt = std::min(seg.duration, remaining);
        out.x += seg.params.exchange * dt;
        out.z += seg.params.exchange * seg.params.anisotropy * dt;
        out.h += seg.params.zeeman * dt;
        remaining -= dt;
    }
    return out;
}

PhaseTriple accumulate_phases(const PulseSchedule &schedule) {
    return accumulate_phases(schedule, schedule.total_duration());
}

namespace {

// Eigenphases e^{-i E t} expressed through the integrated angles.
struct EigenPhases {
    complex up_up;       // |00>
    complex down_down;   // |11>
    complex triplet;     // (|01> + |10>) / sqrt2
    complex singlet;     // (|01> - |10>) / sqrt2
};

EigenPhases eigen_phases(const PhaseTriple &ph) {
    const complex i(0, 1);
    return EigenPhases{
        std::exp(-i * (ph.h + ph.z / 4)),
        std::exp(i * (ph.h - ph.z / 4)),
        std::exp(i * (ph.z / 4 - ph.x / 2)),
        std::exp(i * (ph.z / 4 + ph.x / 2)),
    };
}

}  // namespace

TwoQubitPureState propagate(const TwoQubitPureState &initial, const PhaseTriple &phases) {
    auto e = eigen_phases(phases);
    // Project the 01/10 block onto the triplet/singlet pair, phase, and map back.
    complex sym = (initial.c01() + initial.c10()) / 2.0;
    complex anti = (initial.c01() - initial.c10()) / 2.0;
    return TwoQubitPureState(e.up_up * initial.c00(), e.triplet * sym + e.singlet * anti,
                             e.triplet * sym - e.singlet * anti, e.down_down * initial.c11());
}

Matrix4 propagator_matrix(const PhaseTriple &phases) {
    auto e = eigen_phases(phases);
    Matrix4 u = Matrix4::Zero();
    u(0, 0) = e.up_up;
    u(3, 3) = e.down_down;
    u(1, 1) = u(2, 2) = (e.triplet + e.singlet) / 2.0;
    u(1, 2) = u(2, 1) = (e.triplet - e.singlet) / 2.0;
    return u;
}

Matrix4 dense_exponential_oracle(const XxzParams &params, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(hamiltonian_matrix(params));
    const complex i(0, 1);
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; k++) {
        phases(k) = std::exp(-i * solver.eigenvalues()(k) * t);
    }
    const auto &v = solver.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

Matrix4 dense_schedule_oracle(const PulseSchedule &schedule) {
    Matrix4 u = Matrix4::Identity();
    for (const auto &seg : schedule.segments()) {
        u = dense_exponential_oracle(seg.params, seg.duration) * u;
    }
    return u;
}

double reduced_determinant_closed_form(const QubitAmplitudes &alpha, const QubitAmplitudes &beta,
                                       const PhaseTriple &phases) {
    const complex i(0, 1);
    complex g1 = symmetric_overlap(alpha, beta);
    complex g2 = antisymmetric_overlap(alpha, beta);
    complex v = alpha.a0() * alpha.a1() * beta.a0() * beta.a1() -
                0.25 * (g1 * g1 * std::exp(i * (phases.z - phases.x)) - g2 * g2 * std::exp(i * (phases.z + phases.x)));
    return std::norm(v);
}

Matrix4 swap_matrix() {
    Matrix4 s = Matrix4::Zero();
    s(0, 0) = s(3, 3) = 1;
    s(1, 2) = s(2, 1) = 1;
    return s;
}

TwoQubitPureState apply(const Matrix4 &u, const TwoQubitPureState &state) {
    std::array<complex, 4> out{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out[r] += u(r, c) * state[c];
        }
    }
    return TwoQubitPureState(out);
}

double unitarity_defect(const Matrix4 &u) {
    return (u * u.adjoint() - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace xxzswap
