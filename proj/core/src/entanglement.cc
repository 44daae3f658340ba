// Copyright 2026 The qwalk Authors
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

#include "qwalk/entanglement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

EntanglementRecord reduced_density(const WalkerState &state) {
    EntanglementRecord r;
    r.step = state.step_count();
    auto a0 = state.coin0();
    auto a1 = state.coin1();
    for (size_t k = 0; k < a0.size(); k++) {
        r.pop0 += std::norm(a0[k]);
        r.pop1 += std::norm(a1[k]);
        r.coherence += a0[k] * std::conj(a1[k]);
    }
    return r;
}

namespace {

double clamped_radicand(const EntanglementRecord &r) {
    double radicand = 0.25 - r.pop0 * (1 - r.pop0) + std::norm(r.coherence);
    return std::clamp(radicand, 0.0, 0.25);
}

}  // namespace

double schmidt_norm(const EntanglementRecord &record) {
    double n = std::sqrt(clamped_radicand(record));
    return std::sqrt(0.5 - n) + std::sqrt(0.5 + n);
}

void complete_spectrum(EntanglementRecord &r) {
    r.bloch = {r.coherence.real(), r.coherence.imag(), (r.pop0 - r.pop1) / 2};
    double n = std::sqrt(clamped_radicand(r));
    r.eigen_minus = 0.5 - n;
    r.eigen_plus = 0.5 + n;
    r.schmidt_norm = std::sqrt(r.eigen_minus) + std::sqrt(r.eigen_plus);
}

EntanglementRecord analyze(const WalkerState &state) {
    EntanglementRecord r = reduced_density(state);
    complete_spectrum(r);
    return r;
}

std::vector<EntanglementRecord> trace_entanglement(const InitialState &initial, const CoinSequence &sequence, int steps) {
    std::vector<EntanglementRecord> out;
    out.reserve(static_cast<size_t>(std::max(steps, 0)));
    evolve(initial, sequence, steps, [&](const WalkerState &s) { out.push_back(analyze(s)); });
    return out;
}

std::vector<double> schmidt_series(const InitialState &initial, const CoinSequence &sequence, int steps) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(std::max(steps, 0)));
    evolve(initial, sequence, steps, [&](const WalkerState &s) { out.push_back(schmidt_norm(reduced_density(s))); });
    return out;
}

double closed_form_schmidt(ClosedFormFamily family, int t, const InitialState &initial) {
    const double sin_theta = std::sin(initial.theta);
    const double cos_theta = std::cos(initial.theta);
    auto single_step = [](double x) { return (std::sqrt(1 + x) + std::sqrt(1 - x)) / std::numbers::sqrt2; };
    switch (family) {
        case ClosedFormFamily::XXH:
            switch (t) {
                case 1:
                case 2:
                    return (std::sqrt(1 - cos_theta) + std::sqrt(1 + cos_theta)) / std::numbers::sqrt2;
                case 3:
                case 5:
                    return std::numbers::sqrt2;
                case 4:
                    return 0.5 * (std::sqrt(2 + sin_theta) + std::sqrt(2 - sin_theta));
                case 6:
                    return (std::sqrt(4 + sin_theta) + std::sqrt(4 - sin_theta)) / (2 * std::numbers::sqrt2);
                default:
                    break;
            }
            break;
        case ClosedFormFamily::SingleH:
            if (t == 1) {
                return single_step(sin_theta * std::cos(initial.phi));
            }
            break;
        case ClosedFormFamily::SingleF:
            if (t == 1) {
                return single_step(sin_theta * std::sin(initial.phi));
            }
            break;
        case ClosedFormFamily::SingleM:
            if (t == 1) {
                return single_step(-sin_theta * std::sin(initial.phi));
            }
            break;
    }
    throw std::out_of_range("no closed form for this sequence at step " + std::to_string(t));
}

}  // namespace qwalk
