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

#ifndef QWALK_ENTANGLEMENT_H
#define QWALK_ENTANGLEMENT_H

#include <array>
#include <vector>

#include "qwalk/walk.h"

namespace qwalk {

/// Coin-space summary of a walker state.
///
/// The reduced coin density matrix is
///     rho_C = [[pop0, coherence], [conj(coherence), pop1]] = I/2 + bloch . sigma
/// and its eigenvalues eigen_minus, eigen_plus = 1/2 -+ |bloch| are the squared
/// Schmidt coefficients of the coin-position split.
struct EntanglementRecord {
    int step = 0;
    double pop0 = 0;
    double pop1 = 0;
    Amplitude coherence{};
    std::array<double, 3> bloch{};
    double eigen_minus = 0;
    double eigen_plus = 0;
    double schmidt_norm = 0;
};

/// Partial trace over position: fills step, pop0, pop1 and coherence only.
EntanglementRecord reduced_density(const WalkerState &state);

/// Schmidt norm (z = 1, k = 2) of the state described by `record`'s populations
/// and coherence: sqrt(E-) + sqrt(E+), with E+- = 1/2 +- sqrt(r) and
/// r = 1/4 - pop0 (1 - pop0) + |coherence|^2 clamped to [0, 1/4].
double schmidt_norm(const EntanglementRecord &record);

/// Fills bloch, eigen_minus, eigen_plus and schmidt_norm from the populations and coherence.
void complete_spectrum(EntanglementRecord &record);

/// reduced_density followed by complete_spectrum.
EntanglementRecord analyze(const WalkerState &state);

/// Records for steps 1..steps of `sequence` started from `initial`.
std::vector<EntanglementRecord> trace_entanglement(const InitialState &initial, const CoinSequence &sequence, int steps);

/// Schmidt norm after each of steps 1..steps.
std::vector<double> schmidt_series(const InitialState &initial, const CoinSequence &sequence, int steps);

/// Sequences with known closed-form Schmidt norms.
enum class ClosedFormFamily {
    /// XXH..., and equally XXF... and XXM...; covers t = 1..6.
    XXH,
    /// A single step of H, F or M; covers t = 1.
    SingleH,
    SingleF,
    SingleM,
};

/// Analytic Schmidt norm for (family, t). Throws std::out_of_range outside the table.
double closed_form_schmidt(ClosedFormFamily family, int t, const InitialState &initial);

}  // namespace qwalk

#endif
