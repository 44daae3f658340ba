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

#ifndef QWALK_COINS_H
#define QWALK_COINS_H

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

namespace qwalk {

using Amplitude = std::complex<double>;

/// Angles (radians) of the four-parameter SU(2)-with-phase coin family
///
///     C = e^{i eta/2} [[ e^{i alpha} cos beta,  e^{i gamma} sin beta],
///                      [-e^{-i gamma} sin beta, e^{-i alpha} cos beta]]
struct CoinParams {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    double eta = 0;

    /// Copy with every angle wrapped into [-pi, pi). Only used for comparisons.
    CoinParams canonical() const;
    bool operator==(const CoinParams &other) const = default;
};

/// The named coins: Hadamard, Fourier, Miracle and the flip (Grover) coin.
enum class CoinName : uint8_t { H, F, M, X };

inline constexpr std::array<CoinName, 4> ALL_COIN_NAMES = {CoinName::H, CoinName::F, CoinName::M, CoinName::X};

/// A 2x2 matrix acting on the coin space. Immutable after construction.
class CoinOperator {
   public:
    CoinOperator() = default;
    /// Row-major entries {m00, m01, m10, m11}. No unitarity check is made here.
    explicit constexpr CoinOperator(const std::array<Amplitude, 4> &entries) : entries_(entries) {
    }

    Amplitude operator()(int row, int col) const {
        return entries_[2 * row + col];
    }
    const std::array<Amplitude, 4> &entries() const {
        return entries_;
    }

    /// Largest entrywise modulus of the difference.
    double max_abs_diff(const CoinOperator &other) const;

    bool operator==(const CoinOperator &other) const = default;

   private:
    std::array<Amplitude, 4> entries_{};
};

/// Evaluates the four-parameter family. Throws std::invalid_argument on a non-finite angle.
CoinOperator build_coin(const CoinParams &params);

/// The hard-coded matrix for a named coin.
CoinOperator named_coin(CoinName name);

/// Parameters that reproduce a named coin through build_coin. X uses alpha = 0.
CoinParams named_coin_params(CoinName name);

/// True iff C^dagger C = I entrywise within `tolerance`.
bool verify_unitarity(const CoinOperator &coin, double tolerance = 1e-12);

/// |det C|.
double abs_determinant(const CoinOperator &coin);

char coin_symbol(CoinName name);

/// Case-insensitive. Throws std::invalid_argument for anything outside {H, F, M, X}.
CoinName parse_coin_name(char symbol);
CoinName parse_coin_name(std::string_view symbol);

/// Wraps an angle into [-pi, pi).
double canonical_angle(double radians);

}  // namespace qwalk

#endif
