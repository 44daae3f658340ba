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

#include "qwalk/coins.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double INV_SQRT2 = 0.70710678118654752440;
constexpr Amplitude I{0, 1};

}  // namespace

double canonical_angle(double radians) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(radians + std::numbers::pi, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    double out = r - std::numbers::pi;
    // fmod rounding can land exactly on +pi.
    if (out >= std::numbers::pi) {
        out -= two_pi;
    }
    return out;
}

CoinParams CoinParams::canonical() const {
    return {canonical_angle(alpha), canonical_angle(beta), canonical_angle(gamma), canonical_angle(eta)};
}

double CoinOperator::max_abs_diff(const CoinOperator &other) const {
    double m = 0;
    for (size_t k = 0; k < 4; k++) {
        m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
    }
    return m;
}

CoinOperator build_coin(const CoinParams &p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma) || !std::isfinite(p.eta)) {
        throw std::invalid_argument("coin angles must be finite");
    }
    Amplitude phase = std::polar(1.0, p.eta / 2);
    double c = std::cos(p.beta);
    double s = std::sin(p.beta);
    return CoinOperator({
        phase * std::polar(1.0, p.alpha) * c,
        phase * std::polar(1.0, p.gamma) * s,
        -phase * std::polar(1.0, -p.gamma) * s,
        phase * std::polar(1.0, -p.alpha) * c,
    });
}

CoinOperator named_coin(CoinName name) {
    switch (name) {
        case CoinName::H:
            return CoinOperator({INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2});
        case CoinName::F:
            return CoinOperator({INV_SQRT2, I * INV_SQRT2, I * INV_SQRT2, INV_SQRT2});
        case CoinName::M:
            return CoinOperator({I * INV_SQRT2, INV_SQRT2, -INV_SQRT2, -I * INV_SQRT2});
        case CoinName::X:
            return CoinOperator({0.0, 1.0, 1.0, 0.0});
    }
    throw std::invalid_argument("unknown coin");
}

CoinParams named_coin_params(CoinName name) {
    constexpr double pi = std::numbers::pi;
    switch (name) {
        case CoinName::H:
            return {-pi / 2, pi / 4, -pi / 2, pi};
        case CoinName::F:
            return {0, pi / 4, pi / 2, 0};
        case CoinName::M:
            return {pi / 2, pi / 4, 0, 0};
        case CoinName::X:
            return {0, pi / 2, -pi / 2, pi};
    }
    throw std::invalid_argument("unknown coin");
}

bool verify_unitarity(const CoinOperator &c, double tolerance) {
    for (int r = 0; r < 2; r++) {
        for (int col = 0; col < 2; col++) {
            Amplitude v = std::conj(c(0, r)) * c(0, col) + std::conj(c(1, r)) * c(1, col);
            Amplitude expected = r == col ? 1.0 : 0.0;
            if (!(std::abs(v.real() - expected.real()) <= tolerance && std::abs(v.imag()) <= tolerance)) {
                return false;
            }
        }
    }
    return true;
}

double abs_determinant(const CoinOperator &c) {
    return std::abs(c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0));
}

char coin_symbol(CoinName name) {
    switch (name) {
        case CoinName::H:
            return 'H';
        case CoinName::F:
            return 'F';
        case CoinName::M:
            return 'M';
        case CoinName::X:
            return 'X';
    }
    return '?';
}

CoinName parse_coin_name(char symbol) {
    switch (symbol) {
        case 'H':
        case 'h':
            return CoinName::H;
        case 'F':
        case 'f':
            return CoinName::F;
        case 'M':
        case 'm':
            return CoinName::M;
        case 'X':
        case 'x':
            return CoinName::X;
        default:
            throw std::invalid_argument(std::string("unknown coin '") + symbol + "'; expected one of H, F, M, X");
    }
}

CoinName parse_coin_name(std::string_view symbol) {
    if (symbol.size() != 1) {
        throw std::invalid_argument("unknown coin '" + std::string(symbol) + "'; expected one of H, F, M, X");
    }
    return parse_coin_name(symbol[0]);
}

}  // namespace qwalk
