// Copyright 2026 The qarch Authors
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

#include "qarch/tasks/datasets.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qarch/common/rng.h"
#include "qarch/sim/encoding.h"
#include "qarch/sim/noise.h"
#include "qarch/sim/simulator.h"

namespace qarch {

std::string_view noise_kind_name(NoiseKind k) {
    return k == NoiseKind::Bitflip ? "bitflip" : "qdc";
}

NoiseKind noise_kind_from_name(std::string_view name) {
    if (name == "bitflip") {
        return NoiseKind::Bitflip;
    }
    if (name == "qdc") {
        return NoiseKind::Qdc;
    }
    throw std::invalid_argument("unknown noise kind '" + std::string(name) + "'");
}

namespace {

Sample noisy_ghz(NoiseKind kind, std::size_t n, double p, const PureState &clean, const Circuit &prep, Rng &rng) {
    Circuit c = kind == NoiseKind::Bitflip ? bitflip_noise_circuit(n, p, rng) : pauli_noise_circuit(n, p, rng);
    c.append(prep);
    return Sample{run_circuit(PureState(n), c, {}), clean};
}

}  // namespace

NoiseDataset gen_noise_dataset(NoiseKind kind, uint64_t seed, const NoiseDatasetOptions &opts) {
    const std::size_t n = opts.n_qubits;
    NoiseDataset ds;
    ds.kind = kind;
    ds.n_qubits = n;
    PureState clean = ghz_state(n);
    Circuit prep = ghz_prep_circuit(n);

    Rng train_rng = Rng::derive(seed, "noise/train");
    for (std::size_t i = 0; i < opts.n_train; i++) {
        ds.train.push_back(noisy_ghz(kind, n, opts.train_p, clean, prep, train_rng));
    }
    Rng val_rng = Rng::derive(seed, "noise/validation");
    for (std::size_t i = 0; i < opts.n_validation; i++) {
        ds.validation.push_back(noisy_ghz(kind, n, opts.train_p, clean, prep, val_rng));
    }
    for (std::size_t g = 0; g < opts.test_grid.size(); g++) {
        Rng rng = Rng::derive(seed, "noise/test", g);
        NoiseSlice slice{opts.test_grid[g], {}};
        for (std::size_t i = 0; i < opts.n_test_per_p; i++) {
            slice.samples.push_back(noisy_ghz(kind, n, slice.p, clean, prep, rng));
        }
        ds.test.push_back(std::move(slice));
    }
    return ds;
}

namespace {

// 8x4 stencils, row-major, '#' = foreground.
constexpr const char *kDigitZero[8] = {".##.", "#..#", "#..#", "#..#", "#..#", "#..#", "#..#", ".##."};
constexpr const char *kDigitOne[8] = {"..#.", ".##.", "..#.", "..#.", "..#.", "..#.", "..#.", ".###"};

struct Tetromino {
    const char *name;
    std::size_t h, w;
    const char *rows[4];
};

constexpr Tetromino kTetrominoes[4] = {
    {"I", 1, 4, {"####"}},
    {"O", 2, 2, {"##", "##"}},
    {"T", 2, 3, {"###", ".#."}},
    {"L", 3, 2, {"#.", "#.", "##"}},
};

std::vector<double> render(const std::vector<uint8_t> &mask, Rng &rng) {
    std::vector<double> px(mask.size());
    for (std::size_t i = 0; i < mask.size(); i++) {
        px[i] = mask[i] ? rng.uniform(0.5, 1.0) : rng.uniform(0.01, 0.05);
    }
    return px;
}

}  // namespace

ImageDataset gen_digits(uint64_t seed) {
    ImageDataset ds;
    ds.name = "digits";
    ds.rows = 8;
    ds.cols = 4;
    ds.n_categories = 2;
    Rng rng = Rng::derive(seed, "digits");
    for (int digit = 0; digit < 2; digit++) {
        const auto &glyph = digit == 0 ? kDigitZero : kDigitOne;
        std::vector<uint8_t> mask(32);
        for (std::size_t r = 0; r < 8; r++) {
            for (std::size_t c = 0; c < 4; c++) {
                mask[r * 4 + c] = glyph[r][c] == '#';
            }
        }
        for (int i = 0; i < 50; i++) {
            ds.images.push_back(render(mask, rng));
            ds.labels.push_back(digit);
            ds.masks.push_back(mask);
        }
    }
    return ds;
}

ImageDataset gen_tetris(uint64_t seed) {
    ImageDataset ds;
    ds.name = "tetris";
    ds.rows = 4;
    ds.cols = 4;
    ds.n_categories = 4;
    Rng rng = Rng::derive(seed, "tetris");
    for (int i = 0; i < 500; i++) {
        auto cat = static_cast<int>(rng.index(4));
        const Tetromino &t = kTetrominoes[cat];
        std::size_t dr = rng.index(4 - t.h + 1);
        std::size_t dc = rng.index(4 - t.w + 1);
        std::vector<uint8_t> mask(16, 0);
        for (std::size_t r = 0; r < t.h; r++) {
            for (std::size_t c = 0; c < t.w; c++) {
                mask[(r + dr) * 4 + c + dc] = t.rows[r][c] == '#';
            }
        }
        ds.images.push_back(render(mask, rng));
        ds.labels.push_back(cat);
        ds.masks.push_back(std::move(mask));
    }
    return ds;
}

namespace {

// Q factor of a matrix with uniform complex entries (not Haar, but generic).
CMatrix random_unitary(std::size_t dim, Rng &rng) {
    CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(m);
    return qr.householderQ() * CMatrix::Identity(m.rows(), m.cols());
}

}  // namespace

StateFamily gen_state_compress_dataset(uint64_t seed) {
    Rng rng = Rng::derive(seed, "state-family");
    CMatrix a = random_unitary(4, rng);
    CMatrix b = random_unitary(4, rng);
    CVector phi0 = a.col(0), phi1 = a.col(1);
    CVector chi0 = b.col(0), chi1 = b.col(1);
    StateFamily fam;
    for (std::size_t k = 0; k < 16; k++) {
        double t = std::numbers::pi * static_cast<double>(k) / 15.0 * 0.5;
        CVector amps(16);
        for (Eigen::Index i = 0; i < 4; i++) {
            for (Eigen::Index j = 0; j < 4; j++) {
                amps[i * 4 + j] = std::cos(t) * phi0[i] * chi0[j] + std::sin(t) * phi1[i] * chi1[j];
            }
        }
        amps.normalize();
        fam.t.push_back(t);
        fam.states.emplace_back(std::move(amps));
    }
    fam.train_indices = {0, 3, 6, 9, 12, 15};
    for (std::size_t k = 0; k < 16; k++) {
        if (k % 3 != 0) {
            fam.test_indices.push_back(k);
        }
    }
    return fam;
}

std::string_view subtask_name(Subtask s) {
    switch (s) {
        case Subtask::Dense:
            return "dense";
        case Subtask::Hybrid:
            return "hybrid";
        case Subtask::Single:
            return "single";
    }
    throw std::invalid_argument("unknown subtask");
}

Subtask subtask_from_name(std::string_view name) {
    for (Subtask s : {Subtask::Dense, Subtask::Hybrid, Subtask::Single}) {
        if (subtask_name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown subtask '" + std::string(name) + "'");
}

std::vector<HiddenTarget> gen_hidden_targets(
    std::size_t n_qubits, Subtask subtask, std::size_t layers, std::size_t count, uint64_t seed) {
    if (n_qubits < 1 || n_qubits > 10) {
        throw std::invalid_argument("hidden targets support 1 to 10 qubits");
    }
    if (layers < 1 || layers > 6) {
        throw std::invalid_argument("hidden targets support 1 to 6 layers");
    }
    constexpr GateKind kSingle[4] = {GateKind::H, GateKind::S, GateKind::T, GateKind::I};
    std::vector<HiddenTarget> out;
    for (std::size_t idx = 0; idx < count; idx++) {
        Rng rng = Rng::derive(seed, "hidden-target", idx);
        Circuit c(n_qubits);
        for (std::size_t l = 0; l < layers; l++) {
            bool dense = subtask == Subtask::Dense || (subtask == Subtask::Hybrid && rng.bernoulli(0.5));
            if (!dense || n_qubits < 2) {
                for (std::size_t q = 0; q < n_qubits; q++) {
                    c.add(kSingle[rng.index(4)], q);
                }
                continue;
            }
            std::vector<std::size_t> perm(n_qubits);
            for (std::size_t q = 0; q < n_qubits; q++) {
                perm[q] = q;
            }
            for (std::size_t q = n_qubits - 1; q > 0; q--) {
                std::swap(perm[q], perm[rng.index(q + 1)]);
            }
            for (std::size_t k = 0; k + 1 < n_qubits; k += 2) {
                if (rng.bernoulli(0.5)) {
                    c.add(GateKind::CNOT, perm[k], perm[k + 1]);
                } else {
                    c.add(kSingle[rng.index(4)], perm[k]);
                    c.add(kSingle[rng.index(4)], perm[k + 1]);
                }
            }
            if (n_qubits % 2 == 1) {
                c.add(kSingle[rng.index(4)], perm[n_qubits - 1]);
            }
        }
        HiddenTarget t;
        t.subtask = subtask;
        t.layers = layers;
        t.unitary = circuit_unitary(c, {});
        t.state = PureState(CVector(t.unitary.col(0)));
        t.circuit = std::move(c);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace qarch
