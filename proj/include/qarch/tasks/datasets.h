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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qarch/sim/gates.h"
#include "qarch/sim/state.h"

namespace qarch {

/// One QAE data point: the circuit input and the state the round trip is
/// compared against (the input itself, or the clean state for denoising).
struct Sample {
    PureState input;
    PureState label;
};

struct NoiseSlice {
    double p = 0.0;
    std::vector<Sample> samples;
};

enum class NoiseKind : uint8_t { Bitflip, Qdc };

std::string_view noise_kind_name(NoiseKind k);
NoiseKind noise_kind_from_name(std::string_view name);

struct NoiseDatasetOptions {
    std::size_t n_qubits = 3;
    double train_p = 0.2;
    std::size_t n_train = 100;
    std::size_t n_validation = 100;
    std::size_t n_test_per_p = 200;
    std::vector<double> test_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
};

struct NoiseDataset {
    NoiseKind kind = NoiseKind::Bitflip;
    std::size_t n_qubits = 0;
    std::vector<Sample> train;
    std::vector<Sample> validation;
    std::vector<NoiseSlice> test;
};

/// Noisy GHZ inputs: a sampled noise layer (bit flips, or per-qubit Paulis for
/// the depolarizing channel) acts on |0...0>, then the GHZ preparation circuit
/// runs. Every label is the clean GHZ state.
NoiseDataset gen_noise_dataset(NoiseKind kind, uint64_t seed, const NoiseDatasetOptions &opts = {});

struct ImageDataset {
    std::string name;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t n_categories = 0;
    /// Row-major pixel values, one vector per image.
    std::vector<std::vector<double>> images;
    std::vector<int> labels;
    /// 1 where the glyph/block covers the pixel.
    std::vector<std::vector<uint8_t>> masks;
};

/// 100 images of 8x4 pixels, 50 zeros then 50 ones (stencil glyphs).
/// Background pixels are uniform in [0.01, 0.05], foreground in [0.5, 1].
ImageDataset gen_digits(uint64_t seed);
/// 500 images of 4x4 pixels with one of four tetrominoes (I, O, T, L) at a
/// uniformly drawn valid offset, same pixel ranges as the digits.
ImageDataset gen_tetris(uint64_t seed);

/// cos t |phi0>|chi0> + sin t |phi1>|chi1> for 16 values of t, with fixed random
/// orthonormal 2-qubit factors; compressible onto qubits {0, 1} by construction.
struct StateFamily {
    std::vector<double> t;
    std::vector<PureState> states;
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
};

StateFamily gen_state_compress_dataset(uint64_t seed);

enum class Subtask : uint8_t { Dense, Hybrid, Single };

std::string_view subtask_name(Subtask s);
Subtask subtask_from_name(std::string_view name);

struct HiddenTarget {
    Subtask subtask = Subtask::Single;
    std::size_t layers = 0;
    Circuit circuit{1};
    CMatrix unitary;
    /// unitary * |0...0>.
    PureState state{1};
};

/// Random target circuits. Each layer is either single-qubit only (one of
/// H, S, T, I per qubit) or dense (qubits shuffled into pairs, each pair gets a
/// CNOT with probability 1/2 and single-qubit gates otherwise). `single` uses
/// only single-qubit layers, `dense` only dense layers, `hybrid` picks per layer.
std::vector<HiddenTarget> gen_hidden_targets(
    std::size_t n_qubits, Subtask subtask, std::size_t layers, std::size_t count, uint64_t seed);

}  // namespace qarch
