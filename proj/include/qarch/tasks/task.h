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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qarch/sim/gates.h"
#include "qarch/sim/state.h"
#include "qarch/tasks/datasets.h"

namespace qarch {

enum class TaskKind : uint8_t { Denoise, ImageCompress, UnitaryRegen, StateCompress };
std::string_view task_kind_name(TaskKind k);

/// How the training cost of a circuit is computed.
///   Trash          1 - <0..0| Tr_A[U psi psi^dag U^dag] |0..0>, averaged over training inputs.
///   LocalTrash     1 - mean over trash qubits of P(qubit = 0).
///   Reconstruction 1 - round-trip fidelity against the sample label.
///   Overlap        1 - |<target| U |0..0>|^2 (unitary regeneration).
enum class CostMode : uint8_t { Trash, LocalTrash, Reconstruction, Overlap };
std::string_view cost_mode_name(CostMode m);
CostMode cost_mode_from_name(std::string_view name);

struct TaskSpec {
    std::string name;
    TaskKind kind = TaskKind::Denoise;
    std::size_t n_qubits = 0;
    /// Absent for unitary regeneration.
    std::optional<QaeSplit> split;
    CostMode cost_mode = CostMode::Trash;
    std::vector<Sample> train;
    std::vector<Sample> validation;
    std::vector<Sample> test;
    /// Denoising only: test samples per noise level.
    std::vector<NoiseSlice> noise_test;
    /// Default search space.
    std::vector<GateKind> space;
    /// Unitary regeneration only: layer count of the hidden target.
    std::size_t target_layers = 0;

    /// Spectral decomposition of the mean training density matrix. Trash costs
    /// are linear in the input state, so the mean over training samples equals
    /// the weighted sum over these (at most 2^n) eigenvectors.
    std::vector<double> ensemble_weights;
    std::vector<CVector> ensemble_states;

    PureState reference() const;
    /// Recomputes the training ensemble and checks widths/splits. Called by the builders.
    void finalize();
};

/// Per-sample minimizable cost in [0, 1].
double task_cost(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta, const Sample &sample);
/// Mean task_cost over the training set (uniform sample weights).
double training_cost(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta);

/// Higher-is-better fidelity of one sample: round-trip fidelity against the label
/// for compression tasks, 1 - loss for unitary regeneration.
double sample_score(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta, const Sample &sample);
double mean_score(
    const TaskSpec &task, const Circuit &circuit, std::span<const double> theta, std::span<const Sample> samples);
double validation_score(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta);
double test_score(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta);

struct DenoisePoint {
    double p = 0.0;
    double mean_fidelity = 0.0;
    double std_fidelity = 0.0;
};

/// Round-trip fidelity against the clean state, aggregated per noise level
/// (population standard deviation).
std::vector<DenoisePoint> evaluate_denoising(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta);

/// -log10(1 - f) with f clamped to [0, 1 - 1e-12].
double logfidelity(double f);

struct DenoiseTaskOptions {
    NoiseDatasetOptions data;
    CostMode cost_mode = CostMode::Trash;
};

/// 3-1-3 autoencoder on noisy GHZ states; trash = the highest-index qubits.
TaskSpec make_denoise_task(NoiseKind kind, uint64_t seed, const DenoiseTaskOptions &opts = {});

enum class ImageSet : uint8_t { Digits, Tetris };
std::string_view image_set_name(ImageSet s);
ImageSet image_set_from_name(std::string_view name);

/// Amplitude-encoded images; digits use 5 qubits (60/20/20 split), tetris 4
/// qubits (300/100/100). Two trash qubits either way.
TaskSpec make_image_task(ImageSet set, uint64_t seed, CostMode cost_mode = CostMode::Trash);

/// Regenerate U|0...0> of one hidden target.
TaskSpec make_unitary_task(const HiddenTarget &target, std::size_t n_qubits);

/// 4 -> 2 compression of the synthetic entangled state family (6 train, 10 test;
/// validation reuses the training states).
TaskSpec make_state_compress_task(uint64_t seed, CostMode cost_mode = CostMode::Trash);

/// Default spaces.
std::vector<GateKind> generic_space();
std::vector<GateKind> clifford_space();
std::vector<GateKind> single_clifford_space();

}  // namespace qarch
