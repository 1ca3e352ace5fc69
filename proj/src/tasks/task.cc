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

#include "qarch/tasks/task.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qarch/common/rng.h"
#include "qarch/sim/encoding.h"
#include "qarch/sim/quantum_info.h"
#include "qarch/sim/simulator.h"

namespace qarch {

std::string_view task_kind_name(TaskKind k) {
    switch (k) {
        case TaskKind::Denoise:
            return "denoise";
        case TaskKind::ImageCompress:
            return "image";
        case TaskKind::UnitaryRegen:
            return "unitary";
        case TaskKind::StateCompress:
            return "state";
    }
    throw std::invalid_argument("unknown task kind");
}

std::string_view cost_mode_name(CostMode m) {
    switch (m) {
        case CostMode::Trash:
            return "trash";
        case CostMode::LocalTrash:
            return "local_trash";
        case CostMode::Reconstruction:
            return "reconstruction";
        case CostMode::Overlap:
            return "overlap";
    }
    throw std::invalid_argument("unknown cost mode");
}

CostMode cost_mode_from_name(std::string_view name) {
    for (CostMode m : {CostMode::Trash, CostMode::LocalTrash, CostMode::Reconstruction, CostMode::Overlap}) {
        if (cost_mode_name(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown cost mode '" + std::string(name) + "'");
}

PureState TaskSpec::reference() const {
    if (!split) {
        throw std::logic_error("task '" + name + "' has no trash system");
    }
    return PureState(split->trash.size());
}

void TaskSpec::finalize() {
    if (n_qubits == 0) {
        throw std::invalid_argument("task '" + name + "' has zero qubits");
    }
    if (split) {
        split->validate(n_qubits);
    } else if (cost_mode != CostMode::Overlap) {
        throw std::invalid_argument("task '" + name + "' needs a trash split for its cost mode");
    }
    if (train.empty() || validation.empty()) {
        throw std::invalid_argument("task '" + name + "' needs training and validation samples");
    }
    auto check = [&](const std::vector<Sample> &samples) {
        for (const auto &s : samples) {
            if (s.input.n_qubits() != n_qubits || s.label.n_qubits() != n_qubits) {
                throw std::invalid_argument("task '" + name + "' has a sample of the wrong width");
            }
        }
    };
    check(train);
    check(validation);
    check(test);
    for (const auto &slice : noise_test) {
        check(slice.samples);
    }

    ensemble_weights.clear();
    ensemble_states.clear();
    if (cost_mode == CostMode::Trash || cost_mode == CostMode::LocalTrash) {
        auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
        CMatrix rho = CMatrix::Zero(dim, dim);
        for (const auto &s : train) {
            rho += s.input.amplitudes() * s.input.amplitudes().adjoint();
        }
        rho /= static_cast<double>(train.size());
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho);
        for (Eigen::Index k = dim - 1; k >= 0; k--) {
            double w = solver.eigenvalues()[k];
            if (w > 1e-14) {
                ensemble_weights.push_back(w);
                ensemble_states.push_back(solver.eigenvectors().col(k));
            }
        }
    }
}

namespace {

double overlap_loss(const Circuit &circuit, std::span<const double> theta, const Sample &sample) {
    PureState out = run_circuit(sample.input, circuit, theta);
    return std::clamp(1.0 - pure_fidelity(sample.label, out), 0.0, 1.0);
}

void check_width(const TaskSpec &task, const Circuit &circuit) {
    if (circuit.n_qubits() != task.n_qubits) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(circuit.n_qubits()) + " qubits but task '" + task.name + "' needs " +
            std::to_string(task.n_qubits));
    }
}

}  // namespace

double task_cost(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta, const Sample &sample) {
    check_width(task, circuit);
    switch (task.cost_mode) {
        case CostMode::Trash:
            return trash_cost(circuit, theta, sample.input, *task.split, task.reference());
        case CostMode::LocalTrash:
            return local_trash_cost(circuit, theta, sample.input, *task.split);
        case CostMode::Reconstruction:
            return 1.0 - reconstruction_fidelity(circuit, theta, sample.input, *task.split, task.reference(), sample.label);
        case CostMode::Overlap:
            return overlap_loss(circuit, theta, sample);
    }
    throw std::invalid_argument("unknown cost mode");
}

double training_cost(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta) {
    check_width(task, circuit);
    if (task.cost_mode != CostMode::Trash && task.cost_mode != CostMode::LocalTrash) {
        double acc = 0.0;
        for (const auto &s : task.train) {
            acc += task_cost(task, circuit, theta, s);
        }
        return acc / static_cast<double>(task.train.size());
    }
    if (theta.size() != circuit.n_params()) {
        throw std::invalid_argument("theta length does not match the circuit's parameter count");
    }
    const std::size_t n = task.n_qubits;
    BipartiteLayout layout(n, *task.split);
    CVector ref = task.reference().amplitudes();
    CVector buf;
    double kept = 0.0;
    for (std::size_t k = 0; k < task.ensemble_states.size(); k++) {
        buf = task.ensemble_states[k];
        run_circuit_inplace(std::span<Complex>(buf.data(), static_cast<std::size_t>(buf.size())), circuit, theta);
        double f;
        if (task.cost_mode == CostMode::Trash) {
            f = trash_overlap(buf, layout, ref);
        } else {
            f = 0.0;
            for (std::size_t q : task.split->trash) {
                std::size_t bit = qubit_stride(n, q);
                for (Eigen::Index i = 0; i < buf.size(); i++) {
                    if ((static_cast<std::size_t>(i) & bit) == 0) {
                        f += std::norm(buf[i]);
                    }
                }
            }
            f /= static_cast<double>(task.split->trash.size());
        }
        kept += task.ensemble_weights[k] * f;
    }
    return std::clamp(1.0 - kept, 0.0, 1.0);
}

double sample_score(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta, const Sample &sample) {
    check_width(task, circuit);
    if (task.kind == TaskKind::UnitaryRegen) {
        return 1.0 - overlap_loss(circuit, theta, sample);
    }
    return reconstruction_fidelity(circuit, theta, sample.input, *task.split, task.reference(), sample.label);
}

double mean_score(
    const TaskSpec &task, const Circuit &circuit, std::span<const double> theta, std::span<const Sample> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("mean_score over an empty sample set");
    }
    double acc = 0.0;
    for (const auto &s : samples) {
        acc += sample_score(task, circuit, theta, s);
    }
    return acc / static_cast<double>(samples.size());
}

double validation_score(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta) {
    return mean_score(task, circuit, theta, task.validation);
}

double test_score(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta) {
    return mean_score(task, circuit, theta, task.test.empty() ? task.validation : task.test);
}

std::vector<DenoisePoint> evaluate_denoising(const TaskSpec &task, const Circuit &circuit, std::span<const double> theta) {
    std::vector<DenoisePoint> out;
    for (const auto &slice : task.noise_test) {
        std::vector<double> f;
        f.reserve(slice.samples.size());
        for (const auto &s : slice.samples) {
            f.push_back(sample_score(task, circuit, theta, s));
        }
        double mean = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
        double var = 0.0;
        for (double v : f) {
            var += (v - mean) * (v - mean);
        }
        var /= static_cast<double>(f.size());
        out.push_back({slice.p, mean, std::sqrt(var)});
    }
    return out;
}

double logfidelity(double f) {
    f = std::clamp(f, 0.0, 1.0 - 1e-12);
    return -std::log10(1.0 - f);
}

std::vector<GateKind> generic_space() {
    return {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CNOT, GateKind::CRX, GateKind::CRY, GateKind::CRZ};
}

std::vector<GateKind> clifford_space() {
    return {GateKind::H, GateKind::S, GateKind::T, GateKind::I, GateKind::CNOT};
}

std::vector<GateKind> single_clifford_space() {
    return {GateKind::H, GateKind::S, GateKind::T, GateKind::I};
}

TaskSpec make_denoise_task(NoiseKind kind, uint64_t seed, const DenoiseTaskOptions &opts) {
    NoiseDataset ds = gen_noise_dataset(kind, seed, opts.data);
    TaskSpec t;
    t.name = "denoise-" + std::string(noise_kind_name(kind));
    t.kind = TaskKind::Denoise;
    t.n_qubits = ds.n_qubits;
    t.split = QaeSplit::trailing(ds.n_qubits, ds.n_qubits - 1);
    t.cost_mode = opts.cost_mode;
    t.train = std::move(ds.train);
    t.validation = std::move(ds.validation);
    t.noise_test = std::move(ds.test);
    for (const auto &slice : t.noise_test) {
        t.test.insert(t.test.end(), slice.samples.begin(), slice.samples.end());
    }
    t.space = generic_space();
    t.finalize();
    return t;
}

std::string_view image_set_name(ImageSet s) {
    return s == ImageSet::Digits ? "digits" : "tetris";
}

ImageSet image_set_from_name(std::string_view name) {
    if (name == "digits") {
        return ImageSet::Digits;
    }
    if (name == "tetris") {
        return ImageSet::Tetris;
    }
    throw std::invalid_argument("unknown image set '" + std::string(name) + "'");
}

TaskSpec make_image_task(ImageSet set, uint64_t seed, CostMode cost_mode) {
    ImageDataset ds = set == ImageSet::Digits ? gen_digits(seed) : gen_tetris(seed);
    std::vector<std::size_t> order(ds.images.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng = Rng::derive(seed, "image-split");
    for (std::size_t i = order.size() - 1; i > 0; i--) {
        std::swap(order[i], order[rng.index(i + 1)]);
    }
    const std::size_t n_train = ds.images.size() * 3 / 5;
    const std::size_t n_val = ds.images.size() / 5;

    TaskSpec t;
    t.name = "image-" + std::string(image_set_name(set));
    t.kind = TaskKind::ImageCompress;
    t.cost_mode = cost_mode;
    for (std::size_t k = 0; k < order.size(); k++) {
        PureState s = amplitude_encode(ds.images[order[k]]);
        auto &dst = k < n_train ? t.train : (k < n_train + n_val ? t.validation : t.test);
        dst.push_back(Sample{s, s});
    }
    t.n_qubits = t.train.front().input.n_qubits();
    t.split = QaeSplit::trailing(t.n_qubits, 2);
    t.space = generic_space();
    t.finalize();
    return t;
}

TaskSpec make_unitary_task(const HiddenTarget &target, std::size_t n_qubits) {
    TaskSpec t;
    t.name = "unitary-" + std::string(subtask_name(target.subtask));
    t.kind = TaskKind::UnitaryRegen;
    t.n_qubits = n_qubits;
    t.cost_mode = CostMode::Overlap;
    Sample s{PureState(n_qubits), target.state};
    t.train = {s};
    t.validation = {s};
    t.test = {s};
    t.space = target.subtask == Subtask::Single ? single_clifford_space() : clifford_space();
    t.target_layers = target.layers;
    t.finalize();
    return t;
}

TaskSpec make_state_compress_task(uint64_t seed, CostMode cost_mode) {
    StateFamily fam = gen_state_compress_dataset(seed);
    TaskSpec t;
    t.name = "state-compress";
    t.kind = TaskKind::StateCompress;
    t.n_qubits = 4;
    t.split = QaeSplit::trailing(4, 2);
    t.cost_mode = cost_mode;
    for (auto i : fam.train_indices) {
        t.train.push_back(Sample{fam.states[i], fam.states[i]});
    }
    for (auto i : fam.test_indices) {
        t.test.push_back(Sample{fam.states[i], fam.states[i]});
    }
    t.validation = t.train;
    t.space = generic_space();
    t.finalize();
    return t;
}

}  // namespace qarch
