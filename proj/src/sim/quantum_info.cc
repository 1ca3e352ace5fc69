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

#include "qarch/sim/quantum_info.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qarch/sim/simulator.h"

namespace qarch {

namespace {

// Relative eigenvalue threshold below which a direction counts as outside the support.
constexpr double kSupportCutoff = 1e-12;

void check_split_width(const QaeSplit &split, std::size_t n_qubits, const PureState &reference) {
    split.validate(n_qubits);
    if (reference.n_qubits() != split.trash.size()) {
        throw std::invalid_argument(
            "reference has " + std::to_string(reference.n_qubits()) + " qubits but the trash system has " +
            std::to_string(split.trash.size()));
    }
}

CVector encode(const Circuit &circuit, std::span<const double> theta, const PureState &input) {
    return run_circuit(input, circuit, theta).amplitudes();
}

}  // namespace

BipartiteLayout::BipartiteLayout(
    std::size_t n_qubits, std::span<const std::size_t> group_a, std::span<const std::size_t> group_b)
    : dim_a_(std::size_t{1} << group_a.size()), dim_b_(std::size_t{1} << group_b.size()) {
    if (group_a.size() + group_b.size() != n_qubits) {
        throw std::invalid_argument("bipartition does not cover the register");
    }
    std::vector<int> seen(n_qubits, 0);
    for (auto q : group_a) {
        if (q >= n_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
        }
        seen[q]++;
    }
    for (auto q : group_b) {
        if (q >= n_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
        }
        seen[q]++;
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) {
            return c != 1;
        })) {
        throw std::invalid_argument("bipartition groups must be disjoint");
    }
    table_.resize(dim_a_ * dim_b_);
    for (std::size_t a = 0; a < dim_a_; a++) {
        std::size_t base = 0;
        for (std::size_t k = 0; k < group_a.size(); k++) {
            if ((a >> (group_a.size() - 1 - k)) & 1) {
                base |= qubit_stride(n_qubits, group_a[k]);
            }
        }
        for (std::size_t b = 0; b < dim_b_; b++) {
            std::size_t idx = base;
            for (std::size_t k = 0; k < group_b.size(); k++) {
                if ((b >> (group_b.size() - 1 - k)) & 1) {
                    idx |= qubit_stride(n_qubits, group_b[k]);
                }
            }
            table_[a * dim_b_ + b] = idx;
        }
    }
}

BipartiteLayout::BipartiteLayout(std::size_t n_qubits, const QaeSplit &split)
    : BipartiteLayout(n_qubits, split.latent, split.trash) {
}

double pure_fidelity(const PureState &a, const PureState &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("pure_fidelity: states have different widths");
    }
    double f = std::norm(a.amplitudes().dot(b.amplitudes()));
    return std::clamp(f, 0.0, 1.0);
}

double state_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("state_fidelity: density matrices have different dimensions");
    }
    // Work on the support of the lower-rank argument (the measure is symmetric):
    // with rho = V D V^dag restricted to its support, sqrt(rho) sigma sqrt(rho)
    // shares its nonzero spectrum with D^1/2 V^dag sigma V D^1/2. Dropping the
    // numerically-null directions keeps round-off eigenvalues (~1e-17) from
    // contributing their square roots (~1e-9).
    Eigen::SelfAdjointEigenSolver<CMatrix> ea(rho.entries()), eb(sigma.entries());
    auto support = [](const Eigen::SelfAdjointEigenSolver<CMatrix> &e) {
        const double cut = kSupportCutoff * std::max(e.eigenvalues().maxCoeff(), 0.0);
        return static_cast<Eigen::Index>((e.eigenvalues().array() > cut).count());
    };
    const Eigen::Index ka = support(ea), kb = support(eb);
    const bool use_a = ka <= kb;
    const auto &e = use_a ? ea : eb;
    const CMatrix &other = use_a ? sigma.entries() : rho.entries();
    const Eigen::Index k = use_a ? ka : kb;
    // Eigenvalues are ascending, so the support is the trailing block.
    CMatrix v = e.eigenvectors().rightCols(k);
    Eigen::VectorXd d = e.eigenvalues().tail(k).cwiseSqrt();
    CMatrix inner = d.cast<Complex>().asDiagonal() * (v.adjoint() * other * v) * d.cast<Complex>().asDiagonal();
    inner = 0.5 * (inner + inner.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(inner, Eigen::EigenvaluesOnly);
    double tr = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(tr * tr, 0.0, 1.0);
}

static std::vector<std::size_t> validated_keep(std::size_t n, std::span<const std::size_t> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::vector<std::size_t> k(keep.begin(), keep.end());
    std::sort(k.begin(), k.end());
    if (std::adjacent_find(k.begin(), k.end()) != k.end()) {
        throw std::invalid_argument("partial_trace: duplicate qubit in keep set");
    }
    if (k.back() >= n) {
        throw std::out_of_range("partial_trace: qubit " + std::to_string(k.back()) + " out of range");
    }
    return k;
}

static std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t> &keep) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n; q++) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            out.push_back(q);
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep) {
    const std::size_t n = rho.n_qubits();
    auto kept = validated_keep(n, keep);
    auto traced = complement(n, kept);
    BipartiteLayout layout(n, kept, traced);
    auto da = static_cast<Eigen::Index>(layout.dim_a());
    CMatrix out = CMatrix::Zero(da, da);
    const CMatrix &m = rho.entries();
    for (std::size_t i = 0; i < layout.dim_a(); i++) {
        for (std::size_t j = 0; j < layout.dim_a(); j++) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < layout.dim_b(); t++) {
                acc += m(static_cast<Eigen::Index>(layout.index(i, t)), static_cast<Eigen::Index>(layout.index(j, t)));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix reduced_density(const PureState &state, std::span<const std::size_t> keep) {
    const std::size_t n = state.n_qubits();
    auto kept = validated_keep(n, keep);
    auto traced = complement(n, kept);
    BipartiteLayout layout(n, kept, traced);
    auto da = static_cast<Eigen::Index>(layout.dim_a());
    auto db = static_cast<Eigen::Index>(layout.dim_b());
    CMatrix psi(da, db);
    for (Eigen::Index a = 0; a < da; a++) {
        for (Eigen::Index b = 0; b < db; b++) {
            psi(a, b) = state[layout.index(static_cast<std::size_t>(a), static_cast<std::size_t>(b))];
        }
    }
    return DensityMatrix(psi * psi.adjoint());
}

double reference_overlap(const DensityMatrix &rho, const PureState &reference) {
    if (rho.dim() != reference.dim()) {
        throw std::invalid_argument("reference_overlap: width mismatch");
    }
    const CVector &a = reference.amplitudes();
    double f = (a.adjoint() * rho.entries() * a)(0, 0).real();
    return std::clamp(f, 0.0, 1.0);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double swap_test_expectation(const DensityMatrix &trash_state, const PureState &reference) {
    const std::size_t m = trash_state.n_qubits();
    if (reference.n_qubits() != m) {
        throw std::invalid_argument("swap_test_expectation: trash and reference widths differ");
    }
    // Register layout: ancilla = qubit 0, trash = 1..m, reference = m+1..2m.
    const std::size_t n = 2 * m + 1;
    CMatrix anc0 = CMatrix::Zero(2, 2);
    anc0(0, 0) = 1.0;
    const CVector &a = reference.amplitudes();
    CMatrix rho = kron(kron(anc0, trash_state.entries()), a * a.adjoint());

    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    CMatrix cswap = CMatrix::Zero(dim, dim);
    const std::size_t anc_bit = qubit_stride(n, 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(dim); i++) {
        std::size_t j = i;
        if (i & anc_bit) {
            for (std::size_t k = 0; k < m; k++) {
                std::size_t tb = qubit_stride(n, 1 + k);
                std::size_t rb = qubit_stride(n, 1 + m + k);
                bool t = (j & tb) != 0;
                bool r = (j & rb) != 0;
                if (t != r) {
                    j ^= tb | rb;
                }
            }
        }
        cswap(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
    }
    CMatrix h = gate_unitary(GateInstance::one(GateKind::H, 0), n);
    CMatrix u = h * cswap * h;
    CMatrix out = u * rho * u.adjoint();
    double p0 = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(dim); i++) {
        if ((i & anc_bit) == 0) {
            p0 += out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
        }
    }
    return std::clamp(2.0 * p0 - 1.0, 0.0, 1.0);
}

double trash_overlap(const CVector &encoded, const BipartiteLayout &layout, const CVector &reference) {
    double total = 0.0;
    for (std::size_t a = 0; a < layout.dim_a(); a++) {
        Complex c = 0.0;
        for (std::size_t b = 0; b < layout.dim_b(); b++) {
            c += std::conj(reference[static_cast<Eigen::Index>(b)]) *
                 encoded[static_cast<Eigen::Index>(layout.index(a, b))];
        }
        total += std::norm(c);
    }
    return total;
}

double trash_cost(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference) {
    check_split_width(split, circuit.n_qubits(), reference);
    BipartiteLayout layout(circuit.n_qubits(), split);
    CVector enc = encode(circuit, theta, input);
    return std::clamp(1.0 - trash_overlap(enc, layout, reference.amplitudes()), 0.0, 1.0);
}

double local_trash_cost(
    const Circuit &circuit, std::span<const double> theta, const PureState &input, const QaeSplit &split) {
    split.validate(circuit.n_qubits());
    CVector enc = encode(circuit, theta, input);
    const std::size_t n = circuit.n_qubits();
    double acc = 0.0;
    for (std::size_t q : split.trash) {
        std::size_t bit = qubit_stride(n, q);
        for (Eigen::Index i = 0; i < enc.size(); i++) {
            if ((static_cast<std::size_t>(i) & bit) == 0) {
                acc += std::norm(enc[i]);
            }
        }
    }
    return std::clamp(1.0 - acc / static_cast<double>(split.trash.size()), 0.0, 1.0);
}

double reconstruction_fidelity(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference,
    const PureState &compare_to) {
    check_split_width(split, circuit.n_qubits(), reference);
    if (compare_to.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("reconstruction_fidelity: comparison state width mismatch");
    }
    BipartiteLayout layout(circuit.n_qubits(), split);
    CVector phi = encode(circuit, theta, input);
    CVector chi = encode(circuit, theta, compare_to);
    const CVector &r = reference.amplitudes();
    // F = <chi| (rho_A (x) |r><r|) |chi> = sum_b |sum_a conj(c_a) phi[a,b]|^2, c_a = sum_b' conj(r_b') chi[a,b'].
    std::vector<Complex> c(layout.dim_a());
    for (std::size_t a = 0; a < layout.dim_a(); a++) {
        Complex acc = 0.0;
        for (std::size_t b = 0; b < layout.dim_b(); b++) {
            acc += std::conj(r[static_cast<Eigen::Index>(b)]) * chi[static_cast<Eigen::Index>(layout.index(a, b))];
        }
        c[a] = acc;
    }
    double f = 0.0;
    for (std::size_t b = 0; b < layout.dim_b(); b++) {
        Complex acc = 0.0;
        for (std::size_t a = 0; a < layout.dim_a(); a++) {
            acc += std::conj(c[a]) * phi[static_cast<Eigen::Index>(layout.index(a, b))];
        }
        f += std::norm(acc);
    }
    return std::clamp(f, 0.0, 1.0);
}

double reconstruction_fidelity(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference) {
    return reconstruction_fidelity(circuit, theta, input, split, reference, input);
}

DensityMatrix reconstruct_state(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference) {
    check_split_width(split, circuit.n_qubits(), reference);
    const std::size_t n = circuit.n_qubits();
    CMatrix u = circuit_unitary(circuit, theta);
    DensityMatrix encoded = DensityMatrix::from_pure(run_circuit(input, circuit, theta));
    DensityMatrix latent = partial_trace(encoded, split.latent);
    const CVector &r = reference.amplitudes();
    // Assemble rho_A (x) |r><r| in the register's own qubit order.
    std::vector<std::size_t> latent_sorted = split.latent;
    std::sort(latent_sorted.begin(), latent_sorted.end());
    BipartiteLayout layout(n, latent_sorted, split.trash);
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    CMatrix joint = CMatrix::Zero(dim, dim);
    for (std::size_t a = 0; a < layout.dim_a(); a++) {
        for (std::size_t a2 = 0; a2 < layout.dim_a(); a2++) {
            for (std::size_t b = 0; b < layout.dim_b(); b++) {
                for (std::size_t b2 = 0; b2 < layout.dim_b(); b2++) {
                    joint(static_cast<Eigen::Index>(layout.index(a, b)), static_cast<Eigen::Index>(layout.index(a2, b2))) =
                        latent(a, a2) * r[static_cast<Eigen::Index>(b)] * std::conj(r[static_cast<Eigen::Index>(b2)]);
                }
            }
        }
    }
    CMatrix out = u.adjoint() * joint * u;
    return DensityMatrix(std::move(out));
}

}  // namespace qarch
