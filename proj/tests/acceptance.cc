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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gradcheck.h"
#include "oracles.h"
#include "qarch/harness/config.h"
#include "qarch/harness/export.h"
#include "qarch/harness/runner.h"
#include "qarch/opt/score.h"
#include "qarch/search/random_search.h"
#include "qarch/search/relm.h"
#include "qarch/search/res.h"
#include "qarch/sim/noise.h"
#include "qarch/sim/quantum_info.h"
#include "qarch/sim/simulator.h"
#include "qarch/tasks/baselines.h"
#include "qarch/tasks/task.h"

namespace {

using namespace qarch;
using oracle::M;
using oracle::V;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void criterion(int id, const char *name, double limit_s, const std::function<Outcome()> &body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = dt < limit_s;
    bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s C%d %s: %s; %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), dt,
                limit_s, in_time ? "" : " [too slow]");
    std::fflush(stdout);
}

void info(const std::string &line) {
    std::printf("INFO %s\n", line.c_str());
    std::fflush(stdout);
}

double max_abs(const M &a) {
    return a.cwiseAbs().maxCoeff();
}

Outcome c1_simulator() {
    std::mt19937_64 gen(101);
    double worst = 0.0, worst_oracle = 0.0;
    for (int i = 0; i < 50; i++) {
        std::size_t n = 1 + gen() % 4;
        std::size_t g = 1 + gen() % 30;
        Circuit c = oracle::random_circuit(n, g, gen);
        auto theta = oracle::random_theta(c.n_params(), gen);
        PureState in = oracle::random_state(n, gen);
        V out = run_circuit(in, c, theta).amplitudes();
        worst = std::max(worst, max_abs(out - circuit_unitary(c, theta) * in.amplitudes()));
        worst_oracle = std::max(worst_oracle, max_abs(out - oracle::circuit_full(c, theta) * in.amplitudes()));
    }
    return {worst <= 1e-10 && worst_oracle <= 1e-10,
            fmt("max |run - U psi| = %.2e, vs kron oracle %.2e (tol 1e-10)", worst, worst_oracle)};
}

Outcome c2_quantum_info() {
    std::mt19937_64 gen(202);
    double fid = 0.0;
    for (int i = 0; i < 20; i++) {
        std::size_t n = 1 + gen() % 3;
        PureState a = oracle::random_state(n, gen), b = oracle::random_state(n, gen);
        double want = std::norm(a.amplitudes().dot(b.amplitudes()));
        double got = state_fidelity(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b));
        fid = std::max(fid, std::abs(got - want));
    }
    // Bell state from H and CNOT; 1/sqrt(2) squared rounds to 0.5 +- 1 ulp.
    Circuit bell(2);
    bell.add(GateKind::H, 0).add(GateKind::CNOT, 0, 1);
    std::vector<std::size_t> keep{0};
    M rho = partial_trace(DensityMatrix::from_pure(run_circuit(PureState(2), bell, {})), keep).entries();
    double off = std::max(std::abs(rho(0, 1)), std::abs(rho(1, 0)));
    double diag = std::max(std::abs(rho(0, 0) - 0.5), std::abs(rho(1, 1) - 0.5));
    bool bell_ok = off == 0.0 && rho(0, 0) == rho(1, 1) && diag <= std::numeric_limits<double>::epsilon();
    double swap = 0.0;
    for (int i = 0; i < 20; i++) {
        std::size_t n = 1 + gen() % 3;
        M r = oracle::random_density(n, gen);
        PureState a = oracle::random_state(n, gen);
        double want = (a.amplitudes().adjoint() * r * a.amplitudes())(0, 0).real();
        swap = std::max(swap, std::abs(swap_test_expectation(DensityMatrix(r), a) - want));
    }
    return {fid <= 1e-9 && bell_ok && swap <= 1e-9,
            fmt("Uhlmann vs overlap %.2e, Bell Tr_B off-diagonal %.1e diagonal |d-1/2| %.1e, swap test %.2e", fid, off,
                diag, swap)};
}

Outcome c3_channel() {
    Rng rng(303);
    std::mt19937_64 gen(303);
    PureState s = oracle::random_state(1, gen);
    double worst = 0.0;
    for (double p : {0.2, 0.5, 0.9}) {
        M avg = M::Zero(2, 2);
        const int n = 100000;
        for (int i = 0; i < n; i++) {
            V out = pauli_channel_apply(s, p, rng).amplitudes();
            avg += out * out.adjoint();
        }
        avg /= n;
        worst = std::max(worst, max_abs(avg - depolarize(DensityMatrix::from_pure(s), p).entries()));
    }
    return {worst <= 0.01, fmt("max entry deviation %.4f over p in {0.2,0.5,0.9} (tol 0.01)", worst)};
}

Outcome c4_rewards() {
    const double pi = std::numbers::pi;
    double err = 0.0;
    err = std::max(err, std::abs(qae_reward(0.9, 0.5) - (-0.4)));
    err = std::max(err, std::abs(qae_reward(0.3, 0.5) - 1.0));
    err = std::max(err, std::abs(qae_reward(0.6, 0.6) - std::tan(0.6 * pi / 2)));
    err = std::max(err, std::abs(unitary_reward(0.25, 0.25) - 0.0));
    err = std::max(err, std::abs(unitary_reward(0.1, 0.3, 1.5) - std::tan(0.3 * pi / 2)));
    bool finite = std::isfinite(qae_reward(0.5, 1.0)) && std::isfinite(qae_reward(0.99, 1.0)) &&
                  std::isfinite(unitary_reward(0.0, 1.0, 1.0)) && std::isfinite(unitary_reward(1.0, 0.0, 1.0)) &&
                  std::isfinite(unitary_reward(0.0, 1.0, 5.0));
    bool signs = qae_reward(0.7, 0.2) < 0 && qae_reward(0.2, 0.7) > 0;
    return {err <= 1e-12 && finite && signs, fmt("max table error %.1e, clamped values finite=%d", err, finite)};
}

Outcome c5_gradcheck() {
    auto r = gradcheck::run(505, 100);
    return {r.checked == 100 && r.failed == 0,
            fmt("%zu coordinates, %zu above 1e-3, worst relative error %.2e", r.checked, r.failed, r.worst_rel)};
}

Outcome c6_res_vs_rs() {
    std::vector<HiddenTarget> targets;
    for (std::size_t i = 0; i < 10; i++) {
        std::size_t layers = 1 + i % 3;
        targets.push_back(gen_hidden_targets(3, Subtask::Dense, layers, 1, 600 + i).back());
    }
    double res_loss = 0.0, rs_loss = 0.0;
    std::size_t runs = 0, violations = 0, res_cells = 0, rs_cells = 0;
    for (const auto &t : targets) {
        TaskSpec task = make_unitary_task(t, 3);
        GateVocab space(task.space);
        SoftConstraint bound = default_constraint(task);
        for (uint64_t seed = 1; seed <= 5; seed++) {
            ResConfig rc;
            rc.constraint = bound;
            rc.seed = seed;
            ResResult res = res_search(task, space, rc);
            violations += !eval_soft_constraint(bound, res.best.cell);
            RandomSearchConfig sc;
            sc.n_cells = res.cells_scored;
            sc.layer_budget = bound.bound;
            sc.constraint = bound;
            sc.seed = seed;
            RandomSearchResult rs = random_search(task, space, sc);
            res_loss += training_cost(task, cell_to_circuit(res.best.cell), res.best.theta);
            rs_loss += training_cost(task, cell_to_circuit(rs.best.cell), rs.best.theta);
            res_cells += res.cells_scored;
            rs_cells += rs.evaluated.size();
            runs++;
        }
    }
    res_loss /= static_cast<double>(runs);
    rs_loss /= static_cast<double>(runs);
    return {violations == 0 && res_loss <= rs_loss + 0.02 && res_cells == rs_cells,
            fmt("%zu runs, constraint violations %zu, mean loss RES %.4f vs RS %.4f (slack 0.02), cells scored %zu/%zu",
                runs, violations, res_loss, rs_loss, res_cells, rs_cells)};
}

struct DenoiseCurve {
    std::vector<DenoisePoint> points;
    std::size_t violations = 0;
};

DenoiseCurve baseline_curve(CostMode mode, uint64_t seed) {
    DenoiseTaskOptions o;
    o.cost_mode = mode;
    TaskSpec task = make_denoise_task(NoiseKind::Bitflip, 0, o);
    Circuit c = baseline_circuit(task);
    Rng rng = Rng::derive(seed, "baseline");
    TrainedCircuit tc = train_circuit(c, task, std::nullopt, rng);
    DenoiseCurve d{evaluate_denoising(task, c, tc.theta), 0};
    for (std::size_t i = 1; i < d.points.size(); i++) {
        d.violations += d.points[i].mean_fidelity > d.points[i - 1].mean_fidelity;
    }
    return d;
}

std::string curve_text(const DenoiseCurve &d) {
    std::string s;
    for (const auto &p : d.points) {
        s += fmt("%s%.3f", s.empty() ? "" : " ", p.mean_fidelity);
    }
    return s;
}

Outcome c7_denoising() {
    bool ok = true;
    std::string detail;
    for (uint64_t seed = 1; seed <= 3; seed++) {
        DenoiseCurve d = baseline_curve(CostMode::Trash, seed);
        bool seed_ok = d.points.front().mean_fidelity > 0.9 && d.violations <= 1;
        ok &= seed_ok;
        detail += fmt("%sseed %llu: F(p=0)=%.4f, %zu violations", detail.empty() ? "" : "; ",
                      static_cast<unsigned long long>(seed), d.points.front().mean_fidelity, d.violations);
        info(fmt("C7 trash-cost baseline seed %llu mean fidelity over p=0..1: %s",
                 static_cast<unsigned long long>(seed), curve_text(d).c_str()));
    }
    for (uint64_t seed = 1; seed <= 3; seed++) {
        DenoiseCurve d = baseline_curve(CostMode::Reconstruction, seed);
        info(fmt("C7 reconstruction-cost baseline seed %llu (%zu violations): %s",
                 static_cast<unsigned long long>(seed), d.violations, curve_text(d).c_str()));
    }
    return {ok, detail + " (need F(p=0) > 0.9 and <= 1 violation per seed)"};
}

// Shared between C8 and C9.
std::vector<RelmResult> relm_runs;
std::vector<ResResult> res21_runs;
const SoftConstraint kRelmBudget(Quantity::NParams, 16);
const SoftConstraint kResBudget(Quantity::NParams, 21);

Outcome c8_relm() {
    TaskSpec task = make_denoise_task(NoiseKind::Bitflip, 0);
    GateVocab space(task.space);
    std::size_t progressed = 0, inherited = 0, inherited_bad = 0;
    std::string scores;
    for (uint64_t seed = 1; seed <= 5; seed++) {
        RelmConfig c;
        c.epochs = 30;
        c.tournament_size = 5;
        c.batch_size = 8;
        c.init_mode = InitMode::Res;
        c.res.constraint = kRelmBudget;
        c.constraint = kRelmBudget;
        c.seed = seed;
        RelmResult r = run_relm(task, space, c);
        progressed += r.best.score >= r.init_best_score;
        const auto &init = r.res->final_population;
        for (const auto &e : r.final_population.entries) {
            bool from_init = std::any_of(init.begin(), init.end(), [&](const ScoredCell &s) {
                return s.cell == e.cell && s.theta == e.theta;
            });
            if (from_init) {
                inherited++;
                inherited_bad += !eval_soft_constraint(c.res.constraint, e.cell);
            }
        }
        for (const auto &s : init) {
            inherited_bad += !eval_soft_constraint(c.res.constraint, s.cell);
        }
        scores += fmt("%s%.4f->%.4f", scores.empty() ? "" : " ", r.init_best_score, r.best.score);
        relm_runs.push_back(std::move(r));
    }
    return {progressed >= 4 && inherited_bad == 0,
            fmt("final >= init in %zu/5 seeds (init->final: %s), %zu inherited members, %zu violate the RES constraint",
                progressed, scores.c_str(), inherited, inherited_bad)};
}

Outcome c9_budgets() {
    TaskSpec task = make_denoise_task(NoiseKind::Bitflip, 0);
    GateVocab space(task.space);
    const std::size_t baseline = metrics(baseline_circuit(task)).n_params;
    std::size_t res_max = 0, relm_max = 0;
    bool ok = baseline == 48 && relm_runs.size() == 5;
    for (uint64_t seed = 1; seed <= 5; seed++) {
        ResConfig rc;
        rc.constraint = kResBudget;
        rc.seed = seed;
        ResResult r = res_search(task, space, rc);
        res_max = std::max(res_max, r.best.metrics.n_params);
        ok &= eval_soft_constraint(kResBudget, r.best.cell);
    }
    for (const auto &r : relm_runs) {
        relm_max = std::max(relm_max, r.best.metrics.n_params);
        ok &= eval_soft_constraint(kRelmBudget, r.best.cell);
    }
    ok &= res_max < baseline && relm_max < baseline;
    return {ok, fmt("max n_params RES %zu (<= 21), RELM %zu (<= 16), baseline %zu", res_max, relm_max, baseline)};
}

std::string csv_bytes(const char *yaml) {
    RunConfig c = parse_config_text(yaml);
    std::string out;
    for (const auto &t : export_tables({run(c)})) {
        out += t.file + "\n" + t.str();
    }
    return out;
}

Outcome c10_determinism() {
    const char *configs[] = {
        "{task: denoise-bitflip, algorithm: res, seed: [1, 2], baseline: true, jobs: 2,"
        " res: {population_size: 10, constraint: {quantity: n_params, bound: 21}}}",
        "{task: denoise-qdc, algorithm: relm, seed: [3], relm: {epochs: 5, batch_size: 4, population_size: 10}}",
        "{task: {kind: unitary, n_qubits: 3, layers: 2}, algorithm: rs, seed: [4, 5], rs: {n_cells: 40}}",
        "{task: image-tetris, algorithm: res, seed: [6], res: {population_size: 6, max_phases: 2}}",
    };
    std::size_t bytes = 0;
    bool same = true;
    for (const char *y : configs) {
        std::string a = csv_bytes(y), b = csv_bytes(y);
        same &= a == b;
        bytes += a.size();
    }
    return {same, fmt("4 configurations exported twice, %zu CSV bytes each pass, identical=%d", bytes, same)};
}

}  // namespace

int main() {
    criterion(1, "simulator oracle equivalence", 5, c1_simulator);
    criterion(2, "quantum-information identities", 5, c2_quantum_info);
    criterion(3, "Pauli/depolarizing channel equivalence", 30, c3_channel);
    criterion(4, "reward unit suite", 1, c4_rewards);
    criterion(5, "controller gradient check", 60, c5_gradcheck);
    criterion(6, "RES constraint soundness and non-inferiority to RS", 15 * 60, c6_res_vs_rs);
    criterion(7, "denoising baseline fidelity and monotonicity", 10 * 60, c7_denoising);
    criterion(8, "RELM progress and inherited constraints", 45 * 60, c8_relm);
    criterion(9, "parameter budgets below the 48-parameter baseline", 45 * 60, c9_budgets);
    criterion(10, "repeatable CSV exports", 30 * 60, c10_determinism);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
