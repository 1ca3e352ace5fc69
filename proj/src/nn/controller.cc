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

#include "qarch/nn/controller.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qarch {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat>;
using CMapMat = Eigen::Map<const RowMat>;

namespace {

constexpr double kLnEps = 1e-5;
const double kGeluC = std::sqrt(2.0 / std::numbers::pi);

struct LnOut {
    RowMat y;
    RowMat xhat;
    Eigen::VectorXd rstd;
};

LnOut layer_norm(const RowMat &x, const CMapMat &g, const CMapMat &b) {
    LnOut o;
    const auto e = static_cast<double>(x.cols());
    o.xhat.resize(x.rows(), x.cols());
    o.rstd.resize(x.rows());
    for (Eigen::Index r = 0; r < x.rows(); r++) {
        double mu = x.row(r).sum() / e;
        double var = (x.row(r).array() - mu).square().sum() / e;
        double rs = 1.0 / std::sqrt(var + kLnEps);
        o.rstd[r] = rs;
        o.xhat.row(r) = (x.row(r).array() - mu) * rs;
    }
    o.y = (o.xhat.array().rowwise() * g.row(0).array()).rowwise() + b.row(0).array();
    return o;
}

RowMat layer_norm_backward(const RowMat &dy, const RowMat &xhat, const Eigen::VectorXd &rstd, const CMapMat &g, MapMat dg, MapMat db) {
    dg.row(0) += (dy.array() * xhat.array()).colwise().sum().matrix();
    db.row(0) += dy.colwise().sum();
    RowMat dxhat = dy.array().rowwise() * g.row(0).array();
    RowMat dx(dy.rows(), dy.cols());
    const auto e = static_cast<double>(dy.cols());
    for (Eigen::Index r = 0; r < dy.rows(); r++) {
        double m1 = dxhat.row(r).sum() / e;
        double m2 = (dxhat.row(r).array() * xhat.row(r).array()).sum() / e;
        dx.row(r) = rstd[r] * (dxhat.row(r).array() - m1 - xhat.row(r).array() * m2);
    }
    return dx;
}

double gelu(double x) {
    return 0.5 * x * (1.0 + std::tanh(kGeluC * (x + 0.044715 * x * x * x)));
}

double gelu_grad(double x) {
    double u = kGeluC * (x + 0.044715 * x * x * x);
    double t = std::tanh(u);
    double du = kGeluC * (1.0 + 3.0 * 0.044715 * x * x);
    return 0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * du;
}

void softmax_rows(RowMat &m) {
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        double mx = m.row(r).maxCoeff();
        m.row(r) = (m.row(r).array() - mx).exp();
        m.row(r) /= m.row(r).sum();
    }
}

}  // namespace

void ControllerConfig::validate() const {
    if (n_qubits < 1) {
        throw std::invalid_argument("controller needs at least one qubit");
    }
    if (max_seq < 1) {
        throw std::invalid_argument("controller max_seq must be at least 1");
    }
    if (v_rot < 1 || v_ent < 1) {
        throw std::invalid_argument("controller vocabulary sizes must be at least 1");
    }
    if (embed < 1 || ff_hidden < 1 || heads < 1 || blocks < 1) {
        throw std::invalid_argument("controller dimensions must be positive");
    }
    if (embed % heads != 0) {
        throw std::invalid_argument(
            "embedding size " + std::to_string(embed) + " is not divisible by " + std::to_string(heads) + " heads");
    }
}

struct Controller::Cache {
    struct Block {
        RowMat x_in;
        LnOut ln1;
        RowMat q, k, v;
        std::vector<RowMat> att;
        RowMat o;
        RowMat x_mid;
        LnOut ln2;
        RowMat pre;
        RowMat act;
    };
    std::vector<std::size_t> ids;
    std::vector<Block> blocks;
    RowMat x_final;
    LnOut lnf;
    RowMat y;
};

Controller::Controller(const ControllerConfig &config, Rng &rng) : config_(config) {
    config_.validate();
    build_layout();
    const std::size_t e = config_.embed;
    auto fill = [&](const std::string &name, double bound) {
        const auto &t = tensor(name);
        for (std::size_t i = 0; i < t.rows * t.cols; i++) {
            params_[t.offset + i] = rng.uniform(-bound, bound);
        }
    };
    auto set = [&](const std::string &name, double value) {
        const auto &t = tensor(name);
        std::fill_n(params_.begin() + static_cast<std::ptrdiff_t>(t.offset), t.rows * t.cols, value);
    };
    const double be = 1.0 / std::sqrt(static_cast<double>(e));
    const double bf = 1.0 / std::sqrt(static_cast<double>(config_.ff_hidden));
    fill("W_s", be);
    fill("W_m", be);
    fill("pos", be);
    for (std::size_t l = 0; l < config_.blocks; l++) {
        std::string p = "blk" + std::to_string(l) + ".";
        set(p + "ln1.g", 1.0);
        set(p + "ln2.g", 1.0);
        for (const char *w : {"attn.Wq", "attn.Wk", "attn.Wv", "attn.Wo", "ff.W1"}) {
            fill(p + w, be);
        }
        fill(p + "ff.W2", bf);
    }
    set("lnf.g", 1.0);
    fill("W_out", be);
    set("copy_gain", config_.copy_gain);
}

Controller::Controller(const ControllerConfig &config, std::vector<double> params) : config_(config) {
    config_.validate();
    build_layout();
    if (params.size() != params_.size()) {
        throw std::invalid_argument(
            "controller expects " + std::to_string(params_.size()) + " parameters, got " + std::to_string(params.size()));
    }
    params_ = std::move(params);
}

void Controller::build_layout() {
    const std::size_t e = config_.embed;
    const std::size_t f = config_.ff_hidden;
    std::size_t offset = 0;
    auto add = [&](std::string name, std::size_t rows, std::size_t cols) {
        tensors_.push_back({std::move(name), rows, cols, offset});
        offset += rows * cols;
    };
    add("W_s", config_.v_rot, e);
    add("W_m", config_.v_ent, e);
    add("pos", config_.n_tokens(), e);
    for (std::size_t l = 0; l < config_.blocks; l++) {
        std::string p = "blk" + std::to_string(l) + ".";
        add(p + "ln1.g", 1, e);
        add(p + "ln1.b", 1, e);
        add(p + "attn.Wq", e, e);
        add(p + "attn.bq", 1, e);
        add(p + "attn.Wk", e, e);
        add(p + "attn.bk", 1, e);
        add(p + "attn.Wv", e, e);
        add(p + "attn.bv", 1, e);
        add(p + "attn.Wo", e, e);
        add(p + "attn.bo", 1, e);
        add(p + "ln2.g", 1, e);
        add(p + "ln2.b", 1, e);
        add(p + "ff.W1", e, f);
        add(p + "ff.b1", 1, f);
        add(p + "ff.W2", f, e);
        add(p + "ff.b2", 1, e);
    }
    add("lnf.g", 1, e);
    add("lnf.b", 1, e);
    add("W_out", e, 2 * e);
    add("b_out", 1, 2 * e);
    add("copy_gain", 1, 1);
    params_.assign(offset, 0.0);
}

const TensorInfo &Controller::tensor(const std::string &name) const {
    for (const auto &t : tensors_) {
        if (t.name == name) {
            return t;
        }
    }
    throw std::out_of_range("controller has no tensor '" + name + "'");
}

void Controller::check_views(const CellViews &views) const {
    if (views.n_qubits != config_.n_qubits || views.max_seq != config_.max_seq || views.v_rot != config_.v_rot ||
        views.v_ent != config_.v_ent) {
        throw std::invalid_argument("cell views do not match the controller's shape");
    }
}

Logits Controller::forward(const CellViews &views) const {
    check_views(views);
    return run(argmax_actions(views), nullptr);
}

Logits Controller::run(const Actions &parent, Cache *cache) const {
    const std::size_t n = config_.n_qubits;
    const std::size_t ms = config_.max_seq;
    const auto e = static_cast<Eigen::Index>(config_.embed);
    const auto T = static_cast<Eigen::Index>(config_.n_tokens());
    const std::size_t n_rot_tok = n * ms;
    const std::size_t heads = config_.heads;
    const auto d = e / static_cast<Eigen::Index>(heads);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    auto P = [&](const std::string &name) {
        const auto &t = tensor(name);
        return CMapMat(params_.data() + t.offset, static_cast<Eigen::Index>(t.rows), static_cast<Eigen::Index>(t.cols));
    };

    // Token ids in sequence order.
    std::vector<std::size_t> ids(static_cast<std::size_t>(T));
    for (std::size_t i = 0; i < n_rot_tok; i++) {
        ids[i] = parent.rotation[i];
    }
    {
        std::size_t k = n_rot_tok;
        for (std::size_t c = 0; c < n; c++) {
            for (std::size_t t = 0; t < n; t++) {
                if (c != t) {
                    ids[k++] = parent.entangle[c * n + t];
                }
            }
        }
    }
    auto Ws = P("W_s");
    auto Wm = P("W_m");
    RowMat x = P("pos");
    for (Eigen::Index t = 0; t < T; t++) {
        auto id = static_cast<Eigen::Index>(ids[static_cast<std::size_t>(t)]);
        x.row(t) += static_cast<std::size_t>(t) < n_rot_tok ? Ws.row(id) : Wm.row(id);
    }
    if (cache) {
        cache->ids = ids;
        cache->blocks.clear();
    }

    for (std::size_t l = 0; l < config_.blocks; l++) {
        std::string p = "blk" + std::to_string(l) + ".";
        Cache::Block blk;
        blk.x_in = x;
        blk.ln1 = layer_norm(x, P(p + "ln1.g"), P(p + "ln1.b"));
        const RowMat &h = blk.ln1.y;
        blk.q = (h * P(p + "attn.Wq")).rowwise() + P(p + "attn.bq").row(0);
        blk.k = (h * P(p + "attn.Wk")).rowwise() + P(p + "attn.bk").row(0);
        blk.v = (h * P(p + "attn.Wv")).rowwise() + P(p + "attn.bv").row(0);
        blk.o.resize(T, e);
        for (std::size_t j = 0; j < heads; j++) {
            auto c0 = static_cast<Eigen::Index>(j) * d;
            RowMat s = blk.q.middleCols(c0, d) * blk.k.middleCols(c0, d).transpose() * scale;
            softmax_rows(s);
            blk.o.middleCols(c0, d) = s * blk.v.middleCols(c0, d);
            blk.att.push_back(std::move(s));
        }
        x = x + ((blk.o * P(p + "attn.Wo")).rowwise() + P(p + "attn.bo").row(0));
        blk.x_mid = x;
        blk.ln2 = layer_norm(x, P(p + "ln2.g"), P(p + "ln2.b"));
        blk.pre = (blk.ln2.y * P(p + "ff.W1")).rowwise() + P(p + "ff.b1").row(0);
        blk.act = blk.pre.unaryExpr(&gelu);
        x = x + ((blk.act * P(p + "ff.W2")).rowwise() + P(p + "ff.b2").row(0));
        if (cache) {
            cache->blocks.push_back(std::move(blk));
        }
    }
    LnOut lnf = layer_norm(x, P("lnf.g"), P("lnf.b"));
    RowMat y = (lnf.y * P("W_out")).rowwise() + P("b_out").row(0);
    const double gain = P("copy_gain")(0, 0);

    Logits out;
    out.n_qubits = n;
    out.max_seq = ms;
    out.v_rot = config_.v_rot;
    out.v_ent = config_.v_ent;
    out.rotation.assign(n_rot_tok * config_.v_rot, 0.0);
    out.entangle.assign(n * n * config_.v_ent, 0.0);
    std::size_t tok = 0;
    for (; tok < n_rot_tok; tok++) {
        Eigen::VectorXd l = Ws * y.row(static_cast<Eigen::Index>(tok)).head(e).transpose();
        l[static_cast<Eigen::Index>(ids[tok])] += gain;
        std::copy(l.data(), l.data() + l.size(), out.rotation.begin() + static_cast<std::ptrdiff_t>(tok * config_.v_rot));
    }
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t t = 0; t < n; t++) {
            if (c == t) {
                continue;
            }
            Eigen::VectorXd l = Wm * y.row(static_cast<Eigen::Index>(tok)).tail(e).transpose();
            l[static_cast<Eigen::Index>(ids[tok])] += gain;
            std::copy(
                l.data(), l.data() + l.size(), out.entangle.begin() + static_cast<std::ptrdiff_t>((c * n + t) * config_.v_ent));
            tok++;
        }
    }
    if (cache) {
        cache->x_final = std::move(x);
        cache->lnf = std::move(lnf);
        cache->y = std::move(y);
    }
    return out;
}

std::vector<double> Controller::reinforce_grads(const CellViews &views, const Actions &actions, double reward) const {
    check_views(views);
    const std::size_t n = config_.n_qubits;
    const std::size_t ms = config_.max_seq;
    if (actions.n_qubits != n || actions.max_seq != ms || actions.rotation.size() != n * ms ||
        actions.entangle.size() != n * n) {
        throw std::invalid_argument("actions do not match the controller's shape");
    }
    std::vector<double> grad(params_.size(), 0.0);
    if (reward == 0.0) {
        return grad;
    }
    Cache cache;
    Logits logits = run(argmax_actions(views), &cache);

    const auto e = static_cast<Eigen::Index>(config_.embed);
    const auto T = static_cast<Eigen::Index>(config_.n_tokens());
    const std::size_t n_rot_tok = n * ms;
    const std::size_t heads = config_.heads;
    const auto d = e / static_cast<Eigen::Index>(heads);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    auto P = [&](const std::string &name) {
        const auto &t = tensor(name);
        return CMapMat(params_.data() + t.offset, static_cast<Eigen::Index>(t.rows), static_cast<Eigen::Index>(t.cols));
    };
    auto G = [&](const std::string &name) {
        const auto &t = tensor(name);
        return MapMat(grad.data() + t.offset, static_cast<Eigen::Index>(t.rows), static_cast<Eigen::Index>(t.cols));
    };

    // d(-R log pi)/dlogits = -R (onehot(a) - softmax) for every scored slot.
    auto Ws = P("W_s");
    auto Wm = P("W_m");
    auto dWs = G("W_s");
    auto dWm = G("W_m");
    auto dgain = G("copy_gain");
    RowMat dy = RowMat::Zero(T, 2 * e);
    auto slot_grad = [&](std::span<const double> row, std::size_t chosen) {
        std::vector<double> p = softmax(row);
        Eigen::VectorXd g(static_cast<Eigen::Index>(p.size()));
        for (std::size_t v = 0; v < p.size(); v++) {
            g[static_cast<Eigen::Index>(v)] = -reward * ((v == chosen ? 1.0 : 0.0) - p[v]);
        }
        return g;
    };
    std::size_t tok = 0;
    for (; tok < n_rot_tok; tok++) {
        std::span<const double> row(logits.rotation.data() + tok * config_.v_rot, config_.v_rot);
        Eigen::VectorXd g = slot_grad(row, actions.rotation[tok]);
        auto ti = static_cast<Eigen::Index>(tok);
        Eigen::RowVectorXd u = cache.y.row(ti).head(e);
        dWs += g * u;
        dy.row(ti).head(e) += (Ws.transpose() * g).transpose();
        dgain(0, 0) += g[static_cast<Eigen::Index>(cache.ids[tok])];
    }
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t t = 0; t < n; t++) {
            if (c == t) {
                continue;
            }
            std::span<const double> row(logits.entangle.data() + (c * n + t) * config_.v_ent, config_.v_ent);
            Eigen::VectorXd g = slot_grad(row, actions.entangle[c * n + t]);
            auto ti = static_cast<Eigen::Index>(tok);
            Eigen::RowVectorXd u = cache.y.row(ti).tail(e);
            dWm += g * u;
            dy.row(ti).tail(e) += (Wm.transpose() * g).transpose();
            dgain(0, 0) += g[static_cast<Eigen::Index>(cache.ids[tok])];
            tok++;
        }
    }

    // Output projection and final norm.
    G("W_out") += cache.lnf.y.transpose() * dy;
    G("b_out").row(0) += dy.colwise().sum();
    RowMat dz = dy * P("W_out").transpose();
    RowMat dx = layer_norm_backward(dz, cache.lnf.xhat, cache.lnf.rstd, P("lnf.g"), G("lnf.g"), G("lnf.b"));

    for (std::size_t li = config_.blocks; li-- > 0;) {
        const auto &blk = cache.blocks[li];
        std::string p = "blk" + std::to_string(li) + ".";
        // Feed-forward residual.
        RowMat dact = dx * P(p + "ff.W2").transpose();
        G(p + "ff.W2") += blk.act.transpose() * dx;
        G(p + "ff.b2").row(0) += dx.colwise().sum();
        RowMat dpre = dact.array() * blk.pre.unaryExpr(&gelu_grad).array();
        G(p + "ff.W1") += blk.ln2.y.transpose() * dpre;
        G(p + "ff.b1").row(0) += dpre.colwise().sum();
        RowMat dh2 = dpre * P(p + "ff.W1").transpose();
        dx += layer_norm_backward(dh2, blk.ln2.xhat, blk.ln2.rstd, P(p + "ln2.g"), G(p + "ln2.g"), G(p + "ln2.b"));

        // Attention residual.
        G(p + "attn.Wo") += blk.o.transpose() * dx;
        G(p + "attn.bo").row(0) += dx.colwise().sum();
        RowMat dO = dx * P(p + "attn.Wo").transpose();
        RowMat dq(T, e), dk(T, e), dv(T, e);
        for (std::size_t j = 0; j < heads; j++) {
            auto c0 = static_cast<Eigen::Index>(j) * d;
            const RowMat &A = blk.att[j];
            RowMat dOj = dO.middleCols(c0, d);
            RowMat dA = dOj * blk.v.middleCols(c0, d).transpose();
            dv.middleCols(c0, d) = A.transpose() * dOj;
            Eigen::VectorXd rs = (dA.array() * A.array()).rowwise().sum();
            RowMat dS = A.array() * (dA.colwise() - rs).array();
            dq.middleCols(c0, d) = dS * blk.k.middleCols(c0, d) * scale;
            dk.middleCols(c0, d) = dS.transpose() * blk.q.middleCols(c0, d) * scale;
        }
        const RowMat &h = blk.ln1.y;
        G(p + "attn.Wq") += h.transpose() * dq;
        G(p + "attn.bq").row(0) += dq.colwise().sum();
        G(p + "attn.Wk") += h.transpose() * dk;
        G(p + "attn.bk").row(0) += dk.colwise().sum();
        G(p + "attn.Wv") += h.transpose() * dv;
        G(p + "attn.bv").row(0) += dv.colwise().sum();
        RowMat dh = dq * P(p + "attn.Wq").transpose() + dk * P(p + "attn.Wk").transpose() +
                    dv * P(p + "attn.Wv").transpose();
        dx += layer_norm_backward(dh, blk.ln1.xhat, blk.ln1.rstd, P(p + "ln1.g"), G(p + "ln1.g"), G(p + "ln1.b"));
    }

    // Token and positional embeddings.
    G("pos") += dx;
    for (Eigen::Index t = 0; t < T; t++) {
        auto id = static_cast<Eigen::Index>(cache.ids[static_cast<std::size_t>(t)]);
        if (static_cast<std::size_t>(t) < n_rot_tok) {
            dWs.row(id) += dx.row(t);
        } else {
            dWm.row(id) += dx.row(t);
        }
    }
    return grad;
}

std::vector<double> softmax(std::span<const double> row) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double v : row) {
        mx = std::max(mx, v);
    }
    std::vector<double> p(row.size());
    double z = 0.0;
    for (std::size_t i = 0; i < row.size(); i++) {
        p[i] = std::exp(row[i] - mx);
        z += p[i];
    }
    for (auto &v : p) {
        v /= z;
    }
    return p;
}

namespace {

double log_softmax_at(std::span<const double> row, std::size_t idx) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double v : row) {
        mx = std::max(mx, v);
    }
    double z = 0.0;
    for (double v : row) {
        z += std::exp(v - mx);
    }
    return row[idx] - mx - std::log(z);
}

std::size_t draw(std::span<const double> row, Rng &rng, bool greedy) {
    if (greedy) {
        return static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
    }
    std::vector<double> p = softmax(row);
    double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); i++) {
        acc += p[i];
        if (u < acc) {
            return i;
        }
    }
    // Rounding left u beyond the last cumulative sum; take the last nonzero entry.
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] > 0.0) {
            return i;
        }
    }
    return 0;
}

}  // namespace

SampledActions sample_actions(const Logits &logits, Rng &rng, bool greedy) {
    const std::size_t n = logits.n_qubits;
    SampledActions out{Actions(n, logits.max_seq), 0.0};
    for (std::size_t i = 0; i < n * logits.max_seq; i++) {
        std::span<const double> row(logits.rotation.data() + i * logits.v_rot, logits.v_rot);
        std::size_t a = draw(row, rng, greedy);
        out.actions.rotation[i] = a;
        out.log_prob += log_softmax_at(row, a);
    }
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t t = 0; t < n; t++) {
            if (c == t) {
                continue;
            }
            std::span<const double> row(logits.entangle.data() + (c * n + t) * logits.v_ent, logits.v_ent);
            std::size_t a = draw(row, rng, greedy);
            out.actions.entangle[c * n + t] = a;
            out.log_prob += log_softmax_at(row, a);
        }
    }
    return out;
}

double log_prob(const Logits &logits, const Actions &actions) {
    const std::size_t n = logits.n_qubits;
    double lp = 0.0;
    for (std::size_t i = 0; i < n * logits.max_seq; i++) {
        lp += log_softmax_at({logits.rotation.data() + i * logits.v_rot, logits.v_rot}, actions.rotation[i]);
    }
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t t = 0; t < n; t++) {
            if (c != t) {
                lp += log_softmax_at(
                    {logits.entangle.data() + (c * n + t) * logits.v_ent, logits.v_ent}, actions.entangle[c * n + t]);
            }
        }
    }
    return lp;
}

nlohmann::json controller_to_json(const Controller &c) {
    const auto &cfg = c.config();
    nlohmann::json tensors = nlohmann::json::array();
    for (const auto &t : c.tensors()) {
        std::vector<double> data(
            c.params().begin() + static_cast<std::ptrdiff_t>(t.offset),
            c.params().begin() + static_cast<std::ptrdiff_t>(t.offset + t.rows * t.cols));
        tensors.push_back({{"name", t.name}, {"rows", t.rows}, {"cols", t.cols}, {"data", data}});
    }
    return {
        {"format", 1},
        {"config",
         {{"n_qubits", cfg.n_qubits},
          {"max_seq", cfg.max_seq},
          {"v_rot", cfg.v_rot},
          {"v_ent", cfg.v_ent},
          {"embed", cfg.embed},
          {"ff_hidden", cfg.ff_hidden},
          {"heads", cfg.heads},
          {"blocks", cfg.blocks},
          {"copy_gain", cfg.copy_gain}}},
        {"tensors", tensors}};
}

Controller controller_from_json(const nlohmann::json &doc) {
    try {
        if (doc.at("format").get<int>() != 1) {
            throw std::invalid_argument("unsupported controller checkpoint format");
        }
        const auto &jc = doc.at("config");
        ControllerConfig cfg;
        cfg.n_qubits = jc.at("n_qubits").get<std::size_t>();
        cfg.max_seq = jc.at("max_seq").get<std::size_t>();
        cfg.v_rot = jc.at("v_rot").get<std::size_t>();
        cfg.v_ent = jc.at("v_ent").get<std::size_t>();
        cfg.embed = jc.at("embed").get<std::size_t>();
        cfg.ff_hidden = jc.at("ff_hidden").get<std::size_t>();
        cfg.heads = jc.at("heads").get<std::size_t>();
        cfg.blocks = jc.at("blocks").get<std::size_t>();
        cfg.copy_gain = jc.at("copy_gain").get<double>();
        Rng unused(0);
        Controller c(cfg, unused);
        const auto &jtensors = doc.at("tensors");
        if (jtensors.size() != c.tensors().size()) {
            throw std::invalid_argument(
                "checkpoint has " + std::to_string(jtensors.size()) + " tensors, expected " +
                std::to_string(c.tensors().size()));
        }
        for (const auto &jt : jtensors) {
            const auto &t = c.tensor(jt.at("name").get<std::string>());
            auto data = jt.at("data").get<std::vector<double>>();
            if (jt.at("rows").get<std::size_t>() != t.rows || jt.at("cols").get<std::size_t>() != t.cols ||
                data.size() != t.rows * t.cols) {
                throw std::invalid_argument("tensor '" + t.name + "' has the wrong shape");
            }
            std::copy(data.begin(), data.end(), c.params().begin() + static_cast<std::ptrdiff_t>(t.offset));
        }
        return c;
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("malformed controller checkpoint: ") + ex.what());
    }
}

}  // namespace qarch
