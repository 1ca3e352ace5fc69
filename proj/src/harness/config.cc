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

#include "qarch/harness/config.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

extern char **environ;

namespace qarch {

using nlohmann::json;

namespace {

json scalar_to_json(const YAML::Node &node) {
    const std::string &s = node.Scalar();
    if (node.Tag() == "!") {
        return s;  // quoted: always a string
    }
    if (s.empty() || s == "~" || s == "null" || s == "Null" || s == "NULL") {
        return nullptr;
    }
    if (s == "true" || s == "True" || s == "TRUE") {
        return true;
    }
    if (s == "false" || s == "False" || s == "FALSE") {
        return false;
    }
    {
        uint64_t u;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), u);
        if (ec == std::errc() && p == s.data() + s.size()) {
            return u;
        }
        int64_t i;
        auto [p2, ec2] = std::from_chars(s.data(), s.data() + s.size(), i);
        if (ec2 == std::errc() && p2 == s.data() + s.size()) {
            return i;
        }
    }
    {
        char *end = nullptr;
        double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() + s.size()) {
            return d;
        }
    }
    return s;
}

json yaml_to_json(const YAML::Node &node) {
    switch (node.Type()) {
        case YAML::NodeType::Null:
        case YAML::NodeType::Undefined:
            return nullptr;
        case YAML::NodeType::Scalar:
            return scalar_to_json(node);
        case YAML::NodeType::Sequence: {
            json arr = json::array();
            for (const auto &item : node) {
                arr.push_back(yaml_to_json(item));
            }
            return arr;
        }
        case YAML::NodeType::Map: {
            json obj = json::object();
            for (const auto &kv : node) {
                auto key = kv.first.as<std::string>();
                if (obj.contains(key)) {
                    throw ConfigError("duplicate config key '" + key + "'");
                }
                obj[key] = yaml_to_json(kv.second);
            }
            return obj;
        }
    }
    return nullptr;
}

json constraint_json(const std::optional<SoftConstraint> &c) {
    if (!c) {
        return nullptr;
    }
    return {{"quantity", std::string(quantity_name(c->quantity))}, {"bound", c->bound}};
}

/// Typed accessors that name the offending key.
struct Reader {
    const json &doc;
    std::string path;

    const json &at(const std::string &key) const {
        return doc.at(key);
    }
    std::string where(const std::string &key) const {
        return path.empty() ? key : path + "." + key;
    }
    [[noreturn]] void fail(const std::string &key, const std::string &what) const {
        throw ConfigError("config key '" + where(key) + "': " + what);
    }
    std::size_t count(const std::string &key) const {
        const json &v = at(key);
        if (!v.is_number_unsigned()) {
            fail(key, "expected a non-negative integer, got " + v.dump());
        }
        return v.get<std::size_t>();
    }
    uint64_t u64(const std::string &key) const {
        return count(key);
    }
    double real(const std::string &key) const {
        const json &v = at(key);
        if (!v.is_number()) {
            fail(key, "expected a number, got " + v.dump());
        }
        return v.get<double>();
    }
    bool flag(const std::string &key) const {
        const json &v = at(key);
        if (!v.is_boolean()) {
            fail(key, "expected true or false, got " + v.dump());
        }
        return v.get<bool>();
    }
    std::string str(const std::string &key) const {
        const json &v = at(key);
        if (!v.is_string()) {
            fail(key, "expected a string, got " + v.dump());
        }
        return v.get<std::string>();
    }
    std::vector<double> reals(const std::string &key) const {
        const json &v = at(key);
        if (!v.is_array()) {
            fail(key, "expected a list of numbers");
        }
        std::vector<double> out;
        for (const auto &x : v) {
            if (!x.is_number()) {
                fail(key, "expected a list of numbers, found " + x.dump());
            }
            out.push_back(x.get<double>());
        }
        return out;
    }
    std::vector<std::string> strs(const std::string &key) const {
        const json &v = at(key);
        if (!v.is_array()) {
            fail(key, "expected a list of strings");
        }
        std::vector<std::string> out;
        for (const auto &x : v) {
            if (!x.is_string()) {
                fail(key, "expected a list of strings, found " + x.dump());
            }
            out.push_back(x.get<std::string>());
        }
        return out;
    }
    Reader sub(const std::string &key) const {
        const json &v = at(key);
        if (!v.is_object()) {
            fail(key, "expected a mapping");
        }
        return Reader{v, where(key)};
    }
    std::optional<SoftConstraint> constraint(const std::string &key) const {
        const json &v = at(key);
        if (v.is_null()) {
            return std::nullopt;
        }
        if (!v.is_object()) {
            fail(key, "expected null or a mapping with 'quantity' and 'bound'");
        }
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.key() != "quantity" && it.key() != "bound") {
                throw ConfigError("unknown config key '" + where(key) + "." + it.key() + "'");
            }
        }
        if (!v.contains("quantity") || !v.contains("bound")) {
            fail(key, "a constraint needs both 'quantity' and 'bound'");
        }
        Reader r{v, where(key)};
        try {
            return SoftConstraint(quantity_from_name(r.str("quantity")), r.count("bound"));
        } catch (const ConfigError &) {
            throw;
        } catch (const std::invalid_argument &ex) {
            fail(key, ex.what());
        }
    }
};

json task_shorthand(const std::string &s) {
    auto dash = s.find('-');
    std::string head = s.substr(0, dash);
    std::string tail = dash == std::string::npos ? "" : s.substr(dash + 1);
    if (head == "denoise") {
        return {{"kind", "denoise"}, {"noise", tail.empty() ? "bitflip" : tail}};
    }
    if (head == "image") {
        return {{"kind", "image"}, {"image_set", tail.empty() ? "digits" : tail}};
    }
    if (head == "unitary") {
        return {{"kind", "unitary"}, {"subtask", tail.empty() ? "dense" : tail}};
    }
    if (head == "state") {
        return {{"kind", "state"}};
    }
    throw ConfigError("unknown task '" + s + "'");
}

/// Overlays `user` on `base`, rejecting keys that `base` does not define.
/// Null entries in `base` accept any value (checked later by the typed reader).
void merge_checked(json &base, const json &user, const std::string &path) {
    if (!user.is_object()) {
        throw ConfigError("config " + (path.empty() ? std::string("document") : "key '" + path + "'") + " must be a mapping");
    }
    for (auto it = user.begin(); it != user.end(); ++it) {
        std::string key = it.key();
        std::string full = path.empty() ? key : path + "." + key;
        if (path.empty() && key == "seeds") {
            key = "seed";
        }
        if (!base.contains(key)) {
            throw ConfigError("unknown config key '" + full + "'");
        }
        json &slot = base[key];
        const json &val = it.value();
        if (path.empty() && key == "task" && val.is_string()) {
            merge_checked(slot, task_shorthand(val.get<std::string>()), full);
        } else if (path.empty() && key == "seed" && val.is_number()) {
            slot = json::array({val});
        } else if (slot.is_object() && val.is_object() && !(key == "constraint")) {
            merge_checked(slot, val, full);
        } else {
            slot = val;
        }
    }
}

json defaults_json() {
    RunConfig d;
    json doc = config_to_json(d);
    doc["seed"] = json::array({0});
    doc["res"]["constraint"] = nullptr;  // resolved from the task when unset
    return doc;
}

std::vector<GateKind> parse_space(const std::vector<std::string> &names) {
    std::vector<GateKind> out;
    for (const auto &n : names) {
        try {
            out.push_back(gate_from_name(n));
        } catch (const std::invalid_argument &) {
            throw ConfigError("config key 'space': unknown gate '" + n + "'");
        }
    }
    return out;
}

json parse_env_value(const std::string &v) {
    try {
        return yaml_to_json(YAML::Load(v));
    } catch (const YAML::Exception &) {
        return v;
    }
}

void apply_env(json &doc, const std::map<std::string, std::string> &env) {
    for (const auto &[name, value] : env) {
        if (name.rfind("QARCH_", 0) != 0) {
            continue;
        }
        std::string rest = name.substr(6);
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            std::size_t next = rest.find("__", pos);
            parts.push_back(rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
            if (next == std::string::npos) {
                break;
            }
            pos = next + 2;
        }
        json patch = parse_env_value(value);
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            std::string key = *it;
            std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
                return static_cast<char>(std::tolower(c));
            });
            patch = json{{key, patch}};
        }
        merge_checked(doc, patch, "");
    }
}

RunConfig from_merged(const json &doc) {
    Reader top{doc, ""};
    RunConfig c;

    Reader t = top.sub("task");
    c.task.kind = t.str("kind");
    c.task.noise = t.str("noise");
    c.task.train_p = t.real("train_p");
    c.task.n_train = t.count("n_train");
    c.task.n_validation = t.count("n_validation");
    c.task.n_test_per_p = t.count("n_test_per_p");
    c.task.test_grid = t.reals("test_grid");
    c.task.image_set = t.str("image_set");
    c.task.subtask = t.str("subtask");
    c.task.n_qubits = t.count("n_qubits");
    c.task.layers = t.count("layers");
    c.task.target_index = t.count("target_index");
    c.task.cost_mode = t.str("cost_mode");
    c.task.data_seed = t.u64("data_seed");

    c.algorithm = top.str("algorithm");
    {
        const json &s = doc.at("seed");
        if (!s.is_array()) {
            top.fail("seed", "expected an integer or a list of integers");
        }
        for (const auto &v : s) {
            if (!v.is_number_unsigned()) {
                top.fail("seed", "expected non-negative integers, found " + v.dump());
            }
            c.seeds.push_back(v.get<uint64_t>());
        }
    }
    c.output_dir = top.str("output_dir");
    c.jobs = top.count("jobs");
    c.space = top.strs("space");
    c.baseline = top.flag("baseline");

    Reader o = top.sub("optimizer");
    c.optimizer.max_evals = o.count("max_evals");
    c.optimizer.x_tol = o.real("x_tol");
    c.optimizer.f_tol = o.real("f_tol");
    c.optimizer.restarts = o.count("restarts");

    Reader rs = top.sub("rs");
    c.rs.n_cells = rs.count("n_cells");
    c.rs.layer_budget = rs.count("layer_budget");
    c.rs.constraint = rs.constraint("constraint");
    c.rs.max_resample = rs.count("max_resample");

    Reader re = top.sub("res");
    c.res.population_size = re.count("population_size");
    c.res.layer_budget_per_phase = re.count("layer_budget_per_phase");
    c.res.max_phases = re.count("max_phases");
    c.res.max_resample = re.count("max_resample");
    try {
        c.res.mode = res_mode_from_name(re.str("mode"));
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &ex) {
        re.fail("mode", ex.what());
    }
    if (auto rc = re.constraint("constraint")) {
        c.res.constraint = *rc;
    } else if (c.task.kind == "unitary") {
        c.res.constraint = SoftConstraint(Quantity::NLayers, std::max<std::size_t>(c.task.layers, 1));
    } else {
        c.res.constraint = SoftConstraint(Quantity::NLayers, 3);
    }

    Reader rl = top.sub("relm");
    c.relm.epochs = rl.count("epochs");
    c.relm.tournament_size = rl.count("tournament_size");
    c.relm.batch_size = rl.count("batch_size");
    c.relm.learning_rate = rl.real("learning_rate");
    c.relm.population_size = rl.count("population_size");
    c.relm.reward.alpha = rl.real("alpha");
    c.relm.reward.eps_tan = rl.real("eps_tan");
    c.relm.controller.embed = rl.count("embed");
    c.relm.controller.ff_hidden = rl.count("ff_hidden");
    c.relm.controller.heads = rl.count("heads");
    c.relm.controller.blocks = rl.count("blocks");
    c.relm.controller.copy_gain = rl.real("copy_gain");
    c.relm.max_seq = rl.count("max_seq");
    c.relm.warm_start = rl.flag("warm_start");
    c.relm.constraint = rl.constraint("constraint");
    c.relm.random_layer_budget = rl.count("random_layer_budget");
    try {
        c.relm.init_mode = init_mode_from_name(rl.str("init_mode"));
        c.relm.reward.sign = reward_sign_from_name(rl.str("reward_sign"));
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &ex) {
        throw ConfigError(std::string("config section 'relm': ") + ex.what());
    }
    validate_config(c);
    return c;
}

}  // namespace

json config_to_json(const RunConfig &c) {
    json seeds = json::array();
    for (auto s : c.seeds) {
        seeds.push_back(s);
    }
    return {
        {"task",
         {{"kind", c.task.kind},
          {"noise", c.task.noise},
          {"train_p", c.task.train_p},
          {"n_train", c.task.n_train},
          {"n_validation", c.task.n_validation},
          {"n_test_per_p", c.task.n_test_per_p},
          {"test_grid", c.task.test_grid},
          {"image_set", c.task.image_set},
          {"subtask", c.task.subtask},
          {"n_qubits", c.task.n_qubits},
          {"layers", c.task.layers},
          {"target_index", c.task.target_index},
          {"cost_mode", c.task.cost_mode},
          {"data_seed", c.task.data_seed}}},
        {"algorithm", c.algorithm},
        {"seed", seeds},
        {"output_dir", c.output_dir},
        {"jobs", c.jobs},
        {"space", c.space},
        {"baseline", c.baseline},
        {"optimizer",
         {{"max_evals", c.optimizer.max_evals},
          {"x_tol", c.optimizer.x_tol},
          {"f_tol", c.optimizer.f_tol},
          {"restarts", c.optimizer.restarts}}},
        {"rs",
         {{"n_cells", c.rs.n_cells},
          {"layer_budget", c.rs.layer_budget},
          {"constraint", constraint_json(c.rs.constraint)},
          {"max_resample", c.rs.max_resample}}},
        {"res",
         {{"population_size", c.res.population_size},
          {"constraint", constraint_json(c.res.constraint)},
          {"layer_budget_per_phase", c.res.layer_budget_per_phase},
          {"max_phases", c.res.max_phases},
          {"mode", std::string(res_mode_name(c.res.mode))},
          {"max_resample", c.res.max_resample}}},
        {"relm",
         {{"epochs", c.relm.epochs},
          {"tournament_size", c.relm.tournament_size},
          {"batch_size", c.relm.batch_size},
          {"learning_rate", c.relm.learning_rate},
          {"init_mode", std::string(init_mode_name(c.relm.init_mode))},
          {"alpha", c.relm.reward.alpha},
          {"eps_tan", c.relm.reward.eps_tan},
          {"reward_sign", std::string(reward_sign_name(c.relm.reward.sign))},
          {"population_size", c.relm.population_size},
          {"embed", c.relm.controller.embed},
          {"ff_hidden", c.relm.controller.ff_hidden},
          {"heads", c.relm.controller.heads},
          {"blocks", c.relm.controller.blocks},
          {"copy_gain", c.relm.controller.copy_gain},
          {"max_seq", c.relm.max_seq},
          {"warm_start", c.relm.warm_start},
          {"constraint", constraint_json(c.relm.constraint)},
          {"random_layer_budget", c.relm.random_layer_budget}}}};
}

void validate_config(const RunConfig &c) {
    auto bad = [](const std::string &msg) {
        throw ConfigError(msg);
    };
    const auto &k = c.task.kind;
    if (k != "denoise" && k != "image" && k != "unitary" && k != "state") {
        bad("config key 'task.kind': unknown task kind '" + k + "'");
    }
    if (c.task.noise != "bitflip" && c.task.noise != "qdc") {
        bad("config key 'task.noise': expected bitflip or qdc, got '" + c.task.noise + "'");
    }
    if (c.task.image_set != "digits" && c.task.image_set != "tetris") {
        bad("config key 'task.image_set': expected digits or tetris, got '" + c.task.image_set + "'");
    }
    try {
        subtask_from_name(c.task.subtask);
        if (!c.task.cost_mode.empty()) {
            cost_mode_from_name(c.task.cost_mode);
        }
    } catch (const std::invalid_argument &ex) {
        bad(std::string("config section 'task': ") + ex.what());
    }
    if (!(c.task.train_p >= 0.0 && c.task.train_p <= 1.0)) {
        bad("config key 'task.train_p': must lie in [0, 1]");
    }
    for (double p : c.task.test_grid) {
        if (!(p >= 0.0 && p <= 1.0)) {
            bad("config key 'task.test_grid': probabilities must lie in [0, 1]");
        }
    }
    if (k == "unitary" && (c.task.n_qubits < 1 || c.task.n_qubits > 10 || c.task.layers < 1 || c.task.layers > 6)) {
        bad("config section 'task': unitary targets need 1-10 qubits and 1-6 layers");
    }
    if (k == "denoise" && (c.task.n_qubits < 2 || c.task.n_train < 1 || c.task.n_validation < 1)) {
        bad("config section 'task': denoising needs at least 2 qubits and nonempty train/validation sets");
    }
    if (c.algorithm != "rs" && c.algorithm != "res" && c.algorithm != "relm") {
        bad("config key 'algorithm': expected rs, res or relm, got '" + c.algorithm + "'");
    }
    if (c.seeds.empty()) {
        bad("config key 'seed': at least one seed is required");
    }
    if (c.jobs < 1) {
        bad("config key 'jobs': must be at least 1");
    }
    parse_space(c.space);
    if (c.optimizer.restarts < 1 || !(c.optimizer.x_tol > 0.0) || !(c.optimizer.f_tol > 0.0)) {
        bad("config section 'optimizer': restarts must be >= 1 and tolerances positive");
    }
    if (c.rs.n_cells < 1 || c.rs.layer_budget < 1 || c.rs.max_resample < 1) {
        bad("config section 'rs': n_cells, layer_budget and max_resample must be at least 1");
    }
    try {
        c.res.validate();
    } catch (const std::invalid_argument &ex) {
        bad(std::string("config section 'res': ") + ex.what());
    }
    if (c.relm.tournament_size > c.relm.population_size) {
        bad("config section 'relm': tournament_size " + std::to_string(c.relm.tournament_size) +
            " exceeds population_size " + std::to_string(c.relm.population_size));
    }
    try {
        c.relm.validate();
        ControllerConfig cc = c.relm.controller;
        cc.n_qubits = 1;
        cc.v_rot = 1;
        cc.v_ent = 1;
        cc.validate();
    } catch (const std::invalid_argument &ex) {
        bad(std::string("config section 'relm': ") + ex.what());
    }
}

RunConfig config_from_json(const json &doc) {
    json merged = defaults_json();
    merge_checked(merged, doc, "");
    return from_merged(merged);
}

RunConfig parse_config_text(const std::string &text, const std::map<std::string, std::string> &env) {
    json user;
    try {
        YAML::Node root = YAML::Load(text);
        user = root.IsNull() ? json::object() : yaml_to_json(root);
    } catch (const YAML::Exception &ex) {
        throw ConfigError(std::string("malformed config document: ") + ex.what());
    }
    json merged = defaults_json();
    merge_checked(merged, user, "");
    apply_env(merged, env);
    return from_merged(merged);
}

RunConfig parse_config_file(const std::string &path, const std::map<std::string, std::string> &env) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), env);
}

std::map<std::string, std::string> environment_overrides() {
    std::map<std::string, std::string> out;
    for (char **e = environ; e && *e; e++) {
        std::string kv(*e);
        if (kv.rfind("QARCH_", 0) != 0) {
            continue;
        }
        auto eq = kv.find('=');
        if (eq != std::string::npos) {
            out[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
    }
    return out;
}

TaskSpec build_task(const TaskConfig &c) {
    std::optional<CostMode> mode;
    if (!c.cost_mode.empty()) {
        mode = cost_mode_from_name(c.cost_mode);
    }
    if (c.kind == "denoise") {
        DenoiseTaskOptions o;
        o.data.n_qubits = c.n_qubits;
        o.data.train_p = c.train_p;
        o.data.n_train = c.n_train;
        o.data.n_validation = c.n_validation;
        o.data.n_test_per_p = c.n_test_per_p;
        o.data.test_grid = c.test_grid;
        o.cost_mode = mode.value_or(CostMode::Trash);
        return make_denoise_task(noise_kind_from_name(c.noise), c.data_seed, o);
    }
    if (c.kind == "image") {
        return make_image_task(image_set_from_name(c.image_set), c.data_seed, mode.value_or(CostMode::Trash));
    }
    if (c.kind == "state") {
        return make_state_compress_task(c.data_seed, mode.value_or(CostMode::Trash));
    }
    if (c.kind == "unitary") {
        auto targets = gen_hidden_targets(c.n_qubits, subtask_from_name(c.subtask), c.layers, c.target_index + 1, c.data_seed);
        return make_unitary_task(targets.back(), c.n_qubits);
    }
    throw ConfigError("unknown task kind '" + c.kind + "'");
}

GateVocab build_space(const RunConfig &config, const TaskSpec &task) {
    if (config.space.empty()) {
        return GateVocab(task.space);
    }
    return GateVocab(parse_space(config.space));
}

std::optional<OptBudget> optimizer_budget(const RunConfig &config) {
    if (config.optimizer.max_evals == 0) {
        // Per-cell default size, but keep the configured tolerances and restarts.
        return std::nullopt;
    }
    return config.optimizer;
}

SoftConstraint default_constraint(const TaskSpec &task) {
    if (task.kind == TaskKind::UnitaryRegen) {
        return SoftConstraint(Quantity::NLayers, std::max<std::size_t>(task.target_layers, 1));
    }
    return SoftConstraint(Quantity::NLayers, 3);
}

}  // namespace qarch
