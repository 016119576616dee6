// Copyright 2026 The hqng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqng/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "hqng/errors.hpp"
#include "hqng/format.hpp"
#include "hqng/gradients.hpp"
#include "hqng/oracle.hpp"
#include "hqng/reparam.hpp"

namespace hqng {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double parse_real(std::string_view text, std::string_view what) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() ||
        text.empty()) {
        throw std::invalid_argument("bad " + std::string(what) + " '" +
                                    std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
    text = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() ||
        text.empty()) {
        throw std::invalid_argument("bad " + std::string(what) + " '" +
                                    std::string(text) + "'");
    }
    return value;
}

fs::path resolve(const fs::path &base, std::string_view value) {
    fs::path p{std::string(value)};
    return p.is_absolute() || base.empty() ? p : base / p;
}

std::vector<double> read_values(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open parameter file " +
                                 path.string());
    }
    std::vector<double> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        body = body.substr(0, body.find('#'));
        std::string cleaned(body);
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream fields(cleaned);
        for (std::string tok; fields >> tok;) {
            try {
                out.push_back(parse_real(tok, "parameter"));
            } catch (const std::invalid_argument &e) {
                throw ParseError(path.string(), line_no, e.what());
            }
        }
    }
    return out;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2]
                      : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

/// Runs f(0..n-1) on up to `threads` workers; rethrows the first failure in
/// index order.
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F &&f) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++) {
            try {
                f(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::optional<double> reference_energy(const Hamiltonian &h) {
    if (h.n_qubits() > kDenseQubitLimit) {
        return std::nullopt;
    }
    return oracle::ground_state(h).energy;
}

void write_file(const fs::path &path,
                const std::function<void(std::ostream &)> &body) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    body(out);
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

std::string compact(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

} // namespace

InitSpec parse_init(std::string_view text, const fs::path &base_dir) {
    text = trim(text);
    InitSpec init;
    if (text == "zeros") {
        init.kind = InitSpec::Kind::Zeros;
        return init;
    }
    if (text.starts_with("explicit:")) {
        init.kind = InitSpec::Kind::Explicit;
        init.values = parse_real_list(text.substr(9));
        return init;
    }
    if (text.starts_with("uniform:")) {
        const auto body = text.substr(8);
        const auto colon = body.rfind(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument(
                "init 'uniform' needs <center file>:<radius>");
        }
        init.kind = InitSpec::Kind::Uniform;
        init.center_path = resolve(base_dir, trim(body.substr(0, colon)));
        init.radius = parse_real(body.substr(colon + 1), "init radius");
        if (!(init.radius >= 0.0)) {
            throw std::invalid_argument("init radius must be >= 0");
        }
        init.values = read_values(init.center_path);
        return init;
    }
    throw std::invalid_argument("unknown init '" + std::string(text) +
                                "' (zeros, uniform:<file>:<r>, "
                                "explicit:<values>)");
}

Eigen::VectorXd initial_parameters(const InitSpec &init, std::size_t n_params,
                                   std::uint64_t seed) {
    const auto m = static_cast<Eigen::Index>(n_params);
    if (init.kind == InitSpec::Kind::Zeros) {
        return Eigen::VectorXd::Zero(m);
    }
    if (init.values.size() != n_params) {
        throw DimensionError("init provides " +
                             std::to_string(init.values.size()) +
                             " values for " + std::to_string(n_params) +
                             " parameters");
    }
    Eigen::VectorXd theta =
        Eigen::Map<const Eigen::VectorXd>(init.values.data(), m);
    if (init.kind == InitSpec::Kind::Uniform) {
        // Stream 0 is reserved for initial points; shot noise uses stream 1.
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32), 0u, 0u};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> offset(-init.radius,
                                                      init.radius);
        for (Eigen::Index i = 0; i < m; ++i) {
            theta[i] += offset(rng);
        }
    }
    return theta;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    for (auto item : split(text, ',')) {
        if (item.empty()) {
            continue;
        }
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_unsigned(item, "seed"));
            continue;
        }
        const auto lo = parse_unsigned(item.substr(0, dots), "seed");
        const auto hi = parse_unsigned(item.substr(dots + 2), "seed");
        if (hi < lo) {
            throw std::invalid_argument("empty seed range '" +
                                        std::string(item) + "'");
        }
        for (auto s = lo; s <= hi; ++s) {
            out.push_back(s);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("seed list is empty");
    }
    return out;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (auto item : split(text, ',')) {
        if (!item.empty()) {
            out.push_back(parse_real(item, "number"));
        }
    }
    return out;
}

InversePolicy ExperimentConfig::inverse_policy() const {
    if (policy == "regularized") {
        return inverse::Regularized{lambda};
    }
    if (policy == "exact") {
        return inverse::ExactSolve{};
    }
    if (policy == "pinv") {
        return inverse::PseudoInverse{rcond};
    }
    throw std::invalid_argument("unknown policy '" + policy +
                                "' (regularized, exact, pinv)");
}

void ExperimentConfig::validate() const {
    if (hamiltonian_path.empty() || ansatz_path.empty()) {
        throw std::invalid_argument("config needs hamiltonian and ansatz");
    }
    if (methods.empty()) {
        throw std::invalid_argument("config lists no methods");
    }
    if (reparams.empty()) {
        throw std::invalid_argument("config lists no reparams");
    }
    if (seeds.empty()) {
        throw std::invalid_argument("config lists no seeds");
    }
    if (!(target_delta_e > 0.0)) {
        throw std::invalid_argument("target_delta_e must be positive");
    }
    (void)inverse_policy();
    OptimizerConfig probe;
    probe.eta = effective_eta();
    probe.max_steps = max_steps;
    probe.energy_tolerance = energy_tolerance;
    probe.shots = shots;
    probe.inverse_policy = inverse_policy();
    probe.validate();
    for (double l : lambdas) {
        if (!(l >= 0.0)) {
            throw std::invalid_argument("lambdas must be >= 0");
        }
    }
}

ExperimentConfig parse_experiment_config(std::string_view text,
                                         const fs::path &base_dir) {
    ExperimentConfig config;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::map<std::string, std::size_t> seen;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.emplace(key, line_no).second) {
            throw ParseError(line_no, "duplicate key '" + key + "'");
        }
        try {
            if (key == "hamiltonian") {
                config.hamiltonian_path = resolve(base_dir, value);
            } else if (key == "ansatz") {
                config.ansatz_path = resolve(base_dir, value);
            } else if (key == "methods" || key == "method") {
                config.methods.clear();
                for (auto m : split(value, ',')) {
                    config.methods.push_back(parse_method(m));
                }
            } else if (key == "reparams") {
                config.reparams.clear();
                for (auto r : split(value, ',')) {
                    config.reparams.emplace_back(r);
                }
            } else if (key == "eta") {
                config.eta = parse_real(value, "eta");
            } else if (key == "policy") {
                config.policy = std::string(value);
            } else if (key == "lambda") {
                config.lambda = parse_real(value, "lambda");
            } else if (key == "rcond") {
                config.rcond = parse_real(value, "rcond");
            } else if (key == "lambdas") {
                config.lambdas = parse_real_list(value);
            } else if (key == "shots") {
                if (value == "exact" || value == "none") {
                    config.shots.reset();
                } else {
                    config.shots = parse_unsigned(value, "shots");
                }
            } else if (key == "seeds" || key == "seed") {
                config.seeds = parse_seed_list(value);
            } else if (key == "max_steps") {
                config.max_steps = parse_unsigned(value, "max_steps");
            } else if (key == "energy_tolerance") {
                config.energy_tolerance = parse_real(value, "energy_tolerance");
            } else if (key == "target_delta_e") {
                config.target_delta_e = parse_real(value, "target_delta_e");
            } else if (key == "init") {
                config.init = parse_init(value, base_dir);
            } else if (key == "output_dir") {
                config.output_dir = resolve(base_dir, value);
            } else if (key == "threads") {
                config.threads = parse_unsigned(value, "threads");
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    return config;
}

ExperimentConfig load_experiment_config(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_experiment_config(buffer.str(), path.parent_path());
    } catch (const ParseError &e) {
        // Errors from files the config points at already name their file.
        if (!std::string_view(e.what()).starts_with("line ")) {
            throw;
        }
        throw ParseError(path.string(), e.line(), e.detail());
    }
}

std::string RunOutcome::label() const {
    const auto base = to_string(method);
    return reparam == "identity" ? base : base + "_" + reparam;
}

ExperimentResult run_experiment(const ExperimentConfig &config) {
    config.validate();
    const Hamiltonian h = load_hamiltonian(config.hamiltonian_path.string());
    const Ansatz ansatz = load_ansatz(config.ansatz_path.string());
    if (h.n_qubits() != ansatz.n_qubits()) {
        throw DimensionError("Hamiltonian has " + std::to_string(h.n_qubits()) +
                             " qubits but the ansatz has " +
                             std::to_string(ansatz.n_qubits()));
    }
    ExperimentResult result;
    result.ground_energy = reference_energy(h);
    for (Method method : config.methods) {
        for (const auto &reparam : config.reparams) {
            // Validates the name before any worker starts.
            (void)named_reparameterization(
                reparam, static_cast<Eigen::Index>(ansatz.n_params()));
            for (std::uint64_t seed : config.seeds) {
                result.runs.push_back({method, reparam, seed, {}});
            }
        }
    }
    parallel_for(result.runs.size(), config.threads, [&](std::size_t k) {
        auto &job = result.runs[k];
        OptimizerConfig oc;
        oc.method = job.method;
        oc.eta = config.effective_eta();
        oc.inverse_policy = config.inverse_policy();
        oc.max_steps = config.max_steps;
        oc.energy_tolerance = config.energy_tolerance;
        oc.shots = config.shots;
        oc.seed = job.seed;
        const auto map = named_reparameterization(
            job.reparam, static_cast<Eigen::Index>(ansatz.n_params()));
        const auto theta0 =
            initial_parameters(config.init, ansatz.n_params(), job.seed);
        job.record = run(ansatz, h, oc, theta0, result.ground_energy, map);
    });
    return result;
}

void write_run_csv(std::ostream &out, const RunRecord &record) {
    const bool with_delta = !record.delta_e.empty();
    const auto m = record.circuit_params.empty()
                       ? Eigen::Index{0}
                       : record.circuit_params.front().size();
    out << "step,energy";
    if (with_delta) {
        out << ",delta_e";
    }
    out << ",cumulative_estimations";
    for (Eigen::Index i = 0; i < m; ++i) {
        out << ",theta_" << i;
    }
    out << '\n';
    for (std::size_t k = 0; k < record.energy.size(); ++k) {
        out << k << ',' << format_double(record.energy[k]);
        if (with_delta) {
            out << ',' << format_double(record.delta_e[k]);
        }
        out << ',' << record.cumulative_estimations[k];
        for (Eigen::Index i = 0; i < m; ++i) {
            out << ',' << format_double(record.circuit_params[k][i]);
        }
        out << '\n';
    }
}

void write_summary_csv(std::ostream &out, const ExperimentResult &result) {
    const bool with_delta = result.ground_energy.has_value();
    out << (with_delta ? "label,step,mean_delta_e,median_delta_e\n"
                       : "label,step,mean_energy,median_energy\n");
    std::vector<std::string> order;
    std::map<std::string, std::vector<const RunRecord *>> groups;
    for (const auto &r : result.runs) {
        auto [it, inserted] = groups.try_emplace(r.label());
        if (inserted) {
            order.push_back(r.label());
        }
        it->second.push_back(&r.record);
    }
    for (const auto &label : order) {
        const auto &records = groups[label];
        std::size_t length = 0;
        for (const auto *rec : records) {
            length = std::max(length, rec->energy.size());
        }
        for (std::size_t k = 0; k < length; ++k) {
            std::vector<double> values;
            for (const auto *rec : records) {
                const auto &trace = with_delta ? rec->delta_e : rec->energy;
                values.push_back(trace[std::min(k, trace.size() - 1)]);
            }
            double mean = 0.0;
            for (double v : values) {
                mean += v;
            }
            mean /= static_cast<double>(values.size());
            out << label << ',' << k << ',' << format_double(mean) << ','
                << format_double(median(values)) << '\n';
        }
    }
}

void write_crossing_csv(std::ostream &out, const ExperimentResult &result,
                        double target_delta_e) {
    out << "label,seed,status,final_delta_e,steps_to_target,"
           "estimations_at_target\n";
    for (const auto &r : result.runs) {
        out << r.label() << ',' << r.seed << ',' << to_string(r.record.status)
            << ',';
        if (!r.record.delta_e.empty()) {
            out << format_double(r.record.delta_e.back());
        }
        out << ',';
        if (const auto k = r.record.first_step_below(target_delta_e)) {
            out << *k << ',' << r.record.cumulative_estimations[*k];
        } else {
            out << ',';
        }
        out << '\n';
    }
}

std::string to_string(SweepClass c) {
    switch (c) {
    case SweepClass::Converged:
        return "converged";
    case SweepClass::Oscillating:
        return "oscillating";
    case SweepClass::Slow:
        return "slow";
    case SweepClass::Singular:
        return "singular";
    }
    return "unknown";
}

SweepClass classify_sweep_run(const RunRecord &record, double target) {
    if (record.status == RunStatus::SingularMetric) {
        return SweepClass::Singular;
    }
    const double final_gap = record.delta_e.empty() ? record.energy.back()
                                                    : record.delta_e.back();
    if (!record.delta_e.empty() && final_gap <= target) {
        return SweepClass::Converged;
    }
    const std::size_t n = record.energy.size();
    const std::size_t start = n / 2;
    std::size_t rises = 0;
    std::size_t steps = 0;
    for (std::size_t k = std::max<std::size_t>(start, 1); k < n; ++k) {
        ++steps;
        rises += record.energy[k] > record.energy[k - 1] ? 1 : 0;
    }
    if (steps > 0 && 10 * rises > steps) {
        return SweepClass::Oscillating;
    }
    return SweepClass::Slow;
}

int cmd_run(const ExperimentConfig &config, std::ostream &log) {
    const auto result = run_experiment(config);
    fs::create_directories(config.output_dir);
    for (const auto &r : result.runs) {
        const auto name =
            r.label() + "_seed" + std::to_string(r.seed) + ".csv";
        write_file(config.output_dir / name,
                   [&](std::ostream &out) { write_run_csv(out, r.record); });
    }
    write_file(config.output_dir / "summary.csv", [&](std::ostream &out) {
        write_summary_csv(out, result);
    });
    write_file(config.output_dir / "crossing.csv", [&](std::ostream &out) {
        write_crossing_csv(out, result, config.target_delta_e);
    });
    if (result.ground_energy) {
        log << "ground energy " << format_double(*result.ground_energy)
            << '\n';
    }
    for (const auto &r : result.runs) {
        log << r.label() << " seed " << r.seed << ": "
            << to_string(r.record.status) << " after " << r.record.steps()
            << " steps";
        if (!r.record.delta_e.empty()) {
            log << ", final delta_e " << format_double(r.record.delta_e.back());
        }
        log << '\n';
    }
    log << "wrote " << result.runs.size() << " traces to "
        << config.output_dir.string() << '\n';
    return 0;
}

int cmd_lambda_sweep(const ExperimentConfig &config, std::ostream &log) {
    if (config.lambdas.empty()) {
        throw std::invalid_argument("lambda-sweep needs a lambdas list");
    }
    if (config.methods.size() != 1 || config.methods.front() != Method::HQNG) {
        throw std::invalid_argument("lambda-sweep runs H-QNG only");
    }
    struct Job {
        double lambda;
        ExperimentResult result;
    };
    std::vector<Job> jobs;
    for (double l : config.lambdas) {
        jobs.push_back({l, {}});
    }
    // Each sweep point runs its seeds on its own pool; points are sequential.
    for (auto &job : jobs) {
        ExperimentConfig c = config;
        c.policy = "regularized";
        c.lambda = job.lambda;
        c.reparams = {"identity"};
        job.result = run_experiment(c);
    }
    fs::create_directories(config.output_dir);
    for (const auto &job : jobs) {
        for (const auto &r : job.result.runs) {
            const auto name = "lambda_" + compact(job.lambda) + "_seed" +
                              std::to_string(r.seed) + ".csv";
            write_file(config.output_dir / name, [&](std::ostream &out) {
                write_run_csv(out, r.record);
            });
        }
    }
    write_file(config.output_dir / "lambda_summary.csv",
               [&](std::ostream &out) {
                   out << "lambda,seed,status,steps,final_delta_e,class\n";
                   for (const auto &job : jobs) {
                       for (const auto &r : job.result.runs) {
                           out << format_double(job.lambda) << ',' << r.seed
                               << ',' << to_string(r.record.status) << ','
                               << r.record.steps() << ',';
                           if (!r.record.delta_e.empty()) {
                               out << format_double(r.record.delta_e.back());
                           }
                           out << ','
                               << to_string(classify_sweep_run(
                                      r.record, config.target_delta_e))
                               << '\n';
                       }
                   }
               });
    for (const auto &job : jobs) {
        for (const auto &r : job.result.runs) {
            log << "lambda " << compact(job.lambda) << " seed " << r.seed
                << ": "
                << to_string(classify_sweep_run(r.record,
                                                config.target_delta_e))
                << '\n';
        }
    }
    return 0;
}

MetricChoice parse_metric_choice(std::string_view text) {
    if (text == "A" || text == "a") {
        return MetricChoice::A;
    }
    if (text == "T" || text == "t") {
        return MetricChoice::T;
    }
    if (text == "G" || text == "g") {
        return MetricChoice::G;
    }
    throw std::invalid_argument("metric must be A, T or G, got '" +
                                std::string(text) + "'");
}

int cmd_metric(const fs::path &hamiltonian_path, const fs::path &ansatz_path,
               const std::vector<double> &params, MetricChoice which,
               std::ostream &out, double rank_tolerance) {
    const Ansatz ansatz = load_ansatz(ansatz_path.string());
    std::vector<double> theta = params;
    if (theta.empty()) {
        theta.assign(ansatz.n_params(), 0.0);
    }
    if (theta.size() != ansatz.n_params()) {
        throw DimensionError("metric: ansatz has " +
                             std::to_string(ansatz.n_params()) +
                             " parameters, got " +
                             std::to_string(theta.size()));
    }
    MetricTensor t;
    switch (which) {
    case MetricChoice::A:
        t = fubini_study(ansatz, theta);
        break;
    case MetricChoice::T: {
        const Hamiltonian h = load_hamiltonian(hamiltonian_path.string());
        if (h.n_qubits() != ansatz.n_qubits()) {
            throw DimensionError("metric: qubit counts differ");
        }
        t = hamiltonian_aware(h, derivative_state_jacobian(ansatz, h, theta));
        break;
    }
    case MetricChoice::G:
        t = full_pauli_pullback(ansatz, theta);
        break;
    }
    const auto m = t.size();
    for (Eigen::Index j = 0; j < m; ++j) {
        out << (j == 0 ? "" : ",") << "col_" << j;
    }
    out << '\n';
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            out << (j == 0 ? "" : ",") << format_double(t.entries(i, j));
        }
        out << '\n';
    }
    out << "\nindex,eigenvalue\n";
    const auto ev = metric_eigenvalues(t);
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        out << k << ',' << format_double(ev[k]) << '\n';
    }
    out << "\nrank\n" << rank_probe(t, rank_tolerance) << '\n';
    return 0;
}

int cmd_gs(const fs::path &hamiltonian_path, std::ostream &out) {
    const Hamiltonian h = load_hamiltonian(hamiltonian_path.string());
    const auto gs = oracle::ground_state(h);
    out << "energy,degeneracy\n"
        << format_double(gs.energy) << ',' << gs.degeneracy << '\n';
    return 0;
}

} // namespace hqng
