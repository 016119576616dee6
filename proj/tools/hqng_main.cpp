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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hqng/experiment.hpp"

namespace {

struct Overrides {
    std::string methods;
    std::string reparams;
    std::optional<double> eta;
    std::optional<double> lambda;
    std::string policy;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    std::string seeds;
    std::optional<std::size_t> max_steps;
    std::string init;
    std::string out;
    std::optional<std::size_t> threads;
    std::string lambdas;
};

void add_overrides(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--method", o.methods,
                    "Comma-separated methods: vg, qng, hqng, opvqite");
    cmd->add_option("--reparam", o.reparams,
                    "Comma-separated maps: identity, t1, t2, t3");
    cmd->add_option("--eta", o.eta, "Learning rate")->check(CLI::PositiveNumber);
    cmd->add_option("--lambda", o.lambda, "Regularization strength")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--policy", o.policy, "regularized, exact or pinv");
    cmd->add_option("--shots", o.shots, "Shots per estimated quantity")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Single seed");
    cmd->add_option("--seeds", o.seeds, "Seed list, e.g. 0,3,5 or 0..9");
    cmd->add_option("--max-steps", o.max_steps, "Step budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--init", o.init,
                    "zeros | uniform:<file>:<radius> | explicit:<values>");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--threads", o.threads, "Worker count (0 = all cores)");
}

void apply(const Overrides &o, hqng::ExperimentConfig &c) {
    if (!o.methods.empty()) {
        c.methods.clear();
        for (const auto &m : CLI::detail::split(o.methods, ',')) {
            c.methods.push_back(hqng::parse_method(m));
        }
    }
    if (!o.reparams.empty()) {
        c.reparams = CLI::detail::split(o.reparams, ',');
    }
    if (o.eta) {
        c.eta = o.eta;
    }
    if (o.lambda) {
        c.lambda = *o.lambda;
    }
    if (!o.policy.empty()) {
        c.policy = o.policy;
    }
    if (o.shots) {
        c.shots = o.shots;
    }
    if (o.seed) {
        c.seeds = {*o.seed};
    }
    if (!o.seeds.empty()) {
        c.seeds = hqng::parse_seed_list(o.seeds);
    }
    if (o.max_steps) {
        c.max_steps = *o.max_steps;
    }
    if (!o.init.empty()) {
        c.init = hqng::parse_init(o.init);
    }
    if (!o.out.empty()) {
        c.output_dir = o.out;
    }
    if (o.threads) {
        c.threads = *o.threads;
    }
    if (!o.lambdas.empty()) {
        c.lambdas = hqng::parse_real_list(o.lambdas);
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Natural-gradient VQE optimizers on a statevector simulator"};
    app.require_subcommand(1);

    std::string run_config;
    Overrides run_over;
    auto *run = app.add_subcommand("run", "Run an experiment config");
    run->add_option("config", run_config, "Experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    add_overrides(run, run_over);

    std::string sweep_config;
    Overrides sweep_over;
    auto *sweep = app.add_subcommand("lambda-sweep",
                                     "Sweep the H-QNG regularization strength");
    sweep->add_option("config", sweep_config, "Experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    add_overrides(sweep, sweep_over);
    sweep->add_option("--lambdas", sweep_over.lambdas,
                      "Comma-separated lambda values");

    std::string metric_h;
    std::string metric_ansatz;
    std::string metric_params;
    std::string metric_which = "A";
    auto *metric = app.add_subcommand("metric", "Print A, T or G as CSV");
    metric->add_option("--hamiltonian", metric_h, "Hamiltonian file (for T)");
    metric->add_option("--ansatz", metric_ansatz, "Ansatz file")
        ->required()
        ->check(CLI::ExistingFile);
    metric->add_option("--params", metric_params,
                       "Comma-separated angles (default zeros)");
    metric->add_option("--which", metric_which, "A, T or G");

    std::string gs_h;
    auto *gs = app.add_subcommand("gs", "Dense ground state of a Hamiltonian");
    gs->add_option("hamiltonian", gs_h, "Hamiltonian file")
        ->required()
        ->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            auto config = hqng::load_experiment_config(run_config);
            apply(run_over, config);
            return hqng::cmd_run(config, std::cout);
        }
        if (sweep->parsed()) {
            auto config = hqng::load_experiment_config(sweep_config);
            apply(sweep_over, config);
            return hqng::cmd_lambda_sweep(config, std::cout);
        }
        if (metric->parsed()) {
            const auto which = hqng::parse_metric_choice(metric_which);
            if (which == hqng::MetricChoice::T && metric_h.empty()) {
                throw std::invalid_argument("--which T needs --hamiltonian");
            }
            return hqng::cmd_metric(metric_h, metric_ansatz,
                                    hqng::parse_real_list(metric_params),
                                    which, std::cout);
        }
        if (gs->parsed()) {
            return hqng::cmd_gs(gs_h, std::cout);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
