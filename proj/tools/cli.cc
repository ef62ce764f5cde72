// Copyright 2026 The noisymagic Authors
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


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "noisymagic/analysis.h"
#include "noisymagic/circuit.h"
#include "noisymagic/ensembles.h"
#include "noisymagic/pipeline.h"
#include "noisymagic/sparsify.h"
#include "noisymagic/truncation.h"

namespace noisymagic {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
}

void require_unit(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

void require_delta(double x, const char *name) {
    if (!(x > 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in (0, 1]");
    }
}

ordered_json int_or_inf(int64_t v) {
    if (v == kUnbounded) {
        return "inf";
    }
    return v;
}

struct EnsembleArgs {
    std::string noise_case;
    double p = 0.0;
    std::string format = "json";
};

int do_ensemble(const EnsembleArgs &a, std::ostream &out) {
    require_unit(a.p, "--p");
    Ensemble e = make_ensemble(parse_case(a.noise_case), a.p);
    if (a.format == "lines") {
        for (const auto &entry : e.entries) {
            out << format_double(entry.weight) << ' ' << (entry.is_magic() ? "magic" : "resourceless") << ' '
                << entry.label();
            if (entry.is_magic()) {
                out << ' ' << format_double(std::get<MagicForm>(entry.member).nu);
            }
            out << '\n';
        }
        return kExitOk;
    }
    ordered_json j;
    j["case"] = std::string(case_name(e.noise_case));
    j["p"] = e.p;
    j["branch"] = e.branch;
    j["provenance"] = e.provenance();
    j["p_magic"] = e.p_magic();
    j["entries"] = ordered_json::array();
    for (const auto &entry : e.entries) {
        ordered_json row;
        row["weight"] = entry.weight;
        row["kind"] = entry.is_magic() ? "magic" : "resourceless";
        row["label"] = entry.label();
        if (entry.is_magic()) {
            row["nu"] = std::get<MagicForm>(entry.member).nu;
        }
        j["entries"].push_back(std::move(row));
    }
    out << j.dump() << '\n';
    return kExitOk;
}

struct ThresholdArgs {
    int64_t t = 0;
    double p = 0.0;
    double delta1 = 0.0;
    std::optional<int64_t> m0;
    std::optional<double> delta2;
};

int do_threshold(const ThresholdArgs &a, std::ostream &out) {
    require_unit(a.p, "--p");
    TruncationPlan plan = truncation_threshold(a.t, a.p, a.delta1);
    ordered_json j;
    j["t"] = plan.t;
    j["p"] = plan.p_magic;
    j["delta1"] = plan.delta1;
    j["k"] = plan.k;
    j["chernoff_bound"] = chernoff_bound(plan.t, plan.k, plan.p_magic);
    j["exact_tail"] = exact_binomial_tail(plan.t, plan.k, plan.p_magic);
    if (a.m0 || a.delta2) {
        if (!a.m0 || !a.delta2) {
            throw std::invalid_argument("--m0 and --delta2 go together");
        }
        j["m0"] = *a.m0;
        j["delta2"] = *a.delta2;
        j["tvd_bound"] = tvd_bound(plan, *a.m0, *a.delta2);
    }
    out << j.dump() << '\n';
    return kExitOk;
}

struct BoundaryArgs {
    std::string noise_case;
    std::optional<int64_t> t;
    std::optional<double> p;
    double delta = 0.01;
    double budget = kDefaultBudget;
};

int do_boundary(const BoundaryArgs &a, std::ostream &out) {
    require_delta(a.delta, "--delta");
    if (a.t.has_value() == a.p.has_value()) {
        throw std::invalid_argument("give exactly one of --t and --p");
    }
    NoiseCase c = parse_case(a.noise_case);
    ordered_json j;
    j["case"] = std::string(case_name(c));
    j["delta"] = a.delta;
    j["budget"] = a.budget;
    if (a.t) {
        if (*a.t < 1) {
            throw std::invalid_argument("--t must be at least 1");
        }
        double p = boundary_p(c, *a.t, a.delta, a.budget);
        j["t"] = *a.t;
        j["p_star"] = p;
        j["log2_rank"] = worst_rank(c, *a.t, p, a.delta).log2_rank;
    } else {
        require_unit(*a.p, "--p");
        j["p"] = *a.p;
        j["t_star"] = int_or_inf(boundary_t(c, *a.p, a.delta, a.budget));
    }
    out << j.dump() << '\n';
    return kExitOk;
}

struct RankCurveArgs {
    std::string noise_case;
    int64_t t = 0;
    double delta = 0.01;
    double p_from = 0.0;
    double p_to = 0.0;
    double p_step = 0.0;
    std::string out_path;
    std::optional<double> crossing_bytes;
};

int do_rank_curve(const RankCurveArgs &a, std::ostream &out) {
    require_delta(a.delta, "--delta");
    require_unit(a.p_from, "--p-from");
    require_unit(a.p_to, "--p-to");
    if (a.t < 1) {
        throw std::invalid_argument("--t must be at least 1");
    }
    if (a.crossing_bytes && a.out_path.empty()) {
        throw std::invalid_argument("--crossing-bytes needs --out so the CSV and the crossings do not mix");
    }
    NoiseCase c = parse_case(a.noise_case);
    auto rows = rank_curve(c, a.t, a.delta, p_grid(a.p_from, a.p_to, a.p_step));
    std::string csv = rank_curve_csv(rows);
    if (a.out_path.empty()) {
        out << csv;
        return kExitOk;
    }
    write_file(a.out_path, csv);
    if (a.crossing_bytes) {
        for (const auto &x : find_crossings(rows, *a.crossing_bytes)) {
            ordered_json j;
            j["bytes"] = *a.crossing_bytes;
            j["p_before"] = x.p_before;
            j["p_after"] = x.p_after;
            j["log2_before"] = x.log2_before;
            j["log2_after"] = x.log2_after;
            out << j.dump() << '\n';
        }
    }
    return kExitOk;
}

struct SampleArgs {
    std::string circuit_path;
    std::string noise_case = "qubit-dephasing";
    double p = 0.0;
    double delta = 0.2;
    std::optional<double> delta1;
    std::optional<double> delta2;
    size_t shots = 1000;
    std::optional<uint64_t> seed;
    size_t threads = 0;
    bool emit_traces = false;
    bool reuse_subspace = false;
};

int do_sample(const SampleArgs &a, std::ostream &out) {
    require_unit(a.p, "--p");
    require_delta(a.delta, "--delta");
    CircuitIR circuit = parse_circuit_json(read_file(a.circuit_path));
    PipelineOptions opt;
    opt.delta = a.delta;
    opt.delta1 = a.delta1;
    opt.delta2 = a.delta2;
    opt.shots = a.shots;
    opt.seed = a.seed.value_or(default_seed());
    opt.threads = a.threads;
    opt.reuse_subspace = a.reuse_subspace;
    PipelineResult result = run(circuit, parse_case(a.noise_case), a.p, opt);
    std::string buf;
    for (const auto &trace : result.traces) {
        buf += a.emit_traces ? trace_to_json(trace) : trace.outcome;
        buf += '\n';
    }
    out << buf;
    return kExitOk;
}

struct GadgetizeArgs {
    std::string circuit_path;
    std::string out_path;
};

int do_gadgetize(const GadgetizeArgs &a, std::ostream &out) {
    CircuitIR circuit = gadgetize(parse_circuit_json(read_file(a.circuit_path)));
    std::string text = circuit_to_json(circuit);
    if (a.out_path.empty()) {
        out << text;
    } else {
        write_file(a.out_path, text);
    }
    return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Sampling and rank analysis for circuits fed with noisy magic states", "noisymagic"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "noisymagic 0.1.0");

    EnsembleArgs ens;
    auto *ens_cmd = app.add_subcommand("ensemble", "Print the ensemble decomposition of a noisy magic state");
    ens_cmd->add_option("--case", ens.noise_case, "qubit-dephasing, fermion-loss or fermion-dephasing")->required();
    ens_cmd->add_option("--p", ens.p, "Noise rate (transmission for fermion-loss)")->required();
    ens_cmd->add_option("--format", ens.format)->check(CLI::IsMember({"json", "lines"}));

    ThresholdArgs thr;
    auto *thr_cmd = app.add_subcommand("threshold", "Truncation threshold k and its tail bounds");
    thr_cmd->add_option("--t", thr.t, "Number of draws")->required();
    thr_cmd->add_option("--p", thr.p, "Magic probability")->required();
    thr_cmd->add_option("--delta1", thr.delta1, "Tail budget")->required();
    thr_cmd->add_option("--m0", thr.m0, "Also print the TVD bound for this m0");
    thr_cmd->add_option("--delta2", thr.delta2, "Sparsification error for the TVD bound");

    BoundaryArgs bnd;
    auto *bnd_cmd = app.add_subcommand("boundary", "Simulability boundary p* (given --t) or t* (given --p)");
    bnd_cmd->add_option("--case", bnd.noise_case)->required();
    bnd_cmd->add_option("--t", bnd.t);
    bnd_cmd->add_option("--p", bnd.p);
    bnd_cmd->add_option("--delta", bnd.delta, "Target TVD")->capture_default_str();
    bnd_cmd->add_option("--budget", bnd.budget, "Rank budget")->capture_default_str();

    RankCurveArgs rc;
    auto *rc_cmd = app.add_subcommand("rank-curve", "Worst-case rank over a p grid as CSV");
    rc_cmd->add_option("--case", rc.noise_case)->required();
    rc_cmd->add_option("--t", rc.t)->required();
    rc_cmd->add_option("--delta", rc.delta)->capture_default_str();
    rc_cmd->add_option("--p-from", rc.p_from)->required();
    rc_cmd->add_option("--p-to", rc.p_to)->required();
    rc_cmd->add_option("--p-step", rc.p_step)->required();
    rc_cmd->add_option("--out", rc.out_path, "CSV file (stdout when omitted)");
    rc_cmd->add_option("--crossing-bytes", rc.crossing_bytes, "Print where bytes crosses this line");

    SampleArgs smp;
    auto *smp_cmd = app.add_subcommand("sample", "Sample circuit outcomes with noisy injected copies");
    smp_cmd->add_option("--circuit", smp.circuit_path, "Circuit JSON file")->required();
    smp_cmd->add_option("--case", smp.noise_case)->capture_default_str();
    smp_cmd->add_option("--p", smp.p)->required();
    smp_cmd->add_option("--delta", smp.delta)->capture_default_str();
    smp_cmd->add_option("--delta1", smp.delta1, "Override delta / 2");
    smp_cmd->add_option("--delta2", smp.delta2, "Override delta^2 / 4");
    smp_cmd->add_option("--shots", smp.shots)->capture_default_str();
    smp_cmd->add_option("--seed", smp.seed, "Default 1234567 or $NOISYMAGIC_SEED");
    smp_cmd->add_option("--threads", smp.threads, "Worker cap, 0 = all cores")->capture_default_str();
    smp_cmd->add_flag("--emit-traces", smp.emit_traces, "Print JSON traces instead of bitstrings");
    smp_cmd->add_flag("--reuse-subspace", smp.reuse_subspace, "Share one subspace per magic count");

    GadgetizeArgs gad;
    auto *gad_cmd = app.add_subcommand("gadgetize", "Replace T gates by injection gadgets");
    gad_cmd->add_option("--circuit", gad.circuit_path)->required();
    gad_cmd->add_option("--out", gad.out_path);

    std::string suite = "all";
    auto *val_cmd = app.add_subcommand("validate", "Run the built-in consistency checks");
    val_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember(
            {"all", "denseoracle", "stabilizer", "ensembles", "truncation", "sparsify", "pipeline", "analysis"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (ens_cmd->parsed()) {
            return do_ensemble(ens, out);
        }
        if (thr_cmd->parsed()) {
            return do_threshold(thr, out);
        }
        if (bnd_cmd->parsed()) {
            return do_boundary(bnd, out);
        }
        if (rc_cmd->parsed()) {
            return do_rank_curve(rc, out);
        }
        if (smp_cmd->parsed()) {
            return do_sample(smp, out);
        }
        if (gad_cmd->parsed()) {
            return do_gadgetize(gad, out);
        }
        if (val_cmd->parsed()) {
            return run_validation(suite, out) == 0 ? kExitOk : kExitInvalid;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace noisymagic
