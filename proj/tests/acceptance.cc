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


// Acceptance run: one PASS/FAIL line per criterion, exit status = failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.h"
#include "noisymagic/analysis.h"
#include "noisymagic/dense_oracle.h"
#include "noisymagic/ensembles.h"
#include "noisymagic/pipeline.h"
#include "noisymagic/sparsify.h"
#include "noisymagic/truncation.h"

namespace noisymagic {
namespace {

// Criterion 1.
constexpr double kEnsembleGridStep = 0.001;
constexpr double kEnsembleTol = 1e-10;
constexpr double kEnsembleSeconds = 10.0;
// Criterion 2.
constexpr double kBoundaryGridStep = 1e-6;
// Criterion 3.
constexpr int64_t kChernoffMaxT = 200;
constexpr double kChernoffGridStep = 0.01;
constexpr double kChernoffSeconds = 30.0;
// Criterion 4.
constexpr int kSparsifyReps = 100;
constexpr double kSparsifySeconds = 120.0;
// Criterion 5.
constexpr double kDecompTol = 1e-10;
constexpr int kTwoModeTrials = 1000;
// Criterion 6.
constexpr size_t kE2eShots = 20000;
constexpr double kE2eDelta = 0.2;
constexpr size_t kE2eDepth = 30;
constexpr double kE2eSeconds = 300.0;
// Criterion 7.
constexpr double kRankDelta = 0.01;
constexpr double kTerabyte = 1e12;
constexpr double kCrossingTol = 0.02;
constexpr double kCrossingGridStep = 1e-4;
constexpr double kPlateauLog2 = 17.29;
constexpr double kPlateauTol = 0.01;
// Criterion 8.
constexpr double kLossDepRatioTol = 0.15;
constexpr double kQubitLawTol = 0.20;
// Criterion 9.
constexpr size_t kDeterminismShots = 2000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 6) {
    std::ostringstream s;
    s.precision(digits);
    s << x;
    return s.str();
}

int failures = 0;

void report(int id, const std::string &title, bool ok, const std::string &detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << detail << ")"
              << std::endl;
    failures += !ok;
}

template <typename F>
void guarded(int id, const std::string &title, F body) {
    try {
        body();
    } catch (const std::exception &e) {
        report(id, title, false, std::string("threw: ") + e.what());
    }
}

void criterion1() {
    auto start = Clock::now();
    double worst = 0.0;
    std::string where;
    size_t points = 0;
    for (NoiseCase c : {NoiseCase::kQubitDephasing, NoiseCase::kFermionLoss, NoiseCase::kFermionDephasing}) {
        for (double p : p_grid(0.0, 1.0, kEnsembleGridStep)) {
            double d = frobenius_distance(make_ensemble(c, p).reconstruct(), target_density_matrix(c, p));
            points++;
            if (d > worst) {
                worst = d;
                where = std::string(case_name(c)) + " p=" + fmt(p);
            }
        }
    }
    double secs = seconds_since(start);
    report(1, "ensemble reconstruction matches channel output", worst <= kEnsembleTol && secs < kEnsembleSeconds,
           fmt(double(points)) + " points, max Frobenius " + fmt(worst, 3) + " at " + where + " <= " +
               fmt(kEnsembleTol) + ", " + fmt(secs, 3) + " s");
}

void criterion2() {
    auto min_weight = [](double p) {
        auto w = stabilizer_mixture_weights(p);
        return *std::min_element(w.begin(), w.end());
    };
    double lo = qubit_critical_p();
    double hi = 1 - lo;
    bool ok = std::abs(lo - (1 - std::tan(std::numbers::pi / 8)) / 2) < 1e-15 &&
              std::abs(hi - (1 + std::tan(std::numbers::pi / 8)) / 2) < 1e-15;
    ok = ok && min_weight(lo) >= 0.0 && min_weight(hi) >= 0.0;
    ok = ok && min_weight(lo - kBoundaryGridStep) < 0.0 && min_weight(hi + kBoundaryGridStep) < 0.0;
    // Coarse scan: nonnegative exactly inside the interval.
    size_t mismatches = 0;
    for (double p : p_grid(0.0, 1.0, kEnsembleGridStep)) {
        bool inside = p >= lo && p <= hi;
        mismatches += inside != (min_weight(p) >= 0.0);
    }
    // The branch chosen at the edges carries no negative weight either.
    for (double p : {lo, hi}) {
        for (const auto &e : qubit_dephasing_ensemble(p).entries) {
            ok = ok && e.weight >= 0.0;
        }
    }
    ok = ok && mismatches == 0;
    report(2, "all-stabilizer weights nonnegative exactly on [p_c, 1 - p_c]", ok,
           "p_c=" + fmt(lo, 9) + ", 1-p_c=" + fmt(hi, 9) + ", min weight one " + fmt(kBoundaryGridStep) +
               " step outside: " + fmt(min_weight(lo - kBoundaryGridStep), 3) + " / " +
               fmt(min_weight(hi + kBoundaryGridStep), 3) + ", grid mismatches " + std::to_string(mismatches));
}

void criterion3() {
    auto start = Clock::now();
    size_t checked = 0;
    size_t violations = 0;
    size_t plan_violations = 0;
    double worst_ratio = 0.0;
    for (int64_t t = 1; t <= kChernoffMaxT; t++) {
        for (double p : p_grid(kChernoffGridStep, 1 - kChernoffGridStep, kChernoffGridStep)) {
            for (auto k = static_cast<int64_t>(std::ceil(double(t) * p - 1e-9)); k <= t; k++) {
                double tail = exact_binomial_tail(t, k, p);
                double bound = chernoff_bound(t, k, p);
                checked++;
                if (tail > bound * (1 + 1e-12)) {
                    violations++;
                }
                if (bound > 0) {
                    worst_ratio = std::max(worst_ratio, tail / bound);
                }
            }
            for (double d1 : {0.1, 0.01, 0.001}) {
                auto plan = truncation_threshold(t, p, d1);
                plan_violations += exact_binomial_tail(t, plan.k, p) > d1;
            }
        }
    }
    double secs = seconds_since(start);
    report(3, "exact tail <= Chernoff bound and plans meet delta1",
           violations == 0 && plan_violations == 0 && secs < kChernoffSeconds,
           std::to_string(checked) + " (t,k,p) triples, " + std::to_string(violations) + " bound violations, " +
               std::to_string(plan_violations) + " plan violations, max tail/bound " + fmt(worst_ratio, 4) + ", " +
               fmt(secs, 3) + " s");
}

void criterion4() {
    auto start = Clock::now();
    const double nu = nu_qubit();
    Rng rng = stream_rng(kDefaultSeed, 4);
    bool ok = true;
    std::ostringstream detail;
    for (size_t m : {8u, 10u, 12u}) {
        DenseVector target = DenseVector::Ones(1);
        for (size_t i = 0; i < m; i++) {
            target = kron(target, h_state());
        }
        std::vector<MagicForm> forms(m, magic_form_qubit());
        for (double d2 : {0.05, 0.01}) {
            double rank_cap = 4 * std::pow(nu, -2.0 * double(m)) / d2;
            double min_fid = 1.0;
            double max_rank = 0.0;
            size_t sparsified = 0;
            for (int rep = 0; rep < kSparsifyReps; rep++) {
                SparsifyResult r = find_subspace(m, nu, d2, rng);
                double scale = std::ldexp(std::pow(nu, 2.0 * double(m)), static_cast<int>(r.subspace.dim()));
                if (!r.exact) {
                    sparsified++;
                    ok = ok && r.z <= (1 + scale) * (1 + d2 / 2);
                }
                double f = fidelity(expand_superposition(r.subspace, forms).dense(), target);
                min_fid = std::min(min_fid, f);
                max_rank = std::max(max_rank, r.rank);
                ok = ok && f >= 1 - d2 && r.rank <= rank_cap;
            }
            detail << "m=" << m << " d2=" << d2 << ": min F " << fmt(min_fid, 5) << ", rank " << max_rank << " <= "
                   << fmt(rank_cap, 5) << ", sparsified " << sparsified << "/" << kSparsifyReps << "; ";
        }
    }
    double secs = seconds_since(start);
    detail << fmt(secs, 3) << " s";
    report(4, "random-subspace sparsification guarantee", ok && secs < kSparsifySeconds, detail.str());
}

void criterion5() {
    double worst_phi = 1.0;
    double worst_pair = 1.0;
    for (double p : p_grid(0.01, 1.0, 0.01)) {
        double n = 2 * p * p - 2 * p + 1;
        for (int sign : {1, -1}) {
            MagicForm f = magic_form_loss(p, sign);
            DenseVector phi = ((1 - p) * fock_state("0000") +
                               sign * p * (fock_state("0011") + fock_state("1100")) / std::numbers::sqrt2) /
                              std::sqrt(n);
            worst_phi = std::min(worst_phi, fidelity(f.dense(), phi));
            // psi^0 = |00> (a|00> + b|11>): the second pair is a two-mode even state.
            DenseVector pair(4);
            pair << dense_ket(f.psi0)(0), 0.0, 0.0, dense_ket(f.psi0)(3);
            pair.normalize();
            auto angles = check_two_mode_even_gaussian(pair);
            worst_pair = std::min(worst_pair, fidelity(two_mode_even_state(angles.theta, angles.phi), pair));
        }
    }
    double worst_omega = 1.0;
    for (double p : {0.0, 0.1, 0.25, 0.4}) {
        for (int sign : {1, -1}) {
            for (int j : {0, 1}) {
                worst_omega = std::min(worst_omega, check_omega_product_form(p, sign, j));
            }
        }
    }
    std::mt19937_64 rng(kDefaultSeed);
    std::normal_distribution<double> g;
    double worst_round = 1.0;
    for (int trial = 0; trial < kTwoModeTrials; trial++) {
        DenseVector v = Complex(g(rng), g(rng)) * fock_state("00") + Complex(g(rng), g(rng)) * fock_state("11");
        v.normalize();
        auto angles = check_two_mode_even_gaussian(v);
        worst_round = std::min(worst_round, fidelity(two_mode_even_state(angles.theta, angles.phi), v));
    }
    bool ok = worst_phi >= 1 - kDecompTol && worst_pair >= 1 - kDecompTol && worst_omega >= 1 - kDecompTol &&
              worst_round >= 1 - kDecompTol;
    report(5, "fermionic decompositions", ok,
           "1-F: phi " + fmt(1 - worst_phi, 3) + ", pair factors " + fmt(1 - worst_pair, 3) + ", omega product " +
               fmt(1 - worst_omega, 3) + ", " + std::to_string(kTwoModeTrials) + " two-mode round trips " +
               fmt(1 - worst_round, 3) + "; all <= " + fmt(kDecompTol));
}

CircuitIR e2e_circuit(size_t t_gates) {
    CircuitIR c;
    c.n = 4;
    Rng rng = stream_rng(kDefaultSeed, 6);
    for (size_t w = 0; w < 4; w++) {
        c.ops.push_back({OpKind::kH, {w}, {}, {}, {}, 0});
        if (w < t_gates) {
            c.ops.push_back({OpKind::kT, {w}, {}, {}, {}, 0});
        }
    }
    append_random_clifford(c, 0, 4, kE2eDepth, rng);
    c.final_measure = {0, 1, 2, 3};
    c.finalize();
    return gadgetize(c);
}

size_t worker_count() {
    return std::max(1u, std::thread::hardware_concurrency());
}

void criterion6() {
    auto start = Clock::now();
    CircuitIR circuit = e2e_circuit(4);
    double sigma = std::sqrt(16.0 / double(kE2eShots));
    PipelineOptions opt;
    opt.delta = kE2eDelta;
    opt.shots = kE2eShots;
    opt.threads = worker_count();
    bool ok = circuit.t == 4 && circuit.records.size() == 4;
    std::ostringstream detail;
    for (double p : {0.02, 0.1, 0.25}) {
        auto res = run(circuit, NoiseCase::kQubitDephasing, p, opt);
        double d = tvd(empirical_distribution(res.traces, 4), dense_reference_distribution(circuit, p));
        size_t max_chi = 0;
        for (const auto &tr : res.traces) {
            max_chi = std::max(max_chi, tr.chi);
        }
        ok = ok && d <= kE2eDelta + 3 * sigma;
        detail << "p=" << p << " TVD " << fmt(d, 4) << " (max chi " << max_chi << "); ";
    }
    CircuitIR control = e2e_circuit(0);
    opt.seed = kDefaultSeed + 1;
    auto res = run(control, NoiseCase::kQubitDephasing, 0.1, opt);
    double d0 = tvd(empirical_distribution(res.traces, 4), dense_reference_distribution(control, 0.1));
    ok = ok && d0 <= 3 * sigma;
    double secs = seconds_since(start);
    detail << "t=0 control TVD " << fmt(d0, 4) << " <= " << fmt(3 * sigma, 4) << "; bound " << fmt(kE2eDelta + 3 * sigma, 4)
           << ", " << fmt(secs, 4) << " s";
    report(6, "end-to-end TVD against the dense oracle", ok && secs < kE2eSeconds, detail.str());
}

void criterion7() {
    struct Quote {
        NoiseCase c;
        int64_t t;
        double p;
        double from;
        double to;
    };
    const double pc = qubit_critical_p();
    std::vector<Quote> quotes{{NoiseCase::kQubitDephasing, 100, 0.0809, 0.0, pc},
                              {NoiseCase::kQubitDephasing, 200, 0.1993, 0.0, pc},
                              {NoiseCase::kFermionLoss, 40, 0.8320, 0.0, 1.0},
                              {NoiseCase::kFermionLoss, 60, 0.4402, 0.0, 1.0},
                              {NoiseCase::kFermionDephasing, 40, 0.1015, 0.0, 0.5},
                              {NoiseCase::kFermionDephasing, 60, 0.1453, 0.0, 0.5}};
    double line = memory_line(kTerabyte);
    bool ok = line == 1.25e11;
    std::ostringstream detail;
    detail << "1 TB = " << line << " coefficients; ";
    for (const auto &q : quotes) {
        auto rows = rank_curve(q.c, q.t, kRankDelta, p_grid(q.from, q.to, kCrossingGridStep));
        auto crossings = find_crossings(rows, kTerabyte);
        const Crossing *best = nullptr;
        for (const auto &x : crossings) {
            if (!best || std::abs(x.p_after - q.p) < std::abs(best->p_after - q.p)) {
                best = &x;
            }
        }
        bool hit = best && std::abs(best->p_after - q.p) <= kCrossingTol;
        ok = ok && hit;
        detail << case_name(q.c) << " t=" << q.t << ": ";
        if (best) {
            detail << fmt(best->p_after, 5) << " in [" << fmt(best->p_before, 5) << ", " << fmt(best->p_after, 5)
                   << "] vs " << q.p;
        } else {
            detail << "no crossing vs " << q.p;
        }
        detail << "; ";
    }
    RankReport plateau = worst_rank(NoiseCase::kFermionLoss, 100, 0.0, kRankDelta);
    double want = 16 / (kRankDelta * kRankDelta);
    bool plateau_ok = std::abs(plateau.log2_rank - kPlateauLog2) <= kPlateauTol &&
                      std::abs(plateau.worst_rank - want) <= 1.0;
    RankReport edge = worst_rank(NoiseCase::kQubitDephasing, 100, pc, kRankDelta);
    ok = ok && plateau_ok && edge.worst_rank == 1.0;
    detail << "plateau 2^" << fmt(plateau.log2_rank, 5) << " = " << plateau.worst_rank << ", qubit rank at p_c "
           << edge.worst_rank;
    report(7, "rank curves, memory line and crossings", ok, detail.str());
}

void criterion8() {
    const double budget = kDefaultBudget;
    const double delta = kRankDelta;
    const double pc = qubit_critical_p();
    std::vector<int64_t> ts{1000, 4000, 16000};
    std::ostringstream detail;
    bool ok = true;

    std::vector<double> loss;
    std::vector<double> dep;
    std::vector<double> qubit;
    for (int64_t t : ts) {
        loss.push_back(boundary_p(NoiseCase::kFermionLoss, t, delta, budget));
        dep.push_back(0.5 - boundary_p(NoiseCase::kFermionDephasing, t, delta, budget));
        qubit.push_back(pc - boundary_p(NoiseCase::kQubitDephasing, t, delta, budget));
    }
    auto within = [](double ratio, double want, double tol) { return std::abs(ratio / want - 1) <= tol; };
    for (size_t i = 0; i + 1 < ts.size(); i++) {
        double r = loss[i] / loss[i + 1];
        ok = ok && within(r, 2.0, kLossDepRatioTol);
        detail << "loss p*(" << ts[i] << ")/p*(" << ts[i + 1] << ") = " << fmt(r, 4) << "; ";
    }
    double dr = dep[0] / dep[2];
    ok = ok && within(dr, 2.0, kLossDepRatioTol);
    detail << "dephasing (1/2-p*) ratio t=1000 vs 16000 = " << fmt(dr, 4) << "; ";
    for (size_t i = 0; i + 1 < ts.size(); i++) {
        double r = qubit[i] / qubit[i + 1];
        ok = ok && within(r, 4.0, kQubitLawTol);
        detail << "qubit (p_c-p*) ratio " << fmt(r, 4) << "; ";
    }
    std::vector<double> law;
    for (double p : {0.1, 0.15, 0.2, 0.25, 0.29}) {
        int64_t t = boundary_t(NoiseCase::kQubitDephasing, p, delta, budget);
        law.push_back(double(t) * (1 - (2 + std::numbers::sqrt2) * p));
    }
    double spread = *std::max_element(law.begin(), law.end()) / *std::min_element(law.begin(), law.end());
    ok = ok && spread <= 1 + kQubitLawTol;
    detail << "qubit t*(1-(2+sqrt2)p) from " << fmt(law.front(), 5) << " to " << fmt(law.back(), 5) << ", spread "
           << fmt(spread, 4) << "; ";
    for (double p : {0.1, 0.05}) {
        double r = double(boundary_t(NoiseCase::kFermionLoss, p / 2, delta, budget)) /
                   double(boundary_t(NoiseCase::kFermionLoss, p, delta, budget));
        ok = ok && within(r, 4.0, kLossDepRatioTol);
        detail << "loss t*(" << p / 2 << ")/t*(" << p << ") = " << fmt(r, 4) << "; ";
    }
    detail << "budget 2^40";
    report(8, "scaling of budgeted boundaries", ok, detail.str());
}

void criterion9() {
    CircuitIR circuit = e2e_circuit(4);
    PipelineOptions opt;
    opt.delta = kE2eDelta;
    opt.shots = kDeterminismShots;
    auto serialize = [](const PipelineResult &r) {
        std::string s;
        for (const auto &t : r.traces) {
            s += trace_to_json(t);
            s += '\n';
        }
        return s;
    };
    opt.threads = 1;
    std::string one = serialize(run(circuit, NoiseCase::kQubitDephasing, 0.05, opt));
    opt.threads = 8;
    std::string eight = serialize(run(circuit, NoiseCase::kQubitDephasing, 0.05, opt));

    auto path = std::filesystem::temp_directory_path() / "noisymagic_acceptance_circuit.json";
    std::ofstream(path) << circuit_to_json(circuit);
    auto cli_out = [&](const char *threads) {
        std::vector<std::string> args{"sample",  "--circuit", path.string(), "--case", "qubit-dephasing",
                                      "--p",     "0.05",      "--delta",     "0.2",    "--shots",
                                      "2000",    "--seed",    "1234567",     "--threads", threads};
        std::ostringstream out;
        std::ostringstream err;
        int code = run_cli(args, out, err);
        return code == 0 ? out.str() : "exit " + std::to_string(code) + ": " + err.str();
    };
    std::string cli1 = cli_out("1");
    std::string cli8 = cli_out("8");
    std::filesystem::remove(path);
    bool ok = one == eight && cli1 == cli8 && !one.empty() && cli1.size() == kDeterminismShots * 5;
    report(9, "sample output identical for 1 and 8 threads", ok,
           std::to_string(kDeterminismShots) + " shots, traces " + std::to_string(one.size()) + " bytes " +
               (one == eight ? "identical" : "differ") + ", CLI output " + std::to_string(cli1.size()) + " bytes " +
               (cli1 == cli8 ? "identical" : "differ"));
}

}  // namespace
}  // namespace noisymagic

int main() {
    using namespace noisymagic;
    guarded(1, "ensemble reconstruction", criterion1);
    guarded(2, "all-stabilizer boundary", criterion2);
    guarded(3, "Chernoff tail bounds", criterion3);
    guarded(4, "sparsification guarantee", criterion4);
    guarded(5, "fermionic decompositions", criterion5);
    guarded(6, "end-to-end TVD", criterion6);
    guarded(7, "rank curves", criterion7);
    guarded(8, "boundary scaling", criterion8);
    guarded(9, "determinism", criterion9);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
