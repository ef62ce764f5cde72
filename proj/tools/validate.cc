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


#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "noisymagic/analysis.h"
#include "noisymagic/dense_oracle.h"
#include "noisymagic/ensembles.h"
#include "noisymagic/pipeline.h"
#include "noisymagic/sparsify.h"
#include "noisymagic/stabilizer.h"
#include "noisymagic/truncation.h"

namespace noisymagic {

namespace {

struct Check {
    std::string suite;
    std::string name;
    // Returns an empty string on success, otherwise a short reason.
    std::function<std::string()> run;
};

std::string expect_near(double got, double want, double tol) {
    if (std::abs(got - want) <= tol) {
        return {};
    }
    std::ostringstream s;
    s.precision(17);
    s << "got " << got << ", want " << want << " +- " << tol;
    return s.str();
}

std::string expect_le(double got, double bound) {
    if (got <= bound) {
        return {};
    }
    std::ostringstream s;
    s.precision(17);
    s << got << " exceeds " << bound;
    return s.str();
}

DenseVector dense_of(const StabilizerState &s) {
    size_t q = s.num_qubits();
    DenseVector v(size_t{1} << q);
    for (size_t idx = 0; idx < size_t(v.size()); idx++) {
        BitVec b(q);
        for (size_t w = 0; w < q; w++) {
            b.set(w, (idx >> (q - 1 - w)) & 1);
        }
        v(idx) = s.amplitude(b);
    }
    return v;
}

std::vector<Check> all_checks() {
    std::vector<Check> c;
    const double pc = qubit_critical_p();

    c.push_back({"denseoracle", "dephasing at p=0 is the identity", [] {
                     DensityMatrix h = projector(h_state());
                     return expect_le(frobenius_distance(apply_channel(h, dephasing_channel(0.0)), h), 1e-14);
                 }});
    c.push_back({"denseoracle", "dephasing at p=1/2 removes coherences", [] {
                     DensityMatrix out = apply_channel(projector(h_state()), dephasing_channel(0.5));
                     return expect_le(std::abs(out(0, 1)), 1e-15);
                 }});
    c.push_back({"denseoracle", "loss at p=1 keeps psi4, p=0 leaves vacuum", [] {
                     DensityMatrix psi = projector(psi4_state());
                     double a = frobenius_distance(loss_channel_fock(psi4_state(), 1.0), psi);
                     double b = frobenius_distance(loss_channel_fock(psi4_state(), 0.0), projector(fock_state("0000")));
                     return expect_le(std::max(a, b), 1e-12);
                 }});
    c.push_back({"denseoracle", "tvd of (0.7,0.3) and (0.5,0.5) is 0.2", [] {
                     std::vector<double> p{0.7, 0.3};
                     std::vector<double> q{0.5, 0.5};
                     return expect_near(tvd(p, q), 0.2, 1e-15);
                 }});
    c.push_back({"denseoracle", "(|00> - i|11>)/sqrt2 has theta=pi/4, phi=0", [] {
                     DenseVector v = (fock_state("00") - Complex(0, 1) * fock_state("11")) / std::numbers::sqrt2;
                     auto angles = check_two_mode_even_gaussian(v);
                     return expect_le(std::abs(angles.theta - std::numbers::pi / 4) + std::abs(angles.phi), 1e-12);
                 }});
    c.push_back({"denseoracle", "omega product form at p=0.25", [] {
                     double worst = 1.0;
                     for (int sign : {1, -1}) {
                         for (int j : {0, 1}) {
                             worst = std::min(worst, check_omega_product_form(0.25, sign, j));
                         }
                     }
                     return expect_near(worst, 1.0, 1e-10);
                 }});

    c.push_back({"stabilizer", "<1|+> = 1/sqrt2", [] {
                     StabilizerState one(1);
                     one.x(0);
                     StabilizerState plus(1);
                     plus.h(0);
                     return expect_near(std::abs(inner_product(one, plus) - 1 / std::numbers::sqrt2), 0.0, 1e-15);
                 }});
    c.push_back({"stabilizer", "random 5-wire Clifford amplitudes match the dense oracle", [] {
                     Rng rng = stream_rng(7, 0);
                     double worst = 0.0;
                     for (int trial = 0; trial < 40; trial++) {
                         CircuitIR circ;
                         circ.n = 5;
                         append_random_clifford(circ, 0, 5, 40, rng);
                         StabilizerState s(5);
                         DenseVector v = basis_state(5, 0);
                         for (const auto &op : circ.ops) {
                             s.apply(op.kind, op.wires);
                             apply_op(v, op.kind, op.wires);
                         }
                         worst = std::max(worst, (dense_of(s) - v).cwiseAbs().maxCoeff());
                     }
                     return expect_le(worst, 1e-10);
                 }});

    c.push_back({"ensembles", "reconstructions match the channel outputs", [] {
                     double worst = 0.0;
                     for (NoiseCase nc : {NoiseCase::kQubitDephasing, NoiseCase::kFermionLoss,
                                          NoiseCase::kFermionDephasing}) {
                         for (int i = 0; i <= 20; i++) {
                             double p = i / 20.0;
                             worst = std::max(worst, frobenius_distance(make_ensemble(nc, p).reconstruct(),
                                                                        target_density_matrix(nc, p)));
                         }
                     }
                     return expect_le(worst, 1e-10);
                 }});
    c.push_back({"ensembles", "qubit ensemble at p=0.1 has weights (0.2414214, 0.1, 0.6585786)", [] {
                     Ensemble e = qubit_dephasing_ensemble(0.1);
                     double err = std::abs(e.entries[0].weight - (1 + std::numbers::sqrt2) * 0.1) +
                                  std::abs(e.entries[1].weight - 0.1) +
                                  std::abs(e.entries[2].weight - (1 - (2 + std::numbers::sqrt2) * 0.1));
                     return expect_le(err, 1e-15);
                 }});
    c.push_back({"ensembles", "magic forms have overlap 2 nu^2 - 1", [] {
                     double worst = 0.0;
                     std::vector<MagicForm> forms{magic_form_qubit(), magic_form_loss(0.3, 1), magic_form_loss(0.8, -1),
                                                  magic_form_dep(0.1, 1), magic_form_dep(0.35, -1)};
                     for (const auto &f : forms) {
                         Complex ov = dense_ket(f.psi0).dot(dense_ket(f.psi1));
                         worst = std::max(worst, std::abs(ov - (2 * f.nu * f.nu - 1)));
                         worst = std::max(worst, std::abs(f.dense().norm() - 1));
                     }
                     return expect_le(worst, 1e-10);
                 }});
    c.push_back({"ensembles", "stabilizer-only weights are nonnegative exactly on [p_c, 1 - p_c]", [pc] {
                     auto min_weight = [](double p) {
                         auto w = stabilizer_mixture_weights(p);
                         return std::min(std::min(w[0], w[1]), std::min(w[2], w[3]));
                     };
                     bool ok = min_weight(pc) >= -1e-15 && min_weight(1 - pc) >= -1e-15 &&
                               min_weight(pc - 1e-6) < 0 && min_weight(1 - pc + 1e-6) < 0;
                     return ok ? std::string() : std::string("sign change not at p_c");
                 }});

    c.push_back({"truncation", "D(0.9 || 0.5) = 0.9 ln 1.8 + 0.1 ln 0.2", [] {
                     return expect_near(kl_divergence(0.9, 0.5), 0.9 * std::log(1.8) + 0.1 * std::log(0.2), 1e-15);
                 }});
    c.push_back({"truncation", "threshold t=10 p=0.5 delta1=0.01 gives k=9", [] {
                     return expect_near(double(truncation_threshold(10, 0.5, 0.01).k), 9.0, 0.0);
                 }});
    c.push_back({"truncation", "exact tail <= Chernoff bound and plans meet delta1", [] {
                     double worst = -1.0;
                     for (int64_t t : {1, 7, 50, 200}) {
                         for (int i = 1; i < 20; i++) {
                             double p = i / 20.0;
                             for (int64_t k = int64_t(std::ceil(t * p)); k <= t; k++) {
                                 worst = std::max(worst, exact_binomial_tail(t, k, p) - chernoff_bound(t, k, p));
                             }
                             auto plan = truncation_threshold(t, p, 0.05);
                             worst = std::max(worst, exact_binomial_tail(t, plan.k, p) - 0.05);
                         }
                     }
                     return expect_le(worst, 1e-15);
                 }});

    c.push_back({"sparsify", "Z of span{11} at nu=cos(pi/8) is 1.5", [] {
                     BitVec row = BitVec::from_string("11");
                     return expect_near(zeta(SubspaceZ2::from_rows(2, {row}), nu_qubit()), 1.5, 1e-12);
                 }});
    c.push_back({"sparsify", "m0 = 5 at delta2 = 0.25 and l = 17 at m = 40", [] {
                     auto l = choose_rank_dim(40, nu_qubit(), 0.01);
                     bool ok = m0_threshold(nu_qubit(), 0.25) == 5 && l && *l == 17;
                     return ok ? std::string() : std::string("unexpected m0 or l");
                 }});
    c.push_back({"sparsify", "m=10 delta2=0.05 subspace state has fidelity >= 0.95", [] {
                     Rng rng = stream_rng(11, 0);
                     SparsifyResult r = find_subspace(10, nu_qubit(), 0.05, rng);
                     std::vector<MagicForm> forms(10, magic_form_qubit());
                     DenseVector approx = expand_superposition(r.subspace, forms).dense();
                     DenseVector target = DenseVector::Ones(1);
                     for (int i = 0; i < 10; i++) {
                         target = kron(target, h_state());
                     }
                     double f = fidelity(approx, target);
                     std::string a = expect_near(f, r.fidelity, 1e-9);
                     return a.empty() ? expect_le(0.95, f) : a;
                 }});

    c.push_back({"pipeline", "two T gadgets at p=0.1 match the dense distribution", [] {
                     CircuitIR circ;
                     circ.n = 2;
                     circ.ops.push_back({OpKind::kH, {0}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kT, {0}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kCX, {0, 1}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kT, {1}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kH, {0}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kH, {1}, {}, {}, {}, 0});
                     circ.final_measure = {0, 1};
                     circ.finalize();
                     PipelineOptions opt;
                     opt.shots = 4000;
                     opt.seed = 3;
                     auto res = run(circ, NoiseCase::kQubitDephasing, 0.1, opt);
                     double d = tvd(empirical_distribution(res.traces, 2), dense_reference_distribution(circ, 0.1));
                     return expect_le(d, opt.delta + 3 * std::sqrt(4.0 / 4000));
                 }});
    c.push_back({"pipeline", "output is independent of the thread count", [] {
                     CircuitIR circ;
                     circ.n = 2;
                     circ.ops.push_back({OpKind::kH, {0}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kT, {0}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kH, {0}, {}, {}, {}, 0});
                     circ.ops.push_back({OpKind::kCX, {0, 1}, {}, {}, {}, 0});
                     circ.final_measure = {0, 1};
                     circ.finalize();
                     PipelineOptions opt;
                     opt.shots = 500;
                     opt.threads = 1;
                     auto a = run(circ, NoiseCase::kQubitDephasing, 0.05, opt);
                     opt.threads = 4;
                     auto b = run(circ, NoiseCase::kQubitDephasing, 0.05, opt);
                     for (size_t i = 0; i < a.traces.size(); i++) {
                         if (trace_to_json(a.traces[i]) != trace_to_json(b.traces[i])) {
                             return "shot " + std::to_string(i) + " differs";
                         }
                     }
                     return std::string();
                 }});

    c.push_back({"analysis", "nu_loss(0.5) and nu_dep(0.25)", [] {
                     double e = std::abs(nu_loss(0.5) - std::sqrt(2.0 / 3.0)) + std::abs(nu_dep(0.25) - std::sqrt(16.0 / 17.0));
                     return expect_le(e, 1e-15);
                 }});
    c.push_back({"analysis", "1 TB holds 1.25e11 coefficients", [] {
                     return expect_near(memory_line(1e12), 1.25e11, 0.0);
                 }});
    c.push_back({"analysis", "qubit rank is 1 at the critical point", [pc] {
                     return expect_near(worst_rank(NoiseCase::kQubitDephasing, 100, pc, 0.01).worst_rank, 1.0, 0.0);
                 }});
    c.push_back({"analysis", "qubit and dephasing reports are symmetric about 1/2", [] {
                     for (NoiseCase nc : {NoiseCase::kQubitDephasing, NoiseCase::kFermionDephasing}) {
                         for (double p : {0.05, 0.125, 0.2}) {
                             auto a = worst_rank(nc, 60, p, 0.01);
                             auto b = worst_rank(nc, 60, 1 - p, 0.01);
                             if (a.f != b.f || std::abs(a.log2_rank - b.log2_rank) > 1e-9) {
                                 return std::string("asymmetric at p=") + format_double(p);
                             }
                         }
                     }
                     return std::string();
                 }});
    return c;
}

}  // namespace

int run_validation(std::string_view suite, std::ostream &out) {
    int failures = 0;
    for (const auto &check : all_checks()) {
        if (suite != "all" && suite != check.suite) {
            continue;
        }
        std::string reason;
        try {
            reason = check.run();
        } catch (const std::exception &e) {
            reason = std::string("threw: ") + e.what();
        }
        if (reason.empty()) {
            out << "PASS " << check.suite << ": " << check.name << '\n';
        } else {
            out << "FAIL " << check.suite << ": " << check.name << " (" << reason << ")\n";
            failures++;
        }
    }
    return failures;
}

}  // namespace noisymagic
