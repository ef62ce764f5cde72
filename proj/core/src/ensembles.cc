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

#include "noisymagic/ensembles.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace noisymagic {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi8 = std::numbers::pi / 8;

void check_rate(double p, std::string_view what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

// Rounding at branch edges can leave weights like -1e-17.
double clean_weight(double w) {
    return (w < 0.0 && w > -1e-14) ? 0.0 : w;
}

ResourcelessKet fock_ket(std::string_view occupations) {
    return {"|" + std::string(occupations) + ">", fock_state(occupations)};
}

void add(Ensemble &e, double weight, ResourcelessKet ket) {
    e.entries.push_back({clean_weight(weight), std::move(ket)});
}

void add(Ensemble &e, double weight, MagicForm form) {
    e.entries.push_back({clean_weight(weight), std::move(form)});
}

}  // namespace

std::string_view case_name(NoiseCase c) {
    switch (c) {
        case NoiseCase::kQubitDephasing:
            return "qubit-dephasing";
        case NoiseCase::kFermionLoss:
            return "fermion-loss";
        case NoiseCase::kFermionDephasing:
            return "fermion-dephasing";
    }
    return "?";
}

NoiseCase parse_case(std::string_view name) {
    for (NoiseCase c : {NoiseCase::kQubitDephasing, NoiseCase::kFermionLoss, NoiseCase::kFermionDephasing}) {
        if (case_name(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown case '" + std::string(name) +
                                "' (expected qubit-dephasing, fermion-loss or fermion-dephasing)");
}

double qubit_critical_p() {
    return (1.0 - std::tan(kPi8)) / 2.0;
}

DenseVector dense_ket(const ResourcelessKet &ket) {
    if (const auto *dense = std::get_if<DenseVector>(&ket.state)) {
        return *dense;
    }
    const double r = 1.0 / kSqrt2;
    DenseVector v(2);
    switch (std::get<PauliEigenstate>(ket.state)) {
        case PauliEigenstate::kZero:
            v << 1.0, 0.0;
            break;
        case PauliEigenstate::kOne:
            v << 0.0, 1.0;
            break;
        case PauliEigenstate::kPlus:
            v << r, r;
            break;
        case PauliEigenstate::kMinus:
            v << r, -r;
            break;
    }
    return v;
}

ResourcelessKet qubit_ket(PauliEigenstate s) {
    return {std::string(eigenstate_label(s)), s};
}

DenseVector MagicForm::dense() const {
    return (dense_ket(psi0) + dense_ket(psi1)) / (2.0 * nu);
}

const std::string &EnsembleEntry::label() const {
    if (const auto *ket = std::get_if<ResourcelessKet>(&member)) {
        return ket->label;
    }
    return std::get<MagicForm>(member).label;
}

DenseVector EnsembleEntry::dense() const {
    if (const auto *ket = std::get_if<ResourcelessKet>(&member)) {
        return dense_ket(*ket);
    }
    return std::get<MagicForm>(member).dense();
}

double Ensemble::p_magic() const {
    double total = 0.0;
    for (const auto &e : entries) {
        if (e.is_magic()) {
            total += e.weight;
        }
    }
    return total;
}

std::string Ensemble::provenance() const {
    std::string out(case_name(noise_case));
    if (branch > 0) {
        out += "/branch-" + std::to_string(branch);
    }
    return out;
}

DensityMatrix Ensemble::reconstruct() const {
    DensityMatrix rho;
    for (const auto &e : entries) {
        DenseVector v = e.dense();
        if (rho.size() == 0) {
            rho = DensityMatrix::Zero(v.size(), v.size());
        }
        rho += e.weight * projector(v);
    }
    return rho;
}

DenseVector h_state() {
    DenseVector v(2);
    v << std::cos(kPi8), std::sin(kPi8);
    return v;
}

DenseVector psi4_state() {
    return (fock_state("0011") + fock_state("1100")) / kSqrt2;
}

MagicForm magic_form_qubit() {
    double nu = std::cos(kPi8);
    return {"|H>", nu, qubit_ket(PauliEigenstate::kZero), qubit_ket(PauliEigenstate::kPlus), 2 * nu * nu - 1};
}

MagicForm magic_form_qubit_mirror() {
    double nu = std::cos(kPi8);
    return {"|H'>", nu, qubit_ket(PauliEigenstate::kZero), qubit_ket(PauliEigenstate::kMinus), 2 * nu * nu - 1};
}

MagicForm magic_form_loss(double transmission, int sign) {
    double p = transmission;
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("loss magic form needs transmission in (0, 1]; p = 0 is resourceless");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    double n = 2 * p * p - 2 * p + 1;
    double q = 3 * p * p - 2 * p + 1;
    double m = q / (4 * n);
    double a = (1 - p) / (2 * std::sqrt(n * m));
    double b = p / std::sqrt(2 * n * m);
    std::string tag = sign > 0 ? "phi+" : "phi-";
    ResourcelessKet psi0{tag + "^0", a * fock_state("0000") + sign * b * fock_state("0011")};
    ResourcelessKet psi1{tag + "^1", a * fock_state("0000") + sign * b * fock_state("1100")};
    return {tag, std::sqrt(n / q), std::move(psi0), std::move(psi1), a * a};
}

MagicForm magic_form_dep(double p, int sign) {
    check_rate(p, "dephasing rate");
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    double eta = 1 - 2 * p;
    double eta4 = eta * eta * eta * eta;
    if (eta4 < 1e-24) {
        throw std::invalid_argument("dephasing magic form is undefined at p = 1/2 (entries are resourceless)");
    }
    double c_plus = 0.5 * (std::sqrt(1 + eta4) + std::sqrt(1 - eta4));
    double c_minus = 0.5 * (std::sqrt(1 + eta4) - std::sqrt(1 - eta4));
    double c_first = sign > 0 ? c_plus : c_minus;
    double c_second = sign > 0 ? c_minus : c_plus;
    double d = eta * eta / kSqrt2;
    double e = eta4 + 1;
    DenseVector body = c_first * fock_state("0011") + c_second * fock_state("1100");
    DenseVector corner = d * (fock_state("0000") + fock_state("1111"));
    std::string tag = sign > 0 ? "omega+" : "omega-";
    ResourcelessKet psi0{tag + "^0", (body + corner) / std::sqrt(e)};
    ResourcelessKet psi1{tag + "^1", (body - corner) / std::sqrt(e)};
    return {tag, 1 / std::sqrt(e), std::move(psi0), std::move(psi1), (1 - eta4) / (1 + eta4)};
}

std::array<double, 4> stabilizer_mixture_weights(double p) {
    const double r = 1.0 / kSqrt2;
    std::array<double, 4> w;
    if (p <= 0.5) {
        w = {0.5 + p * r, (1 - kSqrt2) / 2 + p * r, r - kSqrt2 * p, 0.0};
    } else {
        w = {(1 + kSqrt2) / 2 - p * r, 0.5 - p * r, 0.0, kSqrt2 * p - r};
    }
    for (double &x : w) {
        x = clean_weight(x);
    }
    return w;
}

Ensemble qubit_dephasing_ensemble(double p) {
    check_rate(p, "dephasing rate");
    double pc = qubit_critical_p();
    Ensemble e{NoiseCase::kQubitDephasing, p, 0, {}};
    if (p < pc) {
        e.branch = 1;
        add(e, (1 + kSqrt2) * p, qubit_ket(PauliEigenstate::kZero));
        add(e, p, qubit_ket(PauliEigenstate::kPlus));
        add(e, 1 - (2 + kSqrt2) * p, magic_form_qubit());
    } else if (p <= 0.5) {
        e.branch = 2;
        auto w = stabilizer_mixture_weights(p);
        add(e, w[0], qubit_ket(PauliEigenstate::kZero));
        add(e, w[1], qubit_ket(PauliEigenstate::kOne));
        add(e, w[2], qubit_ket(PauliEigenstate::kPlus));
    } else if (p <= 1 - pc) {
        e.branch = 3;
        auto w = stabilizer_mixture_weights(p);
        add(e, w[0], qubit_ket(PauliEigenstate::kZero));
        add(e, w[1], qubit_ket(PauliEigenstate::kOne));
        add(e, w[3], qubit_ket(PauliEigenstate::kMinus));
    } else {
        e.branch = 4;
        add(e, (1 + kSqrt2) * (1 - p), qubit_ket(PauliEigenstate::kZero));
        add(e, 1 - p, qubit_ket(PauliEigenstate::kMinus));
        add(e, 1 - (2 + kSqrt2) * (1 - p), magic_form_qubit_mirror());
    }
    return e;
}

Ensemble fermion_loss_ensemble(double transmission) {
    double p = transmission;
    check_rate(p, "transmission");
    Ensemble e{NoiseCase::kFermionLoss, p, 0, {}};
    double n = 2 * p * p - 2 * p + 1;
    if (p == 0.0) {
        add(e, 0.5, fock_ket("0000"));
        add(e, 0.5, fock_ket("0000"));
        return e;
    }
    add(e, n / 2, magic_form_loss(p, +1));
    add(e, n / 2, magic_form_loss(p, -1));
    double single = p * (1 - p) / 2;
    if (single > 0.0) {
        for (const char *label : {"0001", "0010", "0100", "1000"}) {
            add(e, single, fock_ket(label));
        }
    }
    return e;
}

Ensemble fermion_dephasing_ensemble(double p) {
    check_rate(p, "dephasing rate");
    Ensemble e{NoiseCase::kFermionDephasing, p, 0, {}};
    if (p == 0.5) {
        add(e, 0.5, fock_ket("0011"));
        add(e, 0.5, fock_ket("1100"));
        return e;
    }
    add(e, 0.5, magic_form_dep(p, +1));
    add(e, 0.5, magic_form_dep(p, -1));
    return e;
}

Ensemble make_ensemble(NoiseCase c, double p) {
    switch (c) {
        case NoiseCase::kQubitDephasing:
            return qubit_dephasing_ensemble(p);
        case NoiseCase::kFermionLoss:
            return fermion_loss_ensemble(p);
        case NoiseCase::kFermionDephasing:
            return fermion_dephasing_ensemble(p);
    }
    throw std::invalid_argument("unknown case");
}

DensityMatrix target_density_matrix(NoiseCase c, double p) {
    check_rate(p, "noise parameter");
    switch (c) {
        case NoiseCase::kQubitDephasing:
            return apply_channel(projector(h_state()), dephasing_channel(p));
        case NoiseCase::kFermionLoss:
            return loss_channel_fock(psi4_state(), p);
        case NoiseCase::kFermionDephasing:
            return dephase_all(projector(psi4_state()), p);
    }
    throw std::invalid_argument("unknown case");
}

}  // namespace noisymagic
