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

#include "noisymagic/dense_oracle.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace noisymagic {

namespace {

constexpr Complex kI{0.0, 1.0};

size_t wire_count(size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return std::countr_zero(dim);
}

// Applies op to one vector stored contiguously at data.
void apply_op_raw(Complex *data, size_t dim, OpKind kind, std::span<const size_t> wires) {
    size_t q = wire_count(dim);
    for (size_t w : wires) {
        if (w >= q) {
            throw std::invalid_argument("wire " + std::to_string(w) + " out of range");
        }
    }
    auto mask_of = [q](size_t w) { return size_t{1} << (q - 1 - w); };
    switch (kind) {
        case OpKind::kCX: {
            size_t c = mask_of(wires[0]), t = mask_of(wires[1]);
            for (size_t i = 0; i < dim; i++) {
                if ((i & c) && !(i & t)) {
                    std::swap(data[i], data[i | t]);
                }
            }
            return;
        }
        case OpKind::kCZ: {
            size_t a = mask_of(wires[0]), b = mask_of(wires[1]);
            for (size_t i = 0; i < dim; i++) {
                if ((i & a) && (i & b)) {
                    data[i] = -data[i];
                }
            }
            return;
        }
        case OpKind::kSwap: {
            size_t a = mask_of(wires[0]), b = mask_of(wires[1]);
            for (size_t i = 0; i < dim; i++) {
                if ((i & a) && !(i & b)) {
                    std::swap(data[i], data[(i ^ a) | b]);
                }
            }
            return;
        }
        case OpKind::kM:
            throw std::invalid_argument("measurement is not a unitary op");
        default:
            break;
    }
    Eigen::Matrix2cd u = single_wire_unitary(kind);
    size_t m = mask_of(wires[0]);
    for (size_t i = 0; i < dim; i++) {
        if (i & m) {
            continue;
        }
        Complex a0 = data[i], a1 = data[i | m];
        data[i] = u(0, 0) * a0 + u(0, 1) * a1;
        data[i | m] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void apply_op_columns(Eigen::MatrixXcd &mat, OpKind kind, std::span<const size_t> wires) {
    for (Eigen::Index c = 0; c < mat.cols(); c++) {
        apply_op_raw(mat.data() + c * mat.rows(), static_cast<size_t>(mat.rows()), kind, wires);
    }
}

}  // namespace

size_t KrausChannel::dim() const {
    if (operators.empty()) {
        throw std::invalid_argument("channel has no Kraus operators");
    }
    return static_cast<size_t>(operators[0].rows());
}

double KrausChannel::completeness_error() const {
    size_t d = dim();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &k : operators) {
        acc += k.adjoint() * k;
    }
    acc -= Eigen::MatrixXcd::Identity(d, d);
    return acc.cwiseAbs().maxCoeff();
}

DenseVector basis_state(size_t num_wires, size_t index) {
    DenseVector v = DenseVector::Zero(Eigen::Index{1} << num_wires);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

DenseVector fock_state(std::string_view occupations) {
    size_t index = 0;
    for (char c : occupations) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("Fock label must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<size_t>(c == '1');
    }
    return basis_state(occupations.size(), index);
}

DenseVector kron(const DenseVector &a, const DenseVector &b) {
    DenseVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

DensityMatrix projector(const DenseVector &v) {
    return v * v.adjoint();
}

double fidelity(const DenseVector &a, const DenseVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    return std::norm(a.dot(b));
}

double frobenius_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_distance: dimension mismatch");
    }
    return (a - b).norm();
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &channel) {
    if (rho.rows() != rho.cols() || static_cast<size_t>(rho.rows()) != channel.dim()) {
        throw std::invalid_argument("apply_channel: dimension mismatch");
    }
    DensityMatrix out = DensityMatrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : channel.operators) {
        out += k * rho * k.adjoint();
    }
    return out;
}

KrausChannel embed_channel(const KrausChannel &local, size_t wire, size_t num_wires) {
    if (local.dim() != 2 || wire >= num_wires) {
        throw std::invalid_argument("embed_channel expects a single-wire channel and a wire in range");
    }
    Eigen::Index left = Eigen::Index{1} << wire;
    Eigen::Index right = Eigen::Index{1} << (num_wires - 1 - wire);
    KrausChannel out;
    for (const auto &k : local.operators) {
        Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(left * 2 * right, left * 2 * right);
        for (Eigen::Index l = 0; l < left; l++) {
            for (Eigen::Index a = 0; a < 2; a++) {
                for (Eigen::Index b = 0; b < 2; b++) {
                    for (Eigen::Index r = 0; r < right; r++) {
                        big((l * 2 + a) * right + r, (l * 2 + b) * right + r) = k(a, b);
                    }
                }
            }
        }
        out.operators.push_back(std::move(big));
    }
    return out;
}

KrausChannel dephasing_channel(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("dephasing rate must lie in [0, 1]");
    }
    Eigen::Matrix2cd k0 = std::sqrt(1.0 - p) * Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
    k1(0, 0) = std::sqrt(p);
    k1(1, 1) = -std::sqrt(p);
    return KrausChannel{{k0, k1}};
}

DensityMatrix dephase_all(const DensityMatrix &rho, double p) {
    size_t q = wire_count(static_cast<size_t>(rho.rows()));
    KrausChannel local = dephasing_channel(p);
    DensityMatrix out = rho;
    for (size_t w = 0; w < q; w++) {
        out = apply_channel(out, embed_channel(local, w, q));
    }
    return out;
}

Eigen::MatrixXcd annihilation(size_t mode, size_t num_modes) {
    size_t dim = size_t{1} << num_modes;
    size_t bit = size_t{1} << (num_modes - 1 - mode);
    size_t before = ~((bit << 1) - 1) & (dim - 1);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        if (i & bit) {
            double sign = (std::popcount(i & before) & 1) ? -1.0 : 1.0;
            a(i ^ bit, i) = sign;
        }
    }
    return a;
}

DensityMatrix loss_channel_fock(const DenseVector &state, double transmission) {
    if (!(transmission >= 0.0 && transmission <= 1.0)) {
        throw std::invalid_argument("transmission must lie in [0, 1]");
    }
    size_t modes = wire_count(static_cast<size_t>(state.size()));
    size_t total = 2 * modes;
    size_t dim = size_t{1} << total;
    double c = std::sqrt(transmission);
    double s = std::sqrt(1.0 - transmission);

    // Joint index = (system bits) << modes | (environment bits), all
    // environment modes start empty.
    DenseVector joint = DenseVector::Zero(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < state.size(); i++) {
        joint(i << modes) = state(i);
    }
    auto mask_of = [total](size_t mode) { return size_t{1} << (total - 1 - mode); };
    for (size_t j = 0; j < modes; j++) {
        size_t sys = mask_of(j);
        size_t env = mask_of(modes + j);
        // Modes strictly between j and its environment partner.
        size_t between = (sys - 1) & ~((env << 1) - 1);
        DenseVector next = joint;
        for (size_t i = 0; i < dim; i++) {
            if ((i & sys) && !(i & env)) {
                Complex amp = joint(static_cast<Eigen::Index>(i));
                double sign = (std::popcount(i & between) & 1) ? -1.0 : 1.0;
                size_t moved = (i ^ sys) | env;
                next(static_cast<Eigen::Index>(i)) = c * amp;
                next(static_cast<Eigen::Index>(moved)) += -kI * sign * s * amp;
            }
        }
        joint = std::move(next);
    }
    size_t sys_dim = size_t{1} << modes;
    DensityMatrix rho = DensityMatrix::Zero(sys_dim, sys_dim);
    for (size_t e = 0; e < sys_dim; e++) {
        DenseVector slice(sys_dim);
        for (size_t a = 0; a < sys_dim; a++) {
            slice(a) = joint(static_cast<Eigen::Index>((a << modes) | e));
        }
        rho += slice * slice.adjoint();
    }
    return rho;
}

double tvd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("tvd: length mismatch");
    }
    double total = 0.0;
    for (size_t i = 0; i < p.size(); i++) {
        total += std::abs(p[i] - q[i]);
    }
    return 0.5 * total;
}

DenseVector two_mode_even_state(double theta, double phi) {
    Eigen::MatrixXcd a1 = annihilation(0, 2);
    Eigen::MatrixXcd a2 = annihilation(1, 2);
    Eigen::MatrixXcd pair = a1 * a2 + a2.adjoint() * a1.adjoint();
    Eigen::MatrixXcd u = (kI * theta * pair).exp();
    Eigen::MatrixXcd r = (kI * phi * a1.adjoint() * a1).exp();
    return r * u * basis_state(2, 0);
}

TwoModeAngles check_two_mode_even_gaussian(const DenseVector &state) {
    if (state.size() != 4) {
        throw std::invalid_argument("two-mode state must have dimension 4");
    }
    double norm = state.norm();
    if (norm < 1e-12) {
        throw std::invalid_argument("two-mode state is zero");
    }
    if (std::abs(state(1)) > 1e-12 * norm || std::abs(state(2)) > 1e-12 * norm) {
        throw std::invalid_argument("two-mode state has support outside the even sector");
    }
    Complex alpha = state(0) / norm;
    Complex beta = state(3) / norm;
    TwoModeAngles angles{std::atan2(std::abs(beta), std::abs(alpha)), 0.0};
    if (std::abs(alpha) > 1e-14 && std::abs(beta) > 1e-14) {
        angles.phi = std::remainder(std::arg(beta) - std::arg(alpha) + std::numbers::pi / 2, 2 * std::numbers::pi);
    }
    double f = fidelity(two_mode_even_state(angles.theta, angles.phi), state / norm);
    if (f < 1.0 - 1e-10) {
        throw std::invalid_argument("two-mode reconstruction failed, fidelity " + std::to_string(f));
    }
    return angles;
}

double check_omega_product_form(double p, int sign, int j) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("dephasing rate must lie in [0, 1]");
    }
    if ((sign != 1 && sign != -1) || (j != 0 && j != 1)) {
        throw std::invalid_argument("sign must be +1/-1 and j must be 0/1");
    }
    double eta = 1.0 - 2.0 * p;
    double eta2 = eta * eta;
    if (eta2 < 1e-12) {
        throw std::invalid_argument("product form is singular at p = 1/2");
    }
    double eta4 = eta2 * eta2;
    double c_plus = 0.5 * (std::sqrt(1 + eta4) + std::sqrt(1 - eta4));
    double c_minus = 0.5 * (std::sqrt(1 + eta4) - std::sqrt(1 - eta4));
    double d = eta2 / std::numbers::sqrt2;
    double e = eta4 + 1;
    double parity = j ? -1.0 : 1.0;
    double c_first = sign > 0 ? c_plus : c_minus;
    double c_second = sign > 0 ? c_minus : c_plus;
    DenseVector omega = (c_first * fock_state("0011") + c_second * fock_state("1100") +
                         parity * d * (fock_state("0000") + fock_state("1111"))) /
                        std::sqrt(e);

    double xi_plus = (std::sqrt(1 + eta4) + std::sqrt(1 - eta4)) / (std::numbers::sqrt2 * eta2);
    double xi_minus = (std::sqrt(1 + eta4) - std::sqrt(1 - eta4)) / (std::numbers::sqrt2 * eta2);
    double xi_s = sign > 0 ? xi_plus : xi_minus;
    double xi_o = sign > 0 ? xi_minus : xi_plus;
    double alpha = 1.0 / std::sqrt(1 + xi_o * xi_o);
    double beta = parity * xi_o * alpha;
    double gamma = parity / std::sqrt(1 + xi_s * xi_s);
    double kappa = xi_s / std::sqrt(1 + xi_s * xi_s);
    DenseVector first = alpha * fock_state("00") + beta * fock_state("11");
    DenseVector second = gamma * fock_state("00") + kappa * fock_state("11");
    return fidelity(omega, kron(first, second));
}

Eigen::Matrix2cd single_wire_unitary(OpKind kind) {
    const double r = 1.0 / std::numbers::sqrt2;
    Eigen::Matrix2cd u;
    switch (kind) {
        case OpKind::kX:
            u << 0, 1, 1, 0;
            break;
        case OpKind::kY:
            u << 0, -kI, kI, 0;
            break;
        case OpKind::kZ:
            u << 1, 0, 0, -1;
            break;
        case OpKind::kH:
            u << r, r, r, -r;
            break;
        case OpKind::kS:
            u << 1, 0, 0, kI;
            break;
        case OpKind::kSdg:
            u << 1, 0, 0, -kI;
            break;
        case OpKind::kT:
            u << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
            break;
        case OpKind::kTdg:
            u << 1, 0, 0, std::polar(1.0, -std::numbers::pi / 4);
            break;
        default:
            throw std::invalid_argument("not a single-wire unitary: " + std::string(op_name(kind)));
    }
    return u;
}

void apply_op(DenseVector &state, OpKind kind, std::span<const size_t> wires) {
    apply_op_raw(state.data(), static_cast<size_t>(state.size()), kind, wires);
}

void apply_op(DensityMatrix &rho, OpKind kind, std::span<const size_t> wires) {
    apply_op_columns(rho, kind, wires);
    Eigen::MatrixXcd adj = rho.adjoint();
    apply_op_columns(adj, kind, wires);
    rho = adj.adjoint();
}

std::vector<double> dense_output_distribution(const CircuitIR &circuit, std::span<const DensityMatrix> wire_inputs) {
    size_t q = circuit.num_wires();
    if (wire_inputs.size() != q) {
        throw std::invalid_argument("dense_output_distribution: need one input per wire");
    }
    if (q > 14) {
        throw std::invalid_argument("dense oracle is limited to 14 wires");
    }
    DensityMatrix rho = DensityMatrix::Ones(1, 1);
    for (const auto &w : wire_inputs) {
        if (w.rows() != 2 || w.cols() != 2) {
            throw std::invalid_argument("wire inputs must be 2x2");
        }
        rho = Eigen::kroneckerProduct(rho, w).eval();
    }
    struct Branch {
        DensityMatrix rho;
        std::vector<bool> record;
    };
    std::vector<Branch> branches;
    branches.push_back({std::move(rho), std::vector<bool>(circuit.records.size(), false)});

    auto project = [q](DensityMatrix &m, size_t wire, bool outcome) {
        size_t mask = size_t{1} << (q - 1 - wire);
        for (Eigen::Index i = 0; i < m.rows(); i++) {
            if (bool((static_cast<size_t>(i) & mask) != 0) != outcome) {
                m.row(i).setZero();
                m.col(i).setZero();
            }
        }
    };

    for (const auto &op : circuit.ops) {
        if (op.kind == OpKind::kM) {
            std::vector<Branch> next;
            for (auto &b : branches) {
                for (bool outcome : {false, true}) {
                    Branch child{b.rho, b.record};
                    project(child.rho, op.wires[0], outcome);
                    if (child.rho.trace().real() > 1e-15) {
                        child.record[op.record_slot] = outcome;
                        next.push_back(std::move(child));
                    }
                }
            }
            branches = std::move(next);
            continue;
        }
        for (auto &b : branches) {
            bool parity = false;
            for (size_t slot : op.condition_slots) {
                parity ^= b.record[slot];
            }
            bool fire = op.condition_slots.empty() || parity;
            if (fire) {
                apply_op(b.rho, op.kind, op.wires);
            }
        }
    }

    size_t k = circuit.final_measure.size();
    std::vector<double> dist(size_t{1} << k, 0.0);
    for (const auto &b : branches) {
        for (Eigen::Index i = 0; i < b.rho.rows(); i++) {
            size_t out = 0;
            for (size_t w : circuit.final_measure) {
                out = (out << 1) | ((static_cast<size_t>(i) >> (q - 1 - w)) & 1);
            }
            dist[out] += b.rho(i, i).real();
        }
    }
    return dist;
}

}  // namespace noisymagic
