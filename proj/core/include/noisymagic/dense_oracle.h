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

#ifndef NOISYMAGIC_DENSE_ORACLE_H
#define NOISYMAGIC_DENSE_ORACLE_H

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "noisymagic/circuit.h"

// Brute-force reference linear algebra. Wire / mode 0 is the most significant
// bit of a basis index, so kron(a, b) places a on the leading wires and a
// Fock label "0011" maps to index 3.

namespace noisymagic {

using Complex = std::complex<double>;
using DenseVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

struct KrausChannel {
    std::vector<Eigen::MatrixXcd> operators;

    size_t dim() const;
    /// Largest entry of |sum K^dag K - I|.
    double completeness_error() const;
};

DenseVector basis_state(size_t num_wires, size_t index);
/// "0011" -> |0011> on four wires.
DenseVector fock_state(std::string_view occupations);
DenseVector kron(const DenseVector &a, const DenseVector &b);
DensityMatrix projector(const DenseVector &v);
/// |<a|b>|^2.
double fidelity(const DenseVector &a, const DenseVector &b);
double frobenius_distance(const DensityMatrix &a, const DensityMatrix &b);

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &channel);
/// Lifts a channel on one wire to num_wires wires.
KrausChannel embed_channel(const KrausChannel &local, size_t wire, size_t num_wires);
/// {sqrt(1-p) I, sqrt(p) Z}.
KrausChannel dephasing_channel(double p);
/// Applies dephasing_channel(p) to every wire (qubit) or mode (Z = (-1)^n).
DensityMatrix dephase_all(const DensityMatrix &rho, double p);

/// Particle loss on every mode: each mode meets a fresh vacuum environment
/// mode in a beamsplitter exp(-i lambda (a^dag e + e^dag a)) with
/// cos^2 lambda = p, and the environment is traced out. Signs follow the
/// Jordan-Wigner order (system modes, then environment modes).
DensityMatrix loss_channel_fock(const DenseVector &state, double transmission);

/// Jordan-Wigner annihilation operator for `mode` among num_modes modes.
Eigen::MatrixXcd annihilation(size_t mode, size_t num_modes);

double tvd(std::span<const double> p, std::span<const double> q);

struct TwoModeAngles {
    double theta;
    double phi;
};
/// R_phi U_theta |00> = cos(theta)|00> - i e^{i phi} sin(theta)|11>, built
/// from matrix exponentials of the two-mode quadratic generators.
DenseVector two_mode_even_state(double theta, double phi);
/// Recovers (theta, phi) for a state supported on {|00>, |11>} and verifies
/// the reconstruction to fidelity 1 - 1e-10. Throws std::invalid_argument for
/// odd support or a failed reconstruction.
TwoModeAngles check_two_mode_even_gaussian(const DenseVector &state);

/// Fidelity between omega_sign^j written as a sum of four Fock components and
/// its two-factor product form. sign is +1 or -1, j is 0 or 1.
double check_omega_product_form(double p, int sign, int j);

/// Single-wire unitary for a Clifford+T op.
Eigen::Matrix2cd single_wire_unitary(OpKind kind);
/// Applies a non-measurement op to a state vector on num_wires wires.
void apply_op(DenseVector &state, OpKind kind, std::span<const size_t> wires);
/// U rho U^dag for a non-measurement op.
void apply_op(DensityMatrix &rho, OpKind kind, std::span<const size_t> wires);

/// Exact distribution over final_measure outcomes (index bit order follows
/// final_measure, first entry most significant). wire_inputs holds one 2x2
/// density matrix per wire.
std::vector<double> dense_output_distribution(const CircuitIR &circuit, std::span<const DensityMatrix> wire_inputs);

}  // namespace noisymagic

#endif
