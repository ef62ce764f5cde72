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

#ifndef NOISYMAGIC_ENSEMBLES_H
#define NOISYMAGIC_ENSEMBLES_H

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "noisymagic/dense_oracle.h"
#include "noisymagic/stabilizer.h"

namespace noisymagic {

enum class NoiseCase { kQubitDephasing, kFermionLoss, kFermionDephasing };

std::string_view case_name(NoiseCase c);
/// Accepts "qubit-dephasing", "fermion-loss", "fermion-dephasing".
NoiseCase parse_case(std::string_view name);

/// (1 - tan(pi/8)) / 2: below it the qubit ensemble needs |H>.
double qubit_critical_p();

/// A free (stabilizer or Gaussian) pure state. Qubit kets are Pauli
/// eigenstates; fermionic kets are labeled Fock-space vectors.
struct ResourcelessKet {
    std::string label;
    std::variant<PauliEigenstate, DenseVector> state;

    bool is_qubit() const {
        return std::holds_alternative<PauliEigenstate>(state);
    }
};

DenseVector dense_ket(const ResourcelessKet &ket);
ResourcelessKet qubit_ket(PauliEigenstate s);

/// |psi> = (|psi0> + |psi1>) / (2 nu) with <psi0|psi1> = 2 nu^2 - 1.
struct MagicForm {
    std::string label;
    double nu;
    ResourcelessKet psi0;
    ResourcelessKet psi1;
    double overlap;

    DenseVector dense() const;
};

struct EnsembleEntry {
    double weight;
    std::variant<ResourcelessKet, MagicForm> member;

    bool is_magic() const {
        return std::holds_alternative<MagicForm>(member);
    }
    const std::string &label() const;
    DenseVector dense() const;
};

struct Ensemble {
    NoiseCase noise_case;
    double p;
    /// Piecewise branch (qubit: 1..4); 0 when the case has one formula.
    int branch;
    std::vector<EnsembleEntry> entries;

    double p_magic() const;
    std::string provenance() const;
    DensityMatrix reconstruct() const;
};

Ensemble qubit_dephasing_ensemble(double p);
Ensemble fermion_loss_ensemble(double transmission);
Ensemble fermion_dephasing_ensemble(double p);
Ensemble make_ensemble(NoiseCase c, double p);

/// The channel-generated state each ensemble must reproduce.
DensityMatrix target_density_matrix(NoiseCase c, double p);

/// cos(pi/8)|0> + sin(pi/8)|1>.
DenseVector h_state();
/// (|0011> + |1100>) / sqrt(2).
DenseVector psi4_state();

MagicForm magic_form_qubit();
/// cos(pi/8)|0> - sin(pi/8)|1> = (|0> + |->) / (2 nu).
MagicForm magic_form_qubit_mirror();
/// sign is +1 or -1. Valid for transmission in (0, 1].
MagicForm magic_form_loss(double transmission, int sign);
/// sign is +1 or -1. Valid for p in [0, 1] except p = 1/2.
MagicForm magic_form_dep(double p, int sign);

/// Unclamped weights (|0>, |1>, |+>, |->) of the pure Pauli-eigenstate
/// decomposition of the dephased |H> with the least |H|-free slack: the
/// |+> branch for p <= 1/2 and the |-> branch above. Entries go negative
/// outside [(1 - tan(pi/8)) / 2, (1 + tan(pi/8)) / 2].
std::array<double, 4> stabilizer_mixture_weights(double p);

}  // namespace noisymagic

#endif
