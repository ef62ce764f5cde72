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

#ifndef NOISYMAGIC_STABILIZER_H
#define NOISYMAGIC_STABILIZER_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "noisymagic/bits.h"
#include "noisymagic/circuit.h"
#include "noisymagic/rng.h"

namespace noisymagic {

enum class PauliEigenstate { kZero, kOne, kPlus, kMinus };

std::string_view eigenstate_label(PauliEigenstate s);

/// omega^phase8 * 2^(-half_log2 / 2) with omega = e^{i pi / 4}, or zero.
/// Every amplitude and overlap of stabilizer states has this form.
struct ExactScalar {
    bool is_zero = false;
    int phase8 = 0;
    int half_log2 = 0;

    static ExactScalar zero() {
        return {true, 0, 0};
    }
    std::complex<double> value() const;
    /// Multiplies by i^r.
    ExactScalar times_i_pow(int r) const;
};

/// (a + b) / sqrt(2), exact. Throws std::logic_error when the sum leaves the
/// stabilizer amplitude set, which indicates a corrupted state.
ExactScalar add_over_sqrt2(ExactScalar a, ExactScalar b);

/// A stabilizer state with its global phase.
///
/// Generators are Paulis i^r X^x Z^z over q wires (X acting after Z). The
/// phase is pinned by a reference basis string x_ref in the support and the
/// exact amplitude <x_ref|psi>. For any generator product g with X-part x,
/// <x_ref ^ x|psi> = i^r (-1)^{z . x_ref} <x_ref|psi>.
class StabilizerState {
   public:
    /// |0...0>.
    explicit StabilizerState(size_t num_qubits);
    static StabilizerState product(std::span<const PauliEigenstate> wires);

    size_t num_qubits() const {
        return q_;
    }

    void x(size_t j);
    void y(size_t j);
    void z(size_t j);
    void h(size_t j);
    void s(size_t j);
    void s_dag(size_t j);
    void cx(size_t control, size_t target);
    void cz(size_t a, size_t b);
    void swap(size_t a, size_t b);
    /// Any Clifford OpKind. Throws std::invalid_argument otherwise.
    void apply(OpKind kind, std::span<const size_t> wires);

    ExactScalar exact_amplitude(const BitVec &basis) const;
    std::complex<double> amplitude(const BitVec &basis) const {
        return exact_amplitude(basis).value();
    }

    /// In-place |o><o| on `wire` followed by renormalization. Returns the
    /// norm of the unnormalized projection: 1, 1/sqrt(2), or 0. When 0 the
    /// state is left unchanged.
    double project(size_t wire, bool outcome);
    /// Some generator anticommutes with Z on this wire.
    bool is_random(size_t wire) const;

    const BitVec &reference() const {
        return ref_;
    }
    ExactScalar reference_amplitude() const {
        return amp_;
    }
    /// Generator i as text, e.g. "+X_Z" or "-iY" style: sign then one of
    /// _XYZ per wire.
    std::string generator_string(size_t i) const;
    /// Checks commutation, Hermiticity, rank and that the reference is in
    /// the support. Intended for tests.
    bool check_invariants() const;

    friend class BasisReduction;

   private:
    uint64_t *xrow(size_t i) {
        return xs_.data() + i * words_;
    }
    uint64_t *zrow(size_t i) {
        return zs_.data() + i * words_;
    }
    const uint64_t *xrow(size_t i) const {
        return xs_.data() + i * words_;
    }
    const uint64_t *zrow(size_t i) const {
        return zs_.data() + i * words_;
    }
    void check_wire(size_t j) const;
    /// Row dst <- row dst * row src.
    void multiply_rows(size_t dst, size_t src);

    size_t q_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> r_;
    BitVec ref_;
    ExactScalar amp_;
};

/// Stateless wrapper around StabilizerState::project.
/// A Clifford V with V|a> = amp |ref>, found once so that <a|b> for many b
/// costs one gate replay and one amplitude each.
class BasisReduction {
   public:
    explicit BasisReduction(const StabilizerState &a);
    /// <a|b>.
    std::complex<double> overlap(const StabilizerState &b) const;

   private:
    struct Step {
        OpKind kind;
        size_t a;
        size_t b;
    };
    std::vector<Step> steps_;
    BitVec ref_;
    std::complex<double> conj_amp_;
};

struct ProjectionResult {
    std::optional<StabilizerState> state;
    double weight;
};
ProjectionResult project_wire(const StabilizerState &s, size_t wire, bool outcome);

/// Exact <a|b>.
std::complex<double> inner_product(const StabilizerState &a, const StabilizerState &b);

struct StabTerm {
    std::complex<double> coefficient;
    StabilizerState state;
};

struct StabSuperposition {
    size_t num_qubits = 0;
    std::vector<StabTerm> terms;

    size_t chi() const {
        return terms.size();
    }
    double norm_squared() const;
    std::complex<double> amplitude(const BitVec &basis) const;
};

class DegenerateSuperposition : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct MeasurementResult {
    /// Bit k is the outcome on circuit.final_measure[k].
    BitVec outcome;
    std::vector<bool> record;
};

/// Exact probability that measuring `wire` gives `outcome`, relative to the
/// superposition's own squared norm.
double outcome_probability(const StabSuperposition &psi, size_t wire, bool outcome);

/// Runs the Clifford circuit on psi and samples measurements one wire at a
/// time. Throws DegenerateSuperposition if the branch norm collapses below
/// 1e-12, std::invalid_argument for non-Clifford ops.
MeasurementResult sample_outcomes(StabSuperposition psi, const CircuitIR &circuit, Rng &rng);

}  // namespace noisymagic

#endif
