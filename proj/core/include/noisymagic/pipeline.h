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

#ifndef NOISYMAGIC_PIPELINE_H
#define NOISYMAGIC_PIPELINE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noisymagic/circuit.h"
#include "noisymagic/ensembles.h"
#include "noisymagic/rng.h"
#include "noisymagic/sparsify.h"
#include "noisymagic/stabilizer.h"
#include "noisymagic/truncation.h"

namespace noisymagic {

inline constexpr uint64_t kDefaultSeed = 1234567;

/// kDefaultSeed unless NOISYMAGIC_SEED holds an unsigned integer.
uint64_t default_seed();

struct PipelineOptions {
    double delta = 0.2;
    /// Overrides for the delta / 2 and delta^2 / 4 split.
    std::optional<double> delta1;
    std::optional<double> delta2;
    size_t shots = 1000;
    uint64_t seed = kDefaultSeed;
    /// 0 picks std::thread::hardware_concurrency().
    size_t threads = 1;
    /// Reuse one subspace per magic count across shots. Benchmarking only.
    bool reuse_subspace = false;
    /// Redraws of a shot whose superposition collapsed numerically.
    size_t max_degenerate_restarts = 8;

    double effective_delta1() const;
    double effective_delta2() const;
};

struct DrawnInput {
    /// Index into ensemble.entries, one per copy.
    std::vector<size_t> picks;
    size_t m = 0;
    /// Whole draws discarded because m exceeded plan.k.
    size_t resamples = 0;
};

/// t i.i.d. draws from the ensemble, redrawn as a whole while the magic
/// count exceeds plan.k.
DrawnInput draw_input(const Ensemble &ensemble, const TruncationPlan &plan, Rng &rng);

struct Assembly {
    StabSuperposition state;
    bool sparsified = false;
    int64_t m0 = 0;
    /// Subspace draws made by find_subspace (0 when unused).
    size_t draws = 0;
};

/// Builds the superposition over n data wires (|0>) followed by t copy
/// wires. Magic copies are expanded over the full space when m <= m0 and
/// over a random subspace otherwise.
Assembly assemble(const Ensemble &ensemble, const DrawnInput &input, size_t n, double delta2, Rng &rng,
                  const SubspaceZ2 *fixed_subspace = nullptr);

struct SampleTrace {
    size_t shot = 0;
    std::vector<std::string> drawn;
    size_t m = 0;
    size_t resamples = 0;
    size_t restarts = 0;
    bool sparsified = false;
    size_t chi = 0;
    std::string outcome;
    std::vector<bool> record;
};

struct PipelineResult {
    TruncationPlan plan;
    int64_t m0 = 0;
    std::vector<SampleTrace> traces;
};

/// Samples the circuit on noisy injected copies. Only the qubit case is
/// supported. Circuits with T gates are gadgetized first, in which case
/// circuit.t counts only the copies injected by hand.
PipelineResult run(const CircuitIR &circuit, NoiseCase noise_case, double p, const PipelineOptions &options);

std::string trace_to_json(const SampleTrace &trace);

/// Exact outcome distribution of the (gadgetized) circuit with |0> on data
/// wires and the dephased |H> on every copy wire. At most 14 wires.
std::vector<double> dense_reference_distribution(const CircuitIR &circuit, double p);

/// Outcome frequencies indexed like dense_output_distribution.
std::vector<double> empirical_distribution(const std::vector<SampleTrace> &traces, size_t num_bits);

/// Replaces each T / T_DAG on wire d with an injection gadget on a fresh
/// copy wire. The input |H> copy is rotated to (|0> + e^{i pi/4}|1>)/sqrt(2),
/// entangled by CX d -> copy, measured, and corrected by S on d.
/// The new copy wires follow the existing ones, so t grows by the gate count.
CircuitIR gadgetize(const CircuitIR &circuit);

}  // namespace noisymagic

#endif
