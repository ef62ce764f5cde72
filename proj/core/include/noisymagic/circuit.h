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

#ifndef NOISYMAGIC_CIRCUIT_H
#define NOISYMAGIC_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noisymagic/rng.h"

namespace noisymagic {

enum class OpKind {
    kX,
    kY,
    kZ,
    kH,
    kS,
    kSdg,
    kCX,
    kCZ,
    kSwap,
    kM,
    kT,
    kTdg,
};

std::string_view op_name(OpKind kind);
std::optional<OpKind> parse_op_name(std::string_view name);
size_t op_arity(OpKind kind);
bool is_clifford(OpKind kind);

struct Operation {
    OpKind kind;
    std::vector<size_t> wires;
    /// Gate fires only when the XOR of these records is 1. Empty = always.
    std::vector<std::string> condition;
    /// Record name written by an M operation.
    std::string record;

    // Filled by CircuitIR::finalize.
    std::vector<size_t> condition_slots;
    size_t record_slot = 0;
};

/// Wires [0, n) are resourceless |0> inputs. Wires [n, n + t * wires_per_copy)
/// receive the injected magic copies, copy i starting at n + i * wires_per_copy.
struct CircuitIR {
    size_t n = 0;
    size_t t = 0;
    size_t wires_per_copy = 1;
    std::vector<Operation> ops;
    std::vector<std::string> records;
    std::vector<size_t> final_measure;

    size_t num_wires() const {
        return n + t * wires_per_copy;
    }
    bool has_t_gates() const;

    /// Validates wires and record references and resolves record slots.
    /// Records not declared up front are appended in order of first M.
    /// Throws std::invalid_argument on malformed input.
    void finalize();
};

CircuitIR parse_circuit_json(std::string_view text);
std::string circuit_to_json(const CircuitIR &circuit);

/// Appends `depth` uniformly chosen gates from {H, S, S_DAG, X, Y, Z, CX, CZ,
/// SWAP} on wires [first, first + count). Two-wire gates need count >= 2.
void append_random_clifford(CircuitIR &circuit, size_t first, size_t count, size_t depth, Rng &rng);

/// "r0^r1" -> {"r0", "r1"}.
std::vector<std::string> parse_condition(std::string_view text);

}  // namespace noisymagic

#endif
