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

#ifndef NOISYMAGIC_SPARSIFY_H
#define NOISYMAGIC_SPARSIFY_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "noisymagic/bits.h"
#include "noisymagic/ensembles.h"
#include "noisymagic/rng.h"
#include "noisymagic/stabilizer.h"
#include "noisymagic/truncation.h"

namespace noisymagic {

/// A linear subspace of Z_2^m held as a basis in reduced row-echelon form.
struct SubspaceZ2 {
    size_t m = 0;
    std::vector<BitVec> basis;

    size_t dim() const {
        return basis.size();
    }
    static SubspaceZ2 zero(size_t m);
    static SubspaceZ2 full(size_t m);
    /// Reduces the given spanning rows. Throws if they are dependent.
    static SubspaceZ2 from_rows(size_t m, std::vector<BitVec> rows);

    /// Calls visit(x) for every element, in Gray-code order starting at 0.
    void for_each(const std::function<void(const BitVec &)> &visit) const;
    bool operator==(const SubspaceZ2 &other) const = default;
};

/// Sum over x in L of (2 nu^2 - 1)^{|x|}.
double zeta(const SubspaceZ2 &subspace, double nu);

/// The l with 2 <= 2^l nu^{2m} delta2 <= 4, or nullopt when that l is not
/// below m (exact expansion is then no larger).
std::optional<size_t> choose_rank_dim(size_t m, double nu, double delta2);

/// Uniformly random l-dimensional subspace: draws l x m matrices until one
/// has rank l.
SubspaceZ2 random_subspace(size_t m, size_t l, Rng &rng);

struct SparsifyResult {
    SubspaceZ2 subspace;
    double nu;
    double z;
    /// 2^l nu^{2m} / z.
    double fidelity;
    /// 2^l.
    double rank;
    size_t draws;
    /// True when the exact full-space expansion was used.
    bool exact;
};

/// Draws subspaces until Z <= (1 + 2^l nu^{2m})(1 + delta2 / 2), at most
/// ceil(ln(1e9)(2 + delta2) / delta2) times, then falls back to the full
/// space. Also returns the full space when choose_rank_dim declines.
SparsifyResult find_subspace(size_t m, double nu, double delta2, Rng &rng);
/// Maximum number of draws find_subspace makes.
size_t subspace_retry_budget(double delta2);

/// Largest m0 with 2^{m0} <= 4 nu^{-2 m0} / delta2, or kUnbounded when
/// nu <= 1/sqrt(2).
int64_t m0_threshold(double nu, double delta2);

/// (1 / sqrt(2^l Z)) * sum_{x in L} psi_1^{x_1} ... psi_m^{x_m}.
struct ProductSuperposition {
    std::vector<MagicForm> forms;
    std::vector<BitVec> selectors;
    double coefficient;

    size_t chi() const {
        return selectors.size();
    }
    /// Dense vector on the concatenated copies (oracle scale only).
    DenseVector dense() const;
};

/// Throws std::invalid_argument when the forms disagree on nu by more than
/// 1e-12 or their count differs from subspace.m.
ProductSuperposition expand_superposition(const SubspaceZ2 &subspace, std::span<const MagicForm> forms);

/// Stabilizer terms of a qubit ProductSuperposition placed on `wires` of a
/// register; every other wire takes its state from `background`.
StabSuperposition to_stabilizer(const ProductSuperposition &sup,
                                std::span<const size_t> wires,
                                std::span<const PauliEigenstate> background);

}  // namespace noisymagic

#endif
