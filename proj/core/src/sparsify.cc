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

#include "noisymagic/sparsify.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace noisymagic {

SubspaceZ2 SubspaceZ2::zero(size_t m) {
    return {m, {}};
}

SubspaceZ2 SubspaceZ2::full(size_t m) {
    SubspaceZ2 s{m, {}};
    for (size_t k = 0; k < m; k++) {
        BitVec row(m);
        row.set(k, true);
        s.basis.push_back(std::move(row));
    }
    return s;
}

SubspaceZ2 SubspaceZ2::from_rows(size_t m, std::vector<BitVec> rows) {
    for (const auto &r : rows) {
        if (r.size() != m) {
            throw std::invalid_argument("subspace row length differs from m");
        }
    }
    size_t count = rows.size();
    SubspaceZ2 s{m, gf2_rref(std::move(rows))};
    if (s.basis.size() != count) {
        throw std::invalid_argument("subspace rows are linearly dependent");
    }
    return s;
}

void SubspaceZ2::for_each(const std::function<void(const BitVec &)> &visit) const {
    BitVec x(m);
    visit(x);
    uint64_t count = uint64_t{1} << basis.size();
    for (uint64_t i = 1; i < count; i++) {
        x ^= basis[std::countr_zero(i)];
        visit(x);
    }
}

double zeta(const SubspaceZ2 &subspace, double nu) {
    if (!(nu >= std::numbers::sqrt2 / 2 - 1e-12 && nu <= 1.0 + 1e-12)) {
        throw std::invalid_argument("nu must lie in [1/sqrt(2), 1]");
    }
    double overlap = std::max(0.0, 2 * nu * nu - 1);
    std::vector<double> powers(subspace.m + 1, 1.0);
    for (size_t h = 1; h <= subspace.m; h++) {
        powers[h] = powers[h - 1] * overlap;
    }
    double total = 0.0;
    subspace.for_each([&](const BitVec &x) { total += powers[x.popcount()]; });
    return total;
}

std::optional<size_t> choose_rank_dim(size_t m, double nu, double delta2) {
    if (!(delta2 > 0.0 && delta2 < 1.0)) {
        throw std::invalid_argument("delta2 must lie in (0, 1)");
    }
    if (!(nu > 0.0 && nu <= 1.0)) {
        throw std::invalid_argument("nu must lie in (0, 1]");
    }
    // log2 of 2 / (nu^{2m} delta2); the window [x, x + 1] holds the answer.
    double lower = 1.0 - 2.0 * double(m) * std::log2(nu) - std::log2(delta2);
    double l = std::ceil(lower - 1e-9);
    if (l < 0.0 || l >= double(m)) {
        return std::nullopt;
    }
    return static_cast<size_t>(l);
}

SubspaceZ2 random_subspace(size_t m, size_t l, Rng &rng) {
    if (l > m) {
        throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    }
    while (true) {
        std::vector<BitVec> rows;
        rows.reserve(l);
        for (size_t r = 0; r < l; r++) {
            BitVec row(m);
            auto words = row.words();
            for (size_t w = 0; w < words.size(); w++) {
                words[w] = rng();
            }
            if (m % 64) {
                words.back() &= (uint64_t{1} << (m % 64)) - 1;
            }
            rows.push_back(std::move(row));
        }
        auto reduced = gf2_rref(std::move(rows));
        if (reduced.size() == l) {
            return {m, std::move(reduced)};
        }
    }
}

size_t subspace_retry_budget(double delta2) {
    return static_cast<size_t>(std::ceil(std::log(1e9) * (2 + delta2) / delta2));
}

SparsifyResult find_subspace(size_t m, double nu, double delta2, Rng &rng) {
    auto exact = [&](size_t draws) {
        SubspaceZ2 full = SubspaceZ2::full(m);
        double z = zeta(full, nu);
        return SparsifyResult{std::move(full), nu, z, 1.0, std::ldexp(1.0, static_cast<int>(m)), draws, true};
    };
    auto l = choose_rank_dim(m, nu, delta2);
    if (!l) {
        return exact(0);
    }
    double scale = std::ldexp(std::pow(nu, 2.0 * double(m)), static_cast<int>(*l));
    double limit = (1 + scale) * (1 + delta2 / 2);
    size_t budget = subspace_retry_budget(delta2);
    for (size_t draw = 1; draw <= budget; draw++) {
        SubspaceZ2 candidate = random_subspace(m, *l, rng);
        double z = zeta(candidate, nu);
        if (z <= limit) {
            return {std::move(candidate), nu, z, scale / z, std::ldexp(1.0, static_cast<int>(*l)), draw, false};
        }
    }
    return exact(budget);
}

int64_t m0_threshold(double nu, double delta2) {
    if (!(delta2 > 0.0 && delta2 < 1.0)) {
        throw std::invalid_argument("delta2 must lie in (0, 1)");
    }
    if (!(nu > 0.0 && nu <= 1.0 + 1e-15)) {
        throw std::invalid_argument("nu must lie in (0, 1]");
    }
    double base = std::log(2 * nu * nu);
    if (base <= 1e-15) {
        return kUnbounded;
    }
    return static_cast<int64_t>(std::floor(std::log(4 / delta2) / base + 1e-12));
}

DenseVector ProductSuperposition::dense() const {
    DenseVector total;
    for (const auto &x : selectors) {
        DenseVector term = DenseVector::Ones(1);
        for (size_t i = 0; i < forms.size(); i++) {
            term = kron(term, dense_ket(x[i] ? forms[i].psi1 : forms[i].psi0));
        }
        if (total.size() == 0) {
            total = DenseVector::Zero(term.size());
        }
        total += term;
    }
    return coefficient * total;
}

ProductSuperposition expand_superposition(const SubspaceZ2 &subspace, std::span<const MagicForm> forms) {
    if (forms.size() != subspace.m) {
        throw std::invalid_argument("expand_superposition: need one form per copy");
    }
    double nu = forms.empty() ? 1.0 : forms[0].nu;
    for (const auto &f : forms) {
        if (std::abs(f.nu - nu) > 1e-12) {
            throw std::invalid_argument("expand_superposition: forms with different nu are not supported");
        }
    }
    ProductSuperposition out{{forms.begin(), forms.end()}, {}, 0.0};
    out.selectors.reserve(size_t{1} << subspace.dim());
    subspace.for_each([&](const BitVec &x) { out.selectors.push_back(x); });
    double z = forms.empty() ? 1.0 : zeta(subspace, nu);
    out.coefficient = 1.0 / std::sqrt(std::ldexp(z, static_cast<int>(subspace.dim())));
    return out;
}

StabSuperposition to_stabilizer(const ProductSuperposition &sup,
                                std::span<const size_t> wires,
                                std::span<const PauliEigenstate> background) {
    if (wires.size() != sup.forms.size()) {
        throw std::invalid_argument("to_stabilizer: need one wire per copy");
    }
    std::vector<std::array<PauliEigenstate, 2>> choices;
    for (const auto &f : sup.forms) {
        const auto *a = std::get_if<PauliEigenstate>(&f.psi0.state);
        const auto *b = std::get_if<PauliEigenstate>(&f.psi1.state);
        if (!a || !b) {
            throw std::invalid_argument("to_stabilizer: form '" + f.label + "' is not a qubit stabilizer form");
        }
        choices.push_back({*a, *b});
    }
    for (size_t w : wires) {
        if (w >= background.size()) {
            throw std::invalid_argument("to_stabilizer: wire out of range");
        }
    }
    StabSuperposition out{background.size(), {}};
    out.terms.reserve(sup.selectors.size());
    std::vector<PauliEigenstate> layout(background.begin(), background.end());
    for (const auto &x : sup.selectors) {
        for (size_t i = 0; i < wires.size(); i++) {
            layout[wires[i]] = choices[i][x[i]];
        }
        out.terms.push_back({sup.coefficient, StabilizerState::product(layout)});
    }
    return out;
}

}  // namespace noisymagic
