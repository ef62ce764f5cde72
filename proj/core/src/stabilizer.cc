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

#include "noisymagic/stabilizer.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

namespace noisymagic {

namespace {

inline bool get_bit(const uint64_t *row, size_t j) {
    return (row[j >> 6] >> (j & 63)) & 1;
}
inline void flip_bit(uint64_t *row, size_t j) {
    row[j >> 6] ^= uint64_t{1} << (j & 63);
}
inline void set_bit(uint64_t *row, size_t j, bool v) {
    uint64_t m = uint64_t{1} << (j & 63);
    row[j >> 6] = v ? (row[j >> 6] | m) : (row[j >> 6] & ~m);
}
inline bool dot_rows(const uint64_t *a, const uint64_t *b, size_t words) {
    uint64_t acc = 0;
    for (size_t w = 0; w < words; w++) {
        acc ^= a[w] & b[w];
    }
    return std::popcount(acc) & 1;
}
inline bool row_any(const uint64_t *a, size_t words) {
    for (size_t w = 0; w < words; w++) {
        if (a[w]) {
            return true;
        }
    }
    return false;
}
inline size_t row_first(const uint64_t *a, size_t words) {
    for (size_t w = 0; w < words; w++) {
        if (a[w]) {
            return w * 64 + std::countr_zero(a[w]);
        }
    }
    return words * 64;
}
inline void xor_rows(uint64_t *dst, const uint64_t *src, size_t words) {
    for (size_t w = 0; w < words; w++) {
        dst[w] ^= src[w];
    }
}
std::vector<size_t> row_bits(const uint64_t *a, size_t words) {
    std::vector<size_t> out;
    for (size_t w = 0; w < words; w++) {
        uint64_t v = a[w];
        while (v) {
            out.push_back(w * 64 + std::countr_zero(v));
            v &= v - 1;
        }
    }
    return out;
}

}  // namespace

std::string_view eigenstate_label(PauliEigenstate s) {
    switch (s) {
        case PauliEigenstate::kZero:
            return "|0>";
        case PauliEigenstate::kOne:
            return "|1>";
        case PauliEigenstate::kPlus:
            return "|+>";
        case PauliEigenstate::kMinus:
            return "|->";
    }
    return "?";
}

std::complex<double> ExactScalar::value() const {
    if (is_zero) {
        return 0.0;
    }
    double mag = std::pow(2.0, -0.5 * half_log2);
    return std::polar(mag, std::numbers::pi / 4 * phase8);
}

ExactScalar ExactScalar::times_i_pow(int r) const {
    if (is_zero) {
        return *this;
    }
    return {false, ((phase8 + 2 * r) % 8 + 8) % 8, half_log2};
}

ExactScalar add_over_sqrt2(ExactScalar a, ExactScalar b) {
    if (a.is_zero && b.is_zero) {
        return ExactScalar::zero();
    }
    if (a.is_zero) {
        return {false, b.phase8, b.half_log2 + 1};
    }
    if (b.is_zero) {
        return {false, a.phase8, a.half_log2 + 1};
    }
    if (a.half_log2 != b.half_log2) {
        throw std::logic_error("stabilizer amplitudes with unequal magnitudes");
    }
    int delta = ((b.phase8 - a.phase8) % 8 + 8) % 8;
    switch (delta) {
        case 0:
            return {false, a.phase8, a.half_log2 - 1};
        case 4:
            return ExactScalar::zero();
        case 2:
            return {false, (a.phase8 + 1) % 8, a.half_log2};
        case 6:
            return {false, (a.phase8 + 7) % 8, a.half_log2};
        default:
            throw std::logic_error("stabilizer amplitudes with non-Clifford relative phase");
    }
}

StabilizerState::StabilizerState(size_t num_qubits)
    : q_(num_qubits),
      words_(words_for_bits(num_qubits)),
      xs_(num_qubits * words_for_bits(num_qubits), 0),
      zs_(num_qubits * words_for_bits(num_qubits), 0),
      r_(num_qubits, 0),
      ref_(num_qubits),
      amp_{false, 0, 0} {
    for (size_t i = 0; i < q_; i++) {
        flip_bit(zrow(i), i);
    }
}

StabilizerState StabilizerState::product(std::span<const PauliEigenstate> wires) {
    StabilizerState s(wires.size());
    for (size_t i = 0; i < wires.size(); i++) {
        switch (wires[i]) {
            case PauliEigenstate::kZero:
                break;
            case PauliEigenstate::kOne:
                s.r_[i] = 2;
                s.ref_.set(i, true);
                break;
            case PauliEigenstate::kPlus:
            case PauliEigenstate::kMinus:
                flip_bit(s.zrow(i), i);
                flip_bit(s.xrow(i), i);
                s.r_[i] = wires[i] == PauliEigenstate::kMinus ? 2 : 0;
                s.amp_.half_log2++;
                break;
        }
    }
    return s;
}

void StabilizerState::check_wire(size_t j) const {
    if (j >= q_) {
        throw std::invalid_argument("wire " + std::to_string(j) + " out of range for " + std::to_string(q_) + " qubits");
    }
}

void StabilizerState::multiply_rows(size_t dst, size_t src) {
    int r = r_[dst] + r_[src] + 2 * dot_rows(zrow(dst), xrow(src), words_);
    r_[dst] = static_cast<uint8_t>(r & 3);
    xor_rows(xrow(dst), xrow(src), words_);
    xor_rows(zrow(dst), zrow(src), words_);
}

void StabilizerState::x(size_t j) {
    check_wire(j);
    for (size_t i = 0; i < q_; i++) {
        r_[i] = (r_[i] + 2 * get_bit(zrow(i), j)) & 3;
    }
    ref_.flip(j);
}

void StabilizerState::z(size_t j) {
    check_wire(j);
    for (size_t i = 0; i < q_; i++) {
        r_[i] = (r_[i] + 2 * get_bit(xrow(i), j)) & 3;
    }
    if (ref_[j]) {
        amp_ = amp_.times_i_pow(2);
    }
}

void StabilizerState::y(size_t j) {
    check_wire(j);
    for (size_t i = 0; i < q_; i++) {
        r_[i] = (r_[i] + 2 * (get_bit(xrow(i), j) ^ get_bit(zrow(i), j))) & 3;
    }
    amp_ = amp_.times_i_pow(ref_[j] ? 3 : 1);
    ref_.flip(j);
}

void StabilizerState::s(size_t j) {
    check_wire(j);
    for (size_t i = 0; i < q_; i++) {
        bool xb = get_bit(xrow(i), j);
        r_[i] = (r_[i] + xb) & 3;
        if (xb) {
            flip_bit(zrow(i), j);
        }
    }
    if (ref_[j]) {
        amp_ = amp_.times_i_pow(1);
    }
}

void StabilizerState::s_dag(size_t j) {
    check_wire(j);
    for (size_t i = 0; i < q_; i++) {
        bool xb = get_bit(xrow(i), j);
        r_[i] = (r_[i] + 3 * xb) & 3;
        if (xb) {
            flip_bit(zrow(i), j);
        }
    }
    if (ref_[j]) {
        amp_ = amp_.times_i_pow(3);
    }
}

void StabilizerState::h(size_t j) {
    check_wire(j);
    // New amplitude at y is (a(y|j=0) + (-1)^{y_j} a(y|j=1)) / sqrt(2),
    // evaluated on the old state.
    BitVec other = ref_;
    other.flip(j);
    ExactScalar a_other = exact_amplitude(other);
    bool rj = ref_[j];
    ExactScalar at0 = rj ? a_other : amp_;
    ExactScalar at1 = rj ? amp_ : a_other;
    ExactScalar candidate = add_over_sqrt2(at0, rj ? at1.times_i_pow(2) : at1);
    if (candidate.is_zero) {
        // Then y = ref ^ e_j carries the weight, with the opposite sign.
        candidate = add_over_sqrt2(at0, rj ? at1 : at1.times_i_pow(2));
        ref_ = std::move(other);
    }
    amp_ = candidate;
    for (size_t i = 0; i < q_; i++) {
        bool xb = get_bit(xrow(i), j);
        bool zb = get_bit(zrow(i), j);
        r_[i] = (r_[i] + 2 * (xb & zb)) & 3;
        set_bit(xrow(i), j, zb);
        set_bit(zrow(i), j, xb);
    }
}

void StabilizerState::cx(size_t c, size_t t) {
    check_wire(c);
    check_wire(t);
    if (c == t) {
        throw std::invalid_argument("CX needs distinct wires");
    }
    for (size_t i = 0; i < q_; i++) {
        if (get_bit(xrow(i), c)) {
            flip_bit(xrow(i), t);
        }
        if (get_bit(zrow(i), t)) {
            flip_bit(zrow(i), c);
        }
    }
    if (ref_[c]) {
        ref_.flip(t);
    }
}

void StabilizerState::cz(size_t a, size_t b) {
    check_wire(a);
    check_wire(b);
    if (a == b) {
        throw std::invalid_argument("CZ needs distinct wires");
    }
    for (size_t i = 0; i < q_; i++) {
        bool xa = get_bit(xrow(i), a);
        bool xb = get_bit(xrow(i), b);
        r_[i] = (r_[i] + 2 * (xa & xb)) & 3;
        if (xa) {
            flip_bit(zrow(i), b);
        }
        if (xb) {
            flip_bit(zrow(i), a);
        }
    }
    if (ref_[a] && ref_[b]) {
        amp_ = amp_.times_i_pow(2);
    }
}

void StabilizerState::swap(size_t a, size_t b) {
    check_wire(a);
    check_wire(b);
    if (a == b) {
        return;
    }
    for (size_t i = 0; i < q_; i++) {
        bool xa = get_bit(xrow(i), a), xb = get_bit(xrow(i), b);
        bool za = get_bit(zrow(i), a), zb = get_bit(zrow(i), b);
        set_bit(xrow(i), a, xb);
        set_bit(xrow(i), b, xa);
        set_bit(zrow(i), a, zb);
        set_bit(zrow(i), b, za);
    }
    bool ra = ref_[a];
    ref_.set(a, ref_[b]);
    ref_.set(b, ra);
}

void StabilizerState::apply(OpKind kind, std::span<const size_t> wires) {
    if (!is_clifford(kind)) {
        throw std::invalid_argument("stabilizer backend cannot apply " + std::string(op_name(kind)));
    }
    if (wires.size() != op_arity(kind)) {
        throw std::invalid_argument("wrong wire count for " + std::string(op_name(kind)));
    }
    switch (kind) {
        case OpKind::kX:
            return x(wires[0]);
        case OpKind::kY:
            return y(wires[0]);
        case OpKind::kZ:
            return z(wires[0]);
        case OpKind::kH:
            return h(wires[0]);
        case OpKind::kS:
            return s(wires[0]);
        case OpKind::kSdg:
            return s_dag(wires[0]);
        case OpKind::kCX:
            return cx(wires[0], wires[1]);
        case OpKind::kCZ:
            return cz(wires[0], wires[1]);
        case OpKind::kSwap:
            return swap(wires[0], wires[1]);
        default:
            throw std::invalid_argument("unsupported op");
    }
}

ExactScalar StabilizerState::exact_amplitude(const BitVec &basis) const {
    if (basis.size() != q_) {
        throw std::invalid_argument("amplitude: bit string length mismatch");
    }
    BitVec target = basis ^ ref_;
    if (!target.any()) {
        return amp_;
    }
    // Forward elimination on the X-parts, accumulating the product of the
    // pivot rows needed to hit target.
    std::vector<uint64_t> xs = xs_;
    std::vector<uint64_t> zs = zs_;
    std::vector<uint8_t> r = r_;
    std::vector<size_t> order(q_);
    for (size_t i = 0; i < q_; i++) {
        order[i] = i;
    }
    std::vector<uint64_t> acc_x(words_, 0), acc_z(words_, 0);
    int acc_r = 0;
    auto X = [&](size_t i) { return xs.data() + order[i] * words_; };
    auto Z = [&](size_t i) { return zs.data() + order[i] * words_; };
    auto target_words = target.words();
    size_t rank = 0;
    for (size_t c = 0; c < q_ && rank < q_; c++) {
        size_t pivot = rank;
        while (pivot < q_ && !get_bit(X(pivot), c)) {
            pivot++;
        }
        if (pivot == q_) {
            continue;
        }
        std::swap(order[rank], order[pivot]);
        uint64_t *px = X(rank);
        uint64_t *pz = Z(rank);
        int pr = r[order[rank]];
        for (size_t i = rank + 1; i < q_; i++) {
            if (get_bit(X(i), c)) {
                int nr = r[order[i]] + pr + 2 * dot_rows(Z(i), px, words_);
                r[order[i]] = static_cast<uint8_t>(nr & 3);
                xor_rows(X(i), px, words_);
                xor_rows(Z(i), pz, words_);
            }
        }
        if (get_bit(acc_x.data(), c) != get_bit(target_words.data(), c)) {
            acc_r += pr + 2 * dot_rows(acc_z.data(), px, words_);
            xor_rows(acc_x.data(), px, words_);
            xor_rows(acc_z.data(), pz, words_);
        }
        rank++;
    }
    for (size_t w = 0; w < words_; w++) {
        if (acc_x[w] != target_words[w]) {
            return ExactScalar::zero();
        }
    }
    int sign = dot_rows(acc_z.data(), ref_.words().data(), words_);
    return amp_.times_i_pow(acc_r + 2 * sign);
}

bool StabilizerState::is_random(size_t wire) const {
    check_wire(wire);
    for (size_t i = 0; i < q_; i++) {
        if (get_bit(xrow(i), wire)) {
            return true;
        }
    }
    return false;
}

double StabilizerState::project(size_t wire, bool outcome) {
    check_wire(wire);
    size_t pivot = q_;
    for (size_t i = 0; i < q_; i++) {
        if (get_bit(xrow(i), wire)) {
            pivot = i;
            break;
        }
    }
    if (pivot == q_) {
        return ref_[wire] == outcome ? 1.0 : 0.0;
    }
    if (ref_[wire] != outcome) {
        int sign = dot_rows(zrow(pivot), ref_.words().data(), words_);
        amp_ = amp_.times_i_pow(r_[pivot] + 2 * sign);
        for (size_t w = 0; w < words_; w++) {
            ref_.words()[w] ^= xrow(pivot)[w];
        }
    }
    amp_.half_log2--;
    for (size_t i = 0; i < q_; i++) {
        if (i != pivot && get_bit(xrow(i), wire)) {
            multiply_rows(i, pivot);
        }
    }
    std::fill(xrow(pivot), xrow(pivot) + words_, 0);
    std::fill(zrow(pivot), zrow(pivot) + words_, 0);
    flip_bit(zrow(pivot), wire);
    r_[pivot] = outcome ? 2 : 0;
    return 1.0 / std::numbers::sqrt2;
}

std::string StabilizerState::generator_string(size_t i) const {
    if (i >= q_) {
        throw std::invalid_argument("generator index out of range");
    }
    // i^r X^x Z^z with Y = i X Z, so each Y absorbs one factor of i.
    int r = r_[i];
    std::string body;
    for (size_t j = 0; j < q_; j++) {
        bool xb = get_bit(xrow(i), j), zb = get_bit(zrow(i), j);
        if (xb && zb) {
            body += 'Y';
            r -= 1;
        } else if (xb) {
            body += 'X';
        } else if (zb) {
            body += 'Z';
        } else {
            body += '_';
        }
    }
    r = ((r % 4) + 4) % 4;
    static constexpr const char *kSigns[] = {"+", "+i", "-", "-i"};
    return kSigns[r] + body;
}

bool StabilizerState::check_invariants() const {
    for (size_t i = 0; i < q_; i++) {
        if ((r_[i] & 1) != static_cast<int>(dot_rows(xrow(i), zrow(i), words_))) {
            return false;
        }
        for (size_t k = i + 1; k < q_; k++) {
            if (dot_rows(xrow(i), zrow(k), words_) != dot_rows(zrow(i), xrow(k), words_)) {
                return false;
            }
        }
    }
    std::vector<BitVec> rows;
    for (size_t i = 0; i < q_; i++) {
        BitVec row(2 * q_);
        for (size_t j = 0; j < q_; j++) {
            row.set(j, get_bit(xrow(i), j));
            row.set(q_ + j, get_bit(zrow(i), j));
        }
        rows.push_back(std::move(row));
    }
    if (gf2_rank(std::move(rows)) != q_) {
        return false;
    }
    // The reference must be in the support: every diagonal group element
    // must act as +1 on it. Eliminate X-parts to expose them.
    StabilizerState copy = *this;
    size_t rank = 0;
    for (size_t c = 0; c < q_; c++) {
        size_t pivot = q_;
        for (size_t i = rank; i < q_; i++) {
            if (get_bit(copy.xrow(i), c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == q_) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(copy.xrow(pivot), copy.xrow(pivot) + words_, copy.xrow(rank));
            std::swap_ranges(copy.zrow(pivot), copy.zrow(pivot) + words_, copy.zrow(rank));
            std::swap(copy.r_[pivot], copy.r_[rank]);
        }
        for (size_t i = 0; i < q_; i++) {
            if (i != rank && get_bit(copy.xrow(i), c)) {
                copy.multiply_rows(i, rank);
            }
        }
        rank++;
    }
    for (size_t i = rank; i < q_; i++) {
        int phase = copy.r_[i] + 2 * dot_rows(copy.zrow(i), ref_.words().data(), words_);
        if ((phase & 3) != 0) {
            return false;
        }
    }
    return !amp_.is_zero;
}

ProjectionResult project_wire(const StabilizerState &s, size_t wire, bool outcome) {
    StabilizerState copy = s;
    double w = copy.project(wire, outcome);
    if (w == 0.0) {
        return {std::nullopt, 0.0};
    }
    return {std::move(copy), w};
}

BasisReduction::BasisReduction(const StabilizerState &a) : ref_(a.q_) {
    // Drive a to a basis state; <a|b> = <Va|Vb> = conj(amp_a) <ref_a|Vb>.
    StabilizerState va = a;
    size_t words = va.words_;
    auto step = [&](OpKind kind, size_t x, size_t y) {
        steps_.push_back({kind, x, y});
        switch (kind) {
            case OpKind::kCX:
                va.cx(x, y);
                break;
            case OpKind::kCZ:
                va.cz(x, y);
                break;
            case OpKind::kS:
                va.s(x);
                break;
            default:
                va.h(x);
                break;
        }
    };
    while (true) {
        size_t row = va.q_;
        for (size_t i = 0; i < va.q_; i++) {
            if (row_any(va.xrow(i), words)) {
                row = i;
                break;
            }
        }
        if (row == va.q_) {
            break;
        }
        size_t j = row_first(va.xrow(row), words);
        for (size_t k : row_bits(va.xrow(row), words)) {
            if (k != j) {
                step(OpKind::kCX, j, k);
            }
        }
        if (get_bit(va.zrow(row), j)) {
            step(OpKind::kS, j, 0);
        }
        for (size_t k : row_bits(va.zrow(row), words)) {
            if (k != j) {
                step(OpKind::kCZ, j, k);
            }
        }
        step(OpKind::kH, j, 0);
        for (size_t i = 0; i < va.q_; i++) {
            if (i != row && get_bit(va.zrow(i), j)) {
                va.multiply_rows(i, row);
            }
        }
    }
    ref_ = va.ref_;
    conj_amp_ = std::conj(va.amp_.value());
}

std::complex<double> BasisReduction::overlap(const StabilizerState &b) const {
    if (b.num_qubits() != ref_.size()) {
        throw std::invalid_argument("inner_product: qubit count mismatch");
    }
    StabilizerState vb = b;
    for (const auto &st : steps_) {
        switch (st.kind) {
            case OpKind::kCX:
                vb.cx(st.a, st.b);
                break;
            case OpKind::kCZ:
                vb.cz(st.a, st.b);
                break;
            case OpKind::kS:
                vb.s(st.a);
                break;
            default:
                vb.h(st.a);
                break;
        }
    }
    return conj_amp_ * vb.exact_amplitude(ref_).value();
}

std::complex<double> inner_product(const StabilizerState &a, const StabilizerState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: qubit count mismatch");
    }
    return BasisReduction(a).overlap(b);
}

double StabSuperposition::norm_squared() const {
    double total = 0.0;
    for (size_t a = 0; a < terms.size(); a++) {
        total += std::norm(terms[a].coefficient);
        if (a + 1 == terms.size()) {
            break;
        }
        BasisReduction reduced(terms[a].state);
        for (size_t b = a + 1; b < terms.size(); b++) {
            std::complex<double> cross =
                std::conj(terms[a].coefficient) * terms[b].coefficient * reduced.overlap(terms[b].state);
            total += 2.0 * cross.real();
        }
    }
    return total;
}

std::complex<double> StabSuperposition::amplitude(const BitVec &basis) const {
    std::complex<double> total = 0.0;
    for (const auto &term : terms) {
        total += term.coefficient * term.state.amplitude(basis);
    }
    return total;
}

namespace {

StabSuperposition project_all(const StabSuperposition &psi, size_t wire, bool outcome) {
    StabSuperposition out{psi.num_qubits, {}};
    for (const auto &term : psi.terms) {
        StabilizerState copy = term.state;
        double w = copy.project(wire, outcome);
        if (w != 0.0) {
            out.terms.push_back({term.coefficient * w, std::move(copy)});
        }
    }
    return out;
}

// psi has squared norm `norm`; the kept branch is rescaled to norm 1 and only
// the |0> branch norm is computed.
bool measure_wire(StabSuperposition &psi, double norm, size_t wire, Rng &rng) {
    StabSuperposition branch0 = project_all(psi, wire, false);
    double n0 = std::clamp(branch0.norm_squared(), 0.0, norm);
    double n1 = norm - n0;
    if (norm < 1e-12) {
        throw DegenerateSuperposition("superposition norm collapsed below 1e-12");
    }
    bool outcome = uniform01(rng) >= n0 / norm;
    psi = outcome ? project_all(psi, wire, true) : std::move(branch0);
    double kept = outcome ? n1 : n0;
    if (kept < 1e-12 * norm || psi.terms.empty()) {
        throw DegenerateSuperposition("measured branch has vanishing norm");
    }
    double scale = 1.0 / std::sqrt(kept);
    for (auto &term : psi.terms) {
        term.coefficient *= scale;
    }
    return outcome;
}

}  // namespace

double outcome_probability(const StabSuperposition &psi, size_t wire, bool outcome) {
    double n0 = std::max(project_all(psi, wire, false).norm_squared(), 0.0);
    double n1 = std::max(project_all(psi, wire, true).norm_squared(), 0.0);
    if (n0 + n1 < 1e-12) {
        throw DegenerateSuperposition("superposition norm collapsed below 1e-12");
    }
    return (outcome ? n1 : n0) / (n0 + n1);
}

MeasurementResult sample_outcomes(StabSuperposition psi, const CircuitIR &circuit, Rng &rng) {
    if (psi.num_qubits != circuit.num_wires()) {
        throw std::invalid_argument("superposition and circuit disagree on wire count");
    }
    if (psi.terms.empty()) {
        throw DegenerateSuperposition("empty superposition");
    }
    MeasurementResult result{BitVec(circuit.final_measure.size()), std::vector<bool>(circuit.records.size(), false)};
    // Clifford gates preserve the norm, so it is computed once up front.
    double norm = psi.norm_squared();
    for (const auto &op : circuit.ops) {
        if (op.kind == OpKind::kM) {
            result.record[op.record_slot] = measure_wire(psi, norm, op.wires[0], rng);
            norm = 1.0;
            continue;
        }
        if (!is_clifford(op.kind)) {
            throw std::invalid_argument("circuit contains non-Clifford op " + std::string(op_name(op.kind)) +
                                        "; gadgetize it first");
        }
        bool parity = false;
        for (size_t slot : op.condition_slots) {
            parity ^= result.record[slot];
        }
        if (!op.condition_slots.empty() && !parity) {
            continue;
        }
        for (auto &term : psi.terms) {
            term.state.apply(op.kind, op.wires);
        }
    }
    for (size_t k = 0; k < circuit.final_measure.size(); k++) {
        result.outcome.set(k, measure_wire(psi, norm, circuit.final_measure[k], rng));
        norm = 1.0;
    }
    return result;
}

}  // namespace noisymagic
