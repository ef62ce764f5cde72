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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "noisymagic/dense_oracle.h"
#include "noisymagic/ensembles.h"
#include "noisymagic/sparsify.h"
#include "test_util.h"

namespace noisymagic {
namespace {

const double kNu = std::cos(std::numbers::pi / 8);

TEST(Zeta, Examples) {
    auto l = SubspaceZ2::from_rows(2, {BitVec::from_string("11")});
    EXPECT_NEAR(zeta(l, kNu), 1.5, 1e-12);
    for (size_t m : {1u, 4u, 9u}) {
        EXPECT_NEAR(zeta(SubspaceZ2::full(m), kNu), std::pow(2 * kNu * kNu, double(m)), 1e-9);
    }
    EXPECT_EQ(zeta(SubspaceZ2::zero(5), kNu), 1.0);
    EXPECT_THROW(zeta(l, 0.5), std::invalid_argument);
}

TEST(Subspace, GrayCodeVisitsEveryElementOnce) {
    Rng rng = stream_rng(4, 0);
    SubspaceZ2 l = random_subspace(9, 5, rng);
    std::vector<std::string> seen;
    l.for_each([&](const BitVec &x) { seen.push_back(x.str()); });
    EXPECT_EQ(seen.size(), 32u);
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
    EXPECT_EQ(gf2_rank(l.basis), 5u);
    EXPECT_THROW(SubspaceZ2::from_rows(3, {BitVec::from_string("110"), BitVec::from_string("110")}),
                 std::invalid_argument);
}

TEST(RankDim, Examples) {
    EXPECT_FALSE(choose_rank_dim(10, kNu, 0.01).has_value());
    EXPECT_EQ(choose_rank_dim(40, kNu, 0.01), std::optional<size_t>(17));
    for (size_t m : {20u, 33u, 60u}) {
        auto l = choose_rank_dim(m, kNu, 0.05);
        ASSERT_TRUE(l.has_value());
        double v = std::ldexp(std::pow(kNu, 2.0 * double(m)) * 0.05, static_cast<int>(*l));
        EXPECT_GE(v, 2.0 - 1e-9);
        EXPECT_LE(v, 4.0 + 1e-9);
    }
}

TEST(M0, Examples) {
    EXPECT_EQ(m0_threshold(kNu, 0.25), 5);
    EXPECT_EQ(m0_threshold(1.0, 0.01), 8);
    EXPECT_EQ(m0_threshold(1 / std::numbers::sqrt2, 0.01), kUnbounded);
    int64_t last = 0;
    for (double d2 : {0.5, 0.1, 0.01, 1e-3, 1e-5}) {
        int64_t m0 = m0_threshold(kNu, d2);
        EXPECT_GE(m0, last);
        last = m0;
    }
}

TEST(FindSubspace, AcceptedSubspacesMeetTheGuarantee) {
    Rng rng = stream_rng(12, 0);
    for (size_t m : {14u, 20u, 30u}) {
        for (double d2 : {0.05, 0.01}) {
            for (int rep = 0; rep < 5; rep++) {
                SparsifyResult r = find_subspace(m, kNu, d2, rng);
                if (r.exact) {
                    continue;
                }
                double scale = std::ldexp(std::pow(kNu, 2.0 * double(m)), static_cast<int>(r.subspace.dim()));
                EXPECT_LE(r.z, (1 + scale) * (1 + d2 / 2));
                EXPECT_GE(r.fidelity, 1 - d2);
                EXPECT_LE(r.rank, 4 * std::pow(kNu, -2.0 * double(m)) / d2);
                EXPECT_NEAR(r.z, zeta(r.subspace, kNu), 1e-12);
            }
        }
    }
}

TEST(FindSubspace, SmallMUsesFullSpace) {
    Rng rng(1);
    SparsifyResult r = find_subspace(1, kNu, 0.01, rng);
    EXPECT_TRUE(r.exact);
    EXPECT_NEAR(r.fidelity, 1.0, 1e-15);
    EXPECT_EQ(r.subspace, SubspaceZ2::full(1));
}

TEST(Expansion, FidelityFormulaIsExact) {
    Rng rng = stream_rng(5, 5);
    for (int trial = 0; trial < 30; trial++) {
        size_t m = 1 + rng() % 8;
        size_t l = rng() % (m + 1);
        SubspaceZ2 sub = random_subspace(m, l, rng);
        std::vector<MagicForm> forms(m, magic_form_qubit());
        ProductSuperposition sup = expand_superposition(sub, forms);
        DenseVector v = sup.dense();
        EXPECT_NEAR(v.norm(), 1.0, 1e-9);
        double want = std::ldexp(std::pow(kNu, 2.0 * double(m)), static_cast<int>(l)) / zeta(sub, kNu);
        EXPECT_NEAR(fidelity(v, testing::power_state(h_state(), m)), want, 1e-9);
    }
}

TEST(Expansion, MeanZBoundedOverRandomSubspaces) {
    Rng rng = stream_rng(6, 0);
    const size_t m = 10;
    const size_t l = 5;
    const int draws = 10000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < draws; i++) {
        double z = zeta(random_subspace(m, l, rng), kNu);
        sum += z;
        sum2 += z * z;
    }
    double mean = sum / draws;
    double sigma = std::sqrt((sum2 / draws - mean * mean) / draws);
    EXPECT_LE(mean, 1 + std::ldexp(std::pow(kNu, 2.0 * m), l) + 3 * sigma);
}

TEST(Expansion, MixedNuRejected) {
    std::vector<MagicForm> forms{magic_form_qubit(), magic_form_loss(0.4, 1)};
    EXPECT_THROW(expand_superposition(SubspaceZ2::full(2), forms), std::invalid_argument);
    std::vector<MagicForm> one{magic_form_qubit()};
    EXPECT_THROW(expand_superposition(SubspaceZ2::full(2), one), std::invalid_argument);
}

TEST(Expansion, SignedFormsShareNu) {
    std::vector<MagicForm> forms{magic_form_loss(0.4, 1), magic_form_loss(0.4, -1)};
    ProductSuperposition sup = expand_superposition(SubspaceZ2::full(2), forms);
    DenseVector want = kron(forms[0].dense(), forms[1].dense());
    EXPECT_NEAR(fidelity(sup.dense(), want), 1.0, 1e-12);
}

TEST(Expansion, StabilizerTermsMatchDense) {
    Rng rng = stream_rng(9, 0);
    SubspaceZ2 sub = random_subspace(4, 2, rng);
    std::vector<MagicForm> forms{magic_form_qubit(), magic_form_qubit_mirror(), magic_form_qubit(),
                                 magic_form_qubit()};
    ProductSuperposition sup = expand_superposition(sub, forms);
    std::vector<size_t> wires{1, 2, 4, 5};
    std::vector<PauliEigenstate> background{PauliEigenstate::kOne, PauliEigenstate::kZero, PauliEigenstate::kZero,
                                            PauliEigenstate::kPlus, PauliEigenstate::kZero, PauliEigenstate::kZero};
    StabSuperposition psi = to_stabilizer(sup, wires, background);
    EXPECT_EQ(psi.chi(), 4u);
    // Wire order 0..5: |1>, copy0, copy1, |+>, copy2, copy3.
    DenseVector block = sup.dense();
    DenseVector want = DenseVector::Zero(64);
    for (int idx = 0; idx < 16; idx++) {
        int c0 = (idx >> 3) & 1, c1 = (idx >> 2) & 1, c2 = (idx >> 1) & 1, c3 = idx & 1;
        for (int plus = 0; plus < 2; plus++) {
            int full = (1 << 5) | (c0 << 4) | (c1 << 3) | (plus << 2) | (c2 << 1) | c3;
            want(full) += block(idx) / std::numbers::sqrt2;
        }
    }
    EXPECT_LT((testing::dense_of(psi) - want).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
}

}  // namespace
}  // namespace noisymagic
