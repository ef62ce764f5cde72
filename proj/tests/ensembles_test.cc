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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "noisymagic/dense_oracle.h"
#include "noisymagic/ensembles.h"

namespace noisymagic {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

TEST(QubitEnsemble, LowNoiseWeights) {
    Ensemble e = qubit_dephasing_ensemble(0.1);
    ASSERT_EQ(e.entries.size(), 3u);
    EXPECT_EQ(e.branch, 1);
    EXPECT_NEAR(e.entries[0].weight, 0.2414214, 1e-7);
    EXPECT_NEAR(e.entries[1].weight, 0.1, 1e-15);
    EXPECT_NEAR(e.entries[2].weight, 0.6585786, 1e-7);
    EXPECT_TRUE(e.entries[2].is_magic());
    EXPECT_EQ(e.entries[0].label(), "|0>");
    EXPECT_EQ(e.provenance(), "qubit-dephasing/branch-1");
    EXPECT_NEAR(e.p_magic(), 1 - (2 + kSqrt2) * 0.1, 1e-15);
}

TEST(QubitEnsemble, BranchBoundaries) {
    double pc = qubit_critical_p();
    EXPECT_NEAR(pc, 0.2928932188134524, 1e-15);
    EXPECT_EQ(qubit_dephasing_ensemble(pc).branch, 2);
    EXPECT_EQ(qubit_dephasing_ensemble(0.5).branch, 2);
    EXPECT_EQ(qubit_dephasing_ensemble(0.6).branch, 3);
    EXPECT_EQ(qubit_dephasing_ensemble(1 - pc).branch, 3);
    EXPECT_EQ(qubit_dephasing_ensemble(0.9).branch, 4);
    EXPECT_EQ(qubit_dephasing_ensemble(pc).p_magic(), 0.0);
    for (const auto &entry : qubit_dephasing_ensemble(pc).entries) {
        EXPECT_GE(entry.weight, 0.0);
    }
}

TEST(QubitEnsemble, StabilizerWeightsChangeSignAtCriticalPoints) {
    double pc = qubit_critical_p();
    auto min_weight = [](double p) {
        auto w = stabilizer_mixture_weights(p);
        return std::min(std::min(w[0], w[1]), std::min(w[2], w[3]));
    };
    EXPECT_GE(min_weight(pc), -1e-15);
    EXPECT_GE(min_weight(1 - pc), -1e-15);
    EXPECT_LT(min_weight(pc - 1e-6), 0.0);
    EXPECT_LT(min_weight(1 - pc + 1e-6), 0.0);
}

TEST(Ensembles, ReconstructChannelOutputs) {
    for (NoiseCase c : {NoiseCase::kQubitDephasing, NoiseCase::kFermionLoss, NoiseCase::kFermionDephasing}) {
        for (int i = 0; i <= 100; i++) {
            double p = i / 100.0;
            Ensemble e = make_ensemble(c, p);
            double total = 0.0;
            for (const auto &entry : e.entries) {
                EXPECT_GE(entry.weight, 0.0);
                total += entry.weight;
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
            EXPECT_LT(frobenius_distance(e.reconstruct(), target_density_matrix(c, p)), 1e-10)
                << case_name(c) << " p=" << p;
        }
    }
}

TEST(Ensembles, LossAndDephasingEndpoints) {
    Ensemble vac = fermion_loss_ensemble(0.0);
    EXPECT_EQ(vac.p_magic(), 0.0);
    EXPECT_EQ(vac.entries[0].label(), "|0000>");
    Ensemble full = fermion_loss_ensemble(1.0);
    EXPECT_EQ(full.entries.size(), 2u);
    EXPECT_NEAR(std::get<MagicForm>(full.entries[0].member).nu, 1 / kSqrt2, 1e-15);
    Ensemble half = fermion_dephasing_ensemble(0.5);
    EXPECT_EQ(half.p_magic(), 0.0);
    EXPECT_EQ(half.entries[1].label(), "|1100>");
    EXPECT_EQ(fermion_dephasing_ensemble(0.2).p_magic(), 1.0);
    EXPECT_EQ(fermion_loss_ensemble(0.3).entries.size(), 6u);
}

TEST(MagicForms, OverlapAndNormalization) {
    std::vector<MagicForm> forms{magic_form_qubit(), magic_form_qubit_mirror()};
    for (double p : {0.05, 0.3, 0.5, 0.8, 1.0}) {
        forms.push_back(magic_form_loss(p, 1));
        forms.push_back(magic_form_loss(p, -1));
    }
    for (double p : {0.0, 0.1, 0.25, 0.45, 0.7}) {
        forms.push_back(magic_form_dep(p, 1));
        forms.push_back(magic_form_dep(p, -1));
    }
    for (const auto &f : forms) {
        DenseVector a = dense_ket(f.psi0);
        DenseVector b = dense_ket(f.psi1);
        EXPECT_NEAR(a.norm(), 1.0, 1e-12) << f.label;
        EXPECT_NEAR(b.norm(), 1.0, 1e-12) << f.label;
        EXPECT_NEAR(std::abs(a.dot(b) - (2 * f.nu * f.nu - 1)), 0.0, 1e-10) << f.label;
        EXPECT_NEAR(std::abs(b.dot(a) - (2 * f.nu * f.nu - 1)), 0.0, 1e-10) << f.label;
        EXPECT_NEAR(f.overlap, 2 * f.nu * f.nu - 1, 1e-12) << f.label;
        EXPECT_NEAR(f.dense().norm(), 1.0, 1e-10) << f.label;
        EXPECT_NEAR(std::abs(f.dense().dot(a)), f.nu, 1e-10) << f.label;
    }
}

TEST(MagicForms, QubitFormIsH) {
    MagicForm h = magic_form_qubit();
    EXPECT_NEAR(h.nu, 0.9238795, 1e-7);
    EXPECT_NEAR(fidelity(h.dense(), h_state()), 1.0, 1e-12);
}

TEST(MagicForms, LossFormIsNormalizedPhi) {
    MagicForm f = magic_form_loss(0.5, 1);
    EXPECT_NEAR(f.nu, 0.8164966, 1e-7);
    // phi+ at p = 1/2 is proportional to (1 - p)|0000> + p (|0011> + |1100>) / sqrt2.
    DenseVector want = 0.5 * fock_state("0000") + 0.5 * (fock_state("0011") + fock_state("1100")) / kSqrt2;
    EXPECT_NEAR(fidelity(f.dense(), want.normalized()), 1.0, 1e-12);
}

TEST(MagicForms, DephasingNu) {
    EXPECT_NEAR(magic_form_dep(0.25, 1).nu, 0.9701425, 1e-7);
    EXPECT_NEAR(magic_form_dep(0.0, -1).nu, 1 / kSqrt2, 1e-15);
    EXPECT_THROW(magic_form_dep(0.5, 1), std::invalid_argument);
    EXPECT_THROW(magic_form_loss(0.0, 1), std::invalid_argument);
    EXPECT_THROW(magic_form_loss(0.5, 2), std::invalid_argument);
}

TEST(Ensembles, Errors) {
    EXPECT_THROW(qubit_dephasing_ensemble(-0.1), std::invalid_argument);
    EXPECT_THROW(fermion_loss_ensemble(1.5), std::invalid_argument);
    EXPECT_THROW(parse_case("bosonic"), std::invalid_argument);
    EXPECT_EQ(parse_case("fermion-loss"), NoiseCase::kFermionLoss);
}

}  // namespace
}  // namespace noisymagic
