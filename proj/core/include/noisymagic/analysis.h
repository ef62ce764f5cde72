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


#ifndef NOISYMAGIC_ANALYSIS_H
#define NOISYMAGIC_ANALYSIS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "noisymagic/ensembles.h"

namespace noisymagic {

/// Default rank budget for the simulability boundaries.
inline constexpr double kDefaultBudget = 0x1.0p40;
/// Bytes per stored complex coefficient.
inline constexpr double kBytesPerCoefficient = 8.0;

double nu_qubit();
double nu_loss(double p);
double nu_dep(double p);

/// Weight of the magic entries in the ensemble for this case.
double p_magic(NoiseCase c, double p);
double nu_of(NoiseCase c, double p);

struct CaseParams {
    NoiseCase noise_case;
    std::function<double(double)> nu;
    std::function<double(double)> p_magic;
    double p_min = 0.0;
    double p_max = 1.0;
    std::vector<double> critical_points;
};
CaseParams case_params(NoiseCase c);

/// Truncated magic count: truncation_threshold with delta1 = delta / 2.
int64_t f_count(NoiseCase c, int64_t t, double p, double delta);

struct RankReport {
    int64_t t;
    double p;
    double delta;
    int64_t f;
    /// kUnbounded when nu <= 1/sqrt(2).
    int64_t m0;
    /// May be +inf when 2^f overflows a double; log2_rank stays finite.
    double worst_rank;
    double log2_rank;
    double bytes;
    bool sparsified;
};

/// f = f_count; rank = 2^f when f <= m0(nu, delta^2 / 4), otherwise
/// ceil(16 nu^{-2f} delta^{-2}) capped by 2^f.
RankReport worst_rank(NoiseCase c, int64_t t, double p, double delta);

/// Where worst_rank first drops to <= budget along the case's direction of
/// increasing noise: the smallest p for the two dephasing cases (searched on
/// [0, p_c] and [0, 1/2]) and the largest p on [0, 1] for loss. Throws
/// std::domain_error when no p in range meets the budget.
double boundary_p(NoiseCase c, int64_t t, double delta, double budget);

/// Largest t with worst_rank <= budget, kUnbounded when that holds for every
/// t up to 2^40, and 0 when even t = 1 exceeds the budget.
int64_t boundary_t(NoiseCase c, double p, double delta, double budget);

/// floor(bytes / 8).
double memory_line(double bytes);

/// from, from + step, ... up to `to` inclusive (1e-9 relative slack).
std::vector<double> p_grid(double from, double to, double step);

std::vector<RankReport> rank_curve(NoiseCase c, int64_t t, double delta, const std::vector<double> &grid);

/// Header p,f,m0,log2_rank,bytes; unbounded values print as inf.
std::string rank_curve_csv(const std::vector<RankReport> &rows);

struct Crossing {
    /// Last grid point on the starting side and first grid point past the line.
    double p_before;
    double p_after;
    double log2_before;
    double log2_after;
};

/// Every place where bytes moves from one side of bytes_line to the other
/// between consecutive rows.
std::vector<Crossing> find_crossings(const std::vector<RankReport> &rows, double bytes_line);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

}  // namespace noisymagic

#endif
