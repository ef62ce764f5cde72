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

#ifndef NOISYMAGIC_TRUNCATION_H
#define NOISYMAGIC_TRUNCATION_H

#include <cstdint>
#include <limits>

namespace noisymagic {

/// Stands for an unbounded count (m0 when sparsification never helps).
inline constexpr int64_t kUnbounded = std::numeric_limits<int64_t>::max();

/// D(a || p) in nats with 0 ln 0 = 0. Returns +inf when p is 0 or 1 and
/// a != p.
double kl_divergence(double a, double p);

/// Pr[X <= k] for X ~ Bin(t, p).
double binomial_cdf(int64_t t, int64_t k, double p);
/// Pr[X >= k + 1] for X ~ Bin(t, p).
double exact_binomial_tail(int64_t t, int64_t k, double p);
/// exp(-t D((k + 1) / t || p)); 0 when k >= t.
double chernoff_bound(int64_t t, int64_t k, double p);

struct TruncationPlan {
    int64_t t;
    double p_magic;
    double delta1;
    /// Largest number of magic draws kept.
    int64_t k;
};

/// Smallest k >= t p_magic with D((k + 1) / t || p_magic) >= ln(1 / delta1) / t,
/// or k = t if no smaller k works.
TruncationPlan truncation_threshold(int64_t t, double p_magic, double delta1);

/// delta1 + Pr[m0 < X <= k] / Pr[X <= k] * sqrt(delta2) with exact binomial
/// probabilities. m0 may be kUnbounded.
double tvd_bound(const TruncationPlan &plan, int64_t m0, double delta2);

}  // namespace noisymagic

#endif
