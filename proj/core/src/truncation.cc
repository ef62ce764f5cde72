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

#include "noisymagic/truncation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace noisymagic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// a ln(a / p) with 0 ln 0 = 0; diff is a - p, passed in so that the
// complementary term can use -(a - p) instead of the rounded (1 - a) - (1 - p).
double xlogx_over(double a, double p, double diff) {
    if (a == 0.0) {
        return 0.0;
    }
    if (p == 0.0) {
        return kInf;
    }
    // log1p form keeps precision when a is close to p.
    return a * std::log1p(diff / p);
}

double log_pmf(int64_t t, int64_t j, double p) {
    double lc = std::lgamma(double(t) + 1) - std::lgamma(double(j) + 1) - std::lgamma(double(t - j) + 1);
    return lc + double(j) * std::log(p) + double(t - j) * std::log1p(-p);
}

// Sum of Pr[X = j] for j in [lo, hi], accumulated relative to the largest
// term.
double pmf_sum(int64_t t, int64_t lo, int64_t hi, double p) {
    lo = std::max<int64_t>(lo, 0);
    hi = std::min<int64_t>(hi, t);
    if (lo > hi) {
        return 0.0;
    }
    if (p == 0.0) {
        return lo == 0 ? 1.0 : 0.0;
    }
    if (p == 1.0) {
        return hi == t ? 1.0 : 0.0;
    }
    double mode = std::floor((double(t) + 1) * p);
    int64_t peak = std::clamp<int64_t>(static_cast<int64_t>(mode), lo, hi);
    double top = log_pmf(t, peak, p);
    double total = 0.0;
    for (int64_t j = lo; j <= hi; j++) {
        double term = std::exp(log_pmf(t, j, p) - top);
        total += term;
        // Terms decay geometrically away from the peak.
        if (j > peak && term < 1e-18 * total) {
            break;
        }
    }
    return std::min(1.0, total * std::exp(top));
}

void check_tkp(int64_t t, double p) {
    if (t < 0) {
        throw std::invalid_argument("t must be nonnegative");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
}

}  // namespace

double kl_divergence(double a, double p) {
    if (!(a >= 0.0 && a <= 1.0) || !(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("kl_divergence arguments must lie in [0, 1]");
    }
    if (a == p) {
        return 0.0;
    }
    double diff = a - p;
    double d = xlogx_over(a, p, diff) + xlogx_over(1 - a, 1 - p, -diff);
    return std::max(d, 0.0);
}

double binomial_cdf(int64_t t, int64_t k, double p) {
    check_tkp(t, p);
    if (k < 0) {
        return 0.0;
    }
    if (k >= t) {
        return 1.0;
    }
    if (double(k) < double(t) * p) {
        return pmf_sum(t, 0, k, p);
    }
    return 1.0 - pmf_sum(t, k + 1, t, p);
}

double exact_binomial_tail(int64_t t, int64_t k, double p) {
    check_tkp(t, p);
    if (k >= t) {
        return 0.0;
    }
    if (k < 0) {
        return 1.0;
    }
    if (double(k + 1) > double(t) * p) {
        return pmf_sum(t, k + 1, t, p);
    }
    return 1.0 - pmf_sum(t, 0, k, p);
}

double chernoff_bound(int64_t t, int64_t k, double p) {
    check_tkp(t, p);
    if (k >= t) {
        return 0.0;
    }
    double a = double(k + 1) / double(t);
    return std::exp(-double(t) * kl_divergence(a, p));
}

TruncationPlan truncation_threshold(int64_t t, double p_magic, double delta1) {
    if (t < 1) {
        throw std::invalid_argument("truncation needs t >= 1");
    }
    if (!(p_magic >= 0.0 && p_magic <= 1.0)) {
        throw std::invalid_argument("p_magic must lie in [0, 1]");
    }
    if (!(delta1 > 0.0 && delta1 < 1.0)) {
        throw std::invalid_argument("delta1 must lie in (0, 1)");
    }
    TruncationPlan plan{t, p_magic, delta1, t};
    if (p_magic == 1.0) {
        return plan;
    }
    double need = std::log(1.0 / delta1) / double(t);
    // ceil(t p) with slack for products like 100 * 0.07 = 7.000000000000001.
    double tp = double(t) * p_magic;
    auto lo = static_cast<int64_t>(std::ceil(tp - 1e-9 * std::max(1.0, tp)));
    lo = std::clamp<int64_t>(lo, 0, t);
    auto ok = [&](int64_t k) {
        if (k >= t) {
            return true;
        }
        return kl_divergence(double(k + 1) / double(t), p_magic) >= need;
    };
    // D((k + 1) / t || p) increases with k once (k + 1) / t > p, so the
    // predicate is monotone on [lo, t].
    int64_t hi = t;
    while (lo < hi) {
        int64_t mid = lo + (hi - lo) / 2;
        if (ok(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    plan.k = lo;
    return plan;
}

double tvd_bound(const TruncationPlan &plan, int64_t m0, double delta2) {
    if (m0 < 0) {
        throw std::invalid_argument("m0 must be nonnegative");
    }
    if (!(delta2 >= 0.0 && delta2 <= 1.0)) {
        throw std::invalid_argument("delta2 must lie in [0, 1]");
    }
    if (m0 >= plan.k || delta2 == 0.0) {
        return plan.delta1;
    }
    double kept = binomial_cdf(plan.t, plan.k, plan.p_magic);
    if (kept <= 0.0) {
        throw std::invalid_argument("Pr[X <= k] vanished; plan does not match p_magic");
    }
    double band = std::max(0.0, kept - binomial_cdf(plan.t, m0, plan.p_magic));
    return plan.delta1 + band / kept * std::sqrt(delta2);
}

}  // namespace noisymagic
