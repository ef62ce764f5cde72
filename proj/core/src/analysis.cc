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


#include "noisymagic/analysis.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "noisymagic/sparsify.h"
#include "noisymagic/truncation.h"

namespace noisymagic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int64_t kMaxT = int64_t{1} << 40;

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
}

void check_delta(double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1]");
    }
}

bool within(NoiseCase c, int64_t t, double p, double delta, double budget) {
    return worst_rank(c, t, p, delta).worst_rank <= budget;
}

}  // namespace

double nu_qubit() {
    return std::cos(std::numbers::pi / 8);
}

double nu_loss(double p) {
    check_p(p);
    return std::sqrt((2 * p * p - 2 * p + 1) / (3 * p * p - 2 * p + 1));
}

double nu_dep(double p) {
    check_p(p);
    double eta = 1 - 2 * p;
    return 1 / std::sqrt(1 + eta * eta * eta * eta);
}

double p_magic(NoiseCase c, double p) {
    check_p(p);
    switch (c) {
        case NoiseCase::kQubitDephasing: {
            double q = std::min(p, 1 - p);
            if (q >= qubit_critical_p()) {
                return 0.0;
            }
            return std::max(0.0, 1 - (2 + std::numbers::sqrt2) * q);
        }
        case NoiseCase::kFermionLoss:
            return 2 * p * p - 2 * p + 1;
        case NoiseCase::kFermionDephasing:
            return 1.0;
    }
    throw std::invalid_argument("unknown case");
}

double nu_of(NoiseCase c, double p) {
    switch (c) {
        case NoiseCase::kQubitDephasing:
            check_p(p);
            return nu_qubit();
        case NoiseCase::kFermionLoss:
            return nu_loss(p);
        case NoiseCase::kFermionDephasing:
            return nu_dep(p);
    }
    throw std::invalid_argument("unknown case");
}

CaseParams case_params(NoiseCase c) {
    CaseParams out{c, [c](double p) { return nu_of(c, p); }, [c](double p) { return p_magic(c, p); }, 0.0, 1.0, {}};
    switch (c) {
        case NoiseCase::kQubitDephasing:
            out.critical_points = {qubit_critical_p(), 1 - qubit_critical_p()};
            break;
        case NoiseCase::kFermionLoss:
            out.critical_points = {0.0};
            break;
        case NoiseCase::kFermionDephasing:
            out.critical_points = {0.5};
            break;
    }
    return out;
}

int64_t f_count(NoiseCase c, int64_t t, double p, double delta) {
    check_delta(delta);
    if (t < 1) {
        throw std::invalid_argument("t must be at least 1");
    }
    double pm = std::clamp(p_magic(c, p), 0.0, 1.0);
    // delta = 1 gives delta1 = 1/2, still inside (0, 1).
    return truncation_threshold(t, pm, delta / 2).k;
}

RankReport worst_rank(NoiseCase c, int64_t t, double p, double delta) {
    int64_t f = f_count(c, t, p, delta);
    double nu = nu_of(c, p);
    int64_t m0 = m0_threshold(nu, delta * delta / 4);
    RankReport r{t, p, delta, f, m0, 0.0, 0.0, 0.0, false};
    double log2_full = double(f);
    if (f <= m0) {
        r.log2_rank = log2_full;
    } else {
        double lg = std::log2(16.0 / (delta * delta)) - 2.0 * double(f) * std::log2(nu);
        if (lg < 52.0) {
            lg = std::log2(std::ceil(std::exp2(lg) - 1e-9));
        }
        r.sparsified = lg < log2_full;
        r.log2_rank = std::min(lg, log2_full);
    }
    r.worst_rank = r.log2_rank < 1024.0 ? std::exp2(r.log2_rank) : kInf;
    if (r.log2_rank < 52.0) {
        r.worst_rank = std::round(r.worst_rank);
    }
    r.bytes = kBytesPerCoefficient * r.worst_rank;
    return r;
}

double boundary_p(NoiseCase c, int64_t t, double delta, double budget) {
    if (!(budget >= 1.0)) {
        throw std::invalid_argument("budget must be at least 1");
    }
    // ok(lo) is false and ok(hi) true, or the reverse for loss.
    double lo = 0.0;
    double hi = 1.0;
    bool toward_hi = true;
    switch (c) {
        case NoiseCase::kQubitDephasing:
            hi = qubit_critical_p();
            break;
        case NoiseCase::kFermionDephasing:
            hi = 0.5;
            break;
        case NoiseCase::kFermionLoss:
            toward_hi = false;
            break;
    }
    auto ok = [&](double p) { return within(c, t, p, delta, budget); };
    double good = toward_hi ? hi : lo;
    double bad = toward_hi ? lo : hi;
    if (!ok(good)) {
        throw std::domain_error("budget " + format_double(budget) + " is not reachable for " +
                                std::string(case_name(c)) + " at t=" + std::to_string(t));
    }
    if (ok(bad)) {
        return bad;
    }
    for (int iter = 0; iter < 200 && std::abs(good - bad) > 1e-15; iter++) {
        double mid = 0.5 * (good + bad);
        if (mid == good || mid == bad) {
            break;
        }
        (ok(mid) ? good : bad) = mid;
    }
    return good;
}

int64_t boundary_t(NoiseCase c, double p, double delta, double budget) {
    if (!(budget >= 1.0)) {
        throw std::invalid_argument("budget must be at least 1");
    }
    auto ok = [&](int64_t t) { return within(c, t, p, delta, budget); };
    if (!ok(1)) {
        return 0;
    }
    int64_t good = 1;
    int64_t bad = 2;
    while (ok(bad)) {
        good = bad;
        if (bad >= kMaxT) {
            return kUnbounded;
        }
        bad *= 2;
    }
    while (bad - good > 1) {
        int64_t mid = good + (bad - good) / 2;
        (ok(mid) ? good : bad) = mid;
    }
    return good;
}

double memory_line(double bytes) {
    if (!(bytes >= kBytesPerCoefficient)) {
        throw std::invalid_argument("memory line needs at least 8 bytes");
    }
    return std::floor(bytes / kBytesPerCoefficient);
}

std::vector<double> p_grid(double from, double to, double step) {
    if (!(step > 0.0) || !(to >= from)) {
        throw std::invalid_argument("grid needs step > 0 and to >= from");
    }
    auto count = static_cast<int64_t>(std::floor((to - from) / step * (1 + 1e-9) + 1e-9));
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(count + 1));
    for (int64_t i = 0; i <= count; i++) {
        grid.push_back(std::min(to, from + double(i) * step));
    }
    return grid;
}

std::vector<RankReport> rank_curve(NoiseCase c, int64_t t, double delta, const std::vector<double> &grid) {
    std::vector<RankReport> rows;
    rows.reserve(grid.size());
    for (double p : grid) {
        rows.push_back(worst_rank(c, t, p, delta));
    }
    return rows;
}

std::string rank_curve_csv(const std::vector<RankReport> &rows) {
    std::ostringstream out;
    out << "p,f,m0,log2_rank,bytes\n";
    for (const auto &r : rows) {
        out << format_double(r.p) << ',' << r.f << ',' << (r.m0 == kUnbounded ? "inf" : std::to_string(r.m0)) << ','
            << format_double(r.log2_rank) << ',' << format_double(r.bytes) << '\n';
    }
    return out.str();
}

std::vector<Crossing> find_crossings(const std::vector<RankReport> &rows, double bytes_line) {
    std::vector<Crossing> out;
    for (size_t i = 1; i < rows.size(); i++) {
        bool before = rows[i - 1].bytes > bytes_line;
        bool after = rows[i].bytes > bytes_line;
        if (before != after) {
            out.push_back({rows[i - 1].p, rows[i].p, rows[i - 1].log2_rank, rows[i].log2_rank});
        }
    }
    return out;
}

std::string format_double(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace noisymagic
