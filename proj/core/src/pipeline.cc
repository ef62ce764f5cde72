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


#include "noisymagic/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "noisymagic/dense_oracle.h"
#include "noisymagic/sparsify.h"

namespace noisymagic {

namespace {

// Streams at or above this index seed the shared subspace cache, well away
// from per-shot streams.
constexpr uint64_t kCacheStream = uint64_t{1} << 63;

std::vector<double> cumulative_weights(const Ensemble &ensemble) {
    std::vector<double> cum;
    cum.reserve(ensemble.entries.size());
    double total = 0.0;
    for (const auto &e : ensemble.entries) {
        total += e.weight;
        cum.push_back(total);
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("ensemble has no positive weight");
    }
    return cum;
}

size_t pick(const std::vector<double> &cum, Rng &rng) {
    double u = uniform01(rng) * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    size_t idx = static_cast<size_t>(it - cum.begin());
    return std::min(idx, cum.size() - 1);
}

const PauliEigenstate &qubit_state_of(const EnsembleEntry &entry) {
    const auto *ket = std::get_if<ResourcelessKet>(&entry.member);
    const auto *s = ket ? std::get_if<PauliEigenstate>(&ket->state) : nullptr;
    if (!s) {
        throw std::invalid_argument("entry '" + entry.label() + "' is not a single-qubit stabilizer state");
    }
    return *s;
}

}  // namespace

uint64_t default_seed() {
    if (const char *env = std::getenv("NOISYMAGIC_SEED")) {
        try {
            size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    return kDefaultSeed;
}

double PipelineOptions::effective_delta1() const {
    return delta1.value_or(delta / 2);
}

double PipelineOptions::effective_delta2() const {
    return delta2.value_or(delta * delta / 4);
}

DrawnInput draw_input(const Ensemble &ensemble, const TruncationPlan &plan, Rng &rng) {
    auto cum = cumulative_weights(ensemble);
    DrawnInput out;
    out.picks.resize(static_cast<size_t>(plan.t));
    while (true) {
        out.m = 0;
        for (auto &idx : out.picks) {
            idx = pick(cum, rng);
            out.m += ensemble.entries[idx].is_magic();
        }
        if (static_cast<int64_t>(out.m) <= plan.k) {
            return out;
        }
        out.resamples++;
    }
}

Assembly assemble(const Ensemble &ensemble, const DrawnInput &input, size_t n, double delta2, Rng &rng,
                  const SubspaceZ2 *fixed_subspace) {
    size_t t = input.picks.size();
    std::vector<PauliEigenstate> background(n + t, PauliEigenstate::kZero);
    std::vector<MagicForm> forms;
    std::vector<size_t> magic_wires;
    for (size_t i = 0; i < t; i++) {
        const auto &entry = ensemble.entries.at(input.picks[i]);
        if (entry.is_magic()) {
            forms.push_back(std::get<MagicForm>(entry.member));
            magic_wires.push_back(n + i);
        } else {
            background[n + i] = qubit_state_of(entry);
        }
    }
    Assembly out{StabSuperposition{n + t, {}}, false, kUnbounded, 0};
    size_t m = forms.size();
    if (m == 0) {
        out.state.terms.push_back({1.0, StabilizerState::product(background)});
        return out;
    }
    out.m0 = m0_threshold(forms[0].nu, delta2);
    SubspaceZ2 subspace;
    if (static_cast<int64_t>(m) <= out.m0) {
        subspace = SubspaceZ2::full(m);
    } else if (fixed_subspace) {
        subspace = *fixed_subspace;
        out.sparsified = subspace.dim() < m;
    } else {
        SparsifyResult found = find_subspace(m, forms[0].nu, delta2, rng);
        out.draws = found.draws;
        out.sparsified = !found.exact;
        subspace = std::move(found.subspace);
    }
    ProductSuperposition sup = expand_superposition(subspace, forms);
    out.state = to_stabilizer(sup, magic_wires, background);
    return out;
}

CircuitIR gadgetize(const CircuitIR &circuit) {
    if (circuit.wires_per_copy != 1) {
        throw std::invalid_argument("gadgetize needs wires_per_copy = 1");
    }
    CircuitIR out = circuit;
    out.ops.clear();
    size_t base = circuit.n + circuit.t;
    size_t added = 0;
    auto fresh_record = [&](size_t idx) {
        std::string name = "t" + std::to_string(idx);
        while (std::find(out.records.begin(), out.records.end(), name) != out.records.end()) {
            name = "_" + name;
        }
        out.records.push_back(name);
        return name;
    };
    for (const auto &op : circuit.ops) {
        if (op.kind != OpKind::kT && op.kind != OpKind::kTdg) {
            Operation copy = op;
            // Later ops read records by name; slots are recomputed below.
            copy.condition_slots.clear();
            out.ops.push_back(std::move(copy));
            continue;
        }
        if (!op.condition.empty()) {
            throw std::invalid_argument("gadgetize: conditional T gates are not supported");
        }
        size_t d = op.wires.at(0);
        size_t mw = base + added;
        std::string rec = fresh_record(added);
        added++;
        out.ops.push_back({OpKind::kSdg, {mw}, {}, {}, {}, 0});
        out.ops.push_back({OpKind::kH, {mw}, {}, {}, {}, 0});
        out.ops.push_back({OpKind::kCX, {d, mw}, {}, {}, {}, 0});
        out.ops.push_back({OpKind::kM, {mw}, {}, rec, {}, 0});
        out.ops.push_back({OpKind::kS, {d}, {rec}, {}, {}, 0});
        if (op.kind == OpKind::kTdg) {
            out.ops.push_back({OpKind::kSdg, {d}, {}, {}, {}, 0});
        }
    }
    out.t = circuit.t + added;
    out.finalize();
    return out;
}

PipelineResult run(const CircuitIR &input_circuit, NoiseCase noise_case, double p, const PipelineOptions &options) {
    if (noise_case != NoiseCase::kQubitDephasing) {
        throw std::invalid_argument("sampling supports only the qubit-dephasing case; " +
                                    std::string(case_name(noise_case)) + " has no outcome backend");
    }
    if (!(options.delta > 0.0 && options.delta <= 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1]");
    }
    double delta1 = options.effective_delta1();
    double delta2 = options.effective_delta2();
    if (!(delta1 > 0.0 && delta1 < 1.0) || !(delta2 > 0.0 && delta2 < 1.0)) {
        throw std::invalid_argument("delta1 and delta2 must lie in (0, 1)");
    }
    if (input_circuit.wires_per_copy != 1) {
        throw std::invalid_argument("qubit sampling needs wires_per_copy = 1");
    }
    CircuitIR circuit = input_circuit.has_t_gates() ? gadgetize(input_circuit) : input_circuit;
    circuit.finalize();

    const Ensemble ensemble = qubit_dephasing_ensemble(p);
    const int64_t t = static_cast<int64_t>(circuit.t);
    PipelineResult result{TruncationPlan{t, ensemble.p_magic(), delta1, 0}, kUnbounded, {}};
    if (t > 0) {
        result.plan = truncation_threshold(t, std::clamp(ensemble.p_magic(), 0.0, 1.0), delta1);
    }
    for (const auto &e : ensemble.entries) {
        if (e.is_magic()) {
            result.m0 = m0_threshold(std::get<MagicForm>(e.member).nu, delta2);
            break;
        }
    }

    std::mutex cache_mutex;
    std::unordered_map<size_t, SubspaceZ2> cache;
    auto cached_subspace = [&](size_t m) -> const SubspaceZ2 * {
        if (!options.reuse_subspace || static_cast<int64_t>(m) <= result.m0) {
            return nullptr;
        }
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(m);
        if (it == cache.end()) {
            Rng rng = stream_rng(options.seed, kCacheStream + m);
            double nu = std::cos(std::numbers::pi / 8);
            it = cache.emplace(m, find_subspace(m, nu, delta2, rng).subspace).first;
        }
        return &it->second;
    };

    result.traces.resize(options.shots);
    auto one_shot = [&](size_t shot) {
        Rng rng = stream_rng(options.seed, shot);
        SampleTrace &trace = result.traces[shot];
        trace.shot = shot;
        for (size_t attempt = 0;; attempt++) {
            DrawnInput drawn = draw_input(ensemble, result.plan, rng);
            size_t m = drawn.m;
            Assembly assembled = assemble(ensemble, drawn, circuit.n, delta2, rng, cached_subspace(m));
            trace.drawn.clear();
            for (size_t idx : drawn.picks) {
                trace.drawn.push_back(ensemble.entries[idx].label());
            }
            trace.m = m;
            trace.resamples += drawn.resamples;
            trace.sparsified = assembled.sparsified;
            trace.chi = assembled.state.chi();
            try {
                MeasurementResult mr = sample_outcomes(std::move(assembled.state), circuit, rng);
                trace.outcome = mr.outcome.str();
                trace.record = std::move(mr.record);
                trace.restarts = attempt;
                return;
            } catch (const DegenerateSuperposition &) {
                if (attempt + 1 >= options.max_degenerate_restarts) {
                    throw;
                }
            }
        }
    };

    size_t workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<size_t>(options.shots, 1));
    if (workers <= 1) {
        for (size_t shot = 0; shot < options.shots; shot++) {
            one_shot(shot);
        }
        return result;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            while (true) {
                size_t shot = next.fetch_add(1);
                if (shot >= options.shots) {
                    return;
                }
                try {
                    one_shot(shot);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next.store(options.shots);
                    return;
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return result;
}

std::string trace_to_json(const SampleTrace &trace) {
    nlohmann::ordered_json j;
    j["shot"] = trace.shot;
    j["drawn"] = trace.drawn;
    j["m"] = trace.m;
    j["resamples"] = trace.resamples;
    j["restarts"] = trace.restarts;
    j["sparsified"] = trace.sparsified;
    j["chi"] = trace.chi;
    j["outcome"] = trace.outcome;
    std::vector<int> bits(trace.record.begin(), trace.record.end());
    j["record"] = bits;
    return j.dump();
}

std::vector<double> dense_reference_distribution(const CircuitIR &input_circuit, double p) {
    CircuitIR circuit = input_circuit.has_t_gates() ? gadgetize(input_circuit) : input_circuit;
    circuit.finalize();
    DensityMatrix zero = DensityMatrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    DensityMatrix noisy = target_density_matrix(NoiseCase::kQubitDephasing, p);
    std::vector<DensityMatrix> inputs(circuit.num_wires(), zero);
    for (size_t w = circuit.n; w < inputs.size(); w++) {
        inputs[w] = noisy;
    }
    return dense_output_distribution(circuit, inputs);
}

std::vector<double> empirical_distribution(const std::vector<SampleTrace> &traces, size_t num_bits) {
    std::vector<double> freq(size_t{1} << num_bits, 0.0);
    for (const auto &trace : traces) {
        if (trace.outcome.size() != num_bits) {
            throw std::invalid_argument("trace outcome length differs from num_bits");
        }
        size_t idx = 0;
        for (char c : trace.outcome) {
            idx = (idx << 1) | (c == '1');
        }
        freq[idx] += 1.0;
    }
    for (auto &f : freq) {
        f /= double(std::max<size_t>(traces.size(), 1));
    }
    return freq;
}

}  // namespace noisymagic
