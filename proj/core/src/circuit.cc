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

#include "noisymagic/circuit.h"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace noisymagic {

namespace {

struct OpInfo {
    OpKind kind;
    std::string_view name;
    size_t arity;
};

constexpr std::array<OpInfo, 12> kOps{{
    {OpKind::kX, "X", 1},
    {OpKind::kY, "Y", 1},
    {OpKind::kZ, "Z", 1},
    {OpKind::kH, "H", 1},
    {OpKind::kS, "S", 1},
    {OpKind::kSdg, "S_DAG", 1},
    {OpKind::kCX, "CX", 2},
    {OpKind::kCZ, "CZ", 2},
    {OpKind::kSwap, "SWAP", 2},
    {OpKind::kM, "M", 1},
    {OpKind::kT, "T", 1},
    {OpKind::kTdg, "T_DAG", 1},
}};

const OpInfo &info(OpKind kind) {
    for (const auto &op : kOps) {
        if (op.kind == kind) {
            return op;
        }
    }
    throw std::logic_error("unknown OpKind");
}

std::string join_condition(const std::vector<std::string> &names) {
    std::string out;
    for (size_t k = 0; k < names.size(); k++) {
        if (k) {
            out += '^';
        }
        out += names[k];
    }
    return out;
}

}  // namespace

std::string_view op_name(OpKind kind) {
    return info(kind).name;
}

std::optional<OpKind> parse_op_name(std::string_view name) {
    for (const auto &op : kOps) {
        if (op.name == name) {
            return op.kind;
        }
    }
    // Common aliases.
    if (name == "CNOT") {
        return OpKind::kCX;
    }
    if (name == "SDG" || name == "Sdg" || name == "S_dag") {
        return OpKind::kSdg;
    }
    if (name == "TDG" || name == "Tdg" || name == "T_dag") {
        return OpKind::kTdg;
    }
    if (name == "MZ") {
        return OpKind::kM;
    }
    return std::nullopt;
}

size_t op_arity(OpKind kind) {
    return info(kind).arity;
}

bool is_clifford(OpKind kind) {
    return kind != OpKind::kM && kind != OpKind::kT && kind != OpKind::kTdg;
}

bool CircuitIR::has_t_gates() const {
    return std::any_of(ops.begin(), ops.end(), [](const Operation &op) {
        return op.kind == OpKind::kT || op.kind == OpKind::kTdg;
    });
}

void append_random_clifford(CircuitIR &circuit, size_t first, size_t count, size_t depth, Rng &rng) {
    static constexpr OpKind kOne[] = {OpKind::kH, OpKind::kS, OpKind::kSdg, OpKind::kX, OpKind::kY, OpKind::kZ};
    static constexpr OpKind kTwo[] = {OpKind::kCX, OpKind::kCZ, OpKind::kSwap};
    if (count == 0) {
        throw std::invalid_argument("append_random_clifford needs at least one wire");
    }
    size_t choices = count >= 2 ? 9 : 6;
    for (size_t g = 0; g < depth; g++) {
        size_t pick = static_cast<size_t>(rng() % choices);
        size_t a = first + static_cast<size_t>(rng() % count);
        if (pick < 6) {
            circuit.ops.push_back({kOne[pick], {a}, {}, {}, {}, 0});
            continue;
        }
        size_t b = first + static_cast<size_t>(rng() % (count - 1));
        if (b >= a) {
            b++;
        }
        circuit.ops.push_back({kTwo[pick - 6], {a, b}, {}, {}, {}, 0});
    }
}

std::vector<std::string> parse_condition(std::string_view text) {
    std::vector<std::string> names;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('^', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view piece = text.substr(start, end - start);
        while (!piece.empty() && piece.front() == ' ') {
            piece.remove_prefix(1);
        }
        while (!piece.empty() && piece.back() == ' ') {
            piece.remove_suffix(1);
        }
        if (piece.empty()) {
            throw std::invalid_argument("empty record name in condition '" + std::string(text) + "'");
        }
        names.emplace_back(piece);
        start = end + 1;
    }
    return names;
}

void CircuitIR::finalize() {
    if (wires_per_copy == 0) {
        throw std::invalid_argument("wires_per_copy must be positive");
    }
    std::map<std::string, size_t> slot_of;
    for (size_t k = 0; k < records.size(); k++) {
        if (!slot_of.emplace(records[k], k).second) {
            throw std::invalid_argument("duplicate record name '" + records[k] + "'");
        }
    }
    std::vector<bool> written(records.size(), false);
    size_t q = num_wires();
    for (size_t i = 0; i < ops.size(); i++) {
        Operation &op = ops[i];
        std::string where = "operation " + std::to_string(i) + " (" + std::string(op_name(op.kind)) + ")";
        if (op.wires.size() != op_arity(op.kind)) {
            throw std::invalid_argument(where + " expects " + std::to_string(op_arity(op.kind)) + " wire(s)");
        }
        for (size_t w : op.wires) {
            if (w >= q) {
                throw std::invalid_argument(where + " wire " + std::to_string(w) + " out of range");
            }
        }
        if (op.wires.size() == 2 && op.wires[0] == op.wires[1]) {
            throw std::invalid_argument(where + " needs two distinct wires");
        }
        op.condition_slots.clear();
        for (const auto &name : op.condition) {
            auto it = slot_of.find(name);
            if (it == slot_of.end() || !written[it->second]) {
                throw std::invalid_argument(where + " condition uses record '" + name + "' before it is measured");
            }
            op.condition_slots.push_back(it->second);
        }
        if (op.kind == OpKind::kM) {
            if (op.record.empty()) {
                op.record = "m" + std::to_string(i);
            }
            auto it = slot_of.find(op.record);
            if (it == slot_of.end()) {
                it = slot_of.emplace(op.record, records.size()).first;
                records.push_back(op.record);
                written.push_back(false);
            }
            if (written[it->second]) {
                throw std::invalid_argument(where + " writes record '" + op.record + "' twice");
            }
            written[it->second] = true;
            op.record_slot = it->second;
        } else if (!op.record.empty()) {
            throw std::invalid_argument(where + " only M operations write records");
        }
    }
    for (size_t w : final_measure) {
        if (w >= q) {
            throw std::invalid_argument("final_measure wire " + std::to_string(w) + " out of range");
        }
    }
}

CircuitIR parse_circuit_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("circuit JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("circuit JSON must be an object");
    }
    CircuitIR circuit;
    try {
        circuit.n = doc.at("n").get<size_t>();
        circuit.t = doc.value("t", size_t{0});
        circuit.wires_per_copy = doc.value("wires_per_copy", size_t{1});
        if (doc.contains("records")) {
            circuit.records = doc.at("records").get<std::vector<std::string>>();
        }
        for (const auto &g : doc.value("gates", json::array())) {
            std::string name = g.at("op").get<std::string>();
            auto kind = parse_op_name(name);
            if (!kind) {
                throw std::invalid_argument("unsupported op '" + name + "'");
            }
            Operation op{*kind, g.at("wires").get<std::vector<size_t>>(), {}, {}, {}, 0};
            if (g.contains("cond")) {
                op.condition = parse_condition(g.at("cond").get<std::string>());
            }
            if (g.contains("record")) {
                op.record = g.at("record").get<std::string>();
            }
            circuit.ops.push_back(std::move(op));
        }
        circuit.final_measure = doc.value("final_measure", std::vector<size_t>{});
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("circuit JSON schema error: ") + e.what());
    }
    circuit.finalize();
    return circuit;
}

std::string circuit_to_json(const CircuitIR &circuit) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["n"] = circuit.n;
    doc["t"] = circuit.t;
    if (circuit.wires_per_copy != 1) {
        doc["wires_per_copy"] = circuit.wires_per_copy;
    }
    ordered_json gates = ordered_json::array();
    for (const auto &op : circuit.ops) {
        ordered_json g;
        g["op"] = op_name(op.kind);
        g["wires"] = op.wires;
        if (!op.condition.empty()) {
            g["cond"] = join_condition(op.condition);
        }
        if (op.kind == OpKind::kM) {
            g["record"] = op.record;
        }
        gates.push_back(std::move(g));
    }
    doc["gates"] = std::move(gates);
    doc["records"] = circuit.records;
    doc["final_measure"] = circuit.final_measure;
    return doc.dump(2) + "\n";
}

}  // namespace noisymagic
