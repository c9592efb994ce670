// Copyright 2026 The rqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rqc/breakdown.hpp"

namespace rqc {

void Breakdown::add(std::string_view name, std::span<const Gate> gates) {
    ComponentTally *slot = nullptr;
    for (auto &c : components_) {
        if (c.name == name) {
            slot = &c;
        }
    }
    if (slot == nullptr) {
        components_.push_back({std::string(name), 0, {}});
        slot = &components_.back();
    }
    ResourceReport r = count_gates(gates);
    slot->applications++;
    slot->total.toffoli += r.toffoli;
    slot->total.cnot += r.cnot;
    slot->total.not_ += r.not_;
}

const ComponentTally *Breakdown::find(std::string_view name) const {
    for (const auto &c : components_) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

uint64_t Breakdown::applications(std::string_view name) const {
    const auto *c = find(name);
    return c ? c->applications : 0;
}

ResourceReport Breakdown::total() const {
    ResourceReport r;
    for (const auto &c : components_) {
        r.toffoli += c.total.toffoli;
        r.cnot += c.total.cnot;
        r.not_ += c.total.not_;
    }
    return r;
}

void Emitter::emit(std::string_view name, const Circuit &part, std::span<const Wire> wire_map) {
    size_t before = target_.size();
    target_.append_mapped(part, wire_map);
    breakdown_.add(name, std::span<const Gate>(target_.gates()).subspan(before));
}

void Emitter::emit(std::string_view name, const Circuit &part) {
    size_t before = target_.size();
    target_.append_circuit(part);
    breakdown_.add(name, std::span<const Gate>(target_.gates()).subspan(before));
}

}  // namespace rqc
