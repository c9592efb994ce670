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

#ifndef RQC_BREAKDOWN_HPP
#define RQC_BREAKDOWN_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rqc/circuit.hpp"

namespace rqc {

struct ComponentTally {
    std::string name;
    uint64_t applications = 0;
    ResourceReport total;
};

// Per-component gate totals collected while a builder emits a circuit.
class Breakdown {
   public:
    void add(std::string_view name, std::span<const Gate> gates);
    void add(std::string_view name, const Circuit &c) { add(name, c.gates()); }
    const std::vector<ComponentTally> &components() const { return components_; }
    const ComponentTally *find(std::string_view name) const;
    uint64_t applications(std::string_view name) const;
    ResourceReport total() const;

   private:
    std::vector<ComponentTally> components_;
};

// Appends sub-circuits to a target circuit and tallies them under a name.
class Emitter {
   public:
    Emitter(Circuit &target, Breakdown &breakdown) : target_(target), breakdown_(breakdown) {}

    void emit(std::string_view name, const Circuit &part, std::span<const Wire> wire_map);
    void emit(std::string_view name, const Circuit &part);
    Circuit &circuit() { return target_; }

   private:
    Circuit &target_;
    Breakdown &breakdown_;
};

}  // namespace rqc

#endif
