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

#ifndef RQC_TRUTH_TABLES_HPP
#define RQC_TRUTH_TABLES_HPP

#include <string>
#include <string_view>
#include <vector>

namespace rqc {

struct ComponentCheck {
    std::string component;
    std::vector<std::string> rows;  // printable table, one line per row
    size_t checked = 0;             // input patterns compared against the oracle
    size_t mismatches = 0;
    bool inputs_preserved = true;
    bool ancillas_restored = true;
    std::vector<std::string> notes;
    bool pass() const { return checked > 0 && mismatches == 0 && inputs_preserved && ancillas_restored; }
};

// gf16inv, saes-sbox, aes-sbox, aes-sbox-xor, basis, merged-affine, affine-fix
const std::vector<std::string> &component_names();
// Throws std::invalid_argument for an unknown component.
ComponentCheck check_component(std::string_view name);

}  // namespace rqc

#endif
