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

#ifndef RQC_STATS_HPP
#define RQC_STATS_HPP

#include <json.hpp>
#include <string>

#include "rqc/aes128.hpp"
#include "rqc/breakdown.hpp"
#include "rqc/circuit.hpp"
#include "rqc/saes.hpp"

namespace rqc {

inline constexpr const char *kStatsSchema = "rqc-stats/1";

// Per-SubBytes CNOT count of the S-AES configuration that reaches 364 in total.
constexpr uint64_t kSaesTargetSboxCnot = 23;
constexpr uint64_t kSaesTargetCnot = 364;

nlohmann::ordered_json report_json(const ResourceReport &r);
nlohmann::ordered_json breakdown_json(const Breakdown &b);

nlohmann::ordered_json saes_stats(const saes::SaesBuild &b);
nlohmann::ordered_json aes128_stats(const aes::AesBuild &b);
nlohmann::ordered_json estimate_stats(const aes::CostModel &model);
nlohmann::ordered_json circuit_stats(const Circuit &c);

std::string stats_table(const nlohmann::ordered_json &doc);

}  // namespace rqc

#endif
