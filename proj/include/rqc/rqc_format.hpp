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

#ifndef RQC_RQC_FORMAT_HPP
#define RQC_RQC_FORMAT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rqc/circuit.hpp"

namespace rqc {

class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    size_t line() const { return line_; }

   private:
    size_t line_;
};

// Registers must occupy a contiguous wire range. When the logical order
// differs from ascending wire order it is written as "#! order <name> w..."
// after the reg line; plain readers skip it as a comment.
std::string write_rqc(const Circuit &c);
Circuit parse_rqc(std::string_view text);

Circuit load_rqc(const std::filesystem::path &path);
// Throws std::runtime_error if the file cannot be written.
void save_rqc(const Circuit &c, const std::filesystem::path &path);

constexpr size_t kQasmHeaderLines = 3;
std::string write_qasm(const Circuit &c);

}  // namespace rqc

#endif
