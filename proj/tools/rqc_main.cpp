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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rqc/aes128.hpp"
#include "rqc/reference.hpp"
#include "rqc/rqc_format.hpp"
#include "rqc/saes.hpp"
#include "rqc/stats.hpp"
#include "rqc/truth_tables.hpp"
#include "rqc/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string cipher;
    std::string key;
    std::string plaintext;
    std::string schedule = "zigzag";
    std::string format;
    std::string out;
    std::string file;
    std::string component;
    size_t trials = 20;
    uint64_t seed = 1;
    unsigned threads = 0;
};

rqc::Cipher parse_cipher(const std::string &name) {
    if (name == "saes") return rqc::Cipher::SAES;
    if (name == "aes128") return rqc::Cipher::AES128;
    throw UsageError("--cipher must be saes or aes128");
}

std::string default_hex(rqc::Cipher c) { return c == rqc::Cipher::SAES ? std::string(4, 'f') : std::string(32, 'f'); }

rqc::Circuit build(rqc::Cipher c, const std::string &key, const std::string &pt) {
    if (c == rqc::Cipher::SAES) return rqc::saes::build_saes(rqc::ref::parse_u16(key), rqc::ref::parse_u16(pt)).circuit;
    return rqc::aes::build_aes128(rqc::ref::parse_block128(key), rqc::ref::parse_block128(pt)).circuit;
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + path);
}

int cmd_build(const Options &o) {
    if (o.cipher.empty() || o.key.empty() || o.plaintext.empty()) throw UsageError("build needs --cipher, --key and --plaintext");
    auto c = parse_cipher(o.cipher);
    write_output(rqc::write_rqc(build(c, o.key, o.plaintext)), o.out);
    return kOk;
}

int cmd_stats(const Options &o) {
    nlohmann::ordered_json doc;
    if (!o.file.empty()) {
        doc = rqc::circuit_stats(rqc::load_rqc(o.file));
    } else {
        if (o.cipher.empty()) throw UsageError("stats needs a circuit file or --cipher");
        auto c = parse_cipher(o.cipher);
        std::string key = o.key.empty() ? default_hex(c) : o.key;
        std::string pt = o.plaintext.empty() ? default_hex(c) : o.plaintext;
        if (c == rqc::Cipher::SAES) {
            doc = rqc::saes_stats(rqc::saes::build_saes(rqc::ref::parse_u16(key), rqc::ref::parse_u16(pt)));
        } else if (o.schedule == "zigzag") {
            doc = rqc::aes128_stats(rqc::aes::build_aes128(rqc::ref::parse_block128(key), rqc::ref::parse_block128(pt)));
        } else if (o.schedule == "new-zigzag-estimate") {
            doc = rqc::estimate_stats(rqc::aes::new_zigzag_cost_model());
        } else {
            throw UsageError("--schedule must be zigzag or new-zigzag-estimate");
        }
    }
    if (o.format.empty() || o.format == "text") {
        std::cout << rqc::stats_table(doc) << "\n" << doc.dump(2) << "\n";
    } else if (o.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        throw UsageError("--format for stats must be text or json");
    }
    return kOk;
}

int cmd_simulate(const Options &o) {
    if (!o.file.empty()) {
        if (!o.cipher.empty() || !o.key.empty() || !o.plaintext.empty()) {
            throw UsageError("simulate takes either a circuit file or --cipher/--key/--plaintext");
        }
        std::cout << rqc::simulate_file(rqc::load_rqc(o.file)) << "\n";
        return kOk;
    }
    if (o.cipher.empty() || o.key.empty() || o.plaintext.empty()) {
        throw UsageError("simulate needs a circuit file or --cipher, --key and --plaintext");
    }
    auto c = parse_cipher(o.cipher);
    if (c == rqc::Cipher::SAES) {
        std::cout << rqc::ref::to_hex16(rqc::simulate_saes(rqc::ref::parse_u16(o.key), rqc::ref::parse_u16(o.plaintext)))
                  << "\n";
    } else {
        auto run = rqc::simulate_aes128(rqc::ref::parse_block128(o.key), rqc::ref::parse_block128(o.plaintext));
        std::cout << rqc::ref::to_hex(run.ciphertext) << "\n";
        if (!run.zero_checks_ok()) {
            std::cerr << "zero-block check failed\n";
            return kFail;
        }
    }
    return kOk;
}

int cmd_verify(const Options &o) {
    if (o.cipher.empty()) throw UsageError("verify needs --cipher");
    if (o.trials < 1) throw UsageError("--trials must be at least 1");
    auto summary = rqc::verify(parse_cipher(o.cipher), o.trials, o.seed, o.threads);
    for (const auto &t : summary.trials) {
        std::cout << "trial " << t.index << " key=" << t.key << " plaintext=" << t.plaintext << " ciphertext=" << t.actual
                  << (t.ok ? " ok" : " FAIL") << "\n";
    }
    if (const auto *f = summary.first_failure()) {
        std::cout << "first mismatch:\n" << f->transcript() << "\n";
    }
    std::cout << rqc::cipher_name(summary.cipher) << ": " << summary.trials.size() - summary.failures() << "/"
              << summary.trials.size() << " trials passed (seed " << summary.seed << ")"
              << (summary.cipher == rqc::Cipher::AES128 ? ", zero-block checks included" : "") << "\n";
    std::cout << (summary.passed() ? "PASS" : "FAIL") << "\n";
    return summary.passed() ? kOk : kFail;
}

int cmd_export(const Options &o) {
    if (o.file.empty()) throw UsageError("export needs a circuit file");
    std::string format = o.format.empty() ? "rqc" : o.format;
    if (format != "rqc" && format != "qasm") throw UsageError("--format for export must be rqc or qasm");
    auto c = rqc::load_rqc(o.file);
    write_output(format == "rqc" ? rqc::write_rqc(c) : rqc::write_qasm(c), o.out);
    return kOk;
}

int cmd_truth_table(const Options &o) {
    if (o.component.empty()) throw UsageError("truth-table needs a component");
    rqc::ComponentCheck check;
    try {
        check = rqc::check_component(o.component);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    for (const auto &row : check.rows) std::cout << row << "\n";
    for (const auto &note : check.notes) std::cout << "# " << note << "\n";
    std::cout << check.component << ": " << check.checked - check.mismatches << "/" << check.checked << " match"
              << ", inputs " << (check.inputs_preserved ? "preserved" : "CHANGED") << ", ancillas "
              << (check.ancillas_restored ? "restored" : "DIRTY") << "\n";
    std::cout << (check.pass() ? "PASS" : "FAIL") << "\n";
    return check.pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Reversible circuits for AES-128 and S-AES"};
    app.require_subcommand(1);
    Options o;

    auto add_cipher = [&](CLI::App *sub) {
        sub->add_option("--cipher", o.cipher, "saes or aes128");
        sub->add_option("--key", o.key, "key as hex (4 or 32 digits)");
        sub->add_option("--plaintext", o.plaintext, "plaintext as hex (4 or 32 digits)");
    };

    auto *build_cmd = app.add_subcommand("build", "Build a cipher circuit and write it as .rqc");
    add_cipher(build_cmd);
    build_cmd->add_option("--out", o.out, "output path (default: standard output)");

    auto *stats_cmd = app.add_subcommand("stats", "Resource report for a circuit file or a cipher");
    stats_cmd->add_option("file", o.file, "circuit file");
    add_cipher(stats_cmd);
    stats_cmd->add_option("--schedule", o.schedule, "zigzag or new-zigzag-estimate");
    stats_cmd->add_option("--format", o.format, "text or json");

    auto *sim_cmd = app.add_subcommand("simulate", "Simulate and print the output register as hex");
    sim_cmd->add_option("file", o.file, "circuit file, run from the all-zero state");
    add_cipher(sim_cmd);

    auto *verify_cmd = app.add_subcommand("verify", "Compare seeded random trials against the reference");
    verify_cmd->add_option("--cipher", o.cipher, "saes or aes128")->required();
    verify_cmd->add_option("--trials", o.trials, "number of trials");
    verify_cmd->add_option("--seed", o.seed, "random seed");
    verify_cmd->add_option("--threads", o.threads, "worker threads (0: hardware concurrency)");

    auto *export_cmd = app.add_subcommand("export", "Re-emit a circuit file as rqc or qasm");
    export_cmd->add_option("file", o.file, "circuit file")->required();
    export_cmd->add_option("--format", o.format, "rqc or qasm");
    export_cmd->add_option("--out", o.out, "output path (default: standard output)");

    auto *tt_cmd = app.add_subcommand("truth-table", "Exhaustive table of a component against its oracle");
    tt_cmd->add_option("component", o.component, "gf16inv, saes-sbox, aes-sbox, aes-sbox-xor, basis, merged-affine or affine-fix")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (build_cmd->parsed()) return cmd_build(o);
        if (stats_cmd->parsed()) return cmd_stats(o);
        if (sim_cmd->parsed()) return cmd_simulate(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
        if (export_cmd->parsed()) return cmd_export(o);
        if (tt_cmd->parsed()) return cmd_truth_table(o);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const rqc::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
