#pragma once

#include <json.hpp>
#include <optional>
#include <string>

namespace hopfcyc {

/// Batch configuration; one CLI invocation = one RunConfig.
struct RunConfig {
    std::string command;           // verify-axioms | verify-hopf | hochschild | cyclic |
                                   // karoubi | resolution | maps | hp-commutative
    std::string instance;          // e.g. "group:Z3", "uqsl2"
    std::string pair = "epsilon,1";
    std::string field = "Q";
    int n_max = 3;
    long degree_bound = 3;
    long weight_cap = 3;
    bool unchecked = false;
    bool cc_guard = false;

    // resolution options
    std::string resolution_name;
    int resolution_cap = 8;
    bool res_verify = false;
    bool res_base_change = false;
    bool res_homotopy = false;
    bool res_lift = false;
    int lift_cap = 2;
    int lmax = 2, dmax = 2;
    bool raw_transcription = false;       // skip the errata ledger
    std::string assignment = "eps-delta"; // base-change factor assignment

    // maps options
    std::string map_name;   // gamma | theta | pi | psi | maclane
    std::string sigma = "1";

    std::string data_dir;   // defaults to the build-time data directory
    std::string out_path;   // "-" or empty = stdout
    std::string csv_path;
};

struct RunResult {
    nlohmann::ordered_json report;
    int exit_code = 0;  // 0 pass, 1 check failure, 2 config error
};

/// Execute a batch command. Config errors surface as exit code 2 with an
/// "error" field in the report; check failures as exit code 1 with witnesses.
RunResult run_command(const RunConfig& cfg);

/// Stable serialization used for files and golden tests.
std::string render_report(const nlohmann::ordered_json& j);

/// Optional CSV table for homology dimension results.
std::string render_csv(const nlohmann::ordered_json& j);

}  // namespace hopfcyc
