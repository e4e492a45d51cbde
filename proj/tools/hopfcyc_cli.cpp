// Batch CLI: every subcommand runs one verification or computation and emits a
// JSON report (stdout by default). Exit code 0 = all checks passed, 1 = a
// check failed (witnesses are in the report), 2 = configuration error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "hopfcyc/report.hpp"

using hopfcyc::RunConfig;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_instance = true) {
    if (needs_instance)
        cmd->add_option("--instance", cfg.instance,
                        "group:Z2|Z3|Z4|S3|<table-file>, fungrp:<same>, tensor:<dimV>, laurent, "
                        "uqsl2, aslq2, presentation:<file>");
    cmd->add_option("--pair", cfg.pair, "modular pair, e.g. epsilon,1 or delta,1");
    cmd->add_option("--field", cfg.field, "Q | F<p> | Qq (default from HOPFCYC_FIELD or Q)");
    cmd->add_option("--n-max", cfg.n_max, "top level/degree of the computation");
    cmd->add_option("--degree", cfg.degree_bound, "basis degree bound for spanning words");
    cmd->add_option("--weight", cfg.weight_cap, "weight cap for graded instances");
    cmd->add_flag("--unchecked", cfg.unchecked, "skip the modular-pair/trace validation");
    cmd->add_option("--out", cfg.out_path, "report path ('-' = stdout)");
    cmd->add_option("--csv", cfg.csv_path, "also emit a CSV dimension table");
    cmd->add_option("--data-dir", cfg.data_dir, "directory with resolution/errata data files");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclic homology engine for Hopf algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("HOPFCYC_FIELD")) cfg.field = env;

    auto* verify_axioms = app.add_subcommand("verify-axioms", "cyclic/cocyclic identity suite");
    add_common(verify_axioms, cfg);
    verify_axioms->add_option("--module", cfg.map_name,
                              "hopf (default) | algebra | path | cm-cocyclic | comm-cocyclic");

    auto* verify_hopf = app.add_subcommand("verify-hopf", "Hopf axioms, flags, advertised pairs");
    add_common(verify_hopf, cfg);

    auto* hochschild = app.add_subcommand("hochschild", "Hochschild homology of the b-complex");
    add_common(hochschild, cfg);

    auto* cyclic = app.add_subcommand("cyclic", "cyclic homology HC_n with periodic report");
    add_common(cyclic, cfg);
    cyclic->add_flag("--cc-guard", cfg.cc_guard,
                     "also compute via the unnormalized CC bicomplex and compare");

    auto* karoubi = app.add_subcommand("karoubi", "HC vs direct sum of Hochschild groups");
    add_common(karoubi, cfg);

    auto* resolution = app.add_subcommand("resolution", "free resolution data operations");
    resolution->add_option("--name", cfg.resolution_name, "uqsl2 | aslq2")->required();
    resolution->add_option("--cap", cfg.resolution_cap, "homological degree cap");
    resolution->add_flag("--verify", cfg.res_verify, "check d.d = 0 and the augmentation");
    resolution->add_flag("--base-change", cfg.res_base_change,
                         "homology of the character-base-changed complex");
    resolution->add_option("--assignment", cfg.assignment,
                           "base-change factor assignment: eps-delta (default) | delta-eps");
    resolution->add_flag("--verify-homotopy", cfg.res_homotopy, "check S d + d S = id (uqsl2)");
    resolution->add_option("--lmax", cfg.lmax, "homotopy bound |l| <= lmax");
    resolution->add_option("--dmax", cfg.dmax, "homotopy bound m, n <= dmax");
    resolution->add_flag("--lift", cfg.res_lift, "comparison lift into the bar resolution");
    resolution->add_option("--lift-cap", cfg.lift_cap, "lift degree cap");
    resolution->add_flag("--raw", cfg.raw_transcription,
                         "load the printed transcription without the errata ledger");
    resolution->add_option("--n-max", cfg.n_max, "top degree for base-change homology");
    resolution->add_option("--out", cfg.out_path, "report path ('-' = stdout)");
    resolution->add_option("--csv", cfg.csv_path, "also emit a CSV dimension table");
    resolution->add_option("--data-dir", cfg.data_dir, "directory with data files");

    auto* maps = app.add_subcommand("maps", "characteristic maps with commutation checks");
    add_common(maps, cfg);
    maps->add_option("--map", cfg.map_name, "gamma | theta | gammatheta | pi | psi | maclane")
        ->required();
    maps->add_option("--sigma", cfg.sigma, "grouplike selector (group element name or 1)");

    auto* hp = app.add_subcommand("hp-commutative", "HP^0/HP^1 of a commutative Hopf algebra");
    add_common(hp, cfg);

    CLI11_PARSE(app, argc, argv);

    if (verify_axioms->parsed()) cfg.command = "verify-axioms";
    else if (verify_hopf->parsed()) cfg.command = "verify-hopf";
    else if (hochschild->parsed()) cfg.command = "hochschild";
    else if (cyclic->parsed()) cfg.command = "cyclic";
    else if (karoubi->parsed()) cfg.command = "karoubi";
    else if (resolution->parsed()) cfg.command = "resolution";
    else if (maps->parsed()) cfg.command = "maps";
    else if (hp->parsed()) cfg.command = "hp-commutative";

    hopfcyc::RunResult res = hopfcyc::run_command(cfg);
    std::string text = hopfcyc::render_report(res.report);
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_path);
        f << text;
    }
    if (!cfg.csv_path.empty()) {
        std::ofstream f(cfg.csv_path);
        f << hopfcyc::render_csv(res.report);
    }
    return res.exit_code;
}
