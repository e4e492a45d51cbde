#include "hopfcyc/report.hpp"

#include <fstream>

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/engine.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/resolution.hpp"

#ifndef HOPFCYC_DATA_DIR
#define HOPFCYC_DATA_DIR "data"
#endif

namespace hopfcyc {

using json = nlohmann::ordered_json;

namespace {

json to_json(const AxiomReport& r) {
    return json{{"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures}};
}

json to_json(const CheckReport& r) {
    return json{{"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures}};
}

json bounds_json(const RunConfig& cfg) {
    return json{{"n_max", cfg.n_max}, {"degree_bound", cfg.degree_bound},
                {"weight_cap", cfg.weight_cap}};
}

FieldId resolve_field(const RunConfig& cfg, const std::string& instance) {
    if (instance.rfind("uqsl2", 0) == 0 || instance.rfind("aslq2", 0) == 0)
        return FieldId::rational_functions();
    return FieldId::parse(cfg.field);
}

struct CommandContext {
    const RunConfig& cfg;
    json& out;
    bool pass = true;

    void put(const std::string& key, json j, bool ok) {
        out["results"][key] = std::move(j);
        pass = pass && ok;
    }
};

void run_verify_axioms(CommandContext& ctx, const HopfAlgebra& H) {
    const RunConfig& cfg = ctx.cfg;
    std::string which = cfg.map_name.empty() ? "hopf" : cfg.map_name;  // reuse slot for module kind
    if (which == "hopf") {
        ModularPair pair = make_modular_pair(H, cfg.pair);
        CheckReport inv = check_modular_involution(pair, cfg.degree_bound);
        ctx.out["results"]["modular_pair"] = to_json(inv);
        if (!inv.pass && !cfg.unchecked) {
            ctx.pass = false;
            return;
        }
        CyclicModule m = build_hopf_cyclic(H, pair, /*unchecked=*/true);
        AxiomReport rep = verify_cyclic_axioms(m, cfg.n_max, cfg.degree_bound);
        ctx.put("cyclic_axioms", to_json(rep), rep.pass && (inv.pass || cfg.unchecked));
        if (!inv.pass) ctx.pass = false;
    } else if (which == "algebra") {
        CyclicModule m = build_algebra_cyclic(H);
        AxiomReport rep = verify_cyclic_axioms(m, cfg.n_max, cfg.degree_bound);
        ctx.put("cyclic_axioms", to_json(rep), rep.pass);
    } else if (which == "path") {
        PathSpace E = build_path_space(H);
        AxiomReport rep = verify_cyclic_axioms(E.simplicial, cfg.n_max, cfg.degree_bound);
        ctx.put("path_axioms", to_json(rep), rep.pass);
        AxiomReport con = verify_path_contraction(E, cfg.n_max, cfg.degree_bound);
        ctx.put("contraction", to_json(con), con.pass);
    } else if (which == "cm-cocyclic") {
        ModularPair pair = make_modular_pair(H, cfg.pair);
        CocyclicModule m = build_cm_cocyclic(H, pair);
        AxiomReport rep = verify_cocyclic_axioms(m, cfg.n_max, cfg.degree_bound);
        ctx.put("cocyclic_axioms", to_json(rep), rep.pass);
    } else if (which == "comm-cocyclic") {
        CocyclicModule m = build_commutative_cocyclic(H);
        AxiomReport rep = verify_cocyclic_axioms(m, cfg.n_max, cfg.degree_bound);
        ctx.put("cocyclic_axioms", to_json(rep), rep.pass);
    } else {
        throw ConfigError("unknown module kind for verify-axioms: " + which);
    }
}

void run_verify_hopf(CommandContext& ctx, const HopfAlgebra& H) {
    const RunConfig& cfg = ctx.cfg;
    CheckReport ax = check_hopf_axioms(H, cfg.degree_bound);
    ctx.put("hopf_axioms", to_json(ax), ax.pass);
    CheckReport fl = check_flags(H, cfg.degree_bound);
    ctx.put("flags", to_json(fl), fl.pass);
    json pairs = json::array();
    for (const auto& [name, provenance] : advertised_pairs(H)) {
        ModularPair pair = make_modular_pair(H, name);
        CheckReport inv = check_modular_involution(pair, cfg.degree_bound);
        pairs.push_back(json{{"pair", name}, {"provenance", provenance}, {"involution", to_json(inv)}});
        ctx.pass = ctx.pass && inv.pass;
    }
    ctx.out["results"]["advertised_pairs"] = pairs;
    if (H.name() == "uqsl2") {
        CheckReport s2 = verify_s2_conjugation(dynamic_cast<const UqSl2&>(H), cfg.degree_bound);
        ctx.put("s2_conjugation", to_json(s2), s2.pass);
    }
}

json homology_json(const std::vector<int>& dims) {
    json rows = json::array();
    for (size_t n = 0; n < dims.size(); ++n) rows.push_back(json{{"n", n}, {"dim", dims[n]}});
    return rows;
}

void run_hochschild(CommandContext& ctx, const HopfAlgebra& H) {
    const RunConfig& cfg = ctx.cfg;
    ModularPair pair = make_modular_pair(H, cfg.pair);
    CyclicModule m = build_hopf_cyclic(H, pair, cfg.unchecked, cfg.degree_bound);
    HomologyReport rep = hochschild_homology(m, cfg.n_max, cfg.weight_cap);
    json j{{"dims", homology_json(rep.dims)}, {"weight_stable", rep.weight_stable}};
    if (rep.weights.size() > 1) {
        json blocks = json::array();
        for (size_t i = 0; i < rep.weights.size(); ++i)
            blocks.push_back(json{{"weight", rep.weights[i]}, {"dims", rep.weight_dims[i]}});
        j["weight_blocks"] = blocks;
    }
    ctx.put("hochschild", j, rep.weight_stable);
}

void run_cyclic(CommandContext& ctx, const HopfAlgebra& H) {
    const RunConfig& cfg = ctx.cfg;
    ModularPair pair = make_modular_pair(H, cfg.pair);
    CyclicModule m = build_hopf_cyclic(H, pair, cfg.unchecked, cfg.degree_bound);
    CyclicHomologyReport rep = cyclic_homology(m, cfg.n_max, cfg.weight_cap);
    json j{{"dims", homology_json(rep.dims)},
           {"weight_stable", rep.weight_stable},
           {"periodic", json{{"even", rep.hp_even},
                             {"odd", rep.hp_odd},
                             {"stabilized_even", rep.stabilized_even},
                             {"stabilized_odd", rep.stabilized_odd},
                             {"window", cfg.n_max}}}};
    bool ok = rep.weight_stable;
    if (cfg.cc_guard) {
        std::vector<int> guard = cyclic_homology_cc_guard(m, cfg.n_max, cfg.weight_cap);
        j["cc_bicomplex_guard"] = guard;
        j["guard_agrees"] = guard == rep.dims;
        ok = ok && guard == rep.dims;
    }
    ctx.put("cyclic", j, ok);
}

void run_karoubi(CommandContext& ctx, const HopfAlgebra& H) {
    const RunConfig& cfg = ctx.cfg;
    KaroubiReport rep = karoubi_compare(H, cfg.n_max, cfg.weight_cap);
    ctx.put("karoubi",
            json{{"hc_dims", rep.hc_dims},
                 {"hochschild_dims", rep.hochschild},
                 {"karoubi_dims", rep.karoubi_dims},
                 {"equal", rep.equal}},
            rep.equal);
}

void run_resolution(CommandContext& ctx) {
    const RunConfig& cfg = ctx.cfg;
    std::string data_dir = cfg.data_dir.empty() ? HOPFCYC_DATA_DIR : cfg.data_dir;
    std::unique_ptr<HopfAlgebra> H = build_instance(cfg.resolution_name, FieldId::rational_functions());
    ResolutionBundle bundle =
        load_resolution(cfg.resolution_name, *H, cfg.resolution_cap, data_dir, !cfg.raw_transcription);
    json errata = json::array();
    for (const auto& e : bundle.errata_applied)
        errata.push_back(json{{"id", e.id},
                              {"location", e.location},
                              {"printed", e.printed},
                              {"corrected", e.corrected},
                              {"note", e.note}});
    ctx.out["results"]["ranks"] = [&] {
        std::vector<int> ranks;
        for (int n = 0; n <= bundle.data.max_degree(); ++n) ranks.push_back(bundle.data.rank(n));
        return ranks;
    }();
    ctx.out["results"]["errata_applied"] = errata;

    if (cfg.res_verify) {
        ResolutionCheck check = verify_resolution(bundle.data, cfg.resolution_cap);
        ctx.put("d_squared",
                json{{"pass", check.pass},
                     {"composites_checked", check.composites_checked},
                     {"failures", check.failures}},
                check.pass);
    }
    if (cfg.res_base_change) {
        Character eps = Character::counit(H.get());
        Character chi_first = eps, chi_second = eps;
        if (cfg.resolution_name == "aslq2") {
            ModularPair pair = make_modular_pair(*H, "delta,1");
            if (cfg.assignment == "eps-delta") chi_second = pair.delta;
            else if (cfg.assignment == "delta-eps") chi_first = pair.delta;
            else throw ConfigError("assignment must be eps-delta or delta-eps");
        }
        BaseChangeResult bc =
            base_change_homology(bundle.data, chi_first, chi_second, cfg.n_max);
        json reps = json::array();
        for (size_t n = 0; n < bc.representatives.size(); ++n) {
            json level = json::array();
            for (const auto& [g, c] : bc.representatives[n])
                level.push_back(json{{"generator", g}, {"coefficient", c}});
            reps.push_back(level);
        }
        ctx.put("base_change",
                json{{"assignment", cfg.assignment}, {"dims", homology_json(bc.dims)},
                     {"representatives", reps}},
                true);
    }
    if (cfg.res_homotopy) {
        HomotopyCheck hc = verify_homotopy_uqsl2(bundle.data, cfg.lmax, cfg.dmax);
        ctx.put("homotopy",
                json{{"pass", hc.pass},
                     {"checked", hc.checked},
                     {"lmax", cfg.lmax},
                     {"dmax", cfg.dmax},
                     {"failures", hc.failures}},
                hc.pass);
    }
    if (cfg.res_lift) {
        ComparisonLift lift = comparison_lift(bundle.data, cfg.lift_cap);
        ctx.put("comparison_lift",
                json{{"chain_map_verified", lift.chain_map_verified},
                     {"checked", lift.checked},
                     {"cap", cfg.lift_cap},
                     {"failures", lift.failures}},
                lift.chain_map_verified);
    }
}

void run_maps(CommandContext& ctx, const HopfAlgebra& H) {
    const RunConfig& cfg = ctx.cfg;
    const std::string& map = cfg.map_name;
    if (map == "gamma" || map == "theta" || map == "gammatheta") {
        ModularPair pair = make_modular_pair(H, "epsilon," + cfg.sigma);
        CyclicModule CH = build_algebra_cyclic(H);
        CyclicModule HH = build_hopf_cyclic(H, pair, /*unchecked=*/false, cfg.degree_bound);
        CoactionStructure co = self_coaction(H);
        Element sigma = pair.sigma;
        TraceFunctional tr{&H,
                           [sigma, &H](const BasisWord& w) { return sigma.coeff(w); },
                           "indicator"};
        if (map == "gamma" || map == "gammatheta") {
            CyclicMap g = map_gamma(CH, HH, tr, co, pair, cfg.unchecked, cfg.degree_bound);
            AxiomReport rep = verify_cyclic_map(g, cfg.n_max, cfg.degree_bound);
            ctx.put("gamma_commutation", to_json(rep), rep.pass);
        }
        if (map == "theta" || map == "gammatheta") {
            CyclicMap th = map_theta(HH, CH, H, pair.sigma, cfg.degree_bound);
            AxiomReport rep = verify_cyclic_map(th, cfg.n_max, cfg.degree_bound);
            ctx.put("theta_commutation", to_json(rep), rep.pass);
        }
        if (map == "gammatheta") {
            // gamma . theta = Tr(sigma) id levelwise
            CyclicMap g = map_gamma(CH, HH, tr, co, pair, true, cfg.degree_bound);
            CyclicMap th = map_theta(HH, CH, H, pair.sigma, cfg.degree_bound);
            Scalar trs = tr.eval(sigma);
            AxiomReport rep;
            for (int n = 0; n <= cfg.n_max; ++n) {
                for (const auto& w : HH.level_words(n, cfg.degree_bound)) {
                    TensorElement x = tensor_of_words(HH.field, w);
                    TensorElement lhs = g.apply(n, th.apply(n, x));
                    ++rep.checked;
                    if (lhs != x.scaled(trs)) {
                        rep.pass = false;
                        if (rep.failures.size() < 16)
                            rep.failures.push_back("gamma.theta != Tr(sigma) id at level " +
                                                   std::to_string(n));
                    }
                }
            }
            ctx.put("gamma_theta_identity",
                    json{{"pass", rep.pass}, {"checked", rep.checked},
                         {"tr_sigma", trs.to_string()}, {"failures", rep.failures}},
                    rep.pass);
        }
    } else if (map == "pi") {
        ModularPair pair = make_modular_pair(H, "epsilon,1");
        CyclicModule BH = build_hopf_cyclic(H, pair, /*unchecked=*/true);
        PathSpace E = build_path_space(H);
        CyclicMap pi = projection_pi(E.simplicial, BH, H);
        AxiomReport rep = verify_cyclic_map(pi, cfg.n_max, cfg.degree_bound,
                                            /*check_cyclic=*/E.cyclic_available);
        ctx.put("pi_commutation", to_json(rep), rep.pass);
    } else if (map == "psi") {
        ModularPair pair = make_modular_pair(H, "epsilon,1");
        CocyclicModule CM = build_cm_cocyclic(H, pair);
        CocyclicModule EH = build_commutative_cocyclic(H);
        CocyclicMap psi = map_psi(CM, EH, H);
        AxiomReport rep = verify_cocyclic_map(psi, cfg.n_max, cfg.degree_bound);
        ctx.put("psi_commutation", to_json(rep), rep.pass);
    } else if (map == "maclane") {
        MacLanePair ml = maclane_self(H);
        AxiomReport rep = verify_maclane(ml, cfg.n_max, cfg.degree_bound);
        ctx.put("maclane", to_json(rep), rep.pass);
    } else {
        throw ConfigError("unknown map: " + map);
    }
}

void run_hp(CommandContext& ctx, const HopfAlgebra& H) {
    const RunConfig& cfg = ctx.cfg;
    HpReport rep = commutative_hp_compare(H, cfg.n_max);
    ctx.put("hp_commutative",
            json{{"hc_cohomology", rep.hc_cohomology},
                 {"hp0", rep.hp0},
                 {"hp1", rep.hp1},
                 {"stabilized", rep.stabilized},
                 {"coalgebra_cohomology", rep.coalgebra_cohomology},
                 {"cobar_hp0", rep.cobar_hp0},
                 {"cobar_hp1", rep.cobar_hp1},
                 {"window", rep.window},
                 {"equal", rep.equal}},
            rep.equal && rep.stabilized);
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
    RunResult res;
    json& out = res.report;
    out["schema"] = "hopf-cyclic-report/1";
    out["command"] = cfg.command;
    json cfgj{{"instance", cfg.instance}, {"pair", cfg.pair}, {"field", cfg.field},
              {"bounds", bounds_json(cfg)}};
    if (!cfg.resolution_name.empty()) {
        cfgj["resolution"] = cfg.resolution_name;
        cfgj["resolution_cap"] = cfg.resolution_cap;
        cfgj["assignment"] = cfg.assignment;
    }
    if (!cfg.map_name.empty()) cfgj["map"] = cfg.map_name;
    if (cfg.unchecked) cfgj["unchecked"] = true;
    out["config"] = cfgj;
    out["results"] = json::object();

    try {
        CommandContext ctx{cfg, out};
        std::unique_ptr<HopfAlgebra> H;
        if (cfg.command != "resolution") {
            if (cfg.instance.empty()) throw ConfigError("missing --instance");
            H = build_instance(cfg.instance, resolve_field(cfg, cfg.instance), cfg.weight_cap);
            cfgj["resolved_field"] = H->field().to_string();
            out["config"] = cfgj;
        }
        if (cfg.command == "verify-axioms") run_verify_axioms(ctx, *H);
        else if (cfg.command == "verify-hopf") run_verify_hopf(ctx, *H);
        else if (cfg.command == "hochschild") run_hochschild(ctx, *H);
        else if (cfg.command == "cyclic") run_cyclic(ctx, *H);
        else if (cfg.command == "karoubi") run_karoubi(ctx, *H);
        else if (cfg.command == "resolution") run_resolution(ctx);
        else if (cfg.command == "maps") run_maps(ctx, *H);
        else if (cfg.command == "hp-commutative") run_hp(ctx, *H);
        else throw ConfigError("unknown command: " + cfg.command);
        out["pass"] = ctx.pass;
        res.exit_code = ctx.pass ? 0 : 1;
    } catch (const ConfigError& e) {
        out["error"] = e.what();
        out["pass"] = false;
        res.exit_code = 2;
    } catch (const ParseError& e) {
        out["error"] = e.what();
        out["pass"] = false;
        res.exit_code = 2;
    } catch (const std::exception& e) {
        out["error"] = e.what();
        out["pass"] = false;
        res.exit_code = 1;
    }
    return res;
}

std::string render_report(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string render_csv(const nlohmann::ordered_json& j) {
    std::string csv = "n,dim\n";
    auto extract = [&](const nlohmann::ordered_json& dims) {
        for (const auto& row : dims) {
            csv += std::to_string(row.at("n").get<int>()) + "," +
                   std::to_string(row.at("dim").get<int>()) + "\n";
        }
    };
    if (j.contains("results")) {
        const auto& r = j.at("results");
        for (const char* key : {"hochschild", "cyclic", "base_change"})
            if (r.contains(key) && r.at(key).contains("dims")) extract(r.at(key).at("dims"));
    }
    return csv;
}

}  // namespace hopfcyc
