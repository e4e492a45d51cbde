#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

std::unique_ptr<HopfAlgebra> build_instance(const std::string& spec, const FieldId& field,
                                            long weight_cap) {
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "group" || kind == "fungrp") {
        if (arg.empty()) throw ConfigError(kind + ": missing group name or table file");
        GroupTable t;
        if (arg == "Z2" || arg == "Z3" || arg == "Z4" || arg == "S3") t = GroupTable::builtin(arg);
        else t = GroupTable::from_file(arg);
        if (kind == "group") return std::make_unique<GroupAlgebra>(std::move(t), field);
        return std::make_unique<FunctionAlgebra>(std::move(t), field);
    }
    if (kind == "tensor") {
        int dim = arg.empty() ? 2 : std::stoi(arg);
        return std::make_unique<TensorAlgebra>(dim, field, weight_cap);
    }
    if (kind == "laurent") return std::make_unique<LaurentAlgebra>(field);
    if (kind == "uqsl2") return std::make_unique<UqSl2>();
    if (kind == "aslq2") return std::make_unique<ASLq2>();
    if (kind == "presentation") {
        if (arg.empty()) throw ConfigError("presentation: missing file path");
        return PresentationAlgebra::from_file(arg);
    }
    throw ConfigError("unknown instance: " + spec);
}

ModularPair make_modular_pair(const HopfAlgebra& H, const std::string& pair_name) {
    auto comma = pair_name.find(',');
    if (comma == std::string::npos) throw ConfigError("pair must be '<character>,<grouplike>'");
    std::string chi = pair_name.substr(0, comma);
    std::string sig = pair_name.substr(comma + 1);

    ModularPair pair;
    pair.H = &H;
    pair.name = "(" + chi + "," + sig + ")";

    if (chi == "epsilon") {
        pair.delta = Character::counit(&H);
    } else if (chi == "delta" && H.name() == "aslq2") {
        // delta(x) = q, delta(u) = delta(v) = 0, delta(y) = q^-1
        std::vector<Scalar> vals = {Scalar::q_power(1), Scalar::zero(H.field()),
                                    Scalar::zero(H.field()), Scalar::q_power(-1)};
        pair.delta = Character::on_generators(&H, std::move(vals), "delta");
    } else {
        throw ConfigError("unknown character '" + chi + "' for instance " + H.name());
    }

    if (sig == "1") {
        pair.sigma = H.one();
    } else if (H.name() == "uqsl2" && (sig == "sigma" || sig == "sigma_inv")) {
        pair.sigma = H.generator_power(0, sig == "sigma" ? 1 : -1);
    } else if (auto* G = dynamic_cast<const GroupAlgebra*>(&H)) {
        pair.sigma = Element(H.field(), G->element_by_name(sig));
    } else {
        throw ConfigError("unknown grouplike '" + sig + "' for instance " + H.name());
    }
    return pair;
}

std::vector<std::pair<std::string, std::string>> advertised_pairs(const HopfAlgebra& H) {
    std::vector<std::pair<std::string, std::string>> out;
    const std::string n = H.name();
    if (n == "uqsl2") {
        out.push_back({"epsilon,sigma_inv",
                       "S^2 = sigma (.) sigma^-1 makes (epsilon, sigma^-1) involutive"});
        return out;
    }
    if (n == "aslq2") {
        out.push_back({"delta,1", "delta(x)=q, delta(u)=delta(v)=0, delta(y)=q^-1; S~^2 = id"});
        return out;
    }
    out.push_back({"epsilon,1", "counit with trivial grouplike"});
    if (auto* G = dynamic_cast<const GroupAlgebra*>(&H)) {
        // central elements give indicator-trace pairs
        const GroupTable& t = G->table();
        for (int g = 0; g < t.order(); ++g) {
            if (g == t.identity) continue;
            bool central = true;
            for (int h = 0; h < t.order() && central; ++h)
                central = t.mul[static_cast<size_t>(g)][static_cast<size_t>(h)] ==
                          t.mul[static_cast<size_t>(h)][static_cast<size_t>(g)];
            if (central)
                out.push_back({"epsilon," + t.element_names[static_cast<size_t>(g)],
                               "central element; S_sigma^2 = id on kG"});
        }
    }
    return out;
}

CoactionBundle builtin_coaction_laurent_on_aslq2() {
    CoactionBundle b;
    b.A = std::make_unique<ASLq2>();
    b.H = std::make_unique<LaurentAlgebra>(FieldId::rational_functions());
    CoactionStructure c;
    c.A = b.A.get();
    c.H = b.H.get();
    c.name = "laurent_on_aslq2";
    const FieldId f = b.A->field();
    c.beta_word = [f](const BasisWord& w) {
        // beta(x)=x|z, beta(u)=u|z^-1, beta(v)=v|z, beta(y)=y|z^-1, multiplicative
        int deg = w.data[0] - w.data[1] + w.data[2] - w.data[3];
        TensorElement out(f);
        out.add(TensorWord{w, BasisWord{{deg}}}, Scalar::one(f));
        return out;
    };
    b.coaction = std::move(c);
    return b;
}

}  // namespace hopfcyc
