#include "scldpc/cc_spec.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "scldpc/cc_builder.hpp"
#include "scldpc/errors.hpp"
#include "scldpc/protographs.hpp"

namespace scldpc {

namespace {

using nlohmann::json;

const char* construction_name(Construction c) {
    switch (c) {
        case Construction::Chain: return "chain";
        case Construction::CCRegular: return "cc_regular";
        case Construction::CCRegularVariant: return "cc_regular_variant";
        case Construction::CCTree: return "cc_tree";
        case Construction::CCRA: return "cc_ra";
        case Construction::CCARJA: return "cc_arja";
        case Construction::Custom: return "custom";
    }
    return "?";
}

Construction construction_from(const std::string& s) {
    if (s == "chain") return Construction::Chain;
    if (s == "cc_regular") return Construction::CCRegular;
    if (s == "cc_regular_variant") return Construction::CCRegularVariant;
    if (s == "cc_tree") return Construction::CCTree;
    if (s == "cc_ra") return Construction::CCRA;
    if (s == "cc_arja") return Construction::CCARJA;
    if (s == "custom") return Construction::Custom;
    throw InvalidSpec("unknown construction: " + s);
}

Family family_from(const std::string& s) {
    if (s == "regular") return Family::Regular;
    if (s == "ra") return Family::RA;
    if (s == "arja") return Family::ARJA;
    if (s == "modified_ra") return Family::ModifiedRA;
    if (s == "modified_arja") return Family::ModifiedARJA;
    throw InvalidSpec("unknown family: " + s);
}

const char* pattern_name(RegularPattern p) {
    switch (p) {
        case RegularPattern::FourPos45: return "four_pos_45";
        case RegularPattern::SixPosDeg4: return "six_pos_deg4";
        case RegularPattern::TwoPosDeg6: return "two_pos_deg6";
    }
    return "?";
}

RegularPattern pattern_from(const std::string& s) {
    if (s == "four_pos_45") return RegularPattern::FourPos45;
    if (s == "six_pos_deg4") return RegularPattern::SixPosDeg4;
    if (s == "two_pos_deg6") return RegularPattern::TwoPosDeg6;
    throw InvalidSpec("unknown pattern: " + s);
}

const char* variant_name(RAVariant v) {
    switch (v) {
        case RAVariant::TwoPerLayer: return "two_per_layer";
        case RAVariant::ModifiedSingle: return "modified_single";
        case RAVariant::SingleChain30: return "single_chain_30";
    }
    return "?";
}

RAVariant variant_from(const std::string& s) {
    if (s == "two_per_layer") return RAVariant::TwoPerLayer;
    if (s == "modified_single") return RAVariant::ModifiedSingle;
    if (s == "single_chain_30") return RAVariant::SingleChain30;
    throw InvalidSpec("unknown variant: " + s);
}

}  // namespace

std::string to_json(const CCSpec& spec) {
    json j;
    j["construction"] = construction_name(spec.construction);
    j["family"] = family_name(spec.component.family);
    j["J"] = spec.component.J;
    j["K"] = spec.component.K;
    j["q"] = spec.component.q;
    j["L"] = spec.component.L;
    j["T"] = spec.T;
    if (!spec.chains_per_layer.empty()) j["chains_per_layer"] = spec.chains_per_layer;
    if (spec.construction == Construction::CCRegularVariant)
        j["pattern"] = pattern_name(spec.pattern);
    if (spec.construction == Construction::CCRA) j["variant"] = variant_name(spec.variant);
    if (!spec.connections.empty()) {
        json arr = json::array();
        for (const auto& e : spec.connections) {
            arr.push_back({{"from_layer", e.from_layer},
                           {"from_chain", e.from_chain},
                           {"var_position", e.var_position},
                           {"to_layer", e.to_layer},
                           {"to_chain", e.to_chain},
                           {"chk_position", e.chk_position},
                           {"multiplicity", e.multiplicity}});
        }
        j["connections"] = arr;
    }
    return j.dump(2);
}

CCSpec ccspec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidSpec(std::string("spec JSON parse error: ") + e.what());
    }
    CCSpec s;
    s.construction = construction_from(j.value("construction", std::string("chain")));
    s.component.family = family_from(j.value("family", std::string("regular")));
    s.component.J = j.value("J", 3);
    s.component.K = j.value("K", 6);
    s.component.q = j.value("q", 6);
    s.component.L = j.value("L", 0);
    s.T = j.value("T", 1);
    if (j.contains("chains_per_layer"))
        s.chains_per_layer = j["chains_per_layer"].get<std::vector<int>>();
    if (j.contains("pattern")) s.pattern = pattern_from(j["pattern"].get<std::string>());
    if (j.contains("variant")) s.variant = variant_from(j["variant"].get<std::string>());
    if (j.contains("connections")) {
        for (const auto& ej : j["connections"]) {
            ConnectionEdge e;
            e.from_layer = ej.value("from_layer", 0);
            e.from_chain = ej.value("from_chain", 0);
            e.var_position = ej.value("var_position", 0);
            e.to_layer = ej.value("to_layer", 0);
            e.to_chain = ej.value("to_chain", 0);
            e.chk_position = ej.value("chk_position", 0);
            e.multiplicity = ej.value("multiplicity", 1);
            s.connections.push_back(e);
        }
    }
    return s;
}

CCSpec load_ccspec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ccspec_from_json(ss.str());
}

Protograph build_from_spec(const CCSpec& spec) {
    switch (spec.construction) {
        case Construction::Chain: return build_chain(spec.component);
        case Construction::CCRegular: return build_cc_regular(spec.component.L, spec.T);
        case Construction::CCRegularVariant:
            return build_cc_regular_variant(spec.component.L, spec.T, spec.pattern);
        case Construction::CCTree: return build_cc_tree(spec.component.L, spec.T);
        case Construction::CCRA:
            return build_cc_ra(spec.component.q, spec.component.L, spec.T, spec.variant);
        case Construction::CCARJA: return build_cc_arja(spec.component.L, spec.T);
        case Construction::Custom: return build_custom(spec);
    }
    throw InvalidSpec("unknown construction");
}

}  // namespace scldpc
