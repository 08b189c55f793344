#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scldpc/protograph.hpp"

namespace scldpc {

// One designed connection: every eligible variable node at
// (from_layer, from_chain, var_position) gains `multiplicity` edges to the
// check at (to_layer, to_chain, chk_position). For RA components only the
// repetition node at the position is eligible; accumulators are never
// strengthened.
struct ConnectionEdge {
    int from_layer = 0;
    int from_chain = 0;
    int var_position = 0;
    int to_layer = 0;
    int to_chain = 0;
    int chk_position = 0;
    int multiplicity = 1;
};

enum class Construction {
    Chain,           // single component chain
    CCRegular,       // Fig-6 style layered (3,6) structure
    CCRegularVariant,
    CCTree,          // two regions per chain, doubling chains per layer
    CCRA,
    CCARJA,
    Custom,          // explicit connection list
};

enum class RegularPattern { FourPos45, SixPosDeg4, TwoPosDeg6 };
enum class RAVariant { TwoPerLayer, ModifiedSingle, SingleChain30 };

// Declarative description of a CC structure (or a single chain).
struct CCSpec {
    Construction construction = Construction::Chain;
    EnsembleSpec component;
    int T = 1;
    std::vector<int> chains_per_layer;       // custom only; defaults to 1 per layer
    RegularPattern pattern = RegularPattern::FourPos45;
    RAVariant variant = RAVariant::ModifiedSingle;
    std::vector<ConnectionEdge> connections;  // custom only
};

// JSON round-trip; schema documented in the README.
std::string to_json(const CCSpec& spec);
CCSpec ccspec_from_json(const std::string& json_text);
CCSpec load_ccspec(const std::string& path);

// Realize the spec into an annotated protograph.
Protograph build_from_spec(const CCSpec& spec);

}  // namespace scldpc
