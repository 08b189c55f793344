#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scldpc/errors.hpp"
#include "scldpc/protograph.hpp"

namespace scldpc::detail {

// Id maps for one appended chain.
struct ChainLayout {
    int L = 0;
    std::vector<std::vector<std::uint32_t>> vars_at;  // [pos-1] -> var ids
    std::vector<std::vector<std::uint32_t>> chks_at;  // [pos-1] -> chk ids
    std::vector<std::pair<std::uint32_t, int>> freed; // (chk id, freed sockets), modified variants

    std::uint32_t var(int pos, int k = 0) const { return vars_at[pos - 1][k]; }
    std::uint32_t chk(int pos, int k = 0) const { return chks_at[pos - 1][k]; }
};

// Grows a protograph chain by chain; edges accumulate into a triple list and
// materialize into the base matrix on finish().
class Assembler {
  public:
    std::uint32_t add_var(int pos, int layer, int chain, bool punct) {
        var_position_.push_back(pos);
        var_layer_.push_back(layer);
        var_chain_.push_back(chain);
        punctured_.push_back(punct ? 1 : 0);
        return static_cast<std::uint32_t>(var_position_.size() - 1);
    }

    std::uint32_t add_chk(int pos, int layer, int chain) {
        chk_position_.push_back(pos);
        chk_layer_.push_back(layer);
        chk_chain_.push_back(chain);
        return static_cast<std::uint32_t>(chk_position_.size() - 1);
    }

    void add_edge(std::uint32_t var, std::uint32_t chk, int mult = 1) {
        if (mult <= 0) throw InvalidParameters("Assembler: nonpositive multiplicity");
        edges_.push_back({var, chk, mult});
    }

    // Component chains, appended with layer/chain labels. Defined in protographs.cpp.
    ChainLayout append_regular(int J, int K, int L, int layer, int chain);
    ChainLayout append_ra(int q, int L, bool modified, int layer, int chain);
    ChainLayout append_arja(int L, bool modified, int layer, int chain);
    ChainLayout append_chain(const EnsembleSpec& spec, int layer, int chain);

    int var_count() const { return static_cast<int>(var_position_.size()); }
    int chk_count() const { return static_cast<int>(chk_position_.size()); }

    int chk_degree(std::uint32_t chk) const {
        int d = 0;
        for (const auto& e : edges_)
            if (e.chk == chk) d += e.mult;
        return d;
    }

    Protograph finish(EnsembleSpec component, int layers, int v_unc, int acc_extra) {
        Protograph p;
        p.base = BaseMatrix(chk_count(), var_count());
        for (const auto& e : edges_) p.base.at(static_cast<int>(e.chk), static_cast<int>(e.var)) += e.mult;
        p.var_position = std::move(var_position_);
        p.chk_position = std::move(chk_position_);
        p.var_layer = std::move(var_layer_);
        p.chk_layer = std::move(chk_layer_);
        p.var_chain = std::move(var_chain_);
        p.chk_chain = std::move(chk_chain_);
        p.punctured = std::move(punctured_);
        p.component = component;
        p.layers = layers;
        p.v_unc = v_unc;
        p.acc_extra = acc_extra;
        p.validate();
        return p;
    }

  private:
    struct Edge {
        std::uint32_t var, chk;
        int mult;
    };
    std::vector<int> var_position_, chk_position_;
    std::vector<int> var_layer_, chk_layer_;
    std::vector<int> var_chain_, chk_chain_;
    std::vector<std::uint8_t> punctured_;
    std::vector<Edge> edges_;
};

}  // namespace scldpc::detail
