#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scldpc/protograph.hpp"

namespace scldpc {

// Lifted sparse parity-check code. Adjacency is CSR in both directions with
// sorted neighbor lists; the graph never contains parallel edges. Lifted node
// ids are proto_id * N + j, so the protograph maps are implicit but kept
// explicit for clarity.
struct LiftedCode {
    std::uint32_t n_vars = 0;
    std::uint32_t n_checks = 0;
    std::uint32_t N = 1;
    std::uint64_t seed = 0;

    std::vector<std::uint32_t> var_off, var_adj;  // variable -> checks
    std::vector<std::uint32_t> chk_off, chk_adj;  // check -> variables
    std::vector<std::uint32_t> proto_of_var, proto_of_chk;
    std::vector<std::uint8_t> punctured;          // per lifted variable

    Protograph proto;  // annotations for per-layer accounting

    int n_layers() const { return proto.layers > 0 ? proto.layers : 1; }
    int var_layer(std::uint32_t v) const {
        const int l = proto.var_layer[proto_of_var[v]];
        return l > 0 ? l : 1;
    }
    int chk_layer(std::uint32_t c) const {
        const int l = proto.chk_layer[proto_of_chk[c]];
        return l > 0 ? l : 1;
    }

    std::uint32_t transmitted_count() const;
    // Lifted variable ids of transmitted (non-punctured) bits, ascending.
    std::vector<std::uint32_t> transmitted_ids() const;

    int var_degree(std::uint32_t v) const { return var_off[v + 1] - var_off[v]; }
    int chk_degree(std::uint32_t c) const { return chk_off[c + 1] - chk_off[c]; }
};

// Random lift: each multiplicity-m protograph edge becomes m pairwise
// disjoint N x N permutations, sampled by rejection from a generator keyed by
// (seed, protograph edge index). Deterministic across platforms and runs.
// Requires N >= 2 and N >= max multiplicity.
LiftedCode lift(const Protograph& p, std::uint32_t N, std::uint64_t seed);

// Identity-permutation lift (test mode): multiplicity-m edges use the m
// cyclic shifts 0..m-1. Requires N >= max multiplicity; N = 1 reproduces the
// base matrix as long as no multi-edges exist.
LiftedCode lift_identity(const Protograph& p, std::uint32_t N);

struct BlockLength {
    std::uint64_t n;            // all coded bits, v * N
    std::uint64_t transmitted;  // excludes punctured columns
};
BlockLength lifted_block_length(const Protograph& p, std::uint32_t N);

// Sparse "alist"-style text format: "n m", "max_vdeg max_cdeg", per-variable
// degrees, per-check degrees, then per-variable and per-check neighbor lists
// (1-based, no padding). Round-trips bit-exactly.
std::string to_alist(const LiftedCode& code);
LiftedCode lifted_from_alist(const std::string& text);

}  // namespace scldpc
