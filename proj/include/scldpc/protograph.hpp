#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scldpc/rational.hpp"

namespace scldpc {

// Bi-adjacency matrix of edge multiplicities, rows = checks, cols = variables.
struct BaseMatrix {
    int c = 0;
    int v = 0;
    std::vector<int> entries;  // row-major, c*v

    BaseMatrix() = default;
    BaseMatrix(int rows, int cols) : c(rows), v(cols), entries(static_cast<size_t>(rows) * cols, 0) {}

    int& at(int row, int col) { return entries[static_cast<size_t>(row) * v + col]; }
    int at(int row, int col) const { return entries[static_cast<size_t>(row) * v + col]; }

    int row_degree(int row) const;
    int col_degree(int col) const;
    int total_edges() const;

    bool operator==(const BaseMatrix&) const = default;
};

enum class Family { Regular, RA, ARJA, ModifiedRA, ModifiedARJA };

std::string family_name(Family f);

struct EnsembleSpec {
    Family family = Family::Regular;
    int J = 3;
    int K = 6;
    int q = 6;      // RA repetition degree
    int L = 0;      // chain length
};

// One multiplicity-expanded protograph edge; id = index in edge_instances().
struct EdgeInstance {
    std::uint32_t var;
    std::uint32_t chk;
};

// Multiplicity-grouped edge (one lifting unit).
struct MultiEdge {
    std::uint32_t chk;
    std::uint32_t var;
    int mult;
};

// Annotated protograph: base matrix plus spatial/layer/puncture labels.
// Node ordering invariant: variables sorted by (layer, chain, position, intra index),
// checks likewise.
struct Protograph {
    BaseMatrix base;
    std::vector<int> var_position;  // 1-based spatial position
    std::vector<int> chk_position;
    std::vector<int> var_layer;     // 0 for single chains, else 1..T
    std::vector<int> chk_layer;
    std::vector<int> var_chain;     // chain index within layer, 0-based
    std::vector<int> chk_chain;
    std::vector<std::uint8_t> punctured;  // per variable

    EnsembleSpec component;  // component-chain parameters
    int layers = 0;          // T; 0 for single chains
    int v_unc = 0;           // variables per position of the component chain
    int acc_extra = 0;       // a (extra accumulator nodes), 0 unless RA

    int v() const { return base.v; }
    int c() const { return base.c; }
    int punctured_count() const;
    int transmitted_count() const { return v() - punctured_count(); }

    std::vector<int> var_degrees() const;
    std::vector<int> chk_degrees() const;

    // Stable, multiplicity-expanded edge list: row-major base-matrix scan.
    std::vector<EdgeInstance> edge_instances() const;
    // Multiplicity-grouped edges in the same scan order.
    std::vector<MultiEdge> multi_edges() const;

    // Structural checks: sizes consistent, no all-zero column, handshake.
    void validate() const;

    bool operator==(const Protograph&) const = default;
};

// Info bits over transmitted bits: (v - c) / (v - punctured). Exact.
Rational design_rate(const Protograph& p);

struct DegreeProfile {
    std::vector<int> var_degrees;  // node order
    std::vector<int> chk_degrees;
};

// Per-node degrees in node order; handshake holds by construction.
DegreeProfile degree_profile(const Protograph& p);

// Text format: "c v" header, c rows of v ints, then optional annotation lines
// (#punctured:, #positions:, #layers:, #chains:). Round-trips bit-exactly.
std::string to_text(const Protograph& p);
Protograph protograph_from_text(const std::string& text);

// FNV-1a over the canonical text form; used as the spec hash in CSV output.
std::uint64_t protograph_hash(const Protograph& p);

}  // namespace scldpc
