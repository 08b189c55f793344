#pragma once

#include "scldpc/cc_spec.hpp"
#include "scldpc/protograph.hpp"
#include "scldpc/rational.hpp"

namespace scldpc {

// Layered (3,6) CC structure: one chain per layer; for j < T the variable
// nodes of chain j at positions floor(L/2)..floor(L/2)+3 gain 1/2/2/1 extra
// edges into the termination checks of chain j+1, filling every end check of
// chains 2..T to interior degree 6. T = 1 returns the plain chain.
Protograph build_cc_regular(int L, int T);

// Same 12-edge termination budget, redistributed per the named pattern.
Protograph build_cc_regular_variant(int L, int T, RegularPattern pattern);

// Layer j holds 2^(j-1) chains; each chain in layer j < T hosts two
// strengthened regions (starting at floor(L/3) and floor(2L/3)), each fed by
// both ends of one chain of layer j+1.
Protograph build_cc_tree(int L, int T);

// Fraction of strongly protected chains, (2^(T-1)-1)/(2^T-1).
Rational protected_ratio(int T);

// RA continuous-chain structures (q = 6 only).
//  - TwoPerLayer: 2^(j-1) chains per layer; each protected chain's repetition
//    nodes at 5 mid positions go from degree 6 to 18 using the 60 termination
//    sockets of its two feeder chains.
//  - ModifiedSingle: single chain per layer; chains 2..T are modified (end
//    accumulators removed); the 8 freed sockets raise 4 mid repetition nodes
//    of the chain above from degree 6 to 8.
//  - SingleChain30: reference design with one unmodified feeder chain; its 30
//    termination sockets raise 5 mid repetition nodes from degree 6 to 12.
Protograph build_cc_ra(int q, int L, int T, RAVariant variant);

// ARJA CC: one modified chain per layer. The nodes removed at the feeder
// chain's ends re-home onto mid-chain variables of the chain above, creating
// merged nodes of degrees 12, 9 and 6.
Protograph build_cc_arja(int L, int T);

// Realize an explicit CCSpec connection list with socket/degree validation.
Protograph build_custom(const CCSpec& spec);

}  // namespace scldpc
