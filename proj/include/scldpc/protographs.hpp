#pragma once

#include "scldpc/protograph.hpp"

namespace scldpc {

// (J,K)-regular coupled chain. Only (3,6) is supported: 2 variable nodes per
// position, each spreading one edge to check positions i, i+1, i+2.
// L+2 check positions, end-check degree profile [2,4,6,...,6,4,2].
Protograph build_regular_chain(int J, int K, int L);

// Coupled repeat-accumulate chain with L repetition nodes of degree q and
// L+q-1 degree-2 accumulator nodes over L+q-1 check positions. The repetition
// node at position i couples via q-2 parallel edges at position i and 2 at
// position i+q-1; accumulators sit as double edges at their own position.
// modified: accumulators at the two outermost positions of both ends are
// removed, freeing 8 check sockets for CC connections.
Protograph build_sc_ra(int q, int L, bool modified = false);

// Coupled ARJA chain: 5 variables per position (one punctured), 3 checks per
// position plus 2 termination checks. modified: the degree-6 punctured node
// and the two degree-3 nodes at position 1 and at position L are removed,
// freeing their sockets for CC connections.
Protograph build_sc_arja(int L, bool modified = false);

// Dispatcher over EnsembleSpec.
Protograph build_chain(const EnsembleSpec& spec);

// ARJA edge-spreading split, exposed for tests: B0 applies at the node's own
// position, B1 at the next one. B0+B1 is the ARJA base matrix.
BaseMatrix arja_b0();
BaseMatrix arja_b1();

}  // namespace scldpc
