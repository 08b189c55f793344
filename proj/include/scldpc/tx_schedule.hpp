#pragma once

#include <cstdint>
#include <vector>

namespace scldpc {

struct BlockId {
    int layer;     // 1-based
    int position;  // 1-based
    bool operator==(const BlockId&) const = default;
};

// Ordered list of sub-block identifiers; a permutation of all (layer, position)
// pairs of the structure.
struct TxSchedule {
    int L = 0;
    int T = 1;
    std::vector<BlockId> order;
};

// Continuous-chain transmission order. T = 1 is the natural order. For T >= 2,
// chain j sends positions 1..floor(L/2)+3, then chain j+1's boundary blocks
// {1, 2, L}, then chain j's tail, then the rule recurses into chain j+1 over
// positions 3..L-1.
TxSchedule transmission_order(int L, int T);

// Permutation check: every block exactly once.
bool is_valid_schedule(const TxSchedule& s);

}  // namespace scldpc
