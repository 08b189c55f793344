#include "scldpc/tx_schedule.hpp"

#include <set>

#include "scldpc/errors.hpp"

namespace scldpc {

namespace {

// Emit chain j over [lo, hi]; for j < T the mid-chain junction inserts the
// boundary blocks of chain j+1 and defers that chain's interior.
void emit(int L, int T, int j, int lo, int hi, std::vector<BlockId>& out) {
    const int h3 = L / 2 + 3;
    if (j == T || hi < h3 || lo > h3) {
        for (int i = lo; i <= hi; ++i) out.push_back({j, i});
        if (j < T) {
            out.push_back({j + 1, 1});
            out.push_back({j + 1, 2});
            out.push_back({j + 1, L});
            emit(L, T, j + 1, 3, L - 1, out);
        }
        return;
    }
    for (int i = lo; i <= h3; ++i) out.push_back({j, i});
    out.push_back({j + 1, 1});
    out.push_back({j + 1, 2});
    out.push_back({j + 1, L});
    for (int i = h3 + 1; i <= hi; ++i) out.push_back({j, i});
    emit(L, T, j + 1, 3, L - 1, out);
}

}  // namespace

TxSchedule transmission_order(int L, int T) {
    if (T < 1) throw InvalidParameters("transmission_order: T >= 1 required");
    if (T == 1) {
        TxSchedule s{L, 1, {}};
        for (int i = 1; i <= L; ++i) s.order.push_back({1, i});
        return s;
    }
    if (L < 8) throw InvalidParameters("transmission_order: L >= 8 required");
    TxSchedule s{L, T, {}};
    emit(L, T, 1, 1, L, s.order);
    return s;
}

bool is_valid_schedule(const TxSchedule& s) {
    if (static_cast<int>(s.order.size()) != s.L * s.T) return false;
    std::set<std::pair<int, int>> seen;
    for (const auto& b : s.order) {
        if (b.layer < 1 || b.layer > s.T || b.position < 1 || b.position > s.L) return false;
        if (!seen.insert({b.layer, b.position}).second) return false;
    }
    return true;
}

}  // namespace scldpc
