#include "scldpc/protographs.hpp"

#include "assembler.hpp"
#include "scldpc/errors.hpp"

namespace scldpc {

using detail::Assembler;
using detail::ChainLayout;

namespace detail {

ChainLayout Assembler::append_regular(int J, int K, int L, int layer, int chain) {
    if (J != 3 || K != 6)
        throw UnsupportedConstruction("regular chain: only (J,K) = (3,6) is supported");
    if (L < 3) throw InvalidParameters("regular chain: L >= 3 required");
    ChainLayout lay;
    lay.L = L;
    lay.chks_at.resize(L + 2);
    lay.vars_at.resize(L);
    for (int i = 1; i <= L + 2; ++i) lay.chks_at[i - 1].push_back(add_chk(i, layer, chain));
    for (int i = 1; i <= L; ++i) {
        for (int k = 0; k < 2; ++k) {
            auto v = add_var(i, layer, chain, false);
            lay.vars_at[i - 1].push_back(v);
            for (int d = 0; d < 3; ++d) add_edge(v, lay.chk(i + d));
        }
    }
    return lay;
}

ChainLayout Assembler::append_ra(int q, int L, bool modified, int layer, int chain) {
    if (q < 3) throw InvalidParameters("RA chain: q >= 3 required");
    if (L < q) throw InvalidParameters("RA chain: L >= q required");
    const int nchk = L + q - 1;
    ChainLayout lay;
    lay.L = L;
    lay.chks_at.resize(nchk);
    lay.vars_at.resize(nchk);
    for (int i = 1; i <= nchk; ++i) lay.chks_at[i - 1].push_back(add_chk(i, layer, chain));
    for (int i = 1; i <= L; ++i) {
        auto v = add_var(i, layer, chain, false);
        lay.vars_at[i - 1].push_back(v);
        add_edge(v, lay.chk(i), q - 2);
        add_edge(v, lay.chk(i + q - 1), 2);
    }
    for (int i = 1; i <= nchk; ++i) {
        if (modified && (i == 1 || i == 2 || i == nchk - 1 || i == nchk)) {
            lay.freed.push_back({lay.chk(i), 2});
            continue;
        }
        auto v = add_var(i, layer, chain, false);
        lay.vars_at[i - 1].push_back(v);
        add_edge(v, lay.chk(i), 2);
    }
    return lay;
}

// Edge-spreading split of the ARJA base matrix; B0 at the node's own position,
// B1 one position later. Column 1 is the punctured degree-6 node.
static const int kArjaB0[3][5] = {{1, 2, 0, 0, 0}, {0, 0, 0, 1, 1}, {0, 1, 1, 1, 0}};
static const int kArjaB1[3][5] = {{0, 0, 0, 0, 0}, {0, 3, 1, 0, 0}, {0, 0, 1, 1, 1}};

ChainLayout Assembler::append_arja(int L, bool modified, int layer, int chain) {
    if (L < 3) throw InvalidParameters("ARJA chain: L >= 3 required");
    ChainLayout lay;
    lay.L = L;
    lay.chks_at.resize(L + 1);
    lay.vars_at.resize(L);
    for (int i = 1; i <= L; ++i)
        for (int r = 0; r < 3; ++r) lay.chks_at[i - 1].push_back(add_chk(i, layer, chain));
    // two termination checks at position L+1 (rows 1 and 2 of B1)
    for (int r = 1; r < 3; ++r) lay.chks_at[L].push_back(add_chk(L + 1, layer, chain));
    auto chk_of = [&](int pos, int row) -> std::uint32_t {
        if (pos <= L) return lay.chks_at[pos - 1][row];
        return lay.chks_at[L][row - 1];  // rows 1,2 only
    };
    for (int i = 1; i <= L; ++i) {
        for (int col = 0; col < 5; ++col) {
            // modified variant drops the degree-6 and both degree-3 nodes at the chain ends
            if (modified && (i == 1 || i == L) && (col == 1 || col == 2 || col == 3)) {
                for (int r = 0; r < 3; ++r) {
                    if (kArjaB0[r][col]) lay.freed.push_back({chk_of(i, r), kArjaB0[r][col]});
                    if (kArjaB1[r][col]) lay.freed.push_back({chk_of(i + 1, r), kArjaB1[r][col]});
                }
                lay.vars_at[i - 1].push_back(UINT32_MAX);  // placeholder keeps column indexing
                continue;
            }
            auto v = add_var(i, layer, chain, col == 1);
            lay.vars_at[i - 1].push_back(v);
            for (int r = 0; r < 3; ++r) {
                if (kArjaB0[r][col]) add_edge(v, chk_of(i, r), kArjaB0[r][col]);
                if (kArjaB1[r][col]) add_edge(v, chk_of(i + 1, r), kArjaB1[r][col]);
            }
        }
    }
    return lay;
}

ChainLayout Assembler::append_chain(const EnsembleSpec& spec, int layer, int chain) {
    switch (spec.family) {
        case Family::Regular: return append_regular(spec.J, spec.K, spec.L, layer, chain);
        case Family::RA: return append_ra(spec.q, spec.L, false, layer, chain);
        case Family::ModifiedRA: return append_ra(spec.q, spec.L, true, layer, chain);
        case Family::ARJA: return append_arja(spec.L, false, layer, chain);
        case Family::ModifiedARJA: return append_arja(spec.L, true, layer, chain);
    }
    throw UnsupportedConstruction("unknown family");
}

}  // namespace detail

BaseMatrix arja_b0() {
    BaseMatrix b(3, 5);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) b.at(r, c) = detail::kArjaB0[r][c];
    return b;
}

BaseMatrix arja_b1() {
    BaseMatrix b(3, 5);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) b.at(r, c) = detail::kArjaB1[r][c];
    return b;
}

Protograph build_regular_chain(int J, int K, int L) {
    Assembler a;
    a.append_regular(J, K, L, 0, 0);
    return a.finish({Family::Regular, J, K, 6, L}, 0, 2, 0);
}

Protograph build_sc_ra(int q, int L, bool modified) {
    Assembler a;
    a.append_ra(q, L, modified, 0, 0);
    EnsembleSpec s{modified ? Family::ModifiedRA : Family::RA, 3, 6, q, L};
    return a.finish(s, 0, 2, q - 1);
}

Protograph build_sc_arja(int L, bool modified) {
    Assembler a;
    a.append_arja(L, modified, 0, 0);
    EnsembleSpec s{modified ? Family::ModifiedARJA : Family::ARJA, 3, 6, 6, L};
    return a.finish(s, 0, 5, 0);
}

Protograph build_chain(const EnsembleSpec& spec) {
    switch (spec.family) {
        case Family::Regular: return build_regular_chain(spec.J, spec.K, spec.L);
        case Family::RA: return build_sc_ra(spec.q, spec.L, false);
        case Family::ModifiedRA: return build_sc_ra(spec.q, spec.L, true);
        case Family::ARJA: return build_sc_arja(spec.L, false);
        case Family::ModifiedARJA: return build_sc_arja(spec.L, true);
    }
    throw UnsupportedConstruction("unknown family");
}

}  // namespace scldpc
