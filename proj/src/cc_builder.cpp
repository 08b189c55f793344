#include "scldpc/cc_builder.hpp"

#include <map>

#include "assembler.hpp"
#include "scldpc/errors.hpp"
#include "scldpc/protographs.hpp"

namespace scldpc {

using detail::Assembler;
using detail::ChainLayout;

namespace {

// chain j's mid connects into chain (j+1)'s termination checks
void connect_regular(Assembler& a, const ChainLayout& upper, const ChainLayout& lower,
                     RegularPattern pattern) {
    const int L = upper.L;
    const int h = L / 2;
    auto chk1 = lower.chk(1), chk2 = lower.chk(2);
    auto chkA = lower.chk(L + 1), chkB = lower.chk(L + 2);
    switch (pattern) {
        case RegularPattern::FourPos45:
            for (int k = 0; k < 2; ++k) {
                a.add_edge(upper.var(h, k), chk1);
                a.add_edge(upper.var(h + 1, k), chk1);
                a.add_edge(upper.var(h + 1, k), chk2);
                a.add_edge(upper.var(h + 2, k), chkA);
                a.add_edge(upper.var(h + 2, k), chkB);
                a.add_edge(upper.var(h + 3, k), chkB);
            }
            break;
        case RegularPattern::SixPosDeg4:
            for (int k = 0; k < 2; ++k) {
                a.add_edge(upper.var(h - 1, k), chk1);
                a.add_edge(upper.var(h, k), chk1);
                a.add_edge(upper.var(h + 1, k), chk2);
                a.add_edge(upper.var(h + 2, k), chkA);
                a.add_edge(upper.var(h + 3, k), chkB);
                a.add_edge(upper.var(h + 4, k), chkB);
            }
            break;
        case RegularPattern::TwoPosDeg6:
            for (int k = 0; k < 2; ++k) {
                a.add_edge(upper.var(h, k), chk1, 2);
                a.add_edge(upper.var(h, k), chk2);
                a.add_edge(upper.var(h + 1, k), chkB, 2);
                a.add_edge(upper.var(h + 1, k), chkA);
            }
            break;
    }
}

int min_l_for(RegularPattern) { return 8; }

}  // namespace

Protograph build_cc_regular_variant(int L, int T, RegularPattern pattern) {
    if (T < 1) throw InvalidParameters("build_cc_regular: T >= 1 required");
    if (L < min_l_for(pattern))
        throw InvalidParameters("build_cc_regular: L too small for the connection region");
    if (T == 1) return build_regular_chain(3, 6, L);
    Assembler a;
    std::vector<ChainLayout> chains;
    for (int j = 1; j <= T; ++j) chains.push_back(a.append_regular(3, 6, L, j, 0));
    for (int j = 0; j + 1 < T; ++j) connect_regular(a, chains[j], chains[j + 1], pattern);
    return a.finish({Family::Regular, 3, 6, 6, L}, T, 2, 0);
}

Protograph build_cc_regular(int L, int T) {
    return build_cc_regular_variant(L, T, RegularPattern::FourPos45);
}

Protograph build_cc_tree(int L, int T) {
    if (T < 1) throw InvalidParameters("build_cc_tree: T >= 1 required");
    if (L < 12) throw InvalidParameters("build_cc_tree: L >= 12 required");
    if (T > 16) throw InvalidParameters("build_cc_tree: T too large");
    if (T == 1) return build_regular_chain(3, 6, L);
    Assembler a;
    std::vector<std::vector<ChainLayout>> layers(T);
    for (int j = 1; j <= T; ++j) {
        const int n_chains = 1 << (j - 1);
        for (int c = 0; c < n_chains; ++c) layers[j - 1].push_back(a.append_regular(3, 6, L, j, c));
    }
    const int r1 = L / 3, r2 = (2 * L) / 3;
    auto connect_region = [&](const ChainLayout& upper, const ChainLayout& lower, int r) {
        auto chk1 = lower.chk(1), chk2 = lower.chk(2);
        auto chkA = lower.chk(upper.L + 1), chkB = lower.chk(upper.L + 2);
        for (int k = 0; k < 2; ++k) {
            a.add_edge(upper.var(r, k), chk1);
            a.add_edge(upper.var(r + 1, k), chk1);
            a.add_edge(upper.var(r + 1, k), chk2);
            a.add_edge(upper.var(r + 2, k), chkA);
            a.add_edge(upper.var(r + 2, k), chkB);
            a.add_edge(upper.var(r + 3, k), chkB);
        }
    };
    for (int j = 0; j + 1 < T; ++j) {
        for (size_t c = 0; c < layers[j].size(); ++c) {
            connect_region(layers[j][c], layers[j + 1][2 * c], r1);
            connect_region(layers[j][c], layers[j + 1][2 * c + 1], r2);
        }
    }
    return a.finish({Family::Regular, 3, 6, 6, L}, T, 2, 0);
}

Rational protected_ratio(int T) {
    if (T < 1) throw InvalidParameters("protected_ratio: T >= 1 required");
    if (T > 62) throw InvalidParameters("protected_ratio: T too large for exact arithmetic");
    const std::int64_t num = (std::int64_t(1) << (T - 1)) - 1;
    const std::int64_t den = (std::int64_t(1) << T) - 1;
    return Rational(num, den);
}

namespace {

// All 30 spare termination sockets of an unmodified RA(6,L) chain, near end first.
std::vector<std::uint32_t> ra_slack_sockets(const ChainLayout& lay, int q) {
    std::vector<std::uint32_t> out;
    const int nchk = lay.L + q - 1;
    for (int j = 1; j <= q - 1; ++j)
        for (int s = 0; s < 2; ++s) out.push_back(lay.chk(j));
    for (int j = lay.L + 1; j <= nchk; ++j)
        for (int s = 0; s < 4; ++s) out.push_back(lay.chk(j));
    return out;
}

}  // namespace

Protograph build_cc_ra(int q, int L, int T, RAVariant variant) {
    if (q != 6) throw UnsupportedConstruction("build_cc_ra: q = 6 required");
    if (L < 10) throw InvalidParameters("build_cc_ra: L >= 10 required");
    if (T < 1) throw InvalidParameters("build_cc_ra: T >= 1 required");
    const int h = L / 2;
    if (T == 1) return build_sc_ra(q, L, false);

    Assembler a;
    if (variant == RAVariant::TwoPerLayer) {
        if (T > 16) throw InvalidParameters("build_cc_ra: T too large");
        std::vector<std::vector<ChainLayout>> layers(T);
        for (int j = 1; j <= T; ++j)
            for (int c = 0; c < (1 << (j - 1)); ++c)
                layers[j - 1].push_back(a.append_ra(q, L, false, j, c));
        for (int j = 0; j + 1 < T; ++j) {
            for (size_t c = 0; c < layers[j].size(); ++c) {
                std::vector<std::uint32_t> sockets = ra_slack_sockets(layers[j + 1][2 * c], q);
                auto more = ra_slack_sockets(layers[j + 1][2 * c + 1], q);
                sockets.insert(sockets.end(), more.begin(), more.end());
                // 60 sockets round-robin over the 5 mid repetition nodes: degree 6 -> 18
                for (size_t i = 0; i < sockets.size(); ++i)
                    a.add_edge(layers[j][c].var(h + static_cast<int>(i % 5)), sockets[i]);
            }
        }
        return a.finish({Family::RA, 3, 6, q, L}, T, 2, q - 1);
    }

    if (variant == RAVariant::SingleChain30) {
        std::vector<ChainLayout> chains;
        chains.push_back(a.append_ra(q, L, false, 1, 0));
        for (int j = 2; j <= T; ++j) chains.push_back(a.append_ra(q, L, false, j, 0));
        for (int j = 0; j + 1 < T; ++j) {
            auto sockets = ra_slack_sockets(chains[j + 1], q);
            // 30 sockets round-robin: degree 6 -> 12 over 5 mid positions
            for (size_t i = 0; i < sockets.size(); ++i)
                a.add_edge(chains[j].var(h + static_cast<int>(i % 5)), sockets[i]);
        }
        return a.finish({Family::RA, 3, 6, q, L}, T, 2, q - 1);
    }

    // ModifiedSingle: chain 1 unmodified, chains 2..T modified; the 8 freed
    // sockets of chain j+1 raise 4 mid repetition nodes of chain j to degree 8.
    std::vector<ChainLayout> chains;
    chains.push_back(a.append_ra(q, L, false, 1, 0));
    for (int j = 2; j <= T; ++j) chains.push_back(a.append_ra(q, L, true, j, 0));
    for (int j = 0; j + 1 < T; ++j) {
        const auto& freed = chains[j + 1].freed;  // 4 checks x 2 sockets
        int off = 0;
        for (const auto& [chk, cnt] : freed) {
            a.add_edge(chains[j].var(h + off), chk, cnt);
            ++off;
        }
    }
    return a.finish({Family::RA, 3, 6, q, L}, T, 2, q - 1);
}

Protograph build_cc_arja(int L, int T) {
    if (L < 8) throw InvalidParameters("build_cc_arja: L >= 8 required");
    if (T < 1) throw InvalidParameters("build_cc_arja: T >= 1 required");
    if (T == 1) return build_sc_arja(L, true);
    const int h = L / 2;
    Assembler a;
    std::vector<ChainLayout> chains;
    for (int j = 1; j <= T; ++j) chains.push_back(a.append_arja(L, true, j, 0));
    // Freed-socket order in append_arja: position-1 removals (v2: 6 sockets,
    // v3: 3, v4: 3) then position-L removals in the same column order. The
    // absorbers merge those edge bundles onto mid-chain nodes of the chain
    // above: degree 6+6=12, 6+3=9 and 3+3=6.
    for (int j = 0; j + 1 < T; ++j) {
        const auto& lower = chains[j + 1];
        const auto& upper = chains[j];
        struct Bundle {
            std::uint32_t absorber;
            size_t first, count;  // range into lower.freed
        };
        // lower.freed layout: pos-1 {v2: entries, v3, v4}, pos-L {v2, v3, v4}
        // with one entry per (check,mult) pair; count entries per column:
        // v2: B0 has rows {0,2} nonzero (2 entries) + B1 row1 (1) = 3 entries
        // v3: B0 row2 (1) + B1 rows {1,2} (2) = 3 entries
        // v4: B0 rows {1,2} (2) + B1 row2 (1) = 3 entries
        const size_t per_col[3] = {3, 3, 3};
        size_t idx = 0;
        std::vector<Bundle> bundles;
        for (int end = 0; end < 2; ++end) {
            const int base_pos = h + 2 * end;
            // v2 bundle (6 edges) -> punctured degree-6 node at base_pos: 12
            bundles.push_back({upper.vars_at[base_pos - 1][1], idx, per_col[0]});
            idx += per_col[0];
            // v3 bundle (3 edges) -> degree-6 node at base_pos+1: 9
            bundles.push_back({upper.vars_at[base_pos][1], idx, per_col[1]});
            idx += per_col[1];
            // v4 bundle (3 edges) -> degree-3 node at base_pos: 6
            bundles.push_back({upper.vars_at[base_pos - 1][2], idx, per_col[2]});
            idx += per_col[2];
        }
        for (const auto& b : bundles) {
            if (b.absorber == UINT32_MAX)
                throw InvalidParameters("build_cc_arja: absorber position collides with removed node");
            for (size_t i = b.first; i < b.first + b.count; ++i)
                a.add_edge(b.absorber, lower.freed[i].first, lower.freed[i].second);
        }
    }
    return a.finish({Family::ARJA, 3, 6, 6, L}, T, 5, 0);
}

Protograph build_custom(const CCSpec& spec) {
    if (spec.T < 1) throw InvalidSpec("build_custom: T >= 1 required");
    std::vector<int> per_layer = spec.chains_per_layer;
    if (per_layer.empty()) per_layer.assign(spec.T, 1);
    if (static_cast<int>(per_layer.size()) != spec.T)
        throw InvalidSpec("build_custom: chains_per_layer length must equal T");

    Assembler a;
    std::map<std::pair<int, int>, ChainLayout> chains;  // (layer, chain) -> layout
    for (int j = 1; j <= spec.T; ++j) {
        if (per_layer[j - 1] < 1) throw InvalidSpec("build_custom: empty layer");
        for (int c = 0; c < per_layer[j - 1]; ++c)
            chains.emplace(std::make_pair(j, c), a.append_chain(spec.component, j, c));
    }

    // interior check degree cap of the (unmodified) component ensemble
    int cap = 0;
    switch (spec.component.family) {
        case Family::Regular: cap = spec.component.K; break;
        case Family::RA:
        case Family::ModifiedRA: cap = spec.component.q + 2; break;
        case Family::ARJA:
        case Family::ModifiedARJA: cap = 6; break;
    }

    std::map<std::uint32_t, int> added;  // per target check
    for (size_t i = 0; i < spec.connections.size(); ++i) {
        const auto& e = spec.connections[i];
        const int ei = static_cast<int>(i);
        if (e.multiplicity < 1)
            throw InvalidSpec("connection " + std::to_string(ei) + ": multiplicity < 1", ei);
        if (e.to_layer != e.from_layer + 1)
            throw InvalidSpec("connection " + std::to_string(ei) + ": to_layer must be from_layer+1", ei);
        auto fu = chains.find({e.from_layer, e.from_chain});
        auto tl = chains.find({e.to_layer, e.to_chain});
        if (fu == chains.end() || tl == chains.end())
            throw InvalidSpec("connection " + std::to_string(ei) + ": no such chain", ei);
        const auto& upper = fu->second;
        const auto& lower = tl->second;
        if (e.var_position < 1 || e.var_position > static_cast<int>(upper.vars_at.size()) ||
            upper.vars_at[e.var_position - 1].empty())
            throw InvalidSpec("connection " + std::to_string(ei) + ": bad var_position", ei);
        if (e.chk_position < 1 || e.chk_position > static_cast<int>(lower.chks_at.size()))
            throw InvalidSpec("connection " + std::to_string(ei) + ": bad chk_position", ei);

        // eligible variables at the position (repetition node only for RA)
        std::vector<std::uint32_t> vars;
        const bool is_ra = spec.component.family == Family::RA ||
                           spec.component.family == Family::ModifiedRA;
        for (size_t k = 0; k < upper.vars_at[e.var_position - 1].size(); ++k) {
            auto v = upper.vars_at[e.var_position - 1][k];
            if (v == UINT32_MAX) continue;
            if (is_ra && k > 0) continue;
            vars.push_back(v);
        }
        if (is_ra && e.var_position > spec.component.L)
            throw InvalidSpec("connection " + std::to_string(ei) + ": no repetition node here", ei);

        for (auto chk : lower.chks_at[e.chk_position - 1]) {
            const int add = e.multiplicity * static_cast<int>(vars.size());
            const int deg = a.chk_degree(chk) + added[chk] + add;
            if (deg > cap)
                throw InvalidSpec("connection " + std::to_string(ei) +
                                      ": check degree " + std::to_string(deg) +
                                      " exceeds cap " + std::to_string(cap),
                                  ei);
            added[chk] += add;
            for (auto v : vars) a.add_edge(v, chk, e.multiplicity);
        }
    }
    const bool is_ra = spec.component.family == Family::RA ||
                       spec.component.family == Family::ModifiedRA;
    const int vu = spec.component.family == Family::ARJA ||
                           spec.component.family == Family::ModifiedARJA
                       ? 5
                       : 2;
    return a.finish(spec.component, spec.T, vu, is_ra ? spec.component.q - 1 : 0);
}

}  // namespace scldpc
