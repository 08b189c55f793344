#include "scldpc/lifting.hpp"

#include <algorithm>
#include <sstream>

#include "scldpc/errors.hpp"
#include "scldpc/rng.hpp"

namespace scldpc {

std::uint32_t LiftedCode::transmitted_count() const {
    std::uint32_t n = 0;
    for (auto b : punctured) n += b ? 0 : 1;
    return n;
}

std::vector<std::uint32_t> LiftedCode::transmitted_ids() const {
    std::vector<std::uint32_t> out;
    out.reserve(n_vars);
    for (std::uint32_t v = 0; v < n_vars; ++v)
        if (!punctured[v]) out.push_back(v);
    return out;
}

namespace {

void fisher_yates(std::vector<std::uint32_t>& perm, Xoshiro256& rng) {
    const std::uint32_t n = static_cast<std::uint32_t>(perm.size());
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    for (std::uint32_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
}

LiftedCode assemble(const Protograph& p, std::uint32_t N, std::uint64_t seed, bool identity) {
    const auto medges = p.multi_edges();
    int max_mult = 1;
    for (const auto& e : medges) max_mult = std::max(max_mult, e.mult);
    if (static_cast<int>(N) < max_mult)
        throw InvalidParameters("lift: N must be at least the maximum edge multiplicity");
    if (!identity && N < 2) throw InvalidParameters("lift: N >= 2 required");

    LiftedCode code;
    code.N = N;
    code.seed = identity ? 0 : seed;
    code.proto = p;
    code.n_vars = static_cast<std::uint32_t>(p.v()) * N;
    code.n_checks = static_cast<std::uint32_t>(p.c()) * N;
    code.proto_of_var.resize(code.n_vars);
    code.proto_of_chk.resize(code.n_checks);
    code.punctured.resize(code.n_vars);
    for (std::uint32_t v = 0; v < code.n_vars; ++v) {
        code.proto_of_var[v] = v / N;
        code.punctured[v] = p.punctured[v / N];
    }
    for (std::uint32_t c = 0; c < code.n_checks; ++c) code.proto_of_chk[c] = c / N;

    // edge targets per (edge, copy): var (v*N + j) <-> chk (c*N + perm[j])
    std::vector<std::uint32_t> vdeg(code.n_vars, 0), cdeg(code.n_checks, 0);
    std::vector<std::vector<std::uint32_t>> perms;  // per expanded permutation
    std::vector<std::pair<std::uint32_t, std::uint32_t>> owners;  // (proto var, proto chk)

    std::vector<std::uint32_t> perm(N), taken;
    for (size_t ei = 0; ei < medges.size(); ++ei) {
        const auto& me = medges[ei];
        Xoshiro256 rng(derive_seed(seed, static_cast<std::uint64_t>(ei)));
        std::vector<std::vector<std::uint32_t>> chosen;
        for (int m = 0; m < me.mult; ++m) {
            if (identity) {
                perm.resize(N);
                for (std::uint32_t j = 0; j < N; ++j) perm[j] = (j + m) % N;
            } else {
                // rejection sampling keeps the m permutations pairwise disjoint
                bool ok = false;
                while (!ok) {
                    fisher_yates(perm, rng);
                    ok = true;
                    for (const auto& prev : chosen) {
                        for (std::uint32_t j = 0; j < N; ++j) {
                            if (prev[j] == perm[j]) { ok = false; break; }
                        }
                        if (!ok) break;
                    }
                }
            }
            chosen.push_back(perm);
        }
        for (auto& pm : chosen) {
            for (std::uint32_t j = 0; j < N; ++j) {
                ++vdeg[me.var * N + j];
                ++cdeg[me.chk * N + pm[j]];
            }
            owners.push_back({me.var, me.chk});
            perms.push_back(std::move(pm));
        }
    }

    code.var_off.assign(code.n_vars + 1, 0);
    code.chk_off.assign(code.n_checks + 1, 0);
    for (std::uint32_t v = 0; v < code.n_vars; ++v) code.var_off[v + 1] = code.var_off[v] + vdeg[v];
    for (std::uint32_t c = 0; c < code.n_checks; ++c) code.chk_off[c + 1] = code.chk_off[c] + cdeg[c];
    code.var_adj.resize(code.var_off.back());
    code.chk_adj.resize(code.chk_off.back());
    std::vector<std::uint32_t> vpos(code.var_off.begin(), code.var_off.end() - 1);
    std::vector<std::uint32_t> cpos(code.chk_off.begin(), code.chk_off.end() - 1);
    for (size_t k = 0; k < perms.size(); ++k) {
        const auto [pv, pc] = owners[k];
        for (std::uint32_t j = 0; j < N; ++j) {
            const std::uint32_t lv = pv * N + j;
            const std::uint32_t lc = pc * N + perms[k][j];
            code.var_adj[vpos[lv]++] = lc;
            code.chk_adj[cpos[lc]++] = lv;
        }
    }
    for (std::uint32_t v = 0; v < code.n_vars; ++v)
        std::sort(code.var_adj.begin() + code.var_off[v], code.var_adj.begin() + code.var_off[v + 1]);
    for (std::uint32_t c = 0; c < code.n_checks; ++c)
        std::sort(code.chk_adj.begin() + code.chk_off[c], code.chk_adj.begin() + code.chk_off[c + 1]);
    return code;
}

}  // namespace

LiftedCode lift(const Protograph& p, std::uint32_t N, std::uint64_t seed) {
    return assemble(p, N, seed, false);
}

LiftedCode lift_identity(const Protograph& p, std::uint32_t N) {
    return assemble(p, N, 0, true);
}

BlockLength lifted_block_length(const Protograph& p, std::uint32_t N) {
    BlockLength b;
    b.n = static_cast<std::uint64_t>(p.v()) * N;
    b.transmitted = static_cast<std::uint64_t>(p.transmitted_count()) * N;
    return b;
}

std::string to_alist(const LiftedCode& code) {
    std::ostringstream os;
    os << code.n_vars << " " << code.n_checks << "\n";
    std::uint32_t maxv = 0, maxc = 0;
    for (std::uint32_t v = 0; v < code.n_vars; ++v)
        maxv = std::max<std::uint32_t>(maxv, code.var_degree(v));
    for (std::uint32_t c = 0; c < code.n_checks; ++c)
        maxc = std::max<std::uint32_t>(maxc, code.chk_degree(c));
    os << maxv << " " << maxc << "\n";
    for (std::uint32_t v = 0; v < code.n_vars; ++v) os << (v ? " " : "") << code.var_degree(v);
    os << "\n";
    for (std::uint32_t c = 0; c < code.n_checks; ++c) os << (c ? " " : "") << code.chk_degree(c);
    os << "\n";
    for (std::uint32_t v = 0; v < code.n_vars; ++v) {
        for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i)
            os << (i > code.var_off[v] ? " " : "") << code.var_adj[i] + 1;
        os << "\n";
    }
    for (std::uint32_t c = 0; c < code.n_checks; ++c) {
        for (auto i = code.chk_off[c]; i < code.chk_off[c + 1]; ++i)
            os << (i > code.chk_off[c] ? " " : "") << code.chk_adj[i] + 1;
        os << "\n";
    }
    return os.str();
}

LiftedCode lifted_from_alist(const std::string& text) {
    std::istringstream in(text);
    std::uint32_t n = 0, m = 0, maxv = 0, maxc = 0;
    if (!(in >> n >> m >> maxv >> maxc) || n == 0 || m == 0)
        throw std::invalid_argument("alist: bad header");
    LiftedCode code;
    code.N = 1;
    code.n_vars = n;
    code.n_checks = m;
    std::vector<std::uint32_t> vdeg(n), cdeg(m);
    for (auto& d : vdeg)
        if (!(in >> d)) throw std::invalid_argument("alist: truncated variable degrees");
    for (auto& d : cdeg)
        if (!(in >> d)) throw std::invalid_argument("alist: truncated check degrees");
    code.var_off.assign(n + 1, 0);
    code.chk_off.assign(m + 1, 0);
    for (std::uint32_t v = 0; v < n; ++v) code.var_off[v + 1] = code.var_off[v] + vdeg[v];
    for (std::uint32_t c = 0; c < m; ++c) code.chk_off[c + 1] = code.chk_off[c] + cdeg[c];
    code.var_adj.resize(code.var_off.back());
    code.chk_adj.resize(code.chk_off.back());
    for (std::uint32_t v = 0; v < n; ++v)
        for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i) {
            std::uint32_t x;
            if (!(in >> x) || x < 1 || x > m) throw std::invalid_argument("alist: bad neighbor");
            code.var_adj[i] = x - 1;
        }
    for (std::uint32_t c = 0; c < m; ++c)
        for (auto i = code.chk_off[c]; i < code.chk_off[c + 1]; ++i) {
            std::uint32_t x;
            if (!(in >> x) || x < 1 || x > n) throw std::invalid_argument("alist: bad neighbor");
            code.chk_adj[i] = x - 1;
        }
    // imported codes carry trivial annotations: one layer, nothing punctured
    code.proto_of_var.resize(n);
    code.proto_of_chk.resize(m);
    for (std::uint32_t v = 0; v < n; ++v) code.proto_of_var[v] = v;
    for (std::uint32_t c = 0; c < m; ++c) code.proto_of_chk[c] = c;
    code.punctured.assign(n, 0);
    code.proto.base = BaseMatrix(1, 1);
    code.proto.base.at(0, 0) = 1;
    code.proto.var_position.assign(n, 1);
    code.proto.chk_position.assign(m, 1);
    code.proto.var_layer.assign(n, 0);
    code.proto.chk_layer.assign(m, 0);
    code.proto.var_chain.assign(n, 0);
    code.proto.chk_chain.assign(m, 0);
    code.proto.punctured.assign(n, 0);
    code.proto.v_unc = 1;
    return code;
}

}  // namespace scldpc
