#include "scldpc/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scldpc/errors.hpp"
#include "scldpc/rng.hpp"

namespace scldpc {

namespace {

// Expand a transmitted-indexed pattern to per-variable erasure flags
// (punctured variables are always erased).
std::vector<std::uint8_t> full_erasures(const LiftedCode& code, const ErasurePattern& pat) {
    const auto tx = code.transmitted_ids();
    if (pat.erased.size() != tx.size())
        throw InvalidParameters("erasure pattern length mismatch");
    std::vector<std::uint8_t> erased(code.n_vars, 1);
    for (size_t t = 0; t < tx.size(); ++t) erased[tx[t]] = pat.erased[t];
    return erased;
}

std::vector<std::uint8_t> full_values(const LiftedCode& code,
                                      const std::vector<std::uint8_t>* received) {
    std::vector<std::uint8_t> val(code.n_vars, 0);
    if (received) {
        const auto tx = code.transmitted_ids();
        if (received->size() != tx.size())
            throw InvalidParameters("received word length mismatch");
        for (size_t t = 0; t < tx.size(); ++t) val[tx[t]] = (*received)[t] & 1;
    }
    return val;
}

struct LayerCounts {
    int n_layers;
    std::vector<std::int64_t> vars, chks;
    std::vector<int> var_of, chk_of;  // 0-based layer per lifted node
    explicit LayerCounts(const LiftedCode& code) {
        n_layers = code.n_layers();
        vars.assign(n_layers, 0);
        chks.assign(n_layers, 0);
        var_of.resize(code.n_vars);
        chk_of.resize(code.n_checks);
        for (std::uint32_t v = 0; v < code.n_vars; ++v) {
            var_of[v] = code.var_layer(v) - 1;
            ++vars[var_of[v]];
        }
        for (std::uint32_t c = 0; c < code.n_checks; ++c) {
            chk_of[c] = code.chk_layer(c) - 1;
            ++chks[chk_of[c]];
        }
    }
};

}  // namespace

ErasurePattern random_erasures(const LiftedCode& code, double eps, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    ErasurePattern pat;
    pat.erased.resize(code.transmitted_count());
    for (auto& e : pat.erased) e = rng.bernoulli(eps) ? 1 : 0;
    return pat;
}

PeelResult peel_bec(const LiftedCode& code, const ErasurePattern& pat, bool capture,
                    const std::vector<std::uint8_t>* received) {
    const auto erased = full_erasures(code, pat);
    auto value = full_values(code, received);
    const bool track_values = received != nullptr;
    LayerCounts lc(code);

    std::vector<std::uint8_t> unknown(erased.begin(), erased.end());
    std::vector<std::uint16_t> deg(code.n_checks, 0);
    std::vector<std::uint32_t> xor_ids(code.n_checks, 0);
    std::vector<std::uint8_t> xor_val(code.n_checks, 0);

    std::int64_t unknown_total = 0;
    std::vector<std::int64_t> unknown_layer(lc.n_layers, 0);
    for (std::uint32_t v = 0; v < code.n_vars; ++v)
        if (unknown[v]) { ++unknown_total; ++unknown_layer[lc.var_of[v]]; }

    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    std::int64_t deg1_total = 0;
    std::vector<std::int64_t> deg1_layer(lc.n_layers, 0);
    for (std::uint32_t c = 0; c < code.n_checks; ++c) {
        for (auto i = code.chk_off[c]; i < code.chk_off[c + 1]; ++i) {
            const auto v = code.chk_adj[i];
            if (unknown[v]) { ++deg[c]; xor_ids[c] ^= v; }
            else if (track_values) xor_val[c] ^= value[v];
        }
        if (deg[c] == 1) { ready.push(c); ++deg1_total; ++deg1_layer[lc.chk_of[c]]; }
    }

    PeelResult res;
    res.trajectory.n_layers = lc.n_layers;
    const std::int64_t stride = std::max<std::int64_t>(1, code.N / 10);
    std::int64_t iters = 0;
    auto sample = [&]() {
        TrajectorySample s;
        s.tau = static_cast<double>(iters) /
                (static_cast<double>(std::max(1, code.proto.v_unc)) * code.N);
        s.r1 = static_cast<double>(deg1_total) / code.n_checks;
        s.r1_layer.resize(lc.n_layers);
        s.resid_layer.resize(lc.n_layers);
        for (int l = 0; l < lc.n_layers; ++l) {
            s.r1_layer[l] = lc.chks[l] ? static_cast<double>(deg1_layer[l]) / lc.chks[l] : 0.0;
            s.resid_layer[l] = lc.vars[l] ? static_cast<double>(unknown_layer[l]) / lc.vars[l] : 0.0;
        }
        res.trajectory.samples.push_back(std::move(s));
    };
    if (capture && unknown_total > 0) sample();

    while (!ready.empty()) {
        const auto c = ready.top();
        ready.pop();
        if (deg[c] != 1) continue;
        const auto v = xor_ids[c];
        const std::uint8_t bit = xor_val[c];
        unknown[v] = 0;
        if (track_values) value[v] = bit;
        --unknown_total;
        --unknown_layer[lc.var_of[v]];
        ++iters;
        for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i) {
            const auto c2 = code.var_adj[i];
            if (deg[c2] == 1) { --deg1_total; --deg1_layer[lc.chk_of[c2]]; }
            --deg[c2];
            xor_ids[c2] ^= v;
            if (track_values) xor_val[c2] ^= bit;
            if (deg[c2] == 1) {
                ++deg1_total;
                ++deg1_layer[lc.chk_of[c2]];
                ready.push(c2);
            }
        }
        if (capture && iters % stride == 0) sample();
    }
    if (capture && unknown_total == 0 && iters > 0 && iters % stride != 0) sample();

    auto& out = res.outcome;
    out.success = unknown_total == 0;
    out.iterations = static_cast<int>(iters);
    out.layer_residual = unknown_layer;
    out.layer_success.resize(lc.n_layers);
    for (int l = 0; l < lc.n_layers; ++l) out.layer_success[l] = unknown_layer[l] == 0;
    if (track_values && out.success) out.decoded = value;
    return res;
}

DecodeOutcome bp_bec(const LiftedCode& code, const ErasurePattern& pat, int max_iter,
                     const std::vector<std::uint8_t>* received) {
    const auto erased = full_erasures(code, pat);
    auto value = full_values(code, received);
    const bool track_values = received != nullptr;
    LayerCounts lc(code);

    std::vector<std::uint8_t> unknown(erased.begin(), erased.end());
    std::vector<std::uint16_t> deg(code.n_checks, 0);
    std::vector<std::uint32_t> xor_ids(code.n_checks, 0);
    std::vector<std::uint8_t> xor_val(code.n_checks, 0);
    std::int64_t unknown_total = 0;
    for (std::uint32_t v = 0; v < code.n_vars; ++v) unknown_total += unknown[v];
    for (std::uint32_t c = 0; c < code.n_checks; ++c)
        for (auto i = code.chk_off[c]; i < code.chk_off[c + 1]; ++i) {
            const auto v = code.chk_adj[i];
            if (unknown[v]) { ++deg[c]; xor_ids[c] ^= v; }
            else if (track_values) xor_val[c] ^= value[v];
        }

    // flooding rounds: all currently degree-one checks fire simultaneously
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t c = 0; c < code.n_checks; ++c)
        if (deg[c] == 1) frontier.push_back(c);
    int rounds = 0;
    while (!frontier.empty() && rounds < max_iter) {
        ++rounds;
        std::vector<std::pair<std::uint32_t, std::uint8_t>> resolve;
        for (auto c : frontier)
            if (deg[c] == 1) resolve.push_back({xor_ids[c], xor_val[c]});
        frontier.clear();
        for (auto [v, bit] : resolve) {
            if (!unknown[v]) continue;
            unknown[v] = 0;
            if (track_values) value[v] = bit;
            --unknown_total;
            for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i) {
                const auto c2 = code.var_adj[i];
                --deg[c2];
                xor_ids[c2] ^= v;
                if (track_values) xor_val[c2] ^= bit;
                if (deg[c2] == 1) frontier.push_back(c2);
            }
        }
    }

    DecodeOutcome out;
    out.success = unknown_total == 0;
    out.iterations = rounds;
    out.layer_residual.assign(lc.n_layers, 0);
    for (std::uint32_t v = 0; v < code.n_vars; ++v)
        if (unknown[v]) ++out.layer_residual[lc.var_of[v]];
    out.layer_success.resize(lc.n_layers);
    for (int l = 0; l < lc.n_layers; ++l) out.layer_success[l] = out.layer_residual[l] == 0;
    if (track_values && out.success) out.decoded = value;
    return out;
}

DecodeOutcome bp_awgn(const LiftedCode& code, const std::vector<double>& llr, int max_iter,
                      const std::vector<std::uint8_t>* truth) {
    if (llr.size() != code.n_vars) throw InvalidParameters("bp_awgn: llr length mismatch");
    for (double x : llr)
        if (!std::isfinite(x)) throw InvalidParameters("bp_awgn: llr must be finite");
    LayerCounts lc(code);
    constexpr double kClip = 30.0;

    const auto ne = code.var_adj.size();
    std::vector<double> c2v(ne, 0.0), v2c(ne);
    // edge ids live in var-CSR order; checks need their edge ids
    std::vector<std::uint32_t> chk_edge(ne);
    {
        std::vector<std::uint32_t> cursor(code.n_checks, 0);
        // match var-order adjacency to chk-order slots: walk vars, for each
        // (v,c) edge claim the next slot of c in chk-CSR order
        std::vector<std::uint32_t> next(code.chk_off.begin(), code.chk_off.end() - 1);
        // chk_adj is sorted by var, and we walk vars ascending, so slots align
        for (std::uint32_t v = 0; v < code.n_vars; ++v)
            for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i)
                chk_edge[next[code.var_adj[i]]++] = i;
    }

    for (std::uint32_t v = 0; v < code.n_vars; ++v)
        for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i)
            v2c[i] = std::clamp(llr[v], -kClip, kClip);

    std::vector<std::uint8_t> hard(code.n_vars, 0);
    auto syndrome_ok = [&]() {
        for (std::uint32_t c = 0; c < code.n_checks; ++c) {
            std::uint8_t parity = 0;
            for (auto i = code.chk_off[c]; i < code.chk_off[c + 1]; ++i)
                parity ^= hard[code.chk_adj[i]];
            if (parity) return false;
        }
        return true;
    };

    int it = 0;
    bool ok = false;
    double pre[256], suf[256];
    for (it = 1; it <= max_iter; ++it) {
        // check update via tanh products with exclusion
        for (std::uint32_t c = 0; c < code.n_checks; ++c) {
            const auto b = code.chk_off[c], e = code.chk_off[c + 1];
            const int k = static_cast<int>(e - b);
            pre[0] = 1.0;
            for (int i = 0; i < k; ++i)
                pre[i + 1] = pre[i] * std::tanh(0.5 * v2c[chk_edge[b + i]]);
            suf[k] = 1.0;
            for (int i = k - 1; i >= 0; --i)
                suf[i] = suf[i + 1] * std::tanh(0.5 * v2c[chk_edge[b + i]]);
            for (int i = 0; i < k; ++i) {
                double t = std::clamp(pre[i] * suf[i + 1], -0.999999999999, 0.999999999999);
                c2v[chk_edge[b + i]] = std::clamp(2.0 * std::atanh(t), -kClip, kClip);
            }
        }
        // variable update + hard decision
        for (std::uint32_t v = 0; v < code.n_vars; ++v) {
            double total = llr[v];
            for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i) total += c2v[i];
            for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i)
                v2c[i] = std::clamp(total - c2v[i], -kClip, kClip);
            hard[v] = total < 0.0 ? 1 : 0;
        }
        if (syndrome_ok()) { ok = true; break; }
    }

    DecodeOutcome out;
    out.iterations = std::min(it, max_iter);
    out.layer_residual.assign(lc.n_layers, 0);
    if (truth) {
        if (truth->size() != code.n_vars) throw InvalidParameters("bp_awgn: truth length mismatch");
        for (std::uint32_t v = 0; v < code.n_vars; ++v)
            if (!code.punctured[v] && hard[v] != (*truth)[v]) ++out.layer_residual[lc.var_of[v]];
        out.success = true;
        for (int l = 0; l < lc.n_layers; ++l) out.success = out.success && out.layer_residual[l] == 0;
    } else {
        out.success = ok;
    }
    out.layer_success.resize(lc.n_layers);
    for (int l = 0; l < lc.n_layers; ++l) out.layer_success[l] = out.layer_residual[l] == 0;
    out.decoded = hard;
    return out;
}

namespace {

int coupling_memory(const Protograph& p) {
    int mem = 0;
    for (const auto& e : p.multi_edges()) {
        if (p.var_layer[e.var] != p.chk_layer[e.chk]) continue;
        if (p.var_chain[e.var] != p.chk_chain[e.chk]) continue;
        mem = std::max(mem, std::abs(p.var_position[e.var] - p.chk_position[e.chk]));
    }
    return mem;
}

}  // namespace

DecodeOutcome windowed_bp(const LiftedCode& code, const ErasurePattern& pat,
                          const TxSchedule& schedule, int W, int iters_per_shift,
                          WindowedStats* stats) {
    const auto& p = code.proto;
    const int T = std::max(1, p.layers);
    const int L = p.component.L;
    for (int j = 0; j < p.v(); ++j)
        if (p.var_chain[j] != 0)
            throw InvalidParameters("windowed_bp: one chain per layer required");
    if (!is_valid_schedule(schedule) || schedule.L != L || schedule.T != T)
        throw InvalidParameters("windowed_bp: schedule does not fit this code");
    const int mem = coupling_memory(p);
    if (W < mem + 1) throw InvalidParameters("windowed_bp: W below coupling memory + 1");

    if (W >= L) {
        // full-span window: no latency advantage, defer to full BP
        auto out = bp_bec(code, pat);
        if (stats) {
            stats->all_finalized = true;
            stats->consumed_unreceived = false;
            stats->blocks_consumed_before_done = static_cast<std::int64_t>(schedule.order.size());
        }
        return out;
    }

    const auto erased = full_erasures(code, pat);
    LayerCounts lc(code);

    // block -> variable ids
    std::vector<std::vector<std::uint32_t>> block_vars(static_cast<size_t>(T) * L);
    auto bidx = [&](int layer, int pos) { return static_cast<size_t>(layer - 1) * L + (pos - 1); };
    for (std::uint32_t v = 0; v < code.n_vars; ++v) {
        const auto pv = code.proto_of_var[v];
        const int layer = std::max(1, p.var_layer[pv]);
        const int pos = p.var_position[pv];
        if (pos >= 1 && pos <= L) block_vars[bidx(layer, pos)].push_back(v);
    }

    enum State : std::uint8_t { UNRECEIVED, ERASED, KNOWN, FAILED };
    std::vector<std::uint8_t> state(code.n_vars, UNRECEIVED);
    std::vector<std::uint8_t> block_in(static_cast<size_t>(T) * L, 0);
    std::vector<int> next_pos(T + 1, 1);
    int total_rounds = 0;
    bool consumed_unreceived = false;

    auto run_window = [&](int layer, int base) {
        // local system: erased vars in window positions of this chain plus
        // received erased vars one check away
        std::vector<std::uint32_t> cand;
        std::vector<std::uint32_t> chks;
        for (int pos = base; pos <= std::min(L, base + W - 1); ++pos)
            for (auto v : block_vars[bidx(layer, pos)])
                if (state[v] == ERASED) cand.push_back(v);
        for (auto v : cand)
            for (auto i = code.var_off[v]; i < code.var_off[v + 1]; ++i)
                chks.push_back(code.var_adj[i]);
        std::sort(chks.begin(), chks.end());
        chks.erase(std::unique(chks.begin(), chks.end()), chks.end());
        for (auto c : chks)
            for (auto i = code.chk_off[c]; i < code.chk_off[c + 1]; ++i) {
                const auto v = code.chk_adj[i];
                if (state[v] == ERASED) cand.push_back(v);
            }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

        for (int round = 0; round < iters_per_shift; ++round) {
            ++total_rounds;
            std::vector<std::uint32_t> resolve;
            for (auto c : chks) {
                int unknowns = 0;
                std::uint32_t who = 0;
                for (auto i = code.chk_off[c]; i < code.chk_off[c + 1]; ++i) {
                    const auto v = code.chk_adj[i];
                    if (state[v] != KNOWN) {
                        ++unknowns;
                        who = v;
                        if (unknowns > 1) break;
                    }
                }
                if (unknowns == 1 && state[who] == ERASED) resolve.push_back(who);
            }
            if (resolve.empty()) break;
            for (auto v : resolve) {
                if (state[v] == UNRECEIVED) consumed_unreceived = true;
                state[v] = KNOWN;
            }
        }
    };

    size_t consumed = 0;
    for (const auto& blk : schedule.order) {
        ++consumed;
        for (auto v : block_vars[bidx(blk.layer, blk.position)])
            state[v] = erased[v] ? ERASED : KNOWN;
        block_in[bidx(blk.layer, blk.position)] = 1;
        bool advanced = true;
        while (advanced) {
            advanced = false;
            for (int j = 1; j <= T; ++j) {
                while (next_pos[j] <= L) {
                    const int hi = std::min(L, next_pos[j] + W - 1);
                    bool have = true;
                    for (int pos = next_pos[j]; pos <= hi; ++pos)
                        if (!block_in[bidx(j, pos)]) { have = false; break; }
                    if (!have) break;
                    run_window(j, next_pos[j]);
                    for (auto v : block_vars[bidx(j, next_pos[j])])
                        if (state[v] == ERASED) state[v] = FAILED;
                    ++next_pos[j];
                    advanced = true;
                }
            }
        }
    }

    DecodeOutcome out;
    out.iterations = total_rounds;
    out.layer_residual.assign(lc.n_layers, 0);
    bool all_final = true;
    for (int j = 1; j <= T; ++j) all_final = all_final && next_pos[j] > L;
    for (std::uint32_t v = 0; v < code.n_vars; ++v)
        if (state[v] == FAILED || state[v] == ERASED || state[v] == UNRECEIVED)
            ++out.layer_residual[lc.var_of[v]];
    out.success = true;
    out.layer_success.resize(lc.n_layers);
    for (int l = 0; l < lc.n_layers; ++l) {
        out.layer_success[l] = out.layer_residual[l] == 0;
        out.success = out.success && out.layer_success[l];
    }
    if (stats) {
        stats->all_finalized = all_final;
        stats->consumed_unreceived = consumed_unreceived;
        stats->blocks_consumed_before_done = static_cast<std::int64_t>(consumed);
    }
    return out;
}

namespace {

PeelTrajectory average_trajectories(const std::vector<PeelTrajectory>& ts, int n_layers) {
    PeelTrajectory mean;
    mean.n_layers = n_layers;
    size_t len = 0;
    int used = 0;
    for (const auto& t : ts)
        if (!t.samples.empty()) { len = std::max(len, t.samples.size()); ++used; }
    if (len == 0 || used == 0) return mean;
    mean.samples.resize(len);
    for (size_t k = 0; k < len; ++k) {
        auto& s = mean.samples[k];
        s.tau = 0.0;
        s.r1 = 0.0;
        s.r1_layer.assign(n_layers, 0.0);
        s.resid_layer.assign(n_layers, 0.0);
    }
    for (const auto& t : ts) {
        if (t.samples.empty()) continue;
        for (size_t k = 0; k < len; ++k) {
            // trials that already finished contribute an empty graph
            const bool live = k < t.samples.size();
            const auto* src = live ? &t.samples[k] : nullptr;
            auto& dst = mean.samples[k];
            if (live) {
                dst.tau = std::max(dst.tau, src->tau);
                dst.r1 += src->r1;
                for (int l = 0; l < n_layers; ++l) {
                    dst.r1_layer[l] += src->r1_layer[l];
                    dst.resid_layer[l] += src->resid_layer[l];
                }
            }
        }
    }
    for (size_t k = 0; k < len; ++k) {
        auto& s = mean.samples[k];
        s.r1 /= used;
        for (int l = 0; l < n_layers; ++l) {
            s.r1_layer[l] /= used;
            s.resid_layer[l] /= used;
        }
    }
    return mean;
}

}  // namespace

PeelTrajectory mean_trajectory(const Protograph& p, double eps, std::uint32_t N, int trials,
                               std::uint64_t seed, int threads) {
    if (trials < 1) throw InvalidParameters("mean_trajectory: trials >= 1 required");
    if (eps < 0.0 || eps > 1.0) throw InvalidParameters("mean_trajectory: eps in [0,1] required");
    const LiftedCode code = lift(p, N, derive_seed(seed, 0xA11F));
    std::vector<PeelTrajectory> kept(trials);
    std::vector<std::uint8_t> ok(trials, 0);

    auto run_one = [&](int t) {
        auto pat = random_erasures(code, eps, derive_seed(seed, 1 + t));
        auto r = peel_bec(code, pat, true);
        if (r.outcome.success) {
            kept[t] = std::move(r.trajectory);
            ok[t] = 1;
        }
    };

    if (threads == 1) {
        for (int t = 0; t < trials; ++t) run_one(t);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
        for (int t = 0; t < trials; ++t) run_one(t);
#else
        for (int t = 0; t < trials; ++t) run_one(t);
#endif
    }

    std::vector<PeelTrajectory> good;
    for (int t = 0; t < trials; ++t)
        if (ok[t]) good.push_back(std::move(kept[t]));
    const int n_layers = p.layers > 0 ? p.layers : 1;
    return average_trajectories(good, n_layers);
}

}  // namespace scldpc
