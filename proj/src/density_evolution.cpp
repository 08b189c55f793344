#include "scldpc/density_evolution.hpp"

#include <algorithm>
#include <cmath>

#include "scldpc/errors.hpp"

namespace scldpc {

namespace {

// CSR views of the edge-instance list, grouped per check and per variable.
struct Graph {
    int nv, nc, ne;
    std::vector<std::uint32_t> chk_off, chk_edges;  // edge ids grouped by check
    std::vector<std::uint32_t> var_off, var_edges;  // edge ids grouped by variable
    std::vector<std::uint32_t> edge_var, edge_chk;

    explicit Graph(const Protograph& p) {
        auto edges = p.edge_instances();
        nv = p.v();
        nc = p.c();
        ne = static_cast<int>(edges.size());
        edge_var.resize(ne);
        edge_chk.resize(ne);
        std::vector<std::uint32_t> cdeg(nc, 0), vdeg(nv, 0);
        for (int e = 0; e < ne; ++e) {
            edge_var[e] = edges[e].var;
            edge_chk[e] = edges[e].chk;
            ++cdeg[edges[e].chk];
            ++vdeg[edges[e].var];
        }
        chk_off.assign(nc + 1, 0);
        var_off.assign(nv + 1, 0);
        for (int i = 0; i < nc; ++i) chk_off[i + 1] = chk_off[i] + cdeg[i];
        for (int j = 0; j < nv; ++j) var_off[j + 1] = var_off[j] + vdeg[j];
        chk_edges.resize(ne);
        var_edges.resize(ne);
        std::vector<std::uint32_t> cpos(chk_off.begin(), chk_off.end() - 1);
        std::vector<std::uint32_t> vpos(var_off.begin(), var_off.end() - 1);
        for (int e = 0; e < ne; ++e) {
            chk_edges[cpos[edge_chk[e]]++] = e;
            var_edges[vpos[edge_var[e]]++] = e;
        }
        std::uint32_t max_deg = 0;
        for (auto d : cdeg) max_deg = std::max(max_deg, d);
        for (auto d : vdeg) max_deg = std::max(max_deg, d);
        if (max_deg > 64) throw InvalidParameters("density evolution: node degree above 64");
    }
};

constexpr int kMaxDeg = 64;

// One flooding iteration; returns the max |x_new - x_old| over edges.
double de_iteration(const Graph& g, const std::vector<double>& prior, std::vector<double>& v2c,
                    std::vector<double>& c2v, std::vector<double>& residual) {
    double pre[kMaxDeg + 1], suf[kMaxDeg + 1];
    // check update: c2v = 1 - prod_{other edges} (1 - v2c)
    for (int ci = 0; ci < g.nc; ++ci) {
        const int b = g.chk_off[ci], e = g.chk_off[ci + 1], k = e - b;
        pre[0] = 1.0;
        for (int i = 0; i < k; ++i) pre[i + 1] = pre[i] * (1.0 - v2c[g.chk_edges[b + i]]);
        suf[k] = 1.0;
        for (int i = k - 1; i >= 0; --i) suf[i] = suf[i + 1] * (1.0 - v2c[g.chk_edges[b + i]]);
        for (int i = 0; i < k; ++i) c2v[g.chk_edges[b + i]] = 1.0 - pre[i] * suf[i + 1];
    }
    // variable update and residuals
    double change = 0.0;
    for (int vi = 0; vi < g.nv; ++vi) {
        const int b = g.var_off[vi], e = g.var_off[vi + 1], k = e - b;
        pre[0] = 1.0;
        for (int i = 0; i < k; ++i) pre[i + 1] = pre[i] * c2v[g.var_edges[b + i]];
        suf[k] = 1.0;
        for (int i = k - 1; i >= 0; --i) suf[i] = suf[i + 1] * c2v[g.var_edges[b + i]];
        const double pv = prior[vi];
        for (int i = 0; i < k; ++i) {
            const int eid = g.var_edges[b + i];
            const double nx = pv * pre[i] * suf[i + 1];
            change = std::max(change, std::abs(nx - v2c[eid]));
            v2c[eid] = nx;
        }
        residual[vi] = pv * pre[k];
    }
    return change;
}

std::vector<double> make_prior(const Protograph& p, double eps) {
    std::vector<double> prior(p.v(), eps);
    for (int j = 0; j < p.v(); ++j)
        if (p.punctured[j]) prior[j] = 1.0;
    return prior;
}

thread_local std::int64_t g_threshold_iters = 0;

// Decodability predicate with early exit: residuals decrease monotonically,
// so targets below delta can never rise again.
bool de_decodes(const Graph& g, const Protograph& p, double eps, double delta,
                const std::vector<std::uint32_t>& targets, int max_iter) {
    const auto prior = make_prior(p, eps);
    std::vector<double> v2c(g.ne), c2v(g.ne, 1.0), residual(p.v(), 1.0);
    for (int e = 0; e < g.ne; ++e) v2c[e] = prior[g.edge_var[e]];
    for (int it = 0; it < max_iter; ++it) {
        const double change = de_iteration(g, prior, v2c, c2v, residual);
        ++g_threshold_iters;
        bool ok = true;
        for (auto t : targets)
            if (residual[t] >= delta) { ok = false; break; }
        if (ok) return true;
        if (change < 1e-12) return false;
    }
    return false;
}

double bisect(const Graph& g, const Protograph& p, const std::vector<std::uint32_t>& targets,
              double delta, double tol, int max_iter = 100000) {
    if (targets.empty()) throw InvalidParameters("threshold: empty target set");
    g_threshold_iters = 0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (de_decodes(g, p, mid, delta, targets, max_iter)) lo = mid;
        else hi = mid;
    }
    return lo;
}

std::vector<std::uint32_t> all_unpunctured(const Protograph& p) {
    std::vector<std::uint32_t> t;
    for (int j = 0; j < p.v(); ++j)
        if (!p.punctured[j]) t.push_back(j);
    return t;
}

}  // namespace

std::int64_t last_threshold_iterations() { return g_threshold_iters; }

DEState de_fixed_point(const Protograph& p, double eps, const DEOptions& opts) {
    if (eps < 0.0 || eps > 1.0) throw InvalidParameters("de_fixed_point: eps must be in [0,1]");
    Graph g(p);
    DEState st;
    st.eps = eps;
    const auto prior = make_prior(p, eps);
    st.v2c.resize(g.ne);
    st.c2v.assign(g.ne, 1.0);
    st.residual.assign(p.v(), 1.0);
    for (int e = 0; e < g.ne; ++e) st.v2c[e] = prior[g.edge_var[e]];
    for (st.iterations = 0; st.iterations < opts.max_iter;) {
        const double change = de_iteration(g, prior, st.v2c, st.c2v, st.residual);
        ++st.iterations;
        if (change < opts.tol) {
            st.converged = true;
            break;
        }
    }
    return st;
}

std::vector<std::uint32_t> target_variables(const Protograph& p,
                                            const std::set<NodeAddress>& targets) {
    std::vector<std::uint32_t> out;
    for (int j = 0; j < p.v(); ++j) {
        if (p.punctured[j]) continue;
        if (targets.count({p.var_layer[j], p.var_chain[j], p.var_position[j]})) out.push_back(j);
    }
    return out;
}

double bp_threshold(const Protograph& p, double tol) {
    if (tol < 1e-5) throw InvalidParameters("bp_threshold: tol >= 1e-5 required");
    Graph g(p);
    return bisect(g, p, all_unpunctured(p), 1e-3, tol);
}

double region_threshold(const Protograph& p, const ThresholdQuery& query) {
    if (query.delta <= 0.0 || query.delta >= 1.0)
        throw InvalidParameters("region_threshold: delta must be in (0,1)");
    if (query.tol < 1e-5) throw InvalidParameters("region_threshold: tol >= 1e-5 required");
    auto targets = target_variables(p, query.target_nodes);
    if (targets.empty()) throw InvalidParameters("region_threshold: empty target set");
    Graph g(p);
    return bisect(g, p, targets, query.delta, query.tol);
}

double cc_threshold(const Protograph& p, int T, double tol) {
    if (T <= 1) return bp_threshold(p, tol);
    if (tol < 1e-5) throw InvalidParameters("cc_threshold: tol >= 1e-5 required");
    std::vector<std::uint32_t> targets;
    for (int j = 0; j < p.v(); ++j)
        if (!p.punctured[j] && p.var_layer[j] >= 1 && p.var_layer[j] <= T - 1)
            targets.push_back(j);
    if (targets.empty()) throw InvalidParameters("cc_threshold: protograph carries no layer labels");
    Graph g(p);
    return bisect(g, p, targets, 1e-3, tol);
}

}  // namespace scldpc
