#include <algorithm>
#include <vector>

#include "permuta/propagate.hpp"

namespace permuta {

namespace {

// Kuhn augmenting-path matching from variables into values.
struct Matcher {
    int nvars;
    std::vector<std::vector<int>> adj;  // var -> value list (dense value ids)
    std::vector<int> match_var;         // var -> value id or -1
    std::vector<int> match_val;         // value id -> var or -1
    std::vector<int> seen;
    int stamp = 0;

    bool try_augment(int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(v)] == stamp) continue;
            seen[static_cast<std::size_t>(v)] = stamp;
            if (match_val[static_cast<std::size_t>(v)] == -1 ||
                try_augment(match_val[static_cast<std::size_t>(v)])) {
                match_var[static_cast<std::size_t>(u)] = v;
                match_val[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    }
};

// Tarjan SCC over the residual orientation: var -> matched value,
// value -> every other var whose domain holds it.
struct SccSolver {
    const std::vector<std::vector<int>>& out;
    std::vector<int> idx, low, comp, stack;
    std::vector<bool> on_stack;
    int counter = 0, comps = 0;

    explicit SccSolver(const std::vector<std::vector<int>>& g)
        : out(g),
          idx(g.size(), -1),
          low(g.size(), 0),
          comp(g.size(), -1),
          on_stack(g.size(), false) {}

    void run() {
        for (std::size_t v = 0; v < out.size(); ++v)
            if (idx[v] == -1) strongconnect(static_cast<int>(v));
    }

    // Iterative Tarjan: scopes can reach a few hundred nodes.
    void strongconnect(int root) {
        std::vector<std::pair<int, std::size_t>> work;
        work.emplace_back(root, 0);
        while (!work.empty()) {
            auto& [v, ei] = work.back();
            if (ei == 0) {
                idx[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
                stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = true;
            }
            bool descended = false;
            while (ei < out[static_cast<std::size_t>(v)].size()) {
                int w = out[static_cast<std::size_t>(v)][ei++];
                if (idx[static_cast<std::size_t>(w)] == -1) {
                    work.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], idx[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == idx[static_cast<std::size_t>(v)]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp[static_cast<std::size_t>(w)] = comps;
                    if (w == v) break;
                }
                ++comps;
            }
            int child = v;
            work.pop_back();
            if (!work.empty()) {
                int parent = work.back().first;
                low[static_cast<std::size_t>(parent)] = std::min(
                    low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(child)]);
            }
        }
    }
};

}  // namespace

bool regin_filter(const std::vector<int>& scope, DomainStore& store, int cause,
                  std::vector<Removal>* pruned, int* wiped_var) {
    const int nv = static_cast<int>(scope.size());

    // Dense value ids for the union of scope domains.
    std::vector<int> value_of;  // dense id -> value
    std::vector<int> id_of(Domain::kMaxValue + 1, -1);
    for (int s = 0; s < nv; ++s) {
        for (int v : store[scope[static_cast<std::size_t>(s)]].values()) {
            if (id_of[static_cast<std::size_t>(v)] == -1) {
                id_of[static_cast<std::size_t>(v)] = static_cast<int>(value_of.size());
                value_of.push_back(v);
            }
        }
    }
    const int nval = static_cast<int>(value_of.size());
    if (nval < nv) {
        if (wiped_var) *wiped_var = scope[0];
        return false;  // pigeonhole: no covering matching
    }

    Matcher m;
    m.nvars = nv;
    m.adj.resize(static_cast<std::size_t>(nv));
    for (int s = 0; s < nv; ++s)
        for (int v : store[scope[static_cast<std::size_t>(s)]].values())
            m.adj[static_cast<std::size_t>(s)].push_back(id_of[static_cast<std::size_t>(v)]);
    m.match_var.assign(static_cast<std::size_t>(nv), -1);
    m.match_val.assign(static_cast<std::size_t>(nval), -1);
    m.seen.assign(static_cast<std::size_t>(nval), -1);

    // Greedy seed, then augment.
    for (int s = 0; s < nv; ++s)
        for (int v : m.adj[static_cast<std::size_t>(s)])
            if (m.match_val[static_cast<std::size_t>(v)] == -1) {
                m.match_var[static_cast<std::size_t>(s)] = v;
                m.match_val[static_cast<std::size_t>(v)] = s;
                break;
            }
    for (int s = 0; s < nv; ++s) {
        if (m.match_var[static_cast<std::size_t>(s)] != -1) continue;
        ++m.stamp;
        if (!m.try_augment(s)) {
            if (wiped_var) *wiped_var = scope[static_cast<std::size_t>(s)];
            return false;
        }
    }

    // Residual graph: nodes 0..nv-1 vars, nv..nv+nval-1 values.
    std::vector<std::vector<int>> g(static_cast<std::size_t>(nv + nval));
    for (int s = 0; s < nv; ++s) {
        for (int v : m.adj[static_cast<std::size_t>(s)]) {
            if (m.match_var[static_cast<std::size_t>(s)] == v)
                g[static_cast<std::size_t>(s)].push_back(nv + v);
            else
                g[static_cast<std::size_t>(nv + v)].push_back(s);
        }
    }

    SccSolver scc(g);
    scc.run();

    // Nodes reachable from free values along residual arcs.
    std::vector<bool> reach(static_cast<std::size_t>(nv + nval), false);
    std::vector<int> bfs;
    for (int v = 0; v < nval; ++v)
        if (m.match_val[static_cast<std::size_t>(v)] == -1) {
            reach[static_cast<std::size_t>(nv + v)] = true;
            bfs.push_back(nv + v);
        }
    while (!bfs.empty()) {
        int u = bfs.back();
        bfs.pop_back();
        for (int w : g[static_cast<std::size_t>(u)])
            if (!reach[static_cast<std::size_t>(w)]) {
                reach[static_cast<std::size_t>(w)] = true;
                bfs.push_back(w);
            }
    }

    // Keep (var, value) iff matched, same SCC, or on a path from a free value.
    for (int s = 0; s < nv; ++s) {
        int var = scope[static_cast<std::size_t>(s)];
        for (int v : m.adj[static_cast<std::size_t>(s)]) {
            if (m.match_var[static_cast<std::size_t>(s)] == v) continue;
            if (scc.comp[static_cast<std::size_t>(s)] == scc.comp[static_cast<std::size_t>(nv + v)])
                continue;
            if (reach[static_cast<std::size_t>(nv + v)]) continue;
            int value = value_of[static_cast<std::size_t>(v)];
            if (store.remove(var, value) && pruned) pruned->push_back({var, value, cause});
        }
    }
    return true;
}

}  // namespace permuta
