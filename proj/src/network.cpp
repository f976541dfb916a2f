#include "permuta/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace permuta {

void BinaryNetwork::constrain(int x, int y, const std::function<bool(int, int)>& allowed_fn) {
    const std::size_t nv = dom.size();
    if (rel_of_.size() != nv * nv) rel_of_.assign(nv * nv, -1);
    bool flip = x > y;
    int lo = flip ? y : x, hi = flip ? x : y;
    int ri = rel_of_[static_cast<std::size_t>(lo) * nv + static_cast<std::size_t>(hi)];
    if (ri < 0) {
        Rel r;
        r.sup.assign(static_cast<std::size_t>(max_value + 1), Domain());
        for (int a = 0; a <= max_value; ++a)
            for (int b = 0; b <= max_value; ++b) {
                bool ok = flip ? allowed_fn(b, a) : allowed_fn(a, b);
                if (ok) r.sup[static_cast<std::size_t>(a)].insert(b);
            }
        ri = static_cast<int>(rel_store_.size());
        rel_store_.push_back(std::move(r));
        rel_of_[static_cast<std::size_t>(lo) * nv + static_cast<std::size_t>(hi)] = ri;
        rel_of_[static_cast<std::size_t>(hi) * nv + static_cast<std::size_t>(lo)] = ri;
        return;
    }
    Rel& r = rel_store_[static_cast<std::size_t>(ri)];
    for (int a = 0; a <= max_value; ++a) {
        Domain keep;
        for (int b : r.sup[static_cast<std::size_t>(a)].values()) {
            bool ok = flip ? allowed_fn(b, a) : allowed_fn(a, b);
            if (ok) keep.insert(b);
        }
        r.sup[static_cast<std::size_t>(a)] = keep;
    }
}

std::vector<std::pair<int, int>> BinaryNetwork::constrained_pairs() const {
    std::vector<std::pair<int, int>> out;
    const int nv = var_count();
    for (int x = 0; x < nv; ++x)
        for (int y = x + 1; y < nv; ++y)
            if (has_rel(x, y)) out.emplace_back(x, y);
    return out;
}

std::string to_string(Level l) {
    switch (l) {
        case Level::BC: return "BC";
        case Level::AC: return "AC";
        case Level::RPC: return "RPC";
        case Level::PIC: return "PIC";
        case Level::SAC: return "SAC";
        case Level::PC: return "PC";
        case Level::ACPC: return "ACPC";
        case Level::GAC: return "GAC";
    }
    return "?";
}

std::optional<Level> parse_level(const std::string& s) {
    static const std::pair<const char*, Level> table[] = {
        {"BC", Level::BC},   {"AC", Level::AC}, {"RPC", Level::RPC},   {"PIC", Level::PIC},
        {"SAC", Level::SAC}, {"PC", Level::PC}, {"ACPC", Level::ACPC}, {"GAC", Level::GAC},
    };
    for (const auto& [name, l] : table)
        if (s == name) return l;
    return std::nullopt;
}

namespace {

bool any_empty(const std::vector<Domain>& doms) {
    for (const Domain& d : doms)
        if (d.empty()) return true;
    return false;
}

bool check_ac(const BinaryNetwork& net) {
    for (auto [x, y] : net.constrained_pairs()) {
        for (int a : net.dom[static_cast<std::size_t>(x)].values())
            if (net.supports(x, a, y).empty()) return false;
        for (int b : net.dom[static_cast<std::size_t>(y)].values())
            if (net.supports(y, b, x).empty()) return false;
    }
    return true;
}

// Full distinct extension of one all-different scope with scope[k] = v.
bool alldiff_extendable(const BinaryNetwork& net, const std::vector<int>& scope,
                        std::size_t k, int v) {
    std::vector<Domain> doms;
    doms.reserve(scope.size());
    for (int var : scope) doms.push_back(net.dom[static_cast<std::size_t>(var)]);
    doms[k] = Domain::of({v});
    std::vector<std::size_t> order(scope.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return doms[a].size() < doms[b].size(); });
    Domain used;
    std::function<bool(std::size_t)> go = [&](std::size_t at) -> bool {
        if (at == order.size()) return true;
        Domain cand = doms[order[at]];
        cand.subtract(used);
        for (int w : cand.values()) {
            used.insert(w);
            if (go(at + 1)) return true;
            used.erase(w);
        }
        return false;
    };
    return go(0);
}

bool check_gac(const BinaryNetwork& net) {
    if (!check_ac(net)) return false;
    for (const auto& scope : net.alldiff_scopes)
        for (std::size_t k = 0; k < scope.size(); ++k)
            for (int v : net.dom[static_cast<std::size_t>(scope[k])].values())
                if (!alldiff_extendable(net, scope, k, v)) return false;
    return true;
}

bool check_bc(const BinaryNetwork& net) {
    for (auto [x, y] : net.constrained_pairs()) {
        const Domain& dx = net.dom[static_cast<std::size_t>(x)];
        const Domain& dy = net.dom[static_cast<std::size_t>(y)];
        for (int a : {dx.min(), dx.max()})
            if (net.supports(x, a, y).empty()) return false;
        for (int b : {dy.min(), dy.max()})
            if (net.supports(y, b, x).empty()) return false;
    }
    for (const auto& scope : net.alldiff_scopes) {
        for (std::size_t k = 0; k < scope.size(); ++k) {
            const Domain& d = net.dom[static_cast<std::size_t>(scope[k])];
            for (int v : {d.min(), d.max()})
                if (!alldiff_extendable(net, scope, k, v)) return false;
        }
    }
    return true;
}

// (a for x, b for y) extends to every third variable.
bool pair_extends(const BinaryNetwork& net, int x, int a, int y, int b) {
    for (int z = 0; z < net.var_count(); ++z) {
        if (z == x || z == y) continue;
        bool ok = false;
        for (int u : net.dom[static_cast<std::size_t>(z)].values())
            if (net.allowed(x, a, z, u) && net.allowed(y, b, z, u)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

bool check_pc(const BinaryNetwork& net) {
    const int n = net.var_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int a : net.dom[static_cast<std::size_t>(x)].values())
                for (int b : net.dom[static_cast<std::size_t>(y)].values()) {
                    if (!net.allowed(x, a, y, b)) continue;
                    if (!pair_extends(net, x, a, y, b)) return false;
                }
    return true;
}

bool check_pic(const BinaryNetwork& net) {
    // (1,2)-consistency is vacuous on two variables; the hierarchy reading
    // keeps AC as a prerequisite.
    if (!check_ac(net)) return false;
    const int n = net.var_count();
    for (int x = 0; x < n; ++x) {
        for (int a : net.dom[static_cast<std::size_t>(x)].values()) {
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                for (int z = y + 1; z < n; ++z) {
                    if (z == x) continue;
                    bool ok = false;
                    for (int w : net.supports(x, a, y).values()) {
                        Domain uz = net.supports(x, a, z);
                        uz.intersect(net.supports(y, w, z));
                        if (!uz.empty()) {
                            ok = true;
                            break;
                        }
                    }
                    if (!ok) return false;
                }
            }
        }
    }
    return true;
}

bool check_rpc(const BinaryNetwork& net) {
    if (!check_ac(net)) return false;
    // a value with a single support on an adjoining constraint forms a pair
    // that must extend to every third variable
    for (auto [x, y] : net.constrained_pairs()) {
        for (int a : net.dom[static_cast<std::size_t>(x)].values()) {
            Domain sup = net.supports(x, a, y);
            if (sup.size() == 1 && !pair_extends(net, x, a, y, sup.single())) return false;
        }
        for (int b : net.dom[static_cast<std::size_t>(y)].values()) {
            Domain sup = net.supports(y, b, x);
            if (sup.size() == 1 && !pair_extends(net, y, b, x, sup.single())) return false;
        }
    }
    return true;
}

// AC enforcement on a domain vector, relations fixed; false on wipeout.
bool ac_enforce_domains(const BinaryNetwork& net, std::vector<Domain>& doms) {
    auto pairs = net.constrained_pairs();
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [x, y] : pairs) {
            Domain keep;
            for (int a : doms[static_cast<std::size_t>(x)].values())
                if (!net.supports_in(x, a, y, doms[static_cast<std::size_t>(y)]).empty())
                    keep.insert(a);
            if (keep != doms[static_cast<std::size_t>(x)]) {
                doms[static_cast<std::size_t>(x)] = keep;
                changed = true;
                if (keep.empty()) return false;
            }
            Domain keep_y;
            for (int b : doms[static_cast<std::size_t>(y)].values())
                if (!net.supports_in(y, b, x, doms[static_cast<std::size_t>(x)]).empty())
                    keep_y.insert(b);
            if (keep_y != doms[static_cast<std::size_t>(y)]) {
                doms[static_cast<std::size_t>(y)] = keep_y;
                changed = true;
                if (keep_y.empty()) return false;
            }
        }
    }
    return true;
}

bool check_sac(const BinaryNetwork& net) {
    if (!check_ac(net)) return false;
    for (int x = 0; x < net.var_count(); ++x) {
        for (int v : net.dom[static_cast<std::size_t>(x)].values()) {
            std::vector<Domain> doms = net.dom;
            doms[static_cast<std::size_t>(x)] = Domain::of({v});
            if (!ac_enforce_domains(net, doms)) return false;
        }
    }
    return true;
}

}  // namespace

bool check_level(const BinaryNetwork& net, Level level) {
    if (any_empty(net.dom)) return false;
    switch (level) {
        case Level::AC: return check_ac(net);
        case Level::BC: return check_bc(net);
        case Level::GAC: return check_gac(net);
        case Level::PC: return check_pc(net);
        case Level::ACPC: return check_ac(net) && check_pc(net);
        case Level::PIC: return check_pic(net);
        case Level::RPC: return check_rpc(net);
        case Level::SAC: return check_sac(net);
    }
    return false;
}

bool enforce_pc(BinaryNetwork& net) {
    const int n = net.var_count();
    // materialize every pair so tightening has somewhere to live
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!net.has_rel(x, y)) net.constrain(x, y, [](int, int) { return true; });

    auto clip = [&]() {
        for (auto [x, y] : net.constrained_pairs()) {
            BinaryNetwork::Rel& rel = net.rel_at(net.rel_index(x, y));
            for (int a = 0; a <= net.max_value; ++a) {
                if (!net.dom[static_cast<std::size_t>(x)].contains(a)) {
                    rel.sup[static_cast<std::size_t>(a)] = Domain();
                    continue;
                }
                rel.sup[static_cast<std::size_t>(a)].intersect(
                    net.dom[static_cast<std::size_t>(y)]);
            }
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        if (!ac_enforce_domains(net, net.dom)) return false;
        clip();
        for (auto [x, y] : net.constrained_pairs()) {
            BinaryNetwork::Rel& rel = net.rel_at(net.rel_index(x, y));
            for (int a : net.dom[static_cast<std::size_t>(x)].values()) {
                Domain keep;
                for (int b : rel.sup[static_cast<std::size_t>(a)].values())
                    if (pair_extends(net, x, a, y, b)) keep.insert(b);
                if (keep != rel.sup[static_cast<std::size_t>(a)]) {
                    rel.sup[static_cast<std::size_t>(a)] = keep;
                    changed = true;
                }
            }
        }
    }
    if (!ac_enforce_domains(net, net.dom)) return false;
    clip();
    return !any_empty(net.dom);
}

std::vector<Domain> brute_force_gac(const std::vector<Domain>& scope_domains,
                                    const std::function<bool(const std::vector<int>&)>& allowed,
                                    long guard) {
    long prod = 1;
    for (const Domain& d : scope_domains) {
        prod *= std::max(1, d.size());
        if (prod > guard) throw std::invalid_argument("brute_force_gac: enumeration too large");
    }
    const std::size_t k = scope_domains.size();
    std::vector<Domain> keep(k);
    std::vector<int> assign(k, -1);
    std::function<void(std::size_t)> go = [&](std::size_t at) {
        if (at == k) {
            if (allowed(assign))
                for (std::size_t i = 0; i < k; ++i) keep[i].insert(assign[i]);
            return;
        }
        for (int v : scope_domains[at].values()) {
            assign[at] = v;
            go(at + 1);
        }
        assign[at] = -1;
    };
    go(0);
    return keep;
}

// --- builders ----------------------------------------------------------------

namespace {

void add_neq_edges(BinaryNetwork& net, const std::vector<int>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            net.constrain(vars[i], vars[j], [](int a, int b) { return a != b; });
}

}  // namespace

BinaryNetwork make_permutation_network(const std::vector<Domain>& primal,
                                       const std::vector<int>& values, ModelFamily family,
                                       const std::vector<SideRelation>& side) {
    ModelSpec spec{family};
    if (spec.is_injection())
        throw std::invalid_argument("injection tag in make_permutation_network");
    const int n = static_cast<int>(primal.size());
    BinaryNetwork net;
    net.dom = primal;
    int maxv = 0;
    for (int v : values) maxv = std::max(maxv, v);
    for (int i = 0; i < n; ++i) net.names.push_back("x" + std::to_string(i + 1));

    bool needs_dual = spec.has_channels() || spec.has_dual_neq() || spec.has_dual_alldiff();
    std::vector<int> dual_ids;
    if (needs_dual) {
        std::vector<Domain> duals = dual_equivalent_domains(primal, values);
        for (std::size_t k = 0; k < values.size(); ++k) {
            dual_ids.push_back(net.var_count());
            net.dom.push_back(duals[k]);
            net.names.push_back("d" + std::to_string(values[k]));
        }
        maxv = std::max(maxv, n);
    }
    net.max_value = maxv;

    std::vector<int> primal_ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) primal_ids[static_cast<std::size_t>(i)] = i;

    if (spec.has_primal_neq()) add_neq_edges(net, primal_ids);
    if (spec.has_dual_neq()) add_neq_edges(net, dual_ids);
    if (spec.has_primal_alldiff()) net.alldiff_scopes.push_back(primal_ids);
    if (spec.has_dual_alldiff()) net.alldiff_scopes.push_back(dual_ids);
    if (spec.has_channels()) {
        for (int i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < values.size(); ++k) {
                int j = values[k];
                int dv = dual_ids[k];
                int xi = i + 1;  // dual values are 1-based variable indices
                net.constrain(i, dv,
                              [j, xi](int a, int b) { return (a == j) == (b == xi); });
            }
        }
    }
    for (const SideRelation& s : side) net.constrain(s.x, s.y, s.allowed);
    return net;
}

BinaryNetwork make_injection_network(const std::vector<Domain>& primal,
                                     const std::vector<Domain>& duals, ModelFamily family,
                                     int n, int m) {
    ModelSpec spec{family};
    if (!spec.is_injection())
        throw std::invalid_argument("permutation tag in make_injection_network");
    BinaryNetwork net;
    net.dom = primal;
    for (int i = 0; i < n; ++i) net.names.push_back("x" + std::to_string(i + 1));
    std::vector<int> dual_ids;
    for (int j = 0; j < static_cast<int>(duals.size()); ++j) {
        dual_ids.push_back(net.var_count());
        net.dom.push_back(duals[static_cast<std::size_t>(j)]);
        net.names.push_back("d" + std::to_string(j + 1));
    }
    net.max_value = std::max(m, n + 1);

    std::vector<int> primal_ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) primal_ids[static_cast<std::size_t>(i)] = i;

    switch (family) {
        case ModelFamily::InjNeq:
            add_neq_edges(net, primal_ids);
            break;
        case ModelFamily::InjAll:
            net.alldiff_scopes.push_back(primal_ids);
            break;
        case ModelFamily::InjC1:
            for (int i = 0; i < n; ++i)
                for (int j = 1; j <= m; ++j) {
                    int xi = i + 1;
                    net.constrain(i, dual_ids[static_cast<std::size_t>(j - 1)],
                                  [j, xi](int a, int b) { return a != j || b == xi; });
                }
            break;
        case ModelFamily::InjC2:
        case ModelFamily::InjC2Neq:
        case ModelFamily::InjAllC2:
        case ModelFamily::InjC3:
            for (int i = 0; i < n; ++i)
                for (int j = 1; j <= m; ++j) {
                    int xi = i + 1;
                    net.constrain(i, dual_ids[static_cast<std::size_t>(j - 1)],
                                  [j, xi](int a, int b) { return (a == j) == (b == xi); });
                }
            if (family == ModelFamily::InjC2Neq) add_neq_edges(net, dual_ids);
            if (family == ModelFamily::InjAllC2) net.alldiff_scopes.push_back(primal_ids);
            break;
        default:
            throw std::invalid_argument("unhandled injection tag");
    }
    return net;
}

BinaryNetwork make_multi_perm_network(const std::vector<Domain>& primal,
                                      const std::vector<std::vector<int>>& scopes,
                                      bool as_alldiff) {
    BinaryNetwork net;
    net.dom = primal;
    int maxv = 0;
    for (const Domain& d : primal) maxv = std::max(maxv, d.max());
    net.max_value = std::max(0, maxv);
    for (std::size_t i = 0; i < primal.size(); ++i)
        net.names.push_back("x" + std::to_string(i + 1));
    if (as_alldiff) {
        net.alldiff_scopes = scopes;
    } else {
        for (const auto& scope : scopes) add_neq_edges(net, scope);
    }
    return net;
}

}  // namespace permuta
