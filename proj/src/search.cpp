#include "permuta/search.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace permuta {

std::string to_string(Algo a) {
    switch (a) {
        case Algo::FC: return "fc";
        case Algo::MAC: return "mac";
        case Algo::MGAC: return "mgac";
    }
    return "?";
}
std::string to_string(Heur h) {
    switch (h) {
        case Heur::Lex: return "lex";
        case Heur::SDp: return "sd_p";
        case Heur::SDd: return "sd_d";
        case Heur::SDpd: return "sd_pd";
        case Heur::SD2p: return "sd2_p";
        case Heur::SD2d: return "sd2_d";
        case Heur::SD2pd: return "sd2_pd";
    }
    return "?";
}
std::string to_string(Goal g) { return g == Goal::FirstSolution ? "first" : "all"; }

std::optional<Algo> parse_algo(const std::string& s) {
    if (s == "fc") return Algo::FC;
    if (s == "mac") return Algo::MAC;
    if (s == "mgac") return Algo::MGAC;
    return std::nullopt;
}
std::optional<Heur> parse_heur(const std::string& s) {
    if (s == "lex") return Heur::Lex;
    if (s == "sd_p") return Heur::SDp;
    if (s == "sd_d") return Heur::SDd;
    if (s == "sd_pd") return Heur::SDpd;
    if (s == "sd2_p") return Heur::SD2p;
    if (s == "sd2_d") return Heur::SD2d;
    if (s == "sd2_pd") return Heur::SD2pd;
    return std::nullopt;
}
std::optional<Goal> parse_goal(const std::string& s) {
    if (s == "first") return Goal::FirstSolution;
    if (s == "all") return Goal::AllSolutions;
    return std::nullopt;
}

namespace {

// Change-record trail with first-touch deduplication per node.
class Trail : public TrailHook {
public:
    explicit Trail(int nvars) : last_saved_(static_cast<std::size_t>(nvars), -1) {}

    void saving(int var, const Domain& old) override {
        if (last_saved_[static_cast<std::size_t>(var)] == mark_gen_) return;
        last_saved_[static_cast<std::size_t>(var)] = mark_gen_;
        records_.push_back({var, old});
    }

    std::size_t mark() {
        ++mark_gen_;
        return records_.size();
    }

    void undo_to(std::size_t mark, DomainStore& store) {
        while (records_.size() > mark) {
            store.restore(records_.back().var, records_.back().old);
            records_.pop_back();
        }
        ++mark_gen_;  // invalidate dedup for the reopened node
    }

private:
    struct Record {
        int var;
        Domain old;
    };
    std::vector<Record> records_;
    std::vector<long> last_saved_;
    long mark_gen_ = 0;
};

struct ValueDual {
    int value;
    int partner;  // flat id of the channelled counterpart
};

struct Solver {
    const Problem& p;
    const SearchConfig& cfg;
    SearchObserver* observer;
    PropagationContext ctx;
    DomainStore store;
    Trail trail;
    std::vector<char> bound;
    SearchStats stats;
    std::vector<Solution> solutions;
    std::vector<std::vector<ValueDual>> partners;  // per var: channelled values
    std::vector<int> decision_primal, decision_dual;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    bool abort_now = false;
    PropOptions prop_opts;

    Solver(const Problem& problem, const SearchConfig& config, SearchObserver* obs)
        : p(problem),
          cfg(config),
          observer(obs),
          ctx(problem),
          store(DomainStore::from_problem(problem)),
          trail(problem.var_count()),
          bound(static_cast<std::size_t>(problem.var_count()), 0) {
        store.set_trail(&trail);
        prop_opts.gac_alldiff = cfg.algo == Algo::MGAC;
        prop_opts.record_pruned = false;
        partners.resize(static_cast<std::size_t>(p.var_count()));
        for (const Constraint& c : p.constraints) {
            if (c.kind == CKind::Channel || c.kind == CKind::ChannelImplies) {
                int a = p.flat(c.a), b = p.flat(c.b);
                partners[static_cast<std::size_t>(a)].push_back({c.va, b});
                partners[static_cast<std::size_t>(b)].push_back({c.vb, a});
            }
        }
        for (int v = 0; v < p.var_count(); ++v) {
            if (p.role(v) == VarRole::DecisionPrimal) decision_primal.push_back(v);
            if (p.role(v) == VarRole::DecisionDual) decision_dual.push_back(v);
        }
        if (cfg.time_limit_s > 0) {
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::microseconds(static_cast<long>(cfg.time_limit_s * 1e6));
            has_deadline = true;
        }
    }

    bool out_of_budget() {
        if (abort_now) return true;
        if (cfg.node_limit >= 0 && stats.nodes >= cfg.node_limit) abort_now = true;
        if (has_deadline && (stats.nodes & 255) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            abort_now = true;
        return abort_now;
    }

    // --- forward checking ----------------------------------------------------

    // Removals cascade through channels only: the two sides of a channel
    // share one literal in the direct Boolean view, so a value removed from
    // either side disappears from both.
    bool sync_removals(std::vector<std::pair<int, int>>& queue) {
        while (!queue.empty()) {
            auto [var, value] = queue.back();
            queue.pop_back();
            for (const ValueDual& vd : partners[static_cast<std::size_t>(var)]) {
                if (vd.value != value) continue;
                // losing the linked value kills the counterpart's linked value
                int other = vd.partner;
                int other_value = -1;
                for (const ValueDual& back : partners[static_cast<std::size_t>(other)])
                    if (back.partner == var) {
                        other_value = back.value;
                        break;
                    }
                if (other_value < 0) continue;
                if (store.remove(other, other_value)) {
                    if (store[other].empty()) return false;
                    queue.emplace_back(other, other_value);
                }
            }
        }
        return true;
    }

    bool fc_remove(int var, int value) {
        if (!store.remove(var, value)) return true;
        if (store[var].empty()) return false;
        std::vector<std::pair<int, int>> q{{var, value}};
        return sync_removals(q);
    }

    bool fc_restrict(int var, const Domain& keep) {
        Domain removed = store[var];
        removed.subtract(keep);
        for (int v : removed.values())
            if (!fc_remove(var, v)) return false;
        return true;
    }

    // One forward-checking pass after `var` := `value`.
    bool fc_assign_pass(int var, int value) {
        for (int ci : ctx.constraints_of(var)) {
            const Constraint& c = p.constraints[static_cast<std::size_t>(ci)];
            switch (c.kind) {
                case CKind::NotEquals: {
                    int other = p.flat(c.a) == var ? p.flat(c.b) : p.flat(c.a);
                    if (!fc_remove(other, value)) return false;
                    break;
                }
                case CKind::Channel:
                case CKind::DualSepLink: {
                    int a = p.flat(c.a), b = p.flat(c.b);
                    int self = a == var ? a : b, other = a == var ? b : a;
                    int self_link = a == var ? c.va : c.vb;
                    int other_link = a == var ? c.vb : c.va;
                    (void)self;
                    if (value == self_link) {
                        if (!fc_restrict(other, Domain::of({other_link}))) return false;
                    } else {
                        if (!fc_remove(other, other_link)) return false;
                    }
                    break;
                }
                case CKind::ChannelImplies: {
                    int a = p.flat(c.a), b = p.flat(c.b);
                    if (var == a) {
                        if (value == c.va && !fc_restrict(b, Domain::of({c.vb}))) return false;
                    } else if (value != c.vb) {
                        if (!fc_remove(a, c.va)) return false;
                    }
                    break;
                }
                case CKind::AllDifferent: {
                    for (const VarRef& vr : c.scope) {
                        int other = p.flat(vr);
                        if (other == var) continue;
                        if (!fc_remove(other, value)) return false;
                    }
                    break;
                }
                case CKind::Offset: {
                    int a = p.flat(c.a), b = p.flat(c.b);
                    Domain d;
                    if (var == a) {
                        d.insert(value + c.k);
                        if (!fc_restrict(b, d)) return false;
                    } else {
                        d.insert(value - c.k);
                        if (!fc_restrict(a, d)) return false;
                    }
                    break;
                }
                case CKind::Less: {
                    int a = p.flat(c.a), b = p.flat(c.b);
                    if (var == a) {
                        if (!fc_restrict(b, Domain::range(value + 1, Domain::kMaxValue)))
                            return false;
                    } else {
                        if (!fc_restrict(a, Domain::range(0, value - 1))) return false;
                    }
                    break;
                }
                case CKind::Sum: {
                    // interval pass over the members
                    long lo = 0, hi = 0;
                    for (std::size_t s = 0; s < c.scope.size(); ++s) {
                        int f = p.flat(c.scope[s]);
                        int coef = c.coeffs[s];
                        int mn = store[f].min(), mx = store[f].max();
                        if (mn < 0) return false;
                        lo += coef > 0 ? static_cast<long>(coef) * mn : static_cast<long>(coef) * mx;
                        hi += coef > 0 ? static_cast<long>(coef) * mx : static_cast<long>(coef) * mn;
                    }
                    for (std::size_t s = 0; s < c.scope.size(); ++s) {
                        int f = p.flat(c.scope[s]);
                        int coef = c.coeffs[s];
                        int mn = store[f].min(), mx = store[f].max();
                        long my_lo = coef > 0 ? static_cast<long>(coef) * mn
                                              : static_cast<long>(coef) * mx;
                        long my_hi = coef > 0 ? static_cast<long>(coef) * mx
                                              : static_cast<long>(coef) * mn;
                        long tlo = c.total - (hi - my_hi), thi = c.total - (lo - my_lo);
                        long vlo = coef > 0 ? tlo : -thi;
                        long vhi = coef > 0 ? thi : -tlo;
                        vlo = std::max<long>(vlo, 0);
                        vhi = std::min<long>(vhi, Domain::kMaxValue);
                        Domain keep = vlo > vhi
                                          ? Domain()
                                          : Domain::range(static_cast<int>(vlo),
                                                          static_cast<int>(vhi));
                        if (!fc_restrict(f, keep)) return false;
                    }
                    break;
                }
                case CKind::BinaryTable: {
                    int a = p.flat(c.a), b = p.flat(c.b);
                    if (var == a) {
                        if (!fc_restrict(b, ctx.table_sup_a(ci)[static_cast<std::size_t>(value)]))
                            return false;
                    } else {
                        if (!fc_restrict(a, ctx.table_sup_b(ci)[static_cast<std::size_t>(value)]))
                            return false;
                    }
                    break;
                }
                case CKind::UnaryForbid:
                    break;  // folded into the root domains
            }
        }
        return true;
    }

    // --- assignment / removal dispatch ---------------------------------------

    bool assign_and_propagate(int var, int value) {
        store.assign(var, value);
        if (store[var].empty()) return false;
        if (cfg.algo == Algo::FC) return fc_assign_pass(var, value);
        return propagate_from(ctx, store, var, prop_opts).ok();
    }

    bool remove_and_propagate(int var, int value) {
        if (!store.remove(var, value)) return true;
        if (store[var].empty()) return false;
        if (cfg.algo == Algo::FC) {
            std::vector<std::pair<int, int>> q{{var, value}};
            return sync_removals(q);
        }
        return propagate_from(ctx, store, var, prop_opts).ok();
    }

    // --- variable / value selection -------------------------------------------

    int pick_variable() { return select_variable(p, store, bound, cfg); }

    // First value of the heuristic's ordering; the remaining values are
    // re-ranked when the refutation branch reselects.
    int first_value(int var) {
        bool double_sd =
            cfg.heur == Heur::SD2p || cfg.heur == Heur::SD2d || cfg.heur == Heur::SD2pd;
        if (!double_sd) return store[var].min();
        int best = -1, best_score = 0;
        for (int v = store[var].min(); v >= 0; v = store[var].next(v)) {
            int score = Domain::kMaxValue + 1;
            for (const ValueDual& vd : partners[static_cast<std::size_t>(var)])
                if (vd.value == v) score = std::min(score, store[vd.partner].size());
            if (best < 0 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        return best;
    }

    // --- the search ------------------------------------------------------------

    // One decision: assign the chosen value, or refute it and reselect.
    // Returns true when the search is finished (first solution found or
    // budget exhausted).
    bool dfs(int depth) {
        if (out_of_budget()) return true;

        int var = -1;
        if (cfg.fail_first_singletons) {
            for (int v = 0; v < p.var_count() && var < 0; ++v)
                if (!bound[static_cast<std::size_t>(v)] && store[v].is_singleton()) var = v;
        }
        bool forced = var >= 0;
        if (!forced) var = pick_variable();

        if (var < 0) {
            // everything bound: record the solution
            std::vector<int> full(static_cast<std::size_t>(p.var_count()));
            for (int v = 0; v < p.var_count(); ++v) full[static_cast<std::size_t>(v)] = store[v].single();
            if (!satisfies_all(p, full))
                throw std::logic_error("search produced an invalid solution");
            Solution s;
            s.primal.assign(full.begin(), full.begin() + p.primal_count());
            solutions.push_back(std::move(s));
            ++stats.solutions;
            return cfg.goal == Goal::FirstSolution;
        }

        int value = forced ? store[var].single() : first_value(var);
        bool counted = !forced && store[var].size() > 1;

        std::size_t mark = trail.mark();
        bound[static_cast<std::size_t>(var)] = 1;
        ++stats.nodes;
        if (observer) observer->on_decision(var, value, depth, counted);
        bool ok = assign_and_propagate(var, value);
        if (!ok) {
            ++stats.fails;
            bound[static_cast<std::size_t>(var)] = 0;
            trail.undo_to(mark, store);
        } else {
            if (dfs(depth + 1)) return true;
            bound[static_cast<std::size_t>(var)] = 0;
            trail.undo_to(mark, store);
        }
        if (forced) return false;  // a forced move has no refutation branch

        // refutation branch: remove the value and reselect
        if (out_of_budget()) return true;
        if (!remove_and_propagate(var, value)) return false;
        return dfs(depth);
    }

    void run() {
        auto t0 = std::chrono::steady_clock::now();
        std::size_t root = trail.mark();
        // unary constraints fold into the root store for every algorithm
        bool root_ok = true;
        for (const Constraint& c : p.constraints) {
            if (c.kind != CKind::UnaryForbid) continue;
            int a = p.flat(c.a);
            for (int v : c.values)
                store.remove(a, v);
            if (store[a].empty()) root_ok = false;
        }
        if (root_ok && cfg.algo != Algo::FC)
            root_ok = propagate_fixpoint(ctx, store, prop_opts).ok();
        if (root_ok) dfs(0);
        trail.undo_to(root, store);
        for (int v = 0; v < p.var_count(); ++v)
            if (store[v] != (v < p.primal_count()
                                 ? p.primal[static_cast<std::size_t>(v)]
                                 : p.dual[static_cast<std::size_t>(v - p.primal_count())]))
                throw std::logic_error("trail failed to restore the root store");
        stats.aborted = abort_now;
        stats.time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    }
};

}  // namespace

int select_variable(const Problem& p, const DomainStore& store, const std::vector<char>& bound,
                    const SearchConfig& cfg) {
    auto unbound = [&](int v) { return !bound[static_cast<std::size_t>(v)]; };

    if (cfg.fail_first_singletons)
        for (int v = 0; v < p.var_count(); ++v)
            if (unbound(v) && store[v].is_singleton()) return v;

    auto lex_pick = [&](VarRole role) {
        for (int v = 0; v < p.var_count(); ++v)
            if (unbound(v) && p.role(v) == role) return v;
        return -1;
    };
    auto sd_pick = [&](bool primal_block, bool dual_block) {
        int best = -1, best_size = 0;
        for (int v = 0; v < p.var_count(); ++v) {
            if (!unbound(v)) continue;
            VarRole r = p.role(v);
            bool eligible = (primal_block && r == VarRole::DecisionPrimal) ||
                            (dual_block && r == VarRole::DecisionDual);
            if (!eligible) continue;
            int size = store[v].size();
            if (best < 0 || size < best_size) {
                best = v;
                best_size = size;
            }
            // ties: primal before dual, then lowest index -- flat order
        }
        return best;
    };

    int pick = -1;
    switch (cfg.heur) {
        case Heur::Lex:
            pick = lex_pick(VarRole::DecisionPrimal);
            if (pick < 0) pick = lex_pick(VarRole::DecisionDual);
            break;
        case Heur::SDp:
        case Heur::SD2p:
            pick = sd_pick(true, false);
            if (pick < 0) pick = sd_pick(false, true);
            break;
        case Heur::SDd:
        case Heur::SD2d:
            pick = sd_pick(false, true);
            if (pick < 0) pick = sd_pick(true, false);
            break;
        case Heur::SDpd:
        case Heur::SD2pd:
            pick = sd_pick(true, true);
            break;
    }
    if (pick >= 0) return pick;
    // remaining auxiliaries, lowest flat id
    for (int v = 0; v < p.var_count(); ++v)
        if (unbound(v)) return v;
    return -1;
}

std::vector<int> select_value_order(const Problem& p, const DomainStore& store, int var,
                                    const SearchConfig& cfg) {
    std::vector<int> values = store[var].values();
    bool double_sd =
        cfg.heur == Heur::SD2p || cfg.heur == Heur::SD2d || cfg.heur == Heur::SD2pd;
    if (!double_sd) return values;

    // order by the domain size of the channelled counterpart variable
    // (the dual of a primal value, the primal of a dual value)
    std::vector<std::pair<int, int>> scored;  // (score, value)
    scored.reserve(values.size());
    for (int v : values) {
        int score = Domain::kMaxValue + 1;
        for (const Constraint& c : p.constraints) {
            if (c.kind != CKind::Channel && c.kind != CKind::ChannelImplies) continue;
            int a = p.flat(c.a), b = p.flat(c.b);
            if (a == var && c.va == v) score = std::min(score, store[b].size());
            if (b == var && c.vb == v) score = std::min(score, store[a].size());
        }
        scored.emplace_back(score, v);
    }
    std::stable_sort(scored.begin(), scored.end());
    std::vector<int> out;
    out.reserve(scored.size());
    for (auto& [s, v] : scored) out.push_back(v);
    return out;
}

bool satisfies_all(const Problem& p, const std::vector<int>& a) {
    auto val = [&](const VarRef& v) { return a[static_cast<std::size_t>(p.flat(v))]; };
    for (const Constraint& c : p.constraints) {
        switch (c.kind) {
            case CKind::NotEquals:
                if (val(c.a) == val(c.b)) return false;
                break;
            case CKind::Channel:
            case CKind::DualSepLink:
                if ((val(c.a) == c.va) != (val(c.b) == c.vb)) return false;
                break;
            case CKind::ChannelImplies:
                if (val(c.a) == c.va && val(c.b) != c.vb) return false;
                break;
            case CKind::AllDifferent:
                for (std::size_t i = 0; i < c.scope.size(); ++i)
                    for (std::size_t j = i + 1; j < c.scope.size(); ++j)
                        if (val(c.scope[i]) == val(c.scope[j])) return false;
                break;
            case CKind::Offset:
                if (val(c.b) != val(c.a) + c.k) return false;
                break;
            case CKind::Less:
                if (!(val(c.a) < val(c.b))) return false;
                break;
            case CKind::Sum: {
                long sum = 0;
                for (std::size_t i = 0; i < c.scope.size(); ++i)
                    sum += static_cast<long>(c.coeffs[i]) * val(c.scope[i]);
                if (sum != c.total) return false;
                break;
            }
            case CKind::BinaryTable: {
                bool ok = false;
                for (auto [u, w] : c.pairs)
                    if (u == val(c.a) && w == val(c.b)) {
                        ok = true;
                        break;
                    }
                if (!ok) return false;
                break;
            }
            case CKind::UnaryForbid:
                for (int v : c.values)
                    if (val(c.a) == v) return false;
                break;
        }
    }
    return true;
}

std::pair<std::vector<Solution>, SearchStats> solve(const Problem& p, const SearchConfig& cfg,
                                                    SearchObserver* observer) {
    bool needs_dual = cfg.heur == Heur::SDd || cfg.heur == Heur::SDpd ||
                      cfg.heur == Heur::SD2p || cfg.heur == Heur::SD2d ||
                      cfg.heur == Heur::SD2pd;
    if (needs_dual && p.dual_count() == 0)
        throw std::invalid_argument("heuristic " + to_string(cfg.heur) +
                                    " needs a dual block in the problem");
    Solver solver(p, cfg, observer);
    solver.run();
    return {std::move(solver.solutions), solver.stats};
}

std::string stats_csv_row(const std::string& instance, const std::string& model,
                          const SearchConfig& cfg, const SearchStats& stats) {
    std::ostringstream os;
    os << instance << ',' << model << ',' << to_string(cfg.heur) << ',' << to_string(cfg.algo)
       << ',' << to_string(cfg.goal) << ',' << stats.fails << ',' << stats.nodes << ','
       << stats.solutions << ',' << static_cast<long>(stats.time_ms);
    return os.str();
}

}  // namespace permuta
