#include "permuta/propagate.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace permuta {

PropagationContext::PropagationContext(const Problem& p) : p_(&p) {
    var_ctrs_.resize(static_cast<std::size_t>(p.var_count()));
    for (int ci = 0; ci < static_cast<int>(p.constraints.size()); ++ci) {
        const Constraint& c = p.constraints[static_cast<std::size_t>(ci)];
        auto add = [&](const VarRef& v) {
            var_ctrs_[static_cast<std::size_t>(p.flat(v))].push_back(ci);
        };
        switch (c.kind) {
            case CKind::AllDifferent:
            case CKind::Sum:
                for (const VarRef& v : c.scope) add(v);
                break;
            case CKind::UnaryForbid:
                add(c.a);
                break;
            case CKind::BinaryTable: {
                add(c.a);
                add(c.b);
                int max_a = 0, max_b = 0;
                for (auto [u, w] : c.pairs) {
                    max_a = std::max(max_a, u);
                    max_b = std::max(max_b, w);
                }
                std::vector<Domain> sa(static_cast<std::size_t>(max_a + 1));
                std::vector<Domain> sb(static_cast<std::size_t>(max_b + 1));
                for (auto [u, w] : c.pairs) {
                    sa[static_cast<std::size_t>(u)].insert(w);
                    sb[static_cast<std::size_t>(w)].insert(u);
                }
                sup_a_[ci] = std::move(sa);
                sup_b_[ci] = std::move(sb);
                break;
            }
            default:
                add(c.a);
                add(c.b);
                break;
        }
    }
}

namespace {

struct Engine {
    const PropagationContext& ctx;
    const Problem& p;
    DomainStore& store;
    const PropOptions& opts;
    std::vector<Removal>* pruned;
    std::deque<int> queue;
    std::vector<char> queued;
    int wiped = -1;
    std::mt19937 rng;

    Engine(const PropagationContext& c, DomainStore& s, const PropOptions& o,
           std::vector<Removal>* pr)
        : ctx(c), p(c.problem()), store(s), opts(o), pruned(pr),
          queued(p.constraints.size(), 0),
          rng(static_cast<unsigned long>(opts.shuffle_seed < 0 ? 0 : opts.shuffle_seed)) {}

    void enqueue(int ci) {
        if (!queued[static_cast<std::size_t>(ci)]) {
            queued[static_cast<std::size_t>(ci)] = 1;
            queue.push_back(ci);
        }
    }

    void enqueue_var(int var) {
        for (int ci : ctx.constraints_of(var)) enqueue(ci);
    }

    bool remove(int var, int value, int cause) {
        if (!store.remove(var, value)) return false;
        if (pruned) pruned->push_back({var, value, cause});
        if (store[var].empty()) {
            wiped = var;
            return true;
        }
        enqueue_var(var);
        return true;
    }

    bool restrict_to(int var, const Domain& keep, int cause) {
        Domain removed = store[var];
        removed.subtract(keep);
        if (removed.empty()) return false;
        for (int v : removed.values()) {
            store.remove(var, v);
            if (pruned) pruned->push_back({var, v, cause});
        }
        if (store[var].empty()) {
            wiped = var;
            return true;
        }
        enqueue_var(var);
        return true;
    }

    // One revision of constraint ci; returns false on wipeout.
    bool revise(int ci) {
        const Constraint& c = p.constraints[static_cast<std::size_t>(ci)];
        switch (c.kind) {
            case CKind::NotEquals: {
                int a = p.flat(c.a), b = p.flat(c.b);
                if (store[a].is_singleton()) {
                    remove(b, store[a].single(), ci);
                    if (wiped >= 0) return false;
                }
                if (store[b].is_singleton()) {
                    remove(a, store[b].single(), ci);
                    if (wiped >= 0) return false;
                }
                return true;
            }
            case CKind::Channel:
            case CKind::DualSepLink: {
                int a = p.flat(c.a), b = p.flat(c.b);
                if (!store[a].contains(c.va)) {
                    remove(b, c.vb, ci);
                    if (wiped >= 0) return false;
                }
                if (!store[b].contains(c.vb)) {
                    remove(a, c.va, ci);
                    if (wiped >= 0) return false;
                }
                if (store[a].is_singleton() && store[a].single() == c.va) {
                    restrict_to(b, Domain::of({c.vb}), ci);
                    if (wiped >= 0) return false;
                }
                if (store[b].is_singleton() && store[b].single() == c.vb) {
                    restrict_to(a, Domain::of({c.va}), ci);
                    if (wiped >= 0) return false;
                }
                return true;
            }
            case CKind::ChannelImplies: {
                // a = va forces b = vb; nothing flows from b to a except that
                // losing vb on b kills va on a.
                int a = p.flat(c.a), b = p.flat(c.b);
                if (!store[b].contains(c.vb)) {
                    remove(a, c.va, ci);
                    if (wiped >= 0) return false;
                }
                if (store[a].is_singleton() && store[a].single() == c.va) {
                    restrict_to(b, Domain::of({c.vb}), ci);
                    if (wiped >= 0) return false;
                }
                return true;
            }
            case CKind::AllDifferent: {
                std::vector<int> scope;
                scope.reserve(c.scope.size());
                for (const VarRef& v : c.scope) scope.push_back(p.flat(v));
                if (opts.gac_alldiff) {
                    std::size_t before = pruned ? pruned->size() : 0;
                    int wv = -1;
                    std::vector<Removal> local;
                    bool ok = regin_filter(scope, store, ci, &local, &wv);
                    for (const Removal& r : local) {
                        if (pruned) pruned->push_back(r);
                        enqueue_var(r.var);
                    }
                    (void)before;
                    if (!ok) {
                        wiped = wv;
                        return false;
                    }
                    for (int v : scope)
                        if (store[v].empty()) {
                            wiped = v;
                            return false;
                        }
                    return true;
                }
                // decomposition level: singleton elimination only
                for (int s : scope) {
                    if (!store[s].is_singleton()) continue;
                    int val = store[s].single();
                    for (int t : scope) {
                        if (t == s) continue;
                        remove(t, val, ci);
                        if (wiped >= 0) return false;
                    }
                }
                return true;
            }
            case CKind::Offset: {
                int a = p.flat(c.a), b = p.flat(c.b);
                restrict_to(b, store[a].shifted(c.k), ci);
                if (wiped >= 0) return false;
                restrict_to(a, store[b].shifted(-c.k), ci);
                if (wiped >= 0) return false;
                return true;
            }
            case CKind::Less: {
                int a = p.flat(c.a), b = p.flat(c.b);
                int bmax = store[b].max();
                restrict_to(a, Domain::range(0, bmax - 1), ci);
                if (wiped >= 0) return false;
                int amin = store[a].min();
                restrict_to(b, Domain::range(amin + 1, Domain::kMaxValue), ci);
                if (wiped >= 0) return false;
                return true;
            }
            case CKind::Sum: {
                // interval reasoning on sum(coeff_i * x_i) = total
                const int k = static_cast<int>(c.scope.size());
                std::vector<int> lo(static_cast<std::size_t>(k)), hi(static_cast<std::size_t>(k));
                long lo_sum = 0, hi_sum = 0;
                for (int s = 0; s < k; ++s) {
                    int f = p.flat(c.scope[static_cast<std::size_t>(s)]);
                    int mn = store[f].min(), mx = store[f].max();
                    if (mn < 0) {
                        wiped = f;
                        return false;
                    }
                    int coef = c.coeffs[static_cast<std::size_t>(s)];
                    lo[static_cast<std::size_t>(s)] = coef > 0 ? coef * mn : coef * mx;
                    hi[static_cast<std::size_t>(s)] = coef > 0 ? coef * mx : coef * mn;
                    lo_sum += lo[static_cast<std::size_t>(s)];
                    hi_sum += hi[static_cast<std::size_t>(s)];
                }
                for (int s = 0; s < k; ++s) {
                    int f = p.flat(c.scope[static_cast<std::size_t>(s)]);
                    int coef = c.coeffs[static_cast<std::size_t>(s)];
                    long rest_lo = lo_sum - lo[static_cast<std::size_t>(s)];
                    long rest_hi = hi_sum - hi[static_cast<std::size_t>(s)];
                    // coef*x in [total - rest_hi, total - rest_lo]
                    long tlo = c.total - rest_hi, thi = c.total - rest_lo;
                    long vlo, vhi;
                    if (coef > 0) {
                        vlo = tlo;
                        vhi = thi;
                    } else {
                        vlo = -thi;
                        vhi = -tlo;
                    }
                    vlo = std::max<long>(vlo, 0);
                    vhi = std::min<long>(vhi, Domain::kMaxValue);
                    Domain keep = vlo > vhi ? Domain()
                                            : Domain::range(static_cast<int>(vlo),
                                                            static_cast<int>(vhi));
                    restrict_to(f, keep, ci);
                    if (wiped >= 0) return false;
                }
                return true;
            }
            case CKind::BinaryTable: {
                int a = p.flat(c.a), b = p.flat(c.b);
                const auto& sa = ctx.table_sup_a(ci);
                const auto& sb = ctx.table_sup_b(ci);
                Domain keep_a;
                for (int v : store[a].values())
                    if (v < static_cast<int>(sa.size()) &&
                        sa[static_cast<std::size_t>(v)].intersects(store[b]))
                        keep_a.insert(v);
                restrict_to(a, keep_a, ci);
                if (wiped >= 0) return false;
                Domain keep_b;
                for (int v : store[b].values())
                    if (v < static_cast<int>(sb.size()) &&
                        sb[static_cast<std::size_t>(v)].intersects(store[a]))
                        keep_b.insert(v);
                restrict_to(b, keep_b, ci);
                if (wiped >= 0) return false;
                return true;
            }
            case CKind::UnaryForbid: {
                int a = p.flat(c.a);
                for (int v : c.values) {
                    remove(a, v, ci);
                    if (wiped >= 0) return false;
                }
                return true;
            }
        }
        return true;
    }

    PropOutcome run() {
        PropOutcome out;
        while (!queue.empty()) {
            int ci;
            if (opts.shuffle_seed >= 0) {
                std::uniform_int_distribution<std::size_t> pick(0, queue.size() - 1);
                std::size_t at = pick(rng);
                ci = queue[at];
                queue.erase(queue.begin() + static_cast<long>(at));
            } else {
                ci = queue.front();
                queue.pop_front();
            }
            queued[static_cast<std::size_t>(ci)] = 0;
            if (!revise(ci)) {
                out.status = PropStatus::Wipeout;
                // first emptied variable in block-then-index order
                for (int v = 0; v < store.size(); ++v)
                    if (store[v].empty()) {
                        out.wipeout_var = v;
                        break;
                    }
                if (out.wipeout_var < 0) out.wipeout_var = wiped;
                return out;
            }
        }
        return out;
    }
};

}  // namespace

PropOutcome propagate_fixpoint(const PropagationContext& ctx, DomainStore& store,
                               const PropOptions& opts) {
    PropOutcome out;
    Engine eng(ctx, store, opts, opts.record_pruned ? &out.pruned : nullptr);
    for (int ci = 0; ci < static_cast<int>(ctx.problem().constraints.size()); ++ci)
        eng.enqueue(ci);
    PropOutcome r = eng.run();
    r.pruned = std::move(out.pruned);
    return r;
}

PropOutcome propagate_from(const PropagationContext& ctx, DomainStore& store, int var,
                           const PropOptions& opts) {
    PropOutcome out;
    Engine eng(ctx, store, opts, opts.record_pruned ? &out.pruned : nullptr);
    eng.enqueue_var(var);
    PropOutcome r = eng.run();
    r.pruned = std::move(out.pruned);
    return r;
}

namespace {

PropOutcome run_subset(const Problem& p, DomainStore& store,
                       const std::function<bool(const Constraint&)>& want) {
    Problem sub;
    sub.n = p.n;
    sub.m = p.m;
    sub.primal = p.primal;
    sub.dual = p.dual;
    sub.primal_role = p.primal_role;
    sub.dual_role = p.dual_role;
    sub.perm_scope = p.perm_scope;
    sub.dual_value = p.dual_value;
    for (const Constraint& c : p.constraints)
        if (want(c)) sub.constraints.push_back(c);
    PropagationContext ctx(sub);
    return propagate_fixpoint(ctx, store);
}

}  // namespace

PropOutcome enforce_ac_neq(const Problem& p, DomainStore& store) {
    return run_subset(p, store,
                      [](const Constraint& c) { return c.kind == CKind::NotEquals; });
}

PropOutcome enforce_ac_channel(const Problem& p, DomainStore& store) {
    return run_subset(p, store, [](const Constraint& c) {
        return c.kind == CKind::Channel || c.kind == CKind::ChannelImplies;
    });
}

PropOutcome enforce_gac_alldiff(const Problem& p, DomainStore& store, const Constraint& c) {
    PropOutcome out;
    std::vector<int> scope;
    for (const VarRef& v : c.scope) scope.push_back(p.flat(v));
    int wv = -1;
    if (!regin_filter(scope, store, -1, &out.pruned, &wv)) {
        out.status = PropStatus::Wipeout;
        out.wipeout_var = wv;
        for (int v : scope)
            if (store[v].empty()) {
                out.wipeout_var = v;
                break;
            }
    }
    return out;
}

std::string pruned_to_csv(const Problem& p, const std::vector<Removal>& pruned) {
    std::ostringstream os;
    for (const Removal& r : pruned) {
        os << to_string(p.unflat(r.var)) << ',' << r.value << ',';
        if (r.cause >= 0)
            os << r.cause;
        else
            os << "-";
        os << '\n';
    }
    return os.str();
}

}  // namespace permuta
