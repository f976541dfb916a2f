#include "permuta/sat.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "permuta/search.hpp"

namespace permuta {

std::string ClauseSet::to_dimacs() const {
    std::ostringstream os;
    os << "p cnf " << atoms << ' ' << clauses.size() << '\n';
    for (const auto& cl : clauses) {
        for (int lit : cl) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

ClauseSet encode_direct(int n, SatVariant variant, const std::vector<std::vector<int>>& side) {
    ClauseSet cs;
    cs.n = n;
    cs.atoms = n * n;
    // each primal variable takes at least one value
    for (int i = 1; i <= n; ++i) {
        std::vector<int> cl;
        for (int j = 1; j <= n; ++j) cl.push_back(cs.atom(i, j));
        cs.clauses.push_back(std::move(cl));
    }
    // no primal variable takes two values
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                cs.clauses.push_back({-cs.atom(i, j), -cs.atom(i, k)});
    // no two primal variables share a value (equally: no dual takes two)
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k)
                cs.clauses.push_back({-cs.atom(i, j), -cs.atom(k, j)});
    if (variant == SatVariant::ChannellingSAT) {
        // each dual variable takes a value
        for (int j = 1; j <= n; ++j) {
            std::vector<int> cl;
            for (int i = 1; i <= n; ++i) cl.push_back(cs.atom(i, j));
            cs.clauses.push_back(std::move(cl));
        }
    }
    for (const auto& cl : side) cs.clauses.push_back(cl);
    return cs;
}

std::vector<std::vector<int>> encode_side_constraints(const Problem& p) {
    const int n = p.primal_count();
    if (p.m != n)
        throw std::invalid_argument("direct encoding needs a square permutation problem");
    ClauseSet probe;
    probe.n = n;
    auto atom_of = [&](const VarRef& v, int value) {
        // dual variable j holding value i is the same literal as primal
        // variable i holding value j
        if (v.block == Block::Primal) return probe.atom(v.index, value);
        return probe.atom(value, v.index);
    };

    std::vector<std::vector<int>> out;
    auto forbid_pair = [&](const VarRef& a, int va, const VarRef& b, int vb) {
        out.push_back({-atom_of(a, va), -atom_of(b, vb)});
    };

    for (const Constraint& c : p.constraints) {
        switch (c.kind) {
            case CKind::NotEquals:
            case CKind::Channel:
            case CKind::ChannelImplies:
            case CKind::AllDifferent:
                break;  // the permutation part comes from the SAT variant
            case CKind::Offset:
                for (int v = 1; v <= n; ++v)
                    for (int w = 1; w <= n; ++w)
                        if (w != v + c.k) forbid_pair(c.a, v, c.b, w);
                break;
            case CKind::Less:
                for (int v = 1; v <= n; ++v)
                    for (int w = 1; w <= n; ++w)
                        if (!(v < w)) forbid_pair(c.a, v, c.b, w);
                break;
            case CKind::DualSepLink:
                for (int v = 1; v <= n; ++v)
                    for (int w = 1; w <= n; ++w)
                        if ((v == c.va) != (w == c.vb)) forbid_pair(c.a, v, c.b, w);
                break;
            case CKind::BinaryTable: {
                for (int v = 1; v <= n; ++v)
                    for (int w = 1; w <= n; ++w) {
                        bool ok = false;
                        for (auto [u, x] : c.pairs)
                            if (u == v && x == w) {
                                ok = true;
                                break;
                            }
                        if (!ok) forbid_pair(c.a, v, c.b, w);
                    }
                break;
            }
            case CKind::UnaryForbid:
                for (int v : c.values)
                    if (v >= 1 && v <= n) out.push_back({-atom_of(c.a, v)});
                break;
            case CKind::Sum:
                throw std::invalid_argument("sum constraints are outside the direct encoding");
        }
    }
    return out;
}

ClauseSet encode_problem(const Problem& p, SatVariant variant) {
    return encode_direct(p.primal_count(), variant, encode_side_constraints(p));
}

UnitStatus unit_propagate(const ClauseSet& cs, std::vector<int>& a) {
    if (a.size() != static_cast<std::size_t>(cs.atoms + 1))
        a.resize(static_cast<std::size_t>(cs.atoms + 1), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& cl : cs.clauses) {
            int unknown = 0, last = 0;
            bool satisfied = false;
            for (int lit : cl) {
                int v = a[static_cast<std::size_t>(std::abs(lit))];
                if (v == 0) {
                    ++unknown;
                    last = lit;
                } else if ((v > 0) == (lit > 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) continue;
            if (unknown == 0) return UnitStatus::Conflict;
            if (unknown == 1) {
                a[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
                changed = true;
            }
        }
    }
    return UnitStatus::Ok;
}

namespace {

int default_order(const ClauseSet& cs, const std::vector<int>& a) {
    // lowest unbound variable, lowest unknown value
    for (int i = 1; i <= cs.n; ++i) {
        bool bound = false;
        for (int j = 1; j <= cs.n; ++j)
            if (a[static_cast<std::size_t>(cs.atom(i, j))] > 0) bound = true;
        if (bound) continue;
        for (int j = 1; j <= cs.n; ++j)
            if (a[static_cast<std::size_t>(cs.atom(i, j))] == 0) return cs.atom(i, j);
    }
    return 0;
}

struct DpSolver {
    const ClauseSet& cs;
    const BranchOrder& order;
    bool enumerate;
    DpResult result;

    // returns true to stop the search (first model found, not enumerating)
    bool go(std::vector<int> a) {
        if (unit_propagate(cs, a) == UnitStatus::Conflict) return false;
        int atom = order(cs, a);
        if (atom == 0) {
            // complete: every atom decided or free atoms are irrelevant;
            // treat unassigned as false and verify
            for (auto& v : a)
                if (v == 0) v = -1;
            for (const auto& cl : cs.clauses) {
                bool sat = false;
                for (int lit : cl)
                    if ((a[static_cast<std::size_t>(std::abs(lit))] > 0) == (lit > 0)) {
                        sat = true;
                        break;
                    }
                if (!sat) return false;
            }
            result.sat = true;
            ++result.models;
            result.assignment = a;
            return !enumerate;
        }
        ++result.branches;
        std::vector<int> left = a;
        left[static_cast<std::size_t>(atom)] = 1;
        if (go(std::move(left))) return true;
        a[static_cast<std::size_t>(atom)] = -1;
        return go(std::move(a));
    }
};

}  // namespace

DpResult dp_solve(const ClauseSet& cs, const BranchOrder& order, bool enumerate) {
    BranchOrder ord = order ? order : default_order;
    DpSolver solver{cs, ord, enumerate, {}};
    std::vector<int> a(static_cast<std::size_t>(cs.atoms + 1), 0);
    solver.go(std::move(a));
    return solver.result;
}

// --- lockstep ------------------------------------------------------------------

namespace {

struct DecisionTrace : SearchObserver {
    std::vector<std::pair<int, int>> decisions;  // (flat var, value), counted only
    void on_decision(int var, int value, int, bool counted) override {
        if (counted) decisions.emplace_back(var, value);
    }
};

}  // namespace

std::string LockstepReport::to_csv() const {
    std::ostringstream os;
    os << fc_branches << ',' << dp_branches << ',' << (fc_sat ? 1 : 0) << ','
       << (dp_sat ? 1 : 0) << ',' << (equal ? "equal" : divergence);
    return os.str();
}

LockstepReport lockstepcompare_impl(const Problem& p, SatVariant variant) {
    LockstepReport rep;

    DecisionTrace trace;
    SearchConfig cfg;
    cfg.algo = Algo::FC;
    cfg.heur = Heur::Lex;
    cfg.goal = Goal::FirstSolution;
    cfg.fail_first_singletons = true;
    auto [sols, stats] = solve(p, cfg, &trace);
    rep.fc_branches = static_cast<long>(trace.decisions.size());
    rep.fc_sat = stats.solutions > 0;

    ClauseSet cs = encode_problem(p, variant);
    std::vector<std::pair<int, int>> dp_decisions;
    BranchOrder mirror = [&](const ClauseSet& c, const std::vector<int>& a) {
        int atom = default_order(c, a);
        if (atom != 0) dp_decisions.push_back(c.atom_ij(atom));
        return atom;
    };
    DpResult dp = dp_solve(cs, mirror);
    rep.dp_branches = dp.branches;
    rep.dp_sat = dp.sat;

    rep.equal = rep.fc_branches == rep.dp_branches && rep.fc_sat == rep.dp_sat;
    if (!rep.equal) {
        // report the first diverging decision
        std::size_t k = 0;
        while (k < trace.decisions.size() && k < dp_decisions.size()) {
            auto [var, value] = trace.decisions[k];
            auto [i, j] = dp_decisions[k];
            if (var != i - 1 || value != j) break;
            ++k;
        }
        std::ostringstream os;
        os << "diverges at decision " << k << ": fc=";
        if (k < trace.decisions.size())
            os << "x" << trace.decisions[k].first + 1 << "=" << trace.decisions[k].second;
        else
            os << "(end)";
        os << " dp=";
        if (k < dp_decisions.size())
            os << "X(" << dp_decisions[k].first << "," << dp_decisions[k].second << ")";
        else
            os << "(end)";
        rep.divergence = os.str();
    }
    return rep;
}

LockstepReport lockstep_compare(const Problem& p, SatVariant variant) {
    return lockstepcompare_impl(p, variant);
}

Problem random_binary_permutation(int n, int extra, unsigned long seed, ModelFamily family) {
    Problem p = build_permutation_model(n, ModelSpec{family});
    std::mt19937_64 rng(seed);
    for (int e = 0; e < extra; ++e) {
        int a = static_cast<int>(rng() % static_cast<unsigned long>(n));
        int b = static_cast<int>(rng() % static_cast<unsigned long>(n - 1));
        if (b >= a) ++b;
        std::vector<std::pair<int, int>> allowed;
        for (int v = 1; v <= n; ++v)
            for (int w = 1; w <= n; ++w)
                if (rng() % 100 < 65) allowed.emplace_back(v, w);
        p.constraints.push_back(Constraint::binary_table({Block::Primal, a + 1},
                                                         {Block::Primal, b + 1},
                                                         std::move(allowed)));
    }
    return p;
}

}  // namespace permuta
