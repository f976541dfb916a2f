// Acceptance suite: one pass/fail line per criterion.
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "permuta/lattice.hpp"
#include "permuta/problems.hpp"
#include "permuta/sat.hpp"
#include "permuta/search.hpp"

using namespace permuta;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  [%d] %-24s %s\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
    if (!ok) ++failures;
}

std::vector<Domain> random_store(std::mt19937& rng, int n, int m) {
    std::vector<Domain> out(static_cast<std::size_t>(n));
    for (auto& d : out) {
        for (int v = 1; v <= m; ++v)
            if (rng() % 2) d.insert(v);
        if (d.empty()) d.insert(1 + static_cast<int>(rng() % m));
    }
    return out;
}

std::vector<Domain> primal_fix(const Problem& p, DomainStore& s) {
    std::vector<Domain> out;
    for (int i = 0; i < p.primal_count(); ++i) out.push_back(s[i]);
    return out;
}

long run_fails(const Problem& p, Algo algo, Heur heur, Goal goal) {
    SearchConfig cfg;
    cfg.algo = algo;
    cfg.heur = heur;
    cfg.goal = goal;
    auto [sols, stats] = solve(p, cfg);
    return stats.fails;
}

long count_solutions(const Problem& p, Algo algo) {
    SearchConfig cfg;
    cfg.algo = algo;
    cfg.goal = Goal::AllSolutions;
    auto [sols, stats] = solve(p, cfg);
    return stats.solutions;
}

Algo algo_of(ModelSpec m) {
    return m.has_primal_alldiff() || m.has_dual_alldiff() ? Algo::MGAC : Algo::MAC;
}

// --- criterion 1: fixture replay ------------------------------------------------

void criterion_fixtures() {
    auto results = replay_fixtures();
    int matched = 0, reclassified = 0;
    bool ok = true;
    for (const auto& r : results) {
        if (!r.ok()) {
            ok = false;
            std::printf("      mismatch: %s %s:%s expected %d got %d\n", r.fixture.c_str(),
                        to_string(r.level).c_str(), ModelSpec{r.model}.name().c_str(),
                        static_cast<int>(r.expected), static_cast<int>(r.actual));
        } else if (r.reclassified) {
            ++reclassified;
        } else {
            ++matched;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d classifications as quoted, %d reclassified by definitional check "
                  "(documented in fixtures)",
                  matched, reclassified);
    report(1, "fixture-replay", ok, buf);
}

// --- criterion 2: exhaustive lattice --------------------------------------------

void criterion_lattice() {
    LatticeReport r3 = verify_lattice(3);
    LatticeReport r4 = verify_lattice(4);
    bool ok = r3.ok() && r4.ok() && r3.configs == 343 && r4.configs == 50625;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "n=3: %ld configs %zu violations; n=4: %ld configs %zu violations",
                  r3.configs, r3.violations.size(), r4.configs, r4.violations.size());
    report(2, "lattice-sweep", ok, buf);
}

// --- criterion 3: propagator equivalences ----------------------------------------

void criterion_prop_equiv() {
    std::mt19937 rng(20260809);
    bool ok = true;
    long checked = 0;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // <= 6
        auto primal = random_store(rng, n, n);
        auto run = [&](ModelFamily f) {
            Problem p = build_permutation_model(n, ModelSpec{f});
            std::vector<Domain> all = primal;
            if (p.dual_count() > 0) {
                auto duals = dual_equivalent_domains(primal);
                all.insert(all.end(), duals.begin(), duals.end());
            }
            DomainStore s(all);
            PropagationContext ctx(p);
            auto out = propagate_fixpoint(ctx, s);
            return std::make_pair(out.ok(), primal_fix(p, s));
        };
        auto same = [](const std::pair<bool, std::vector<Domain>>& a,
                       const std::pair<bool, std::vector<Domain>>& b) {
            // domains are only defined at a reached fixpoint
            return a.first == b.first && (!a.first || a.second == b.second);
        };
        auto c = run(ModelFamily::C);
        for (ModelFamily f : {ModelFamily::NeqC, ModelFamily::CNeq, ModelFamily::NeqCNeq})
            if (!same(run(f), c)) ok = false;
        auto all = run(ModelFamily::All);
        for (ModelFamily f : {ModelFamily::AllC, ModelFamily::CAll, ModelFamily::AllCNeq,
                              ModelFamily::NeqCAll, ModelFamily::AllCAll})
            if (!same(run(f), all)) ok = false;
        ++checked;
    }
    // injection side
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);                  // <= 5
        int m = n + 1 + static_cast<int>(rng() % (8 - n));        // n < m <= 8
        auto primal = random_store(rng, n, m);
        std::vector<int> values;
        for (int j = 1; j <= m; ++j) values.push_back(j);
        auto run = [&](ModelFamily f) {
            Problem p = build_injection_model(n, m, ModelSpec{f});
            std::vector<Domain> all = primal;
            if (f == ModelFamily::InjC1) {
                for (int j = 0; j < m; ++j) all.push_back(Domain::range(1, n));
            } else if (f != ModelFamily::InjNeq && f != ModelFamily::InjAll) {
                auto eq = dual_equivalent_domains(primal, values);
                for (int j = 0; j < m; ++j) {
                    Domain d = eq[static_cast<std::size_t>(j)];
                    if (f == ModelFamily::InjC3) {
                        d.insert(n + 1);
                    } else {
                        for (int dummy = n + 1; dummy <= m; ++dummy) d.insert(dummy);
                    }
                    all.push_back(d);
                }
            }
            DomainStore s(all);
            PropagationContext ctx(p);
            auto out = propagate_fixpoint(ctx, s);
            return std::make_pair(out.ok(), primal_fix(p, s));
        };
        auto same = [](const std::pair<bool, std::vector<Domain>>& a,
                       const std::pair<bool, std::vector<Domain>>& b) {
            return a.first == b.first && (!a.first || a.second == b.second);
        };
        auto neq = run(ModelFamily::InjNeq);
        for (ModelFamily f : {ModelFamily::InjC1, ModelFamily::InjC2, ModelFamily::InjC3})
            if (!same(run(f), neq)) ok = false;
        ++checked;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld random stores, all fixpoint classes exact", checked);
    report(3, "propagator-equivalence", ok, buf);
}

// --- criterion 4: matching filter vs enumeration oracle ---------------------------

void criterion_gac_oracle() {
    std::mt19937 rng(424242);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);  // <= 7
        Problem p = build_permutation_model(n, ModelSpec{ModelFamily::All});
        auto primal = random_store(rng, n, n);
        DomainStore s(primal);
        auto out = enforce_gac_alldiff(p, s, p.constraints[0]);
        auto oracle = brute_force_gac(primal, [](const std::vector<int>& a) {
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j)
                    if (a[i] == a[j]) return false;
            return true;
        });
        bool oracle_wipe = false;
        for (const Domain& d : oracle)
            if (d.empty()) oracle_wipe = true;
        if (out.ok() == oracle_wipe) ok = false;
        if (out.ok())
            for (int i = 0; i < n; ++i)
                if (s[i] != oracle[static_cast<std::size_t>(i)]) ok = false;
    }
    report(4, "gac-oracle", ok, "1000 random all-different stores, filter == enumeration");
}

// --- criterion 5: DP == FC lockstep ----------------------------------------------

void criterion_lockstep() {
    bool ok = true;
    long runs = 0;
    auto check = [&](const Problem& p, SatVariant v, const std::string& name) {
        LockstepReport r = lockstep_compare(p, v);
        if (!r.equal) {
            ok = false;
            std::printf("      %s: fc=%ld dp=%ld %s\n", name.c_str(), r.fc_branches,
                        r.dp_branches, r.divergence.c_str());
        }
        ++runs;
    };
    for (auto [n, m] : {std::pair<int, int>{2, 3}, {2, 4}}) {
        std::string base = "langford:" + std::to_string(n) + "," + std::to_string(m);
        check(langford(n, m, ModelSpec{ModelFamily::Neq}), SatVariant::PrimalSAT, base);
        check(langford(n, m, ModelSpec{ModelFamily::C}), SatVariant::ChannellingSAT, base);
    }
    for (unsigned long seed = 1; seed <= 50; ++seed) {
        check(random_binary_permutation(5, 5, seed, ModelFamily::Neq), SatVariant::PrimalSAT,
              "seed" + std::to_string(seed));
        check(random_binary_permutation(5, 5, seed, ModelFamily::C),
              SatVariant::ChannellingSAT, "seed" + std::to_string(seed));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld paired runs, branch counts equal", runs);
    report(5, "dp-fc-lockstep", ok, buf);
}

// --- criterion 6: search dominance ------------------------------------------------

void criterion_dominance() {
    bool ok = true;
    std::string detail;
    for (int m = 9; m <= 12; ++m) {
        long f_all = run_fails(langford(3, m, ModelSpec{ModelFamily::All}), Algo::MGAC,
                               Heur::Lex, Goal::FirstSolution);
        long f_c = run_fails(langford(3, m, ModelSpec{ModelFamily::C}), Algo::MAC, Heur::Lex,
                             Goal::FirstSolution);
        long f_neq = run_fails(langford(3, m, ModelSpec{ModelFamily::Neq}), Algo::MAC,
                               Heur::Lex, Goal::FirstSolution);
        if (!(f_all <= f_c && f_c <= f_neq)) ok = false;
        for (ModelFamily f : {ModelFamily::NeqC, ModelFamily::CNeq, ModelFamily::NeqCNeq})
            if (run_fails(langford(3, m, ModelSpec{f}), Algo::MAC, Heur::Lex,
                          Goal::FirstSolution) != f_c)
                ok = false;
        for (ModelFamily f : {ModelFamily::AllC, ModelFamily::CAll, ModelFamily::AllCNeq,
                              ModelFamily::NeqCAll, ModelFamily::AllCAll})
            if (run_fails(langford(3, m, ModelSpec{f}), Algo::MGAC, Heur::Lex,
                          Goal::FirstSolution) != f_all)
                ok = false;
        detail += "L(3," + std::to_string(m) + "): " + std::to_string(f_all) + "<=" +
                  std::to_string(f_c) + "<=" + std::to_string(f_neq) + "  ";
    }
    report(6, "search-dominance", ok, detail);
}

// --- criterion 7: table reproduction ----------------------------------------------

void criterion_tables() {
    bool ok = true;
    std::printf("      table,instance,model,fails,ref,delta\n");
    auto cell = [&](int table, const char* inst_str, ModelFamily f, Goal goal, long ref,
                    long got) {
        std::printf("      %d,%s,%s,%ld,%ld,%+ld\n", table, inst_str,
                    ModelSpec{f}.name().c_str(), got, ref, got - ref);
    };

    // first-solution cells and class equalities
    {
        long f_all = run_fails(langford(3, 9, ModelSpec{ModelFamily::All}), Algo::MGAC,
                               Heur::Lex, Goal::FirstSolution);
        long f_c = run_fails(langford(3, 9, ModelSpec{ModelFamily::C}), Algo::MAC, Heur::Lex,
                             Goal::FirstSolution);
        long f_neq = run_fails(langford(3, 9, ModelSpec{ModelFamily::Neq}), Algo::MAC,
                               Heur::Lex, Goal::FirstSolution);
        cell(3, "langford:3,9", ModelFamily::All, Goal::FirstSolution, 12, f_all);
        cell(3, "langford:3,9", ModelFamily::C, Goal::FirstSolution, 12, f_c);
        cell(3, "langford:3,9", ModelFamily::Neq, Goal::FirstSolution, 25, f_neq);
        if (!(f_all <= f_c && f_c <= f_neq)) ok = false;
        // the table shows the all-diff and channelling classes tied here
        if (f_all != f_c) ok = false;
    }
    // all-solutions cells and equivalence classes on L(3,9)
    {
        long f_all = run_fails(langford(3, 9, ModelSpec{ModelFamily::All}), Algo::MGAC,
                               Heur::Lex, Goal::AllSolutions);
        long f_c = run_fails(langford(3, 9, ModelSpec{ModelFamily::C}), Algo::MAC, Heur::Lex,
                             Goal::AllSolutions);
        long f_neq = run_fails(langford(3, 9, ModelSpec{ModelFamily::Neq}), Algo::MAC,
                               Heur::Lex, Goal::AllSolutions);
        cell(4, "langford:3,9", ModelFamily::All, Goal::AllSolutions, 2006, f_all);
        cell(4, "langford:3,9", ModelFamily::C, Goal::AllSolutions, 2282, f_c);
        cell(4, "langford:3,9", ModelFamily::Neq, Goal::AllSolutions, 6062, f_neq);
        if (!(f_all <= f_c && f_c <= f_neq && f_all < f_neq)) ok = false;
        for (ModelFamily f : {ModelFamily::NeqC, ModelFamily::CNeq, ModelFamily::NeqCNeq})
            if (run_fails(langford(3, 9, ModelSpec{f}), Algo::MAC, Heur::Lex,
                          Goal::AllSolutions) != f_c)
                ok = false;
        for (ModelFamily f : {ModelFamily::AllC, ModelFamily::CAll, ModelFamily::AllCNeq,
                              ModelFamily::NeqCAll, ModelFamily::AllCAll})
            if (run_fails(langford(3, 9, ModelSpec{f}), Algo::MGAC, Heur::Lex,
                          Goal::AllSolutions) != f_all)
                ok = false;
    }
    // L(3,12) cells
    {
        long f_all = run_fails(langford(3, 12, ModelSpec{ModelFamily::All}), Algo::MGAC,
                               Heur::Lex, Goal::AllSolutions);
        long f_c = run_fails(langford(3, 12, ModelSpec{ModelFamily::C}), Algo::MAC, Heur::Lex,
                             Goal::AllSolutions);
        long f_neq = run_fails(langford(3, 12, ModelSpec{ModelFamily::Neq}), Algo::MAC,
                               Heur::Lex, Goal::AllSolutions);
        cell(4, "langford:3,12", ModelFamily::All, Goal::AllSolutions, 279468, f_all);
        cell(4, "langford:3,12", ModelFamily::C, Goal::AllSolutions, 312926, f_c);
        cell(4, "langford:3,12", ModelFamily::Neq, Goal::AllSolutions, 949878, f_neq);
        if (!(f_all <= f_c && f_c <= f_neq && f_all < f_neq)) ok = false;
    }
    // Golomb(8,34) static injection cells
    {
        long f_all = run_fails(golomb(8, 34, ModelSpec{ModelFamily::InjAll}), Algo::MGAC,
                               Heur::Lex, Goal::FirstSolution);
        long f_c2 = run_fails(golomb(8, 34, ModelSpec{ModelFamily::InjC2}), Algo::MAC,
                              Heur::Lex, Goal::FirstSolution);
        long f_neq = run_fails(golomb(8, 34, ModelSpec{ModelFamily::InjNeq}), Algo::MAC,
                               Heur::Lex, Goal::FirstSolution);
        long f_ac2 = run_fails(golomb(8, 34, ModelSpec{ModelFamily::InjAllC2}), Algo::MGAC,
                               Heur::Lex, Goal::FirstSolution);
        cell(11, "golomb:8,34", ModelFamily::InjAll, Goal::FirstSolution, 82, f_all);
        cell(11, "golomb:8,34", ModelFamily::InjC2, Goal::FirstSolution, 104, f_c2);
        cell(11, "golomb:8,34", ModelFamily::InjNeq, Goal::FirstSolution, 104, f_neq);
        cell(11, "golomb:8,34", ModelFamily::InjAllC2, Goal::FirstSolution, 82, f_ac2);
        if (f_c2 != f_neq) ok = false;  // the binding equality of the table
        if (f_ac2 != f_all) ok = false;
        if (!(f_all <= f_c2)) ok = false;
    }
    report(7, "table-relations", ok,
           "within-table equalities and orderings binding; absolute deltas recorded above");
}

// --- criterion 8: heuristic effect -------------------------------------------------

void criterion_heuristic() {
    long sd_pd = run_fails(langford(3, 12, ModelSpec{ModelFamily::C}), Algo::MAC, Heur::SDpd,
                           Goal::AllSolutions);
    long sd_p = run_fails(langford(3, 12, ModelSpec{ModelFamily::C}), Algo::MAC, Heur::SDp,
                          Goal::AllSolutions);
    bool ok = sd_pd < sd_p;
    char buf[96];
    std::snprintf(buf, sizeof buf, "L(3,12) all, model c: sd_pd=%ld < sd_p=%ld", sd_pd, sd_p);
    report(8, "heuristic-effect", ok, buf);
}

// --- criterion 9: solution counts --------------------------------------------------

void criterion_counts() {
    bool ok = true;
    std::string detail;

    long l_off = count_solutions(langford(3, 9, ModelSpec{ModelFamily::All}, {false}),
                                 Algo::MGAC);
    long l_on = count_solutions(langford(3, 9, ModelSpec{ModelFamily::All}, {true}),
                                Algo::MGAC);
    if (l_off != 6 || l_on != 3) ok = false;
    detail += "L(3,9): " + std::to_string(l_off) + " unbroken / " + std::to_string(l_on) +
              " broken; ";

    // QG3(4) against the exhaustive idempotent-square oracle
    {
        int m = 4;
        std::vector<std::vector<int>> q(5, std::vector<int>(5, 0));
        for (int i = 1; i <= m; ++i) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = i;
        long oracle = 0;
        std::function<void(int)> go = [&](int pos) {
            if (pos == m * m) {
                for (int a = 1; a <= m; ++a)
                    for (int b = 1; b <= m; ++b) {
                        int u = q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        int v = q[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
                        if (q[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != a) return;
                    }
                ++oracle;
                return;
            }
            int r = pos / m + 1, c = pos % m + 1;
            if (r == c) {
                go(pos + 1);
                return;
            }
            for (int v = 1; v <= m; ++v) {
                bool fine = true;
                for (int k = 1; k <= m && fine; ++k) {
                    if (k != c && q[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] == v) fine = false;
                    if (k != r && q[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] == v) fine = false;
                }
                if (!fine) continue;
                q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                go(pos + 1);
                q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
            }
        };
        go(0);
        long got = count_solutions(quasigroup(3, 4, ModelSpec{ModelFamily::All}), Algo::MGAC);
        if (got != oracle) ok = false;
        detail += "QG3(4): " + std::to_string(got) + " == oracle " + std::to_string(oracle) +
                  "; ";
    }

    // the 5-mark ruler validates with distance 6 absent
    {
        Problem p = golomb(5, 11, ModelSpec{ModelFamily::All});
        std::vector<int> marks = {0, 1, 4, 9, 11};
        std::vector<int> full = marks;
        std::set<int> dset;
        for (std::size_t i = 0; i < marks.size(); ++i)
            for (std::size_t j = i + 1; j < marks.size(); ++j) {
                full.push_back(marks[j] - marks[i]);
                dset.insert(marks[j] - marks[i]);
            }
        full.push_back(6);  // padding takes the absent distance
        if (!satisfies_all(p, full) || dset.count(6) != 0) ok = false;
        detail += "ruler 0,1,4,9,11 valid, distance 6 absent";
    }
    report(9, "solution-counts", ok, detail);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_fixtures();
    criterion_lattice();
    criterion_prop_equiv();
    criterion_gac_oracle();
    criterion_lockstep();
    criterion_dominance();
    criterion_tables();
    criterion_heuristic();
    criterion_counts();
    std::printf("%s (%d failing criteria)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures;
}
