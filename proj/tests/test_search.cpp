#include "doctest.h"

#include <algorithm>
#include <set>

#include "permuta/problems.hpp"
#include "permuta/search.hpp"

using namespace permuta;

namespace {

long count_all(const Problem& p, Algo algo) {
    SearchConfig cfg;
    cfg.algo = algo;
    cfg.goal = Goal::AllSolutions;
    auto [sols, stats] = solve(p, cfg);
    return stats.solutions;
}

std::set<std::vector<int>> solution_set(const Problem& p, const SearchConfig& cfg) {
    auto [sols, stats] = solve(p, cfg);
    std::set<std::vector<int>> out;
    for (const auto& s : sols) out.insert(s.primal);
    return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("one-variable permutation: one solution, zero fails") {
    Problem p = build_permutation_model(1, ModelSpec{ModelFamily::Neq});
    SearchConfig cfg;
    auto [sols, stats] = solve(p, cfg);
    CHECK(stats.solutions == 1);
    CHECK(stats.fails == 0);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].primal == std::vector<int>{1});
}

TEST_CASE("pure permutations enumerate n! solutions in every model") {
    for (int n : {2, 3, 4}) {
        long want = factorial(n);
        for (ModelFamily f : {ModelFamily::Neq, ModelFamily::C, ModelFamily::All,
                              ModelFamily::NeqCNeq, ModelFamily::AllCAll}) {
            Problem p = build_permutation_model(n, ModelSpec{f});
            Algo algo = ModelSpec{f}.has_primal_alldiff() || ModelSpec{f}.has_dual_alldiff()
                            ? Algo::MGAC
                            : Algo::MAC;
            CHECK(count_all(p, algo) == want);
            CHECK(count_all(p, Algo::FC) == want);
        }
    }
}

TEST_CASE("fails never exceed nodes and stats are sane") {
    Problem p = build_permutation_model(5, ModelSpec{ModelFamily::Neq});
    // make it unsatisfiable: forbid value 5 everywhere
    for (int i = 1; i <= 5; ++i)
        p.constraints.push_back(Constraint::unary_forbid({Block::Primal, i}, {5}));
    SearchConfig cfg;
    cfg.goal = Goal::AllSolutions;
    auto [sols, stats] = solve(p, cfg);
    CHECK(stats.solutions == 0);
    CHECK(sols.empty());
    CHECK(stats.fails <= stats.nodes);
    CHECK(stats.fails > 0);
}

TEST_CASE("select_variable follows the block and tie-break rules") {
    Problem p = build_permutation_model(2, ModelSpec{ModelFamily::C});
    // x1={1,2,3}, x2={1,2}, d1={1,2}, d2={1,2,3,4}
    DomainStore s({Domain::range(1, 3), Domain::of({1, 2}), Domain::of({1, 2}),
                   Domain::range(1, 4)});
    std::vector<char> bound(4, 0);

    SearchConfig lex;
    lex.heur = Heur::Lex;
    lex.fail_first_singletons = false;
    CHECK(select_variable(p, s, bound, lex) == 0);
    bound[0] = 1;
    CHECK(select_variable(p, s, bound, lex) == 1);
    bound[0] = 0;

    SearchConfig sdpd;
    sdpd.heur = Heur::SDpd;
    sdpd.fail_first_singletons = false;
    // |x2| = 2 ties |d1| = 2; primal wins
    CHECK(select_variable(p, s, bound, sdpd) == 1);

    SearchConfig sdd;
    sdd.heur = Heur::SDd;
    sdd.fail_first_singletons = false;
    CHECK(select_variable(p, s, bound, sdd) == 2);  // d1

    // a singleton domain jumps the queue regardless of heuristic
    DomainStore s2({Domain::range(1, 3), Domain::of({1, 2}), Domain::of({2}),
                    Domain::range(1, 4)});
    SearchConfig ff;
    ff.heur = Heur::SDp;
    ff.fail_first_singletons = true;
    CHECK(select_variable(p, s2, bound, ff) == 2);
}

TEST_CASE("select_value_order: numeric and double-smallest-domain") {
    Problem p = build_permutation_model(2, ModelSpec{ModelFamily::C});
    DomainStore s({Domain::of({1, 2}), Domain::of({1, 2}), Domain::range(1, 3),
                   Domain::of({1})});
    SearchConfig lex;
    CHECK(select_value_order(p, s, 0, lex) == std::vector<int>{1, 2});

    // sd2: value 2's dual (d2) has the smaller domain, so 2 comes first
    SearchConfig sd2;
    sd2.heur = Heur::SD2pd;
    CHECK(select_value_order(p, s, 0, sd2) == std::vector<int>{2, 1});

    // ties fall back to numeric order
    DomainStore st({Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2}),
                    Domain::of({1, 2})});
    CHECK(select_value_order(p, st, 0, sd2) == std::vector<int>{1, 2});
}

TEST_CASE("all-solutions sets agree across models and algorithms") {
    for (ModelFamily f : {ModelFamily::Neq, ModelFamily::C, ModelFamily::All,
                          ModelFamily::CNeq, ModelFamily::AllC}) {
        Problem p = build_permutation_model(4, ModelSpec{f});
        // a side constraint to make the solution set non-trivial
        p.constraints.push_back(Constraint::less({Block::Primal, 1}, {Block::Primal, 4}));
        SearchConfig cfg;
        cfg.goal = Goal::AllSolutions;
        cfg.algo = ModelSpec{f}.has_primal_alldiff() ? Algo::MGAC : Algo::MAC;
        auto main_set = solution_set(p, cfg);
        CHECK(main_set.size() == 12);

        SearchConfig fc = cfg;
        fc.algo = Algo::FC;
        CHECK(solution_set(p, fc) == main_set);

        SearchConfig sd = cfg;
        if (ModelSpec{f}.has_channels()) {
            sd.heur = Heur::SD2pd;
            CHECK(solution_set(p, sd) == main_set);
        }
    }
}

TEST_CASE("search dominance on a random permutation batch") {
    // with the same static order, stronger propagation never fails more
    for (int n : {4, 5, 6}) {
        auto fails_of = [&](ModelFamily f, Algo a) {
            Problem p = build_permutation_model(n, ModelSpec{f});
            // seed an asymmetry so search does some work
            p.constraints.push_back(Constraint::less({Block::Primal, 1}, {Block::Primal, 2}));
            SearchConfig cfg;
            cfg.algo = a;
            cfg.goal = Goal::AllSolutions;
            auto [sols, stats] = solve(p, cfg);
            return stats.fails;
        };
        long f_all = fails_of(ModelFamily::All, Algo::MGAC);
        long f_c = fails_of(ModelFamily::C, Algo::MAC);
        long f_neq = fails_of(ModelFamily::Neq, Algo::MAC);
        CHECK(f_all <= f_c);
        CHECK(f_c <= f_neq);
        // equivalence classes give identical counts
        CHECK(fails_of(ModelFamily::NeqC, Algo::MAC) == f_c);
        CHECK(fails_of(ModelFamily::CNeq, Algo::MAC) == f_c);
        CHECK(fails_of(ModelFamily::NeqCNeq, Algo::MAC) == f_c);
        CHECK(fails_of(ModelFamily::AllC, Algo::MGAC) == f_all);
        CHECK(fails_of(ModelFamily::CAll, Algo::MGAC) == f_all);
        CHECK(fails_of(ModelFamily::AllCAll, Algo::MGAC) == f_all);
    }
}

TEST_CASE("node and time limits abort cleanly with partial stats") {
    Problem p = build_permutation_model(7, ModelSpec{ModelFamily::Neq});
    SearchConfig cfg;
    cfg.goal = Goal::AllSolutions;
    cfg.node_limit = 50;
    auto [sols, stats] = solve(p, cfg);
    CHECK(stats.aborted);
    CHECK(stats.nodes <= 51);
}

TEST_CASE("stats csv row shape") {
    SearchConfig cfg;
    SearchStats st;
    st.fails = 3;
    st.nodes = 10;
    st.solutions = 1;
    std::string row = stats_csv_row("langford:2,3", "c", cfg, st);
    CHECK(row.find("langford:2,3,c,lex,mac,first,3,10,1,") == 0);
}

TEST_CASE("value ordering changes all-solutions fail counts") {
    // regression pin: same variable rule (dual smallest domain), different
    // value rule, different effort even when enumerating everything
    Problem p = langford(3, 9, ModelSpec{ModelFamily::C});
    auto fails_with = [&](Heur h) {
        SearchConfig cfg;
        cfg.algo = Algo::MAC;
        cfg.heur = h;
        cfg.goal = Goal::AllSolutions;
        auto [sols, stats] = solve(p, cfg);
        CHECK(stats.solutions == 3);
        return stats.fails;
    };
    long sd = fails_with(Heur::SDd);
    long sd2 = fails_with(Heur::SD2d);
    CHECK(sd == 111);
    CHECK(sd2 == 94);
    CHECK(sd != sd2);
}

TEST_CASE("magic:3 channelling run matches its regression baseline") {
    Problem p = magic(3, ModelSpec{ModelFamily::C});
    SearchConfig cfg;
    cfg.algo = Algo::MAC;
    cfg.heur = Heur::SD2pd;
    auto [sols, stats] = solve(p, cfg);
    CHECK(stats.solutions == 1);
    CHECK(stats.fails == 1);
}

TEST_CASE("dual-aware heuristics require a dual block") {
    Problem p = build_permutation_model(3, ModelSpec{ModelFamily::Neq});
    SearchConfig cfg;
    cfg.heur = Heur::SDpd;
    CHECK_THROWS(solve(p, cfg));
    cfg.heur = Heur::SD2d;
    CHECK_THROWS(solve(p, cfg));
    cfg.heur = Heur::SDp;  // primal-only is fine without duals
    auto [sols, stats] = solve(p, cfg);
    CHECK(stats.solutions == 1);
}
