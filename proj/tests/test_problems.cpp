#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "permuta/problems.hpp"
#include "reference_cells.hpp"
#include "permuta/search.hpp"

using namespace permuta;

namespace {

std::set<std::vector<int>> all_solutions(const Problem& p, Algo algo) {
    SearchConfig cfg;
    cfg.algo = algo;
    cfg.goal = Goal::AllSolutions;
    auto [sols, stats] = solve(p, cfg);
    std::set<std::vector<int>> out;
    for (const auto& s : sols) out.insert(s.primal);
    return out;
}

Algo default_algo(ModelSpec m) {
    return m.has_primal_alldiff() || m.has_dual_alldiff() ? Algo::MGAC : Algo::MAC;
}

// Independent Langford oracle: enumerate position permutations directly.
long langford_count_oracle(int n, int m) {
    const int N = n * m;
    std::vector<int> seq(static_cast<std::size_t>(N), 0);  // position -> digit
    std::function<long(int)> place = [&](int digit) -> long {
        if (digit > m) return 1;
        long total = 0;
        for (int pos = 1; pos + (n - 1) * (digit + 1) <= N; ++pos) {
            bool ok = true;
            for (int k = 0; k < n && ok; ++k)
                if (seq[static_cast<std::size_t>(pos - 1 + k * (digit + 1))] != 0) ok = false;
            if (!ok) continue;
            for (int k = 0; k < n; ++k)
                seq[static_cast<std::size_t>(pos - 1 + k * (digit + 1))] = digit;
            total += place(digit + 1);
            for (int k = 0; k < n; ++k)
                seq[static_cast<std::size_t>(pos - 1 + k * (digit + 1))] = 0;
        }
        return total;
    };
    return place(1);
}

}  // namespace

TEST_CASE("langford variable encoding matches the published tables") {
    // digit/occurrence of variable indices for m=4
    CHECK(langford_var(4, 1, 1) == 1);
    CHECK(langford_var(4, 4, 1) == 4);
    CHECK(langford_var(4, 1, 2) == 5);
    CHECK(langford_digit_occ(4, 4) == std::pair<int, int>{4, 1});
    CHECK(langford_digit_occ(4, 5) == std::pair<int, int>{1, 2});

    // the sequence 23421314 solves L(2,4): primal x = [5,1,2,3,7,4,6,8]
    Problem p = langford(2, 4, ModelSpec{ModelFamily::NeqCNeq}, {false});
    std::vector<int> primal = {5, 1, 2, 3, 7, 4, 6, 8};
    // dual view d = [2,3,4,6,1,7,5,8]
    std::vector<int> dual = {2, 3, 4, 6, 1, 7, 5, 8};
    std::vector<int> full = primal;
    full.insert(full.end(), dual.begin(), dual.end());
    CHECK(satisfies_all(p, full));

    // a wrong dual must be rejected through the channelling constraints
    std::swap(full[8], full[9]);
    CHECK(!satisfies_all(p, full));
}

TEST_CASE("langford solution counts with and without symmetry breaking") {
    CHECK(langford_count_oracle(2, 3) == 2);
    CHECK(langford_count_oracle(2, 4) == 2);

    for (auto [n, m, want] : {std::tuple<int, int, long>{2, 3, 2}, {2, 4, 2}}) {
        Problem off = langford(n, m, ModelSpec{ModelFamily::C}, {false});
        CHECK(static_cast<long>(all_solutions(off, Algo::MAC).size()) == want);
        Problem on = langford(n, m, ModelSpec{ModelFamily::C}, {true});
        CHECK(static_cast<long>(all_solutions(on, Algo::MAC).size()) == want / 2);
    }
}

TEST_CASE("langford solutions come in reversal pairs") {
    Problem p = langford(2, 4, ModelSpec{ModelFamily::All}, {false});
    auto sols = all_solutions(p, Algo::MGAC);
    const int N = 8;
    for (const auto& s : sols) {
        // reverse: position q -> N+1-q and occurrences swap within a digit
        std::vector<int> rev(s.size());
        for (int d = 1; d <= 4; ++d) {
            int a = langford_var(4, d, 1), b = langford_var(4, d, 2);
            rev[static_cast<std::size_t>(a - 1)] = N + 1 - s[static_cast<std::size_t>(b - 1)];
            rev[static_cast<std::size_t>(b - 1)] = N + 1 - s[static_cast<std::size_t>(a - 1)];
        }
        CHECK(sols.count(rev) == 1);
        CHECK(rev != s);
    }
}

TEST_CASE("langford models agree on the primal solution set") {
    for (int m : {3, 4}) {
        std::set<std::vector<int>> base;
        for (ModelFamily f : {ModelFamily::Neq, ModelFamily::C, ModelFamily::All,
                              ModelFamily::NeqCNeq, ModelFamily::CAll}) {
            Problem p = langford(2, m, ModelSpec{f}, {true});
            auto sols = all_solutions(p, default_algo(ModelSpec{f}));
            if (base.empty())
                base = sols;
            else
                CHECK(sols == base);
        }
        CHECK(!base.empty());
    }
}

TEST_CASE("golomb builder and the 5-mark ruler") {
    Problem p = golomb(5, 11, ModelSpec{ModelFamily::All});
    // marks 0,1,4,9,11 with distances {1,4,9,11,3,8,10,5,7,2}; padding takes 6
    std::vector<int> marks = {0, 1, 4, 9, 11};
    std::vector<int> dists;
    for (std::size_t i = 0; i < marks.size(); ++i)
        for (std::size_t j = i + 1; j < marks.size(); ++j)
            dists.push_back(marks[j] - marks[i]);
    CHECK(std::set<int>(dists.begin(), dists.end()).size() == dists.size());
    CHECK(std::count(dists.begin(), dists.end(), 6) == 0);

    std::vector<int> full = marks;
    full.insert(full.end(), dists.begin(), dists.end());
    full.push_back(6);  // the padding variable takes the absent value
    CHECK(satisfies_all(p, full));

    // 4 marks give 6 distance variables
    Problem p4 = golomb(4, 6, ModelSpec{ModelFamily::All});
    int dvars = 0;
    for (std::size_t i = 0; i < p4.primal_role.size(); ++i)
        if (p4.primal_role[i] == VarRole::DecisionPrimal) ++dvars;
    CHECK(dvars == 6);  // distances; length 6 needs no padding

    CHECK_THROWS(golomb(5, 9, ModelSpec{ModelFamily::All}));

    // a solution exists for the (5,11) ruler in both modes
    SearchConfig cfg;
    cfg.algo = Algo::MGAC;
    auto [sols, stats] = solve(p, cfg);
    CHECK(stats.solutions == 1);
    Problem pi = golomb(5, 11, ModelSpec{ModelFamily::InjC2});
    SearchConfig cfg2;
    cfg2.algo = Algo::MAC;
    auto [sols2, stats2] = solve(pi, cfg2);
    CHECK(stats2.solutions == 1);
}

TEST_CASE("golomb primal solution sets agree between padded and injection models") {
    auto project = [](const Problem& p, const std::set<std::vector<int>>& sols) {
        // compare on marks plus distances only (padding varies freely)
        std::set<std::vector<int>> out;
        int keep = 4 + 6;  // 4 marks, 6 distances
        for (const auto& s : sols)
            out.insert(std::vector<int>(s.begin(), s.begin() + keep));
        return out;
    };
    Problem padded = golomb(4, 6, ModelSpec{ModelFamily::All});
    Problem inj = golomb(4, 6, ModelSpec{ModelFamily::InjAll});
    auto a = project(padded, all_solutions(padded, Algo::MGAC));
    auto b = project(inj, all_solutions(inj, Algo::MGAC));
    CHECK(a == b);
    CHECK(!a.empty());

    Problem neq = golomb(4, 6, ModelSpec{ModelFamily::InjNeq});
    CHECK(project(neq, all_solutions(neq, Algo::MAC)) == a);
}

TEST_CASE("quasigroup existence counts match the exhaustive oracle") {
    // oracle: enumerate idempotent Latin squares of order 4, filter identity
    auto oracle = [](int identity) {
        int m = 4;
        std::vector<std::vector<int>> q(5, std::vector<int>(5, 0));
        for (int i = 1; i <= m; ++i) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = i;
        long count = 0;
        std::function<void(int)> go = [&](int pos) {
            if (pos == m * m) {
                for (int a = 1; a <= m; ++a)
                    for (int b = 1; b <= m; ++b) {
                        int u = q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        int v = q[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
                        int lhs = identity == 3
                                      ? q[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]
                                      : q[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
                        if (lhs != a) return;
                    }
                ++count;
                return;
            }
            int r = pos / m + 1, c = pos % m + 1;
            if (r == c) {
                go(pos + 1);
                return;
            }
            for (int v = 1; v <= m; ++v) {
                bool ok = true;
                for (int k = 1; k <= m && ok; ++k) {
                    if (k != c && q[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] == v) ok = false;
                    if (k != r && q[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] == v) ok = false;
                }
                if (!ok) continue;
                q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                go(pos + 1);
                q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
            }
        };
        go(0);
        return count;
    };

    long want3 = oracle(3);
    long want4 = oracle(4);

    Problem p3 = quasigroup(3, 4, ModelSpec{ModelFamily::All});
    CHECK(static_cast<long>(all_solutions(p3, Algo::MGAC).size()) == want3);
    Problem p4 = quasigroup(4, 4, ModelSpec{ModelFamily::All});
    CHECK(static_cast<long>(all_solutions(p4, Algo::MGAC).size()) == want4);

    // model independence on the cells
    auto cells_of = [&](const Problem& p, ModelFamily, Algo algo) {
        std::set<std::vector<int>> out;
        for (const auto& s : all_solutions(p, algo))
            out.insert(std::vector<int>(s.begin(), s.begin() + 16));
        return out;
    };
    Problem pneq = quasigroup(3, 4, ModelSpec{ModelFamily::Neq});
    Problem pc = quasigroup(3, 4, ModelSpec{ModelFamily::C});
    auto base = cells_of(p3, ModelFamily::All, Algo::MGAC);
    CHECK(cells_of(pneq, ModelFamily::Neq, Algo::MAC) == base);
    CHECK(cells_of(pc, ModelFamily::C, Algo::MAC) == base);
    CHECK(static_cast<long>(base.size()) == want3);
}

TEST_CASE("sport schedule shape and validity") {
    Problem p = sport(6, ModelSpec{ModelFamily::C});
    SearchConfig cfg;
    cfg.algo = Algo::MAC;
    cfg.heur = Heur::SDpd;
    auto [sols, stats] = solve(p, cfg);
    REQUIRE(stats.solutions == 1);
    // decode: 5 weeks x 3 periods, every game once, weekly team disjointness
    const auto& s = sols[0].primal;
    std::vector<std::pair<int, int>> games;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) games.emplace_back(a, b);
    std::set<int> used;
    for (int w = 0; w < 5; ++w) {
        std::set<int> teams;
        for (int pd = 0; pd < 3; ++pd) {
            int g = s[static_cast<std::size_t>(w * 3 + pd)];
            CHECK(used.insert(g).second);
            auto [a, b] = games[static_cast<std::size_t>(g - 1)];
            CHECK(teams.insert(a).second);
            CHECK(teams.insert(b).second);
        }
    }
    CHECK(used.size() == 15);

    // odd team count builds with injection tags
    Problem podd = sport(5, ModelSpec{ModelFamily::InjC2});
    SearchConfig cfg2;
    cfg2.algo = Algo::MAC;
    cfg2.heur = Heur::SDpd;
    auto [sols2, stats2] = solve(podd, cfg2);
    CHECK(stats2.solutions == 1);
}

TEST_CASE("magic square builder") {
    Problem p = magic(3, ModelSpec{ModelFamily::All});
    // total 15 per line
    int sums = 0;
    for (const auto& c : p.constraints)
        if (c.kind == CKind::Sum) {
            CHECK(c.total == 15);
            ++sums;
        }
    CHECK(sums == 8);

    SearchConfig cfg;
    cfg.algo = Algo::MGAC;
    auto [sols, stats] = solve(p, cfg);
    REQUIRE(stats.solutions == 1);
    CHECK(satisfies_all(p, sols[0].primal));

    Problem pc = magic(3, ModelSpec{ModelFamily::C});
    SearchConfig cfg2;
    cfg2.algo = Algo::MAC;
    cfg2.heur = Heur::SD2pd;
    auto [sols2, stats2] = solve(pc, cfg2);
    CHECK(stats2.solutions == 1);
}

TEST_CASE("instance strings parse and build") {
    auto inst = parse_instance("langford:3,9");
    REQUIRE(inst.has_value());
    CHECK(inst->kind == "langford");
    CHECK(inst->a == 3);
    CHECK(inst->b == 9);
    CHECK(inst->to_string() == "langford:3,9");
    CHECK(parse_instance("qg3:8").has_value());
    CHECK(parse_instance("golomb:10,55").has_value());
    CHECK(parse_instance("sport:8").has_value());
    CHECK(parse_instance("magic:5").has_value());
    CHECK(!parse_instance("langford:3").has_value());
    CHECK(!parse_instance("nope:1").has_value());
    CHECK(!parse_instance("magic").has_value());
}

TEST_CASE("every embedded reference cell is reachable from the front end") {
    const auto& cells = bench::reference_cells();
    CHECK(cells.size() > 400);
    for (const auto& c : cells) {
        INFO(c.instance << " " << c.model << " " << c.heuristic);
        auto inst = parse_instance(c.instance);
        REQUIRE(inst.has_value());
        auto model = ModelSpec::parse(c.model);
        REQUIRE(model.has_value());
        CHECK(parse_heur(c.heuristic).has_value());
        CHECK(parse_goal(c.goal).has_value());
        CHECK(c.table >= 3);
        CHECK(c.table <= 13);
        CHECK(c.fails >= 0);
        // the builder accepts the combination
        Problem p = build_instance(*inst, *model);
        CHECK(p.primal_count() > 0);
    }
}

TEST_CASE("identical runs produce identical statistics") {
    Problem p = langford(2, 4, ModelSpec{ModelFamily::C});
    SearchConfig cfg;
    cfg.heur = Heur::SD2pd;
    cfg.goal = Goal::AllSolutions;
    auto [s1, st1] = solve(p, cfg);
    auto [s2, st2] = solve(p, cfg);
    CHECK(st1.fails == st2.fails);
    CHECK(st1.nodes == st2.nodes);
    CHECK(st1.solutions == st2.solutions);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].primal == s2[i].primal);
}
