#include "doctest.h"

#include <random>

#include "permuta/network.hpp"

using namespace permuta;

namespace {

std::vector<int> iota1(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return v;
}

BinaryNetwork perm_net(const std::vector<Domain>& primal, ModelFamily fam) {
    return make_permutation_network(primal, iota1(static_cast<int>(primal.size())), fam);
}

}  // namespace

TEST_CASE("AC check: channelling sees singleton values, not-equals does not") {
    std::vector<Domain> d3 = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::range(1, 3)};
    CHECK(check_level(perm_net(d3, ModelFamily::Neq), Level::AC));
    CHECK(!check_level(perm_net(d3, ModelFamily::C), Level::AC));

    std::vector<Domain> d5 = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2}),
                              Domain::of({3, 4, 5}), Domain::of({3, 4, 5})};
    CHECK(check_level(perm_net(d5, ModelFamily::C), Level::AC));
    CHECK(!check_level(perm_net(d5, ModelFamily::All), Level::GAC));
}

TEST_CASE("RPC separates the channelling and not-equals viewpoints both ways") {
    std::vector<Domain> four = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
                                Domain::range(1, 4)};
    CHECK(check_level(perm_net(four, ModelFamily::Neq), Level::RPC));
    CHECK(!check_level(perm_net(four, ModelFamily::C), Level::RPC));
    CHECK(!check_level(perm_net(four, ModelFamily::C), Level::AC));
    CHECK(check_level(perm_net(four, ModelFamily::Neq), Level::PIC));
    CHECK(!check_level(perm_net(four, ModelFamily::C), Level::PIC));

    std::vector<Domain> five = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2}),
                                Domain::of({3, 4, 5}), Domain::of({3, 4, 5})};
    CHECK(check_level(perm_net(five, ModelFamily::C), Level::RPC));
    CHECK(!check_level(perm_net(five, ModelFamily::Neq), Level::RPC));
    CHECK(!check_level(perm_net(five, ModelFamily::NeqC), Level::RPC));
    CHECK(check_level(perm_net(five, ModelFamily::C), Level::PIC));
    CHECK(!check_level(perm_net(five, ModelFamily::Neq), Level::PIC));
}

TEST_CASE("RPC/PIC: dual not-equals add strength over channels alone") {
    std::vector<Domain> six = {Domain::range(1, 6), Domain::range(1, 6), Domain::of({4, 5, 6}),
                               Domain::of({4, 5, 6}), Domain::of({4, 5, 6}), Domain::of({4, 5, 6})};
    CHECK(check_level(perm_net(six, ModelFamily::NeqC), Level::RPC));
    CHECK(!check_level(perm_net(six, ModelFamily::NeqCNeq), Level::RPC));
    CHECK(check_level(perm_net(six, ModelFamily::NeqC), Level::PIC));
    CHECK(!check_level(perm_net(six, ModelFamily::NeqCNeq), Level::PIC));

    std::vector<Domain> seven = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
                                 Domain::range(1, 3), Domain::range(4, 7), Domain::range(4, 7),
                                 Domain::range(4, 7)};
    CHECK(check_level(perm_net(seven, ModelFamily::NeqCNeq), Level::RPC));
    CHECK(check_level(perm_net(seven, ModelFamily::NeqCNeq), Level::PIC));
    CHECK(!check_level(perm_net(seven, ModelFamily::All), Level::GAC));
}

TEST_CASE("SAC instances with value 0 in the universe") {
    std::vector<int> values = {0, 1, 2, 3, 4};
    std::vector<Domain> doms = {Domain::of({0, 1, 2}), Domain::of({0, 1, 2}),
                                Domain::of({0, 1, 2}), Domain::of({0, 1, 2}),
                                Domain::of({3, 4})};
    CHECK(check_level(make_permutation_network(doms, values, ModelFamily::Neq), Level::SAC));
    CHECK(!check_level(make_permutation_network(doms, values, ModelFamily::C), Level::SAC));

    std::vector<int> v7 = {0, 1, 2, 3, 4, 5, 6};
    std::vector<Domain> d7 = {Domain::of({0, 1, 2}), Domain::of({0, 1, 2}),
                              Domain::of({0, 1, 2}), Domain::of({0, 1, 2}),
                              Domain::of({3, 4, 5, 6}), Domain::of({3, 4, 5, 6}),
                              Domain::of({3, 4, 5, 6})};
    CHECK(check_level(make_permutation_network(d7, v7, ModelFamily::C), Level::SAC));
    CHECK(!check_level(make_permutation_network(d7, v7, ModelFamily::All), Level::GAC));

    std::vector<int> v4 = {0, 1, 2, 3};
    std::vector<Domain> d4 = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
                              Domain::range(0, 3)};
    CHECK(check_level(make_permutation_network(d4, v4, ModelFamily::Neq), Level::SAC));
    CHECK(!check_level(make_permutation_network(d4, v4, ModelFamily::C), Level::AC));

    std::vector<Domain> d4b = {Domain::of({0, 1}), Domain::of({0, 1}), Domain::of({0, 2, 3}),
                               Domain::of({0, 2, 3})};
    CHECK(check_level(make_permutation_network(d4b, v4, ModelFamily::C), Level::AC));
    CHECK(!check_level(make_permutation_network(d4b, v4, ModelFamily::Neq), Level::SAC));
}

TEST_CASE("ACPC instances") {
    std::vector<Domain> d4 = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
                              Domain::range(1, 3)};
    CHECK(check_level(perm_net(d4, ModelFamily::Neq), Level::ACPC));
    CHECK(!check_level(perm_net(d4, ModelFamily::C), Level::ACPC));
    CHECK(!check_level(perm_net(d4, ModelFamily::C), Level::AC));

    // On the 4+2 split the combined model is NOT (2,1)-consistent: the pair
    // (x5=4, x6=5) leaves the dual of value 6 without any extension.  The
    // 4+3 split at n=7 is strong-path-consistent and carries the
    // incomparability with GAC instead.
    std::vector<Domain> d6 = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
                              Domain::range(1, 3), Domain::range(4, 6), Domain::range(4, 6)};
    CHECK(!check_level(perm_net(d6, ModelFamily::NeqCNeq), Level::ACPC));
    CHECK(check_level(perm_net(d6, ModelFamily::Neq), Level::ACPC));
    CHECK(!check_level(perm_net(d6, ModelFamily::All), Level::GAC));

    std::vector<Domain> d7 = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
                              Domain::range(1, 3), Domain::range(4, 7), Domain::range(4, 7),
                              Domain::range(4, 7)};
    CHECK(check_level(perm_net(d7, ModelFamily::NeqCNeq), Level::ACPC));
    CHECK(!check_level(perm_net(d7, ModelFamily::All), Level::GAC));

    std::vector<Domain> d5 = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2}),
                              Domain::of({3, 4, 5}), Domain::of({3, 4, 5})};
    CHECK(check_level(perm_net(d5, ModelFamily::C), Level::AC));
    CHECK(!check_level(perm_net(d5, ModelFamily::Neq), Level::ACPC));
}

TEST_CASE("parity side constraint separates per-constraint GAC from merged-network ACPC") {
    // In the all-diff model the parity edge is its own constraint and every
    // constraint is GAC; in the neq-c-neq network the pair relation merges
    // with not-equals and x1=2 loses all support.
    std::vector<Domain> full = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3)};
    SideRelation even{0, 2, [](int a, int b) { return (a + b) % 2 == 0; }};
    auto all_net = make_permutation_network(full, iota1(3), ModelFamily::All, {even});
    auto ncn_net = make_permutation_network(full, iota1(3), ModelFamily::NeqCNeq, {even});
    CHECK(check_level(all_net, Level::GAC));
    CHECK(!check_level(ncn_net, Level::ACPC));
}

TEST_CASE("multiple permutation caveat: overlapping scopes lose the hierarchy") {
    // Non-triangle-preserving scopes.  At the GAC fixpoint (the raw {1,2,3}
    // tails are not GAC: value 1 of x4 has no support inside its scope), the
    // all-different view holds GAC while the pairwise network is not RPC.
    std::vector<std::vector<int>> scopes = {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}};
    std::vector<Domain> raw = {Domain::of({1, 2}),  Domain::of({1, 2}),  Domain::of({1, 2}),
                               Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3)};
    CHECK(!check_level(make_multi_perm_network(raw, scopes, true), Level::GAC));

    std::vector<Domain> doms = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2}),
                                Domain::of({3}),    Domain::of({3}),    Domain::of({3})};
    auto gac_net = make_multi_perm_network(doms, scopes, true);
    auto neq_net = make_multi_perm_network(doms, scopes, false);
    CHECK(check_level(gac_net, Level::GAC));
    CHECK(!check_level(neq_net, Level::RPC));
}

TEST_CASE("injection instances classify as published") {
    {
        std::vector<Domain> p = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2})};
        std::vector<Domain> d(4, Domain::range(1, 3));
        CHECK(check_level(make_injection_network(p, d, ModelFamily::InjC1, 3, 4), Level::AC));
        CHECK(!check_level(make_injection_network(p, d, ModelFamily::InjAll, 3, 4), Level::GAC));
    }
    {
        std::vector<Domain> p = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2})};
        std::vector<Domain> d = {Domain::range(1, 5), Domain::range(1, 5), Domain::of({4, 5}),
                                 Domain::of({4, 5}), Domain::of({4, 5})};
        CHECK(check_level(make_injection_network(p, d, ModelFamily::InjC2Neq, 3, 5), Level::AC));
        CHECK(!check_level(make_injection_network(p, d, ModelFamily::InjAll, 3, 5), Level::GAC));
    }
    {
        std::vector<Domain> p = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2})};
        std::vector<Domain> d = {Domain::range(1, 4), Domain::range(1, 4), Domain::of({4}),
                                 Domain::of({4})};
        CHECK(check_level(make_injection_network(p, d, ModelFamily::InjC2, 3, 4), Level::AC));
        CHECK(!check_level(make_injection_network(p, d, ModelFamily::InjC2Neq, 3, 4), Level::AC));
    }
    {
        std::vector<Domain> p = {Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2}),
                                 Domain::range(1, 5)};
        std::vector<Domain> d = {Domain::range(1, 5), Domain::range(1, 5), Domain::of({4, 5}),
                                 Domain::of({4, 5}), Domain::of({4, 5})};
        CHECK(check_level(make_injection_network(p, d, ModelFamily::InjC3, 4, 5), Level::AC));
        CHECK(!check_level(make_injection_network(p, d, ModelFamily::InjAll, 4, 5), Level::GAC));
    }
}

TEST_CASE("enforce_pc tightens the parity pair and reaches a fixpoint") {
    std::vector<Domain> doms = {Domain::of({1, 3}), Domain::of({2}), Domain::of({1, 3})};
    SideRelation even{0, 2, [](int a, int b) { return (a + b) % 2 == 0; }};
    auto net = make_permutation_network(doms, iota1(3), ModelFamily::NeqCNeq, {even});
    REQUIRE(enforce_pc(net));
    Domain s1 = net.supports(0, 1, 2);
    Domain s3 = net.supports(0, 3, 2);
    CHECK(s1 == Domain::of({3}));
    CHECK(s3 == Domain::of({1}));

    auto again = net;
    REQUIRE(enforce_pc(again));
    for (int x = 0; x < net.var_count(); ++x)
        CHECK(net.dom[static_cast<std::size_t>(x)] == again.dom[static_cast<std::size_t>(x)]);

    std::vector<Domain> two = {Domain::of({1, 2}), Domain::of({1, 2})};
    auto net2 = make_permutation_network(two, iota1(2), ModelFamily::Neq);
    auto before = net2.dom;
    REQUIRE(enforce_pc(net2));
    CHECK(net2.dom == before);
}

TEST_CASE("enforce_pc starting from the unpruned parity instance") {
    std::vector<Domain> full = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3)};
    SideRelation even{0, 2, [](int a, int b) { return (a + b) % 2 == 0; }};
    auto net = make_permutation_network(full, iota1(3), ModelFamily::NeqCNeq, {even});
    REQUIRE(enforce_pc(net));
    CHECK(net.dom[0] == Domain::of({1, 3}));
    CHECK(net.dom[1] == Domain::of({2}));
    CHECK(net.dom[2] == Domain::of({1, 3}));
}

TEST_CASE("brute_force_gac oracle behaviour") {
    auto alldiff = [](const std::vector<int>& a) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (a[i] == a[j]) return false;
        return true;
    };
    auto r1 =
        brute_force_gac({Domain::of({1, 2}), Domain::of({1, 2}), Domain::range(1, 3)}, alldiff);
    CHECK(r1[2] == Domain::of({3}));

    auto r2 = brute_force_gac({Domain::of({1}), Domain::of({2}), Domain::of({3})}, alldiff);
    CHECK(r2[0] == Domain::of({1}));

    auto r3 =
        brute_force_gac({Domain::of({1, 2}), Domain::of({1, 2}), Domain::of({1, 2})}, alldiff);
    CHECK(r3[0].empty());
    CHECK(r3[1].empty());
    CHECK(r3[2].empty());

    CHECK_THROWS(brute_force_gac(std::vector<Domain>(20, Domain::range(1, 20)), alldiff));
}

TEST_CASE("level hierarchy holds on random permutation networks") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<Domain> doms(static_cast<std::size_t>(n));
        for (auto& d : doms) {
            for (int v = 1; v <= n; ++v)
                if (rng() & 1) d.insert(v);
            if (d.empty()) d.insert(1 + static_cast<int>(rng() % n));
        }
        for (ModelFamily f : {ModelFamily::Neq, ModelFamily::C, ModelFamily::NeqCNeq}) {
            auto net = perm_net(doms, f);
            bool acpc = check_level(net, Level::ACPC);
            bool sac = check_level(net, Level::SAC);
            bool pic = check_level(net, Level::PIC);
            bool rpc = check_level(net, Level::RPC);
            bool ac = check_level(net, Level::AC);
            bool bc = check_level(net, Level::BC);
            if (acpc) CHECK(sac);
            if (sac) CHECK(pic);
            if (pic) CHECK(rpc);
            if (rpc) CHECK(ac);
            if (ac) CHECK(bc);
        }
    }
}
