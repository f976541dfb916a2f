#include <sstream>
#include <stdexcept>

#include "permuta/lattice.hpp"

namespace permuta {

namespace {

Domain dom_of(std::initializer_list<int> vs) { return Domain::of(vs); }

std::vector<int> iota1(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return v;
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> fs;

    auto perm = [&](std::string name, std::vector<Domain> primal,
                    std::vector<FixtureExpect> expects, std::vector<int> values = {},
                    bool parity = false, std::string note = "") {
        Fixture f;
        f.name = std::move(name);
        f.kind = Fixture::Kind::Permutation;
        f.primal = std::move(primal);
        f.values = values.empty() ? iota1(static_cast<int>(f.primal.size())) : std::move(values);
        f.parity_side = parity;
        f.expects = std::move(expects);
        f.note = std::move(note);
        fs.push_back(std::move(f));
    };

    // Channelling is arc-consistent on the balanced split, the all-different
    // constraint is not generalized-arc-consistent (pigeonhole on {1,2}).
    perm("chan-ac-split-5",
         {dom_of({1, 2}), dom_of({1, 2}), dom_of({1, 2}), dom_of({3, 4, 5}), dom_of({3, 4, 5})},
         {
             {Level::AC, ModelFamily::C, true},
             {Level::GAC, ModelFamily::All, false},
             {Level::RPC, ModelFamily::C, true},
             {Level::RPC, ModelFamily::Neq, false},
             {Level::RPC, ModelFamily::NeqC, false},
             {Level::PIC, ModelFamily::C, true},
             {Level::PIC, ModelFamily::Neq, false},
             {Level::PIC, ModelFamily::NeqC, false},
             {Level::ACPC, ModelFamily::Neq, false},
         });

    // A value held by a single variable is invisible to not-equals AC but
    // forces a singleton dual.
    perm("neq-ac-lone-value-3", {dom_of({1, 2}), dom_of({1, 2}), dom_of({1, 2, 3})},
         {
             {Level::AC, ModelFamily::Neq, true},
             {Level::AC, ModelFamily::C, false},
         });

    perm("rpc-neq-wide-4",
         {dom_of({1, 2, 3}), dom_of({1, 2, 3}), dom_of({1, 2, 3}), dom_of({1, 2, 3, 4})},
         {
             {Level::RPC, ModelFamily::Neq, true},
             {Level::RPC, ModelFamily::C, false},
             {Level::PIC, ModelFamily::Neq, true},
             {Level::PIC, ModelFamily::C, false},
             {Level::AC, ModelFamily::C, false},
         });

    perm("rpc-dual-neq-gain-6",
         {Domain::range(1, 6), Domain::range(1, 6), dom_of({4, 5, 6}), dom_of({4, 5, 6}),
          dom_of({4, 5, 6}), dom_of({4, 5, 6})},
         {
             {Level::RPC, ModelFamily::NeqC, true},
             {Level::RPC, ModelFamily::NeqCNeq, false},
             {Level::PIC, ModelFamily::NeqC, true},
             {Level::PIC, ModelFamily::NeqCNeq, false},
         });

    perm("rpc-full-not-gac-7",
         {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
          Domain::range(4, 7), Domain::range(4, 7), Domain::range(4, 7)},
         {
             {Level::RPC, ModelFamily::NeqCNeq, true},
             {Level::PIC, ModelFamily::NeqCNeq, true},
             {Level::ACPC, ModelFamily::NeqCNeq, true},
             {Level::GAC, ModelFamily::All, false},
         });

    perm("sac-neq-solo-5",
         {dom_of({0, 1, 2}), dom_of({0, 1, 2}), dom_of({0, 1, 2}), dom_of({0, 1, 2}),
          dom_of({3, 4})},
         {
             {Level::SAC, ModelFamily::Neq, true},
             {Level::SAC, ModelFamily::C, false},
         },
         {0, 1, 2, 3, 4});

    perm("sac-chan-not-gac-7",
         {dom_of({0, 1, 2}), dom_of({0, 1, 2}), dom_of({0, 1, 2}), dom_of({0, 1, 2}),
          dom_of({3, 4, 5, 6}), dom_of({3, 4, 5, 6}), dom_of({3, 4, 5, 6})},
         {
             {Level::SAC, ModelFamily::C, true},
             {Level::GAC, ModelFamily::All, false},
         },
         {0, 1, 2, 3, 4, 5, 6});

    perm("sac-neq-not-chan-ac-4",
         {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3), Domain::range(0, 3)},
         {
             {Level::SAC, ModelFamily::Neq, true},
             {Level::AC, ModelFamily::C, false},
         },
         {0, 1, 2, 3});

    perm("chan-ac-not-sac-neq-4",
         {dom_of({0, 1}), dom_of({0, 1}), dom_of({0, 2, 3}), dom_of({0, 2, 3})},
         {
             {Level::AC, ModelFamily::C, true},
             {Level::SAC, ModelFamily::Neq, false},
         },
         {0, 1, 2, 3});

    perm("acpc-neq-tight-4",
         {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3)},
         {
             {Level::ACPC, ModelFamily::Neq, true},
             {Level::ACPC, ModelFamily::C, false},
             {Level::AC, ModelFamily::C, false},
         });

    {
        Fixture f;
        f.name = "acpc-six-var-split";
        f.kind = Fixture::Kind::Permutation;
        f.primal = {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3),
                    Domain::range(1, 3), Domain::range(4, 6), Domain::range(4, 6)};
        f.values = iota1(6);
        f.expects = {
            {Level::GAC, ModelFamily::All, false},
            {Level::ACPC, ModelFamily::Neq, true},
            // Quoted as strong-path-consistent in the combined model, but the
            // pair (x5=4, x6=5) has no extension to the dual of value 6 once
            // duals carry the equivalent domains, so (2,1)-consistency fails.
            {Level::ACPC, ModelFamily::NeqCNeq, false, true},
        };
        f.note = "combined-model strong PC refuted by the value-6 dual; rpc-full-not-gac-7 "
                 "carries the surviving incomparability witness";
        fs.push_back(std::move(f));
    }

    perm("parity-gac-not-acpc-3",
         {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3)},
         {
             {Level::GAC, ModelFamily::All, true},
             {Level::ACPC, ModelFamily::NeqCNeq, false},
         },
         {}, true);

    {
        Fixture f;
        f.name = "multi-perm-triangle-caveat";
        f.kind = Fixture::Kind::MultiPerm;
        // Domains at the generalized-arc-consistent fixpoint of the three
        // overlapping scopes; the quoted {1,2,3} tails are not themselves
        // GAC (value 1 of x4 has no support inside its scope).
        f.primal = {dom_of({1, 2}), dom_of({1, 2}), dom_of({1, 2}),
                    dom_of({3}),    dom_of({3}),    dom_of({3})};
        f.scopes = {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}};
        f.expects = {
            {Level::GAC, ModelFamily::All, true},
            {Level::RPC, ModelFamily::Neq, false},
        };
        f.note = "non-triangle-preserving scopes; domains taken at the GAC fixpoint";
        fs.push_back(std::move(f));
    }

    auto inj = [&](std::string name, int n, int m, std::vector<Domain> primal,
                   std::vector<Domain> duals, std::vector<FixtureExpect> expects,
                   std::string note = "") {
        Fixture f;
        f.name = std::move(name);
        f.kind = Fixture::Kind::Injection;
        f.n = n;
        f.m = m;
        f.primal = std::move(primal);
        f.duals = std::move(duals);
        f.expects = std::move(expects);
        f.note = std::move(note);
        fs.push_back(std::move(f));
    };

    inj("inj-c1-ac-not-gac", 3, 4, {dom_of({1, 2}), dom_of({1, 2}), dom_of({1, 2})},
        {Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3), Domain::range(1, 3)},
        {
            {Level::AC, ModelFamily::InjC1, true},
            {Level::GAC, ModelFamily::InjAll, false},
        });

    inj("inj-c2neq-ac-not-gac", 3, 5, {dom_of({1, 2}), dom_of({1, 2}), dom_of({1, 2})},
        {Domain::range(1, 5), Domain::range(1, 5), dom_of({4, 5}), dom_of({4, 5}),
         dom_of({4, 5})},
        {
            {Level::AC, ModelFamily::InjC2Neq, true},
            {Level::GAC, ModelFamily::InjAll, false},
        });

    inj("inj-c2-dummy-singletons", 3, 4, {dom_of({1, 2}), dom_of({1, 2}), dom_of({1, 2})},
        {Domain::range(1, 4), Domain::range(1, 4), dom_of({4}), dom_of({4})},
        {
            {Level::AC, ModelFamily::InjC2, true},
            {Level::AC, ModelFamily::InjC2Neq, false},
        });

    inj("inj-c3-shared-dummy", 4, 5,
        {dom_of({1, 2}), dom_of({1, 2}), dom_of({1, 2}), Domain::range(1, 5)},
        {Domain::range(1, 5), Domain::range(1, 5), dom_of({4, 5}), dom_of({4, 5}),
         dom_of({4, 5})},
        {
            // the source labels this instance with a garbled tag; the direct
            // definitional check classifies it arc-consistent
            {Level::AC, ModelFamily::InjC3, true},
            {Level::GAC, ModelFamily::InjAll, false},
        },
        "garbled label in the source; classified by direct check");

    // Documenting witnesses for the lattice arrows that fail as properties
    // under the definitional semantics.
    perm("bound-singleton-value-3", {dom_of({1, 2}), dom_of({2, 3}), dom_of({2, 3})},
         {
             {Level::AC, ModelFamily::Neq, true},
             {Level::BC, ModelFamily::C, false},
         },
         {}, false,
         "not-equals AC cannot bound channelling BC: value 1 lives only in x1 whose "
         "other bound then needs a second dual-1 value");

    perm("bc-alldiff-not-bc-chan-3", {dom_of({2}), dom_of({1, 3}), Domain::range(1, 3)},
         {
             {Level::BC, ModelFamily::All, true},
             {Level::BC, ModelFamily::C, false},
             {Level::BC, ModelFamily::NeqCNeq, false},
         },
         {}, false,
         "dual bounds create obligations the primal all-different cannot see");

    perm("acpc-dual-neq-relief-3", {dom_of({1}), dom_of({2, 3}), dom_of({2, 3})},
         {
             {Level::ACPC, ModelFamily::NeqCNeq, true},
             {Level::ACPC, ModelFamily::NeqC, false},
         },
         {}, false,
         "dual not-equals edges remove (2,1) obligations, so the combined model can be "
         "strong-path-consistent where channels alone are not");

    return fs;
}

}  // namespace

const std::vector<Fixture>& proof_fixtures() {
    static const std::vector<Fixture> fs = build_fixtures();
    return fs;
}

BinaryNetwork fixture_network(const Fixture& f, ModelFamily model) {
    switch (f.kind) {
        case Fixture::Kind::Permutation: {
            std::vector<SideRelation> side;
            if (f.parity_side)
                side.push_back({0, 2, [](int a, int b) { return (a + b) % 2 == 0; }});
            return make_permutation_network(f.primal, f.values, model, side);
        }
        case Fixture::Kind::Injection:
            return make_injection_network(f.primal, f.duals, model, f.n, f.m);
        case Fixture::Kind::MultiPerm:
            return make_multi_perm_network(f.primal, f.scopes,
                                           ModelSpec{model}.has_primal_alldiff());
    }
    throw std::logic_error("unreachable");
}

std::vector<FixtureResult> replay_fixtures() {
    std::vector<FixtureResult> out;
    for (const Fixture& f : proof_fixtures()) {
        for (const FixtureExpect& e : f.expects) {
            FixtureResult r;
            r.fixture = f.name;
            r.level = e.level;
            r.model = e.model;
            r.expected = e.expected;
            r.reclassified = e.reclassified;
            r.actual = check_level(fixture_network(f, e.model), e.level);
            out.push_back(r);
        }
    }
    return out;
}

std::string fixtures_to_text(const std::vector<Fixture>& fs) {
    std::ostringstream os;
    for (const Fixture& f : fs) {
        os << "begin " << f.name << '\n';
        switch (f.kind) {
            case Fixture::Kind::Permutation: os << "kind permutation\n"; break;
            case Fixture::Kind::Injection:
                os << "kind injection " << f.n << ' ' << f.m << '\n';
                break;
            case Fixture::Kind::MultiPerm: os << "kind multiperm\n"; break;
        }
        if (!f.values.empty()) {
            os << "values";
            for (int v : f.values) os << ' ' << v;
            os << '\n';
        }
        for (std::size_t i = 0; i < f.primal.size(); ++i) {
            os << "dom x" << i + 1;
            for (int v : f.primal[i].values()) os << ' ' << v;
            os << '\n';
        }
        for (std::size_t j = 0; j < f.duals.size(); ++j) {
            os << "dom d" << j + 1;
            for (int v : f.duals[j].values()) os << ' ' << v;
            os << '\n';
        }
        for (const auto& s : f.scopes) {
            os << "scope";
            for (int v : s) os << ' ' << v + 1;
            os << '\n';
        }
        if (f.parity_side) os << "side even x1 x3\n";
        for (const FixtureExpect& e : f.expects) {
            os << "expect " << to_string(e.level) << ' ' << ModelSpec{e.model}.name() << ' '
               << (e.expected ? "true" : "false");
            if (e.reclassified) os << " reclassified";
            os << '\n';
        }
        if (!f.note.empty()) os << "note " << f.note << '\n';
        os << "end\n";
    }
    return os.str();
}

std::vector<Fixture> parse_fixtures(const std::string& text) {
    std::vector<Fixture> out;
    std::istringstream is(text);
    std::string line;
    Fixture cur;
    bool in_block = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "begin") {
            cur = Fixture{};
            ls >> cur.name;
            in_block = true;
        } else if (word == "end") {
            if (cur.kind == Fixture::Kind::Permutation && cur.values.empty()) {
                for (int i = 1; i <= static_cast<int>(cur.primal.size()); ++i)
                    cur.values.push_back(i);
            }
            out.push_back(cur);
            in_block = false;
        } else if (!in_block) {
            throw std::invalid_argument("fixture text: stray line " + line);
        } else if (word == "kind") {
            std::string k;
            ls >> k;
            if (k == "permutation") {
                cur.kind = Fixture::Kind::Permutation;
            } else if (k == "injection") {
                cur.kind = Fixture::Kind::Injection;
                ls >> cur.n >> cur.m;
            } else if (k == "multiperm") {
                cur.kind = Fixture::Kind::MultiPerm;
            } else {
                throw std::invalid_argument("fixture text: bad kind " + k);
            }
        } else if (word == "values") {
            int v;
            while (ls >> v) cur.values.push_back(v);
        } else if (word == "dom") {
            std::string tok;
            ls >> tok;
            Domain d;
            int v;
            while (ls >> v) d.insert(v);
            std::size_t idx = std::stoul(tok.substr(1));
            auto& block = tok[0] == 'x' ? cur.primal : cur.duals;
            if (block.size() < idx) block.resize(idx);
            block[idx - 1] = d;
        } else if (word == "scope") {
            std::vector<int> s;
            int v;
            while (ls >> v) s.push_back(v - 1);
            cur.scopes.push_back(std::move(s));
        } else if (word == "side") {
            cur.parity_side = true;
        } else if (word == "expect") {
            std::string lvl, model, val, flag;
            ls >> lvl >> model >> val;
            FixtureExpect e;
            auto l = parse_level(lvl);
            auto msp = ModelSpec::parse(model);
            if (!l || !msp) throw std::invalid_argument("fixture text: bad expect " + line);
            e.level = *l;
            e.model = msp->family;
            e.expected = val == "true";
            if (ls >> flag && flag == "reclassified") e.reclassified = true;
            cur.expects.push_back(e);
        } else if (word == "note") {
            std::string rest;
            std::getline(ls, rest);
            cur.note = rest.empty() ? "" : rest.substr(1);
        } else {
            throw std::invalid_argument("fixture text: unknown word " + word);
        }
    }
    return out;
}

}  // namespace permuta
