#include "permuta/core.hpp"

#include <algorithm>
#include <sstream>

namespace permuta {

std::string to_string(const VarRef& v) {
    return (v.block == Block::Primal ? "x" : "d") + std::to_string(v.index);
}

Constraint Constraint::not_equals(VarRef a, VarRef b) {
    Constraint c;
    c.kind = CKind::NotEquals;
    c.a = a;
    c.b = b;
    return c;
}

Constraint Constraint::channel(VarRef primal, VarRef dual, int pval, int dval) {
    Constraint c;
    c.kind = CKind::Channel;
    c.a = primal;
    c.b = dual;
    c.va = pval;
    c.vb = dval;
    return c;
}

Constraint Constraint::channel_implies(VarRef primal, VarRef dual, int pval, int dval) {
    Constraint c;
    c.kind = CKind::ChannelImplies;
    c.a = primal;
    c.b = dual;
    c.va = pval;
    c.vb = dval;
    return c;
}

Constraint Constraint::all_different(std::vector<VarRef> scope) {
    Constraint c;
    c.kind = CKind::AllDifferent;
    c.scope = std::move(scope);
    return c;
}

Constraint Constraint::offset(VarRef a, VarRef b, int k) {
    Constraint c;
    c.kind = CKind::Offset;
    c.a = a;
    c.b = b;
    c.k = k;
    return c;
}

Constraint Constraint::less(VarRef a, VarRef b) {
    Constraint c;
    c.kind = CKind::Less;
    c.a = a;
    c.b = b;
    return c;
}

Constraint Constraint::dual_sep_link(VarRef a, VarRef b, int va, int vb) {
    Constraint c;
    c.kind = CKind::DualSepLink;
    c.a = a;
    c.b = b;
    c.va = va;
    c.vb = vb;
    return c;
}

Constraint Constraint::sum(std::vector<VarRef> scope, std::vector<int> coeffs, int total) {
    Constraint c;
    c.kind = CKind::Sum;
    c.scope = std::move(scope);
    c.coeffs = std::move(coeffs);
    c.total = total;
    return c;
}

Constraint Constraint::binary_table(VarRef a, VarRef b, std::vector<std::pair<int, int>> pairs) {
    Constraint c;
    c.kind = CKind::BinaryTable;
    c.a = a;
    c.b = b;
    c.pairs = std::move(pairs);
    return c;
}

Constraint Constraint::unary_forbid(VarRef a, std::vector<int> values) {
    Constraint c;
    c.kind = CKind::UnaryForbid;
    c.a = a;
    c.values = std::move(values);
    return c;
}

// --- ModelSpec ---------------------------------------------------------------

bool ModelSpec::is_injection() const {
    switch (family) {
        case ModelFamily::InjNeq:
        case ModelFamily::InjAll:
        case ModelFamily::InjC1:
        case ModelFamily::InjC2:
        case ModelFamily::InjC3:
        case ModelFamily::InjC2Neq:
        case ModelFamily::InjAllC2:
            return true;
        default:
            return false;
    }
}

bool ModelSpec::has_channels() const {
    switch (family) {
        case ModelFamily::Neq:
        case ModelFamily::All:
        case ModelFamily::InjNeq:
        case ModelFamily::InjAll:
            return false;
        default:
            return true;
    }
}

bool ModelSpec::has_primal_neq() const {
    switch (family) {
        case ModelFamily::Neq:
        case ModelFamily::NeqC:
        case ModelFamily::NeqCNeq:
        case ModelFamily::NeqCAll:
        case ModelFamily::InjNeq:
            return true;
        default:
            return false;
    }
}

bool ModelSpec::has_dual_neq() const {
    switch (family) {
        case ModelFamily::CNeq:
        case ModelFamily::NeqCNeq:
        case ModelFamily::AllCNeq:
        case ModelFamily::InjC2Neq:
            return true;
        default:
            return false;
    }
}

bool ModelSpec::has_primal_alldiff() const {
    switch (family) {
        case ModelFamily::All:
        case ModelFamily::AllC:
        case ModelFamily::AllCNeq:
        case ModelFamily::AllCAll:
        case ModelFamily::InjAll:
        case ModelFamily::InjAllC2:
            return true;
        default:
            return false;
    }
}

bool ModelSpec::has_dual_alldiff() const {
    switch (family) {
        case ModelFamily::CAll:
        case ModelFamily::NeqCAll:
        case ModelFamily::AllCAll:
            return true;
        default:
            return false;
    }
}

std::string ModelSpec::name() const {
    switch (family) {
        case ModelFamily::Neq: return "neq";
        case ModelFamily::C: return "c";
        case ModelFamily::All: return "all-diff";
        case ModelFamily::NeqC: return "neq-c";
        case ModelFamily::CNeq: return "c-neq";
        case ModelFamily::AllC: return "alldiff-c";
        case ModelFamily::CAll: return "c-alldiff";
        case ModelFamily::NeqCNeq: return "neq-c-neq";
        case ModelFamily::AllCNeq: return "alldiff-c-neq";
        case ModelFamily::NeqCAll: return "neq-c-alldiff";
        case ModelFamily::AllCAll: return "alldiff-c-alldiff";
        case ModelFamily::InjNeq: return "injection-neq";
        case ModelFamily::InjAll: return "injection-alldiff";
        case ModelFamily::InjC1: return "injection-c1";
        case ModelFamily::InjC2: return "injection-c2";
        case ModelFamily::InjC3: return "injection-c3";
        case ModelFamily::InjC2Neq: return "injection-c2neq";
        case ModelFamily::InjAllC2: return "injection-alldiff-c2";
    }
    return "?";
}

std::optional<ModelSpec> ModelSpec::parse(const std::string& tag) {
    static const std::pair<const char*, ModelFamily> table[] = {
        {"neq", ModelFamily::Neq},
        {"c", ModelFamily::C},
        {"all-diff", ModelFamily::All},
        {"alldiff", ModelFamily::All},
        {"neq-c", ModelFamily::NeqC},
        {"c-neq", ModelFamily::CNeq},
        {"alldiff-c", ModelFamily::AllC},
        {"c-alldiff", ModelFamily::CAll},
        {"neq-c-neq", ModelFamily::NeqCNeq},
        {"alldiff-c-neq", ModelFamily::AllCNeq},
        {"neq-c-alldiff", ModelFamily::NeqCAll},
        {"alldiff-c-alldiff", ModelFamily::AllCAll},
        {"injection-neq", ModelFamily::InjNeq},
        {"injection-alldiff", ModelFamily::InjAll},
        {"injection-c1", ModelFamily::InjC1},
        {"injection-c2", ModelFamily::InjC2},
        {"injection-c3", ModelFamily::InjC3},
        {"injection-c2neq", ModelFamily::InjC2Neq},
        {"injection-alldiff-c2", ModelFamily::InjAllC2},
    };
    for (const auto& [name, fam] : table)
        if (tag == name) return ModelSpec{fam};
    return std::nullopt;
}

// --- builders ---------------------------------------------------------------

namespace {

void post_pairwise_neq(Problem& p, Block block, int count) {
    for (int i = 1; i <= count; ++i)
        for (int j = i + 1; j <= count; ++j)
            p.constraints.push_back(
                Constraint::not_equals({block, i}, {block, j}));
}

void post_channels(Problem& p, int n, int m, CKind kind) {
    // Channel between x_i and d_j: x_i = j <=> d_j = i.  Dummy values are
    // never linked: the loop ranges over primal indices only.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (kind == CKind::Channel)
                p.constraints.push_back(Constraint::channel(
                    {Block::Primal, i}, {Block::Dual, j}, j, i));
            else
                p.constraints.push_back(Constraint::channel_implies(
                    {Block::Primal, i}, {Block::Dual, j}, j, i));
        }
    }
}

}  // namespace

Problem build_permutation_model(int n, ModelSpec spec) {
    if (n < 1) throw std::invalid_argument("permutation model needs n >= 1");
    if (spec.is_injection())
        throw std::invalid_argument("injection tag passed to build_permutation_model");
    if (n > Domain::kMaxValue)
        throw std::invalid_argument("value universe exceeds Domain capacity");

    Problem p;
    p.model = spec;
    p.n = n;
    p.m = n;
    p.primal.assign(static_cast<std::size_t>(n), Domain::range(1, n));
    p.primal_role.assign(static_cast<std::size_t>(n), VarRole::DecisionPrimal);
    for (int i = 0; i < n; ++i) p.perm_scope.push_back(i);

    bool dual = spec.has_channels() || spec.has_dual_neq() || spec.has_dual_alldiff();
    if (dual) {
        p.dual.assign(static_cast<std::size_t>(n), Domain::range(1, n));
        p.dual_role.assign(static_cast<std::size_t>(n), VarRole::DecisionDual);
        for (int j = 1; j <= n; ++j) p.dual_value.push_back(j);
    }

    if (spec.has_primal_neq()) post_pairwise_neq(p, Block::Primal, n);
    if (spec.has_primal_alldiff()) {
        std::vector<VarRef> scope;
        for (int i = 1; i <= n; ++i) scope.push_back({Block::Primal, i});
        p.constraints.push_back(Constraint::all_different(std::move(scope)));
    }
    if (spec.has_channels()) post_channels(p, n, n, CKind::Channel);
    if (spec.has_dual_neq()) post_pairwise_neq(p, Block::Dual, n);
    if (spec.has_dual_alldiff()) {
        std::vector<VarRef> scope;
        for (int j = 1; j <= n; ++j) scope.push_back({Block::Dual, j});
        p.constraints.push_back(Constraint::all_different(std::move(scope)));
    }
    return p;
}

Problem build_injection_model(int n, int m, ModelSpec spec) {
    if (!spec.is_injection())
        throw std::invalid_argument("permutation tag passed to build_injection_model");
    if (n < 1) throw std::invalid_argument("injection model needs n >= 1");
    if (m < n) throw std::invalid_argument("injection with m < n is trivially unsatisfiable");
    if (m > Domain::kMaxValue)
        throw std::invalid_argument("value universe exceeds Domain capacity");

    Problem p;
    p.model = spec;
    p.n = n;
    p.m = m;
    p.primal.assign(static_cast<std::size_t>(n), Domain::range(1, m));
    p.primal_role.assign(static_cast<std::size_t>(n), VarRole::DecisionPrimal);
    for (int i = 0; i < n; ++i) p.perm_scope.push_back(i);

    auto make_dual = [&](const Domain& dom) {
        p.dual.assign(static_cast<std::size_t>(m), dom);
        p.dual_role.assign(static_cast<std::size_t>(m), VarRole::DecisionDual);
        for (int j = 1; j <= m; ++j) p.dual_value.push_back(j);
    };

    switch (spec.family) {
        case ModelFamily::InjNeq:
            post_pairwise_neq(p, Block::Primal, n);
            break;
        case ModelFamily::InjAll: {
            std::vector<VarRef> scope;
            for (int i = 1; i <= n; ++i) scope.push_back({Block::Primal, i});
            p.constraints.push_back(Constraint::all_different(std::move(scope)));
            break;
        }
        case ModelFamily::InjC1:
            // duals range over primal indices only; links are one-directional
            make_dual(Domain::range(1, n));
            post_channels(p, n, m, CKind::ChannelImplies);
            break;
        case ModelFamily::InjC2:
        case ModelFamily::InjC2Neq:
        case ModelFamily::InjAllC2:
            // duals carry m - n distinct dummy values n+1..m
            make_dual(Domain::range(1, m));
            post_channels(p, n, m, CKind::Channel);
            if (spec.family == ModelFamily::InjC2Neq) post_pairwise_neq(p, Block::Dual, m);
            if (spec.family == ModelFamily::InjAllC2) {
                std::vector<VarRef> scope;
                for (int i = 1; i <= n; ++i) scope.push_back({Block::Primal, i});
                p.constraints.push_back(Constraint::all_different(std::move(scope)));
            }
            break;
        case ModelFamily::InjC3:
            // one shared dummy value n+1; channels never mention it
            make_dual(Domain::range(1, n + 1));
            post_channels(p, n, m, CKind::Channel);
            break;
        default:
            throw std::invalid_argument("unhandled injection tag");
    }
    return p;
}

std::vector<Domain> dual_equivalent_domains(const std::vector<Domain>& primal_domains,
                                            const std::vector<int>& values) {
    std::vector<Domain> out(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        Domain d;
        for (std::size_t i = 0; i < primal_domains.size(); ++i)
            if (primal_domains[i].contains(values[k])) d.insert(static_cast<int>(i) + 1);
        out[k] = d;
    }
    return out;
}

std::vector<Domain> dual_equivalent_domains(const std::vector<Domain>& primal_domains) {
    std::vector<int> values;
    for (int j = 1; j <= static_cast<int>(primal_domains.size()); ++j) values.push_back(j);
    return dual_equivalent_domains(primal_domains, values);
}

// --- serialization ----------------------------------------------------------

namespace {

void write_domain(std::ostringstream& os, const char* prefix, int index, const Domain& d) {
    os << "dom " << prefix << index;
    for (int v : d.values()) os << ' ' << v;
    os << '\n';
}

std::string ref_token(const VarRef& v) { return to_string(v); }

VarRef parse_ref(const std::string& tok) {
    if (tok.empty() || (tok[0] != 'x' && tok[0] != 'd'))
        throw std::invalid_argument("bad variable token: " + tok);
    VarRef r;
    r.block = tok[0] == 'x' ? Block::Primal : Block::Dual;
    r.index = std::stoi(tok.substr(1));
    return r;
}

}  // namespace

std::string serialize_problem(const Problem& p) {
    std::ostringstream os;
    os << "vars " << p.n << ' ' << p.m << '\n';
    for (int i = 0; i < p.primal_count(); ++i) write_domain(os, "x", i + 1, p.primal[static_cast<std::size_t>(i)]);
    for (int j = 0; j < p.dual_count(); ++j) write_domain(os, "d", j + 1, p.dual[static_cast<std::size_t>(j)]);
    for (const Constraint& c : p.constraints) {
        os << "ctr ";
        switch (c.kind) {
            case CKind::NotEquals:
                os << "neq " << ref_token(c.a) << ' ' << ref_token(c.b);
                break;
            case CKind::Channel:
                os << "channel " << ref_token(c.a) << ' ' << ref_token(c.b) << ' ' << c.va
                   << ' ' << c.vb;
                break;
            case CKind::ChannelImplies:
                os << "channelimp " << ref_token(c.a) << ' ' << ref_token(c.b) << ' ' << c.va
                   << ' ' << c.vb;
                break;
            case CKind::AllDifferent: {
                os << "alldiff";
                for (const VarRef& v : c.scope) os << ' ' << ref_token(v);
                break;
            }
            case CKind::Offset:
                os << "offset " << ref_token(c.a) << ' ' << ref_token(c.b) << ' ' << c.k;
                break;
            case CKind::Less:
                os << "less " << ref_token(c.a) << ' ' << ref_token(c.b);
                break;
            case CKind::DualSepLink:
                os << "seplink " << ref_token(c.a) << ' ' << ref_token(c.b) << ' ' << c.va
                   << ' ' << c.vb;
                break;
            case CKind::Sum: {
                os << "sum " << c.total;
                for (std::size_t i = 0; i < c.scope.size(); ++i)
                    os << ' ' << (c.coeffs[i] >= 0 ? '+' : '-') << ref_token(c.scope[i]);
                break;
            }
            case CKind::BinaryTable: {
                os << "table " << ref_token(c.a) << ' ' << ref_token(c.b) << " :";
                for (const auto& [u, w] : c.pairs) os << ' ' << u << ',' << w;
                break;
            }
            case CKind::UnaryForbid: {
                os << "forbid " << ref_token(c.a);
                for (int v : c.values) os << ' ' << v;
                break;
            }
        }
        os << '\n';
    }
    return os.str();
}

Problem parse_problem(const std::string& text) {
    Problem p;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "vars") {
            ls >> p.n >> p.m;
        } else if (word == "dom") {
            std::string tok;
            ls >> tok;
            VarRef r = parse_ref(tok);
            Domain d;
            int v;
            while (ls >> v) d.insert(v);
            auto& block = r.block == Block::Primal ? p.primal : p.dual;
            auto& roles = r.block == Block::Primal ? p.primal_role : p.dual_role;
            if (static_cast<int>(block.size()) < r.index) {
                block.resize(static_cast<std::size_t>(r.index));
                roles.resize(static_cast<std::size_t>(r.index),
                             r.block == Block::Primal ? VarRole::DecisionPrimal
                                                      : VarRole::DecisionDual);
            }
            block[static_cast<std::size_t>(r.index - 1)] = d;
        } else if (word == "ctr") {
            std::string kind;
            ls >> kind;
            if (kind == "neq") {
                std::string a, b;
                ls >> a >> b;
                p.constraints.push_back(Constraint::not_equals(parse_ref(a), parse_ref(b)));
            } else if (kind == "channel" || kind == "channelimp" || kind == "seplink") {
                std::string a, b;
                int va, vb;
                ls >> a >> b >> va >> vb;
                if (kind == "channel")
                    p.constraints.push_back(
                        Constraint::channel(parse_ref(a), parse_ref(b), va, vb));
                else if (kind == "channelimp")
                    p.constraints.push_back(
                        Constraint::channel_implies(parse_ref(a), parse_ref(b), va, vb));
                else
                    p.constraints.push_back(
                        Constraint::dual_sep_link(parse_ref(a), parse_ref(b), va, vb));
            } else if (kind == "alldiff") {
                std::vector<VarRef> scope;
                std::string tok;
                while (ls >> tok) scope.push_back(parse_ref(tok));
                p.constraints.push_back(Constraint::all_different(std::move(scope)));
            } else if (kind == "offset") {
                std::string a, b;
                int k;
                ls >> a >> b >> k;
                p.constraints.push_back(Constraint::offset(parse_ref(a), parse_ref(b), k));
            } else if (kind == "less") {
                std::string a, b;
                ls >> a >> b;
                p.constraints.push_back(Constraint::less(parse_ref(a), parse_ref(b)));
            } else if (kind == "sum") {
                int total;
                ls >> total;
                std::vector<VarRef> scope;
                std::vector<int> coeffs;
                std::string tok;
                while (ls >> tok) {
                    int sign = tok[0] == '-' ? -1 : 1;
                    scope.push_back(parse_ref(tok.substr(1)));
                    coeffs.push_back(sign);
                }
                p.constraints.push_back(
                    Constraint::sum(std::move(scope), std::move(coeffs), total));
            } else if (kind == "table") {
                std::string a, b, colon;
                ls >> a >> b >> colon;
                std::vector<std::pair<int, int>> pairs;
                std::string tok;
                while (ls >> tok) {
                    auto comma = tok.find(',');
                    pairs.emplace_back(std::stoi(tok.substr(0, comma)),
                                       std::stoi(tok.substr(comma + 1)));
                }
                p.constraints.push_back(
                    Constraint::binary_table(parse_ref(a), parse_ref(b), std::move(pairs)));
            } else if (kind == "forbid") {
                std::string a;
                ls >> a;
                std::vector<int> vals;
                int v;
                while (ls >> v) vals.push_back(v);
                p.constraints.push_back(Constraint::unary_forbid(parse_ref(a), std::move(vals)));
            } else {
                throw std::invalid_argument("unknown constraint kind: " + kind);
            }
        } else {
            throw std::invalid_argument("unknown line: " + line);
        }
    }
    for (int i = 0; i < p.primal_count(); ++i) p.perm_scope.push_back(i);
    for (int j = 1; j <= p.dual_count(); ++j) p.dual_value.push_back(j);
    return p;
}

}  // namespace permuta
