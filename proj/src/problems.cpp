#include "permuta/problems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permuta {

namespace {

void post_scope_model(Problem& p, ModelSpec spec, const std::vector<int>& scope_vars,
                      const std::vector<int>& scope_values) {
    // posts the permutation-model constraints of one scope; for channelled
    // tags a dual sub-block is appended (one dual per scope value)
    if (spec.has_primal_neq())
        for (std::size_t i = 0; i < scope_vars.size(); ++i)
            for (std::size_t j = i + 1; j < scope_vars.size(); ++j)
                p.constraints.push_back(Constraint::not_equals(
                    p.unflat(scope_vars[i]), p.unflat(scope_vars[j])));
    if (spec.has_primal_alldiff()) {
        std::vector<VarRef> refs;
        for (int v : scope_vars) refs.push_back(p.unflat(v));
        p.constraints.push_back(Constraint::all_different(std::move(refs)));
    }
    if (!spec.has_channels() && !spec.has_dual_neq() && !spec.has_dual_alldiff()) return;

    int base = p.dual_count();
    for (std::size_t k = 0; k < scope_values.size(); ++k) {
        p.dual.push_back(Domain::range(1, static_cast<int>(scope_vars.size())));
        p.dual_role.push_back(VarRole::DecisionDual);
        p.dual_value.push_back(scope_values[k]);
    }
    if (spec.has_channels()) {
        for (std::size_t i = 0; i < scope_vars.size(); ++i) {
            for (std::size_t k = 0; k < scope_values.size(); ++k) {
                VarRef dual{Block::Dual, base + static_cast<int>(k) + 1};
                p.constraints.push_back(Constraint::channel(
                    p.unflat(scope_vars[i]), dual, scope_values[k],
                    static_cast<int>(i) + 1));
            }
        }
    }
    if (spec.has_dual_neq())
        for (std::size_t i = 0; i < scope_values.size(); ++i)
            for (std::size_t j = i + 1; j < scope_values.size(); ++j)
                p.constraints.push_back(Constraint::not_equals(
                    {Block::Dual, base + static_cast<int>(i) + 1},
                    {Block::Dual, base + static_cast<int>(j) + 1}));
    if (spec.has_dual_alldiff()) {
        std::vector<VarRef> refs;
        for (std::size_t k = 0; k < scope_values.size(); ++k)
            refs.push_back({Block::Dual, base + static_cast<int>(k) + 1});
        p.constraints.push_back(Constraint::all_different(std::move(refs)));
    }
}

void post_injection_model(Problem& p, ModelSpec spec, const std::vector<int>& scope_vars,
                          int m) {
    // injection of the scope variables into values 1..m
    const int n = static_cast<int>(scope_vars.size());
    auto add_dual_block = [&](const Domain& dom) {
        for (int j = 1; j <= m; ++j) {
            p.dual.push_back(dom);
            p.dual_role.push_back(VarRole::DecisionDual);
            p.dual_value.push_back(j);
        }
    };
    auto channels = [&](CKind kind) {
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= m; ++j) {
                VarRef dual{Block::Dual, j};
                if (kind == CKind::Channel)
                    p.constraints.push_back(
                        Constraint::channel(p.unflat(scope_vars[static_cast<std::size_t>(i)]),
                                            dual, j, i + 1));
                else
                    p.constraints.push_back(Constraint::channel_implies(
                        p.unflat(scope_vars[static_cast<std::size_t>(i)]), dual, j, i + 1));
            }
    };
    switch (spec.family) {
        case ModelFamily::InjNeq:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    p.constraints.push_back(Constraint::not_equals(
                        p.unflat(scope_vars[static_cast<std::size_t>(i)]),
                        p.unflat(scope_vars[static_cast<std::size_t>(j)])));
            break;
        case ModelFamily::InjAll: {
            std::vector<VarRef> refs;
            for (int v : scope_vars) refs.push_back(p.unflat(v));
            p.constraints.push_back(Constraint::all_different(std::move(refs)));
            break;
        }
        case ModelFamily::InjC1:
            add_dual_block(Domain::range(1, n));
            channels(CKind::ChannelImplies);
            break;
        case ModelFamily::InjC2:
        case ModelFamily::InjC2Neq:
        case ModelFamily::InjAllC2:
            add_dual_block(Domain::range(1, m));
            channels(CKind::Channel);
            if (spec.family == ModelFamily::InjC2Neq)
                for (int i = 1; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j)
                        p.constraints.push_back(
                            Constraint::not_equals({Block::Dual, i}, {Block::Dual, j}));
            if (spec.family == ModelFamily::InjAllC2) {
                std::vector<VarRef> refs;
                for (int v : scope_vars) refs.push_back(p.unflat(v));
                p.constraints.push_back(Constraint::all_different(std::move(refs)));
            }
            break;
        case ModelFamily::InjC3:
            add_dual_block(Domain::range(1, n + 1));
            channels(CKind::Channel);
            break;
        default:
            throw std::invalid_argument("not an injection tag");
    }
}

int add_primal(Problem& p, const Domain& dom, VarRole role) {
    p.primal.push_back(dom);
    p.primal_role.push_back(role);
    return static_cast<int>(p.primal.size()) - 1;
}

}  // namespace

int langford_var(int m, int digit, int occurrence) { return (occurrence - 1) * m + digit; }

std::pair<int, int> langford_digit_occ(int m, int var_index) {
    int digit = (var_index - 1) % m + 1;
    int occ = (var_index - 1) / m + 1;
    return {digit, occ};
}

Problem langford(int n, int m, ModelSpec spec, const BuildOptions& opts) {
    if (n != 2 && n != 3) throw std::invalid_argument("langford supports 2 or 3 occurrences");
    if (m < 2) throw std::invalid_argument("langford needs at least 2 digits");
    if (spec.is_injection()) throw std::invalid_argument("langford is a permutation problem");
    const int N = n * m;
    if (N > Domain::kMaxValue) throw std::invalid_argument("langford instance too large");

    Problem p;
    p.model = spec;
    p.n = N;
    p.m = N;
    for (int i = 0; i < N; ++i) {
        add_primal(p, Domain::range(1, N), VarRole::DecisionPrimal);
        p.perm_scope.push_back(i);
    }

    // separation between consecutive occurrences of a digit
    for (int d = 1; d <= m; ++d)
        for (int k = 1; k < n; ++k)
            p.constraints.push_back(Constraint::offset(
                {Block::Primal, langford_var(m, d, k)},
                {Block::Primal, langford_var(m, d, k + 1)}, d + 1));

    // the requested permutation model over positions
    std::vector<int> scope_vars(static_cast<std::size_t>(N));
    std::vector<int> scope_values(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        scope_vars[static_cast<std::size_t>(i)] = i;
        scope_values[static_cast<std::size_t>(i)] = i + 1;
    }
    post_scope_model(p, spec, scope_vars, scope_values);

    // dual separation: position j holds occurrence k of digit d iff position
    // j + d + 1 holds occurrence k+1
    bool has_dual = p.dual_count() > 0;
    if (has_dual) {
        for (int d = 1; d <= m; ++d) {
            int gap = d + 1;
            for (int k = 1; k < n; ++k) {
                int lo = langford_var(m, d, k), hi = langford_var(m, d, k + 1);
                for (int j = 1; j <= N; ++j) {
                    if (j + gap <= N) {
                        p.constraints.push_back(Constraint::dual_sep_link(
                            {Block::Dual, j}, {Block::Dual, j + gap}, lo, hi));
                    } else {
                        // no room for the next occurrence
                        p.constraints.push_back(
                            Constraint::unary_forbid({Block::Dual, j}, {lo}));
                    }
                    if (j - gap < 1)
                        p.constraints.push_back(
                            Constraint::unary_forbid({Block::Dual, j}, {hi}));
                }
            }
        }
    }

    if (opts.symmetry_breaking) {
        // confine the reversal-symmetric anchor occurrence of the largest
        // digit to the first half; break the central tie through the next
        // digit down
        if (n == 3) {
            int anchor = langford_var(m, m, 2);
            int half = (N + 1) / 2;  // central position allowed when N is odd
            std::vector<int> banned;
            for (int pos = half + 1; pos <= N; ++pos) banned.push_back(pos);
            if (!banned.empty())
                p.constraints.push_back(
                    Constraint::unary_forbid({Block::Primal, anchor}, banned));
            if (N % 2 == 1) {
                int tie = langford_var(m, m - 1, 2);
                std::vector<std::pair<int, int>> allowed;
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b)
                        if (a != half || b < half) allowed.emplace_back(a, b);
                p.constraints.push_back(Constraint::binary_table(
                    {Block::Primal, anchor}, {Block::Primal, tie}, std::move(allowed)));
            }
        } else {
            int anchor = langford_var(m, m, 1);
            int half = m / 2;
            std::vector<int> banned;
            for (int pos = half + 1; pos <= N; ++pos) banned.push_back(pos);
            p.constraints.push_back(Constraint::unary_forbid({Block::Primal, anchor}, banned));
            if (m % 2 == 0) {
                int tie = langford_var(m, m - 1, 1);
                std::vector<std::pair<int, int>> allowed;
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b)
                        if (a != half || b <= half) allowed.emplace_back(a, b);
                p.constraints.push_back(Constraint::binary_table(
                    {Block::Primal, anchor}, {Block::Primal, tie}, std::move(allowed)));
            }
        }
    }
    return p;
}

Problem golomb(int n, int m, ModelSpec spec, const BuildOptions&) {
    if (n < 3) throw std::invalid_argument("golomb needs at least 3 marks");
    const int dcount = n * (n - 1) / 2;
    if (m < dcount) throw std::invalid_argument("golomb length below the distance count");
    if (m > Domain::kMaxValue) throw std::invalid_argument("golomb instance too large");

    Problem p;
    p.model = spec;
    p.m = m;

    // marks are auxiliary: t1 = 0, tn = m, strictly increasing
    std::vector<int> marks;
    for (int i = 1; i <= n; ++i) {
        Domain d = i == 1 ? Domain::of({0}) : i == n ? Domain::of({m}) : Domain::range(1, m - 1);
        marks.push_back(add_primal(p, d, VarRole::Aux));
    }
    for (int i = 0; i + 1 < n; ++i)
        p.constraints.push_back(
            Constraint::less(p.unflat(marks[static_cast<std::size_t>(i)]),
                             p.unflat(marks[static_cast<std::size_t>(i + 1)])));

    // distance variables in (i, j) lexicographic order
    std::vector<int> dists;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int dv = add_primal(p, Domain::range(1, m), VarRole::DecisionPrimal);
            dists.push_back(dv);
            // t_i + D = t_j
            p.constraints.push_back(Constraint::sum(
                {p.unflat(marks[static_cast<std::size_t>(i)]), p.unflat(dv),
                 p.unflat(marks[static_cast<std::size_t>(j)])},
                {1, 1, -1}, 0));
        }

    std::vector<int> scope = dists;
    if (!spec.is_injection()) {
        // pad with free variables so the distances plus padding form a
        // permutation of 1..m; the pads are ordered so each ruler appears once
        std::vector<int> pads;
        for (int e = 0; e < m - dcount; ++e)
            pads.push_back(add_primal(p, Domain::range(1, m), VarRole::DecisionPrimal));
        for (std::size_t e = 0; e + 1 < pads.size(); ++e)
            p.constraints.push_back(
                Constraint::less(p.unflat(pads[e]), p.unflat(pads[e + 1])));
        scope.insert(scope.end(), pads.begin(), pads.end());
        std::vector<int> values;
        for (int v = 1; v <= m; ++v) values.push_back(v);
        post_scope_model(p, spec, scope, values);
    } else {
        post_injection_model(p, spec, scope, m);
    }
    p.n = p.primal_count();
    for (int v : scope) p.perm_scope.push_back(v);
    return p;
}

Problem quasigroup(int identity, int order, ModelSpec spec, const BuildOptions&) {
    if (identity != 3 && identity != 4) throw std::invalid_argument("quasigroup identity 3 or 4");
    const int m = order;
    if (m < 2 || m > 9) throw std::invalid_argument("quasigroup order out of range");
    if (spec.is_injection()) throw std::invalid_argument("quasigroup is a permutation problem");

    Problem p;
    p.model = spec;
    p.m = m;

    auto cell = [&](int r, int c) { return (r - 1) * m + (c - 1); };  // 0-based id
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c)
            add_primal(p, r == c ? Domain::of({r}) : Domain::range(1, m),
                       VarRole::DecisionPrimal);

    std::vector<int> values;
    for (int v = 1; v <= m; ++v) values.push_back(v);
    for (int r = 1; r <= m; ++r) {
        std::vector<int> row;
        for (int c = 1; c <= m; ++c) row.push_back(cell(r, c));
        post_scope_model(p, spec, row, values);
    }
    for (int c = 1; c <= m; ++c) {
        std::vector<int> col;
        for (int r = 1; r <= m; ++r) col.push_back(cell(r, c));
        post_scope_model(p, spec, col, values);
    }

    // identity (a*b)*(b*a) = a  (identity 4: (b*a)*(a*b) = a), grounded via a
    // hidden pair variable per (a, b): code (u-1)*m + v for q_ab = u, q_ba = v
    auto code = [&](int u, int v) { return (u - 1) * m + v; };
    for (int a = 1; a <= m; ++a) {
        for (int b = 1; b <= m; ++b) {
            if (a == b) continue;
            int h = add_primal(p, Domain::range(1, m * m), VarRole::Aux);
            std::vector<std::pair<int, int>> proj_u, proj_v;
            for (int u = 1; u <= m; ++u)
                for (int v = 1; v <= m; ++v) {
                    proj_u.emplace_back(code(u, v), u);
                    proj_v.emplace_back(code(u, v), v);
                }
            p.constraints.push_back(Constraint::binary_table(
                p.unflat(h), p.unflat(cell(a, b)), std::move(proj_u)));
            p.constraints.push_back(Constraint::binary_table(
                p.unflat(h), p.unflat(cell(b, a)), std::move(proj_v)));
            // h = code(u, v) forces the target cell to a
            for (int u = 1; u <= m; ++u)
                for (int v = 1; v <= m; ++v) {
                    int target = identity == 3 ? cell(u, v) : cell(v, u);
                    std::vector<std::pair<int, int>> allowed;
                    for (int hh = 1; hh <= m * m; ++hh)
                        for (int w = 1; w <= m; ++w)
                            if (hh != code(u, v) || w == a) allowed.emplace_back(hh, w);
                    p.constraints.push_back(Constraint::binary_table(
                        p.unflat(h), p.unflat(target), std::move(allowed)));
                }
        }
    }
    p.n = p.primal_count();
    return p;
}

Problem sport(int teams, ModelSpec spec, const BuildOptions&) {
    const int n = teams;
    if (n < 3 || n > 12) throw std::invalid_argument("sport team count out of range");
    const bool even = n % 2 == 0;
    const int weeks = even ? n - 1 : n;
    const int periods = even ? n / 2 : (n - 1) / 2;
    const int games = n * (n - 1) / 2;

    Problem p;
    p.model = spec;
    p.m = games;

    // game ids in (a, b) lexicographic order
    std::vector<std::pair<int, int>> game_teams;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) game_teams.emplace_back(a, b);

    auto slot = [&](int w, int pd) { return (w - 1) * periods + (pd - 1); };
    for (int w = 1; w <= weeks; ++w)
        for (int pd = 1; pd <= periods; ++pd)
            add_primal(p, Domain::range(1, games), VarRole::DecisionPrimal);

    std::vector<int> scope;
    std::vector<int> values;
    for (int s = 0; s < weeks * periods; ++s) scope.push_back(s);
    for (int g = 1; g <= games; ++g) values.push_back(g);

    if (spec.is_injection())
        post_injection_model(p, spec, scope, games);
    else
        post_scope_model(p, spec, scope, values);

    // teams of two games in the same week are disjoint
    auto disjoint = [&](int g, int h) {
        auto [a1, b1] = game_teams[static_cast<std::size_t>(g - 1)];
        auto [a2, b2] = game_teams[static_cast<std::size_t>(h - 1)];
        return a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2;
    };
    for (int w = 1; w <= weeks; ++w)
        for (int p1 = 1; p1 <= periods; ++p1)
            for (int p2 = p1 + 1; p2 <= periods; ++p2) {
                std::vector<std::pair<int, int>> allowed;
                for (int g = 1; g <= games; ++g)
                    for (int h = 1; h <= games; ++h)
                        if (g != h && disjoint(g, h)) allowed.emplace_back(g, h);
                p.constraints.push_back(Constraint::binary_table(
                    p.unflat(slot(w, p1)), p.unflat(slot(w, p2)), std::move(allowed)));
            }

    // each team plays at most twice in any period: indicator plus slack
    for (int pd = 1; pd <= periods; ++pd) {
        for (int t = 1; t <= n; ++t) {
            std::vector<VarRef> sum_scope;
            std::vector<int> coeffs;
            for (int w = 1; w <= weeks; ++w) {
                int ind = add_primal(p, Domain::of({0, 1}), VarRole::Aux);
                std::vector<std::pair<int, int>> pairs;
                for (int g = 1; g <= games; ++g) {
                    auto [a, b] = game_teams[static_cast<std::size_t>(g - 1)];
                    pairs.emplace_back(g, (a == t || b == t) ? 1 : 0);
                }
                p.constraints.push_back(Constraint::binary_table(
                    p.unflat(slot(w, pd)), p.unflat(ind), std::move(pairs)));
                sum_scope.push_back(p.unflat(ind));
                coeffs.push_back(1);
            }
            int slack = add_primal(p, Domain::range(0, 2), VarRole::Aux);
            sum_scope.push_back(p.unflat(slack));
            coeffs.push_back(1);
            p.constraints.push_back(
                Constraint::sum(std::move(sum_scope), std::move(coeffs), 2));
        }
    }
    p.n = p.primal_count();
    for (int v : scope) p.perm_scope.push_back(v);
    return p;
}

Problem magic(int order, ModelSpec spec, const BuildOptions&) {
    const int n = order;
    if (n < 3 || n > 6) throw std::invalid_argument("magic order out of range");
    if (spec.is_injection()) throw std::invalid_argument("magic is a permutation problem");
    const int N = n * n;
    const int total = n * (N + 1) / 2;

    Problem p;
    p.model = spec;
    p.n = N;
    p.m = N;
    for (int i = 0; i < N; ++i) {
        add_primal(p, Domain::range(1, N), VarRole::DecisionPrimal);
        p.perm_scope.push_back(i);
    }
    std::vector<int> scope, values;
    for (int i = 0; i < N; ++i) scope.push_back(i);
    for (int v = 1; v <= N; ++v) values.push_back(v);
    post_scope_model(p, spec, scope, values);

    auto cell = [&](int r, int c) { return VarRef{Block::Primal, (r - 1) * n + c}; };
    auto sum_line = [&](std::vector<VarRef> line) {
        std::vector<int> coeffs(line.size(), 1);
        p.constraints.push_back(Constraint::sum(std::move(line), std::move(coeffs), total));
    };
    for (int r = 1; r <= n; ++r) {
        std::vector<VarRef> line;
        for (int c = 1; c <= n; ++c) line.push_back(cell(r, c));
        sum_line(std::move(line));
    }
    for (int c = 1; c <= n; ++c) {
        std::vector<VarRef> line;
        for (int r = 1; r <= n; ++r) line.push_back(cell(r, c));
        sum_line(std::move(line));
    }
    std::vector<VarRef> diag, anti;
    for (int i = 1; i <= n; ++i) {
        diag.push_back(cell(i, i));
        anti.push_back(cell(i, n + 1 - i));
    }
    sum_line(std::move(diag));
    sum_line(std::move(anti));
    return p;
}

std::string InstanceSpec::to_string() const {
    std::ostringstream os;
    os << kind << ':' << a;
    if (kind == "langford" || kind == "golomb") os << ',' << b;
    return os.str();
}

std::optional<InstanceSpec> parse_instance(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    InstanceSpec inst;
    inst.kind = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    auto comma = rest.find(',');
    try {
        if (comma == std::string::npos) {
            inst.a = std::stoi(rest);
        } else {
            inst.a = std::stoi(rest.substr(0, comma));
            inst.b = std::stoi(rest.substr(comma + 1));
        }
    } catch (...) {
        return std::nullopt;
    }
    bool two = inst.kind == "langford" || inst.kind == "golomb";
    if (two && comma == std::string::npos) return std::nullopt;
    if (!two && comma != std::string::npos) return std::nullopt;
    if (inst.kind != "langford" && inst.kind != "golomb" && inst.kind != "qg3" &&
        inst.kind != "qg4" && inst.kind != "sport" && inst.kind != "magic")
        return std::nullopt;
    return inst;
}

Problem build_instance(const InstanceSpec& inst, ModelSpec model, const BuildOptions& opts) {
    if (inst.kind == "langford") return langford(inst.a, inst.b, model, opts);
    if (inst.kind == "golomb") return golomb(inst.a, inst.b, model, opts);
    if (inst.kind == "qg3") return quasigroup(3, inst.a, model, opts);
    if (inst.kind == "qg4") return quasigroup(4, inst.a, model, opts);
    if (inst.kind == "sport") return sport(inst.a, model, opts);
    if (inst.kind == "magic") return magic(inst.a, model, opts);
    throw std::invalid_argument("unknown instance kind " + inst.kind);
}

}  // namespace permuta
