#ifndef PERMUTA_CORE_HPP
#define PERMUTA_CORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permuta/domain.hpp"

namespace permuta {

enum class Block { Primal, Dual };

// 1-based reference into one of the two variable blocks.
struct VarRef {
    Block block = Block::Primal;
    int index = 1;

    friend bool operator==(const VarRef& a, const VarRef& b) {
        return a.block == b.block && a.index == b.index;
    }
    friend bool operator<(const VarRef& a, const VarRef& b) {
        if (a.block != b.block) return a.block == Block::Primal;
        return a.index < b.index;
    }
};

std::string to_string(const VarRef& v);

enum class CKind {
    NotEquals,       // a != b
    Channel,         // a = va  <=>  b = vb   (bidirectional link)
    ChannelImplies,  // a = va  ==>  b = vb   (one-directional link)
    AllDifferent,    // pairwise distinct over scope
    Offset,          // b = a + k
    Less,            // a < b
    DualSepLink,     // a = va  <=>  b = vb, both in the dual block
    Sum,             // sum(coeff_i * scope_i) = total, coeff in {+1,-1}
    BinaryTable,     // (a, b) restricted to an explicit allowed-pair list
    UnaryForbid,     // a takes none of `values`
};

struct Constraint {
    CKind kind;
    VarRef a, b;
    int k = 0;       // Offset displacement
    int va = 0, vb = 0;  // link values for Channel / ChannelImplies / DualSepLink
    std::vector<VarRef> scope;                  // AllDifferent, Sum
    std::vector<int> coeffs;                    // Sum, parallel to scope
    int total = 0;                              // Sum
    std::vector<std::pair<int, int>> pairs;     // BinaryTable allowed pairs
    std::vector<int> values;                    // UnaryForbid

    static Constraint not_equals(VarRef a, VarRef b);
    static Constraint channel(VarRef primal, VarRef dual, int pval, int dval);
    static Constraint channel_implies(VarRef primal, VarRef dual, int pval, int dval);
    static Constraint all_different(std::vector<VarRef> scope);
    static Constraint offset(VarRef a, VarRef b, int k);  // b = a + k
    static Constraint less(VarRef a, VarRef b);
    static Constraint dual_sep_link(VarRef a, VarRef b, int va, int vb);
    static Constraint sum(std::vector<VarRef> scope, std::vector<int> coeffs, int total);
    static Constraint binary_table(VarRef a, VarRef b, std::vector<std::pair<int, int>> pairs);
    static Constraint unary_forbid(VarRef a, std::vector<int> values);
};

// Which constraint families a model posts.  Permutation tags follow the
// subscript notation (primal side left of `c`, dual side right); injection
// tags use the c1/c2/c3 channelling variants.
enum class ModelFamily {
    // permutation tags
    Neq,
    C,
    All,
    NeqC,
    CNeq,
    AllC,
    CAll,
    NeqCNeq,
    AllCNeq,
    NeqCAll,
    AllCAll,
    // injection tags
    InjNeq,
    InjAll,
    InjC1,
    InjC2,
    InjC3,
    InjC2Neq,
    InjAllC2,
};

struct ModelSpec {
    ModelFamily family = ModelFamily::Neq;

    bool is_injection() const;
    bool has_channels() const;       // any channelling constraints at all
    bool has_primal_neq() const;
    bool has_dual_neq() const;
    bool has_primal_alldiff() const;
    bool has_dual_alldiff() const;

    std::string name() const;                        // CLI tag, e.g. "neq-c"
    static std::optional<ModelSpec> parse(const std::string& tag);
};

// How decision heuristics treat a variable.
enum class VarRole : std::uint8_t {
    Aux = 0,           // auxiliary, never branched on by heuristics
    DecisionPrimal = 1,
    DecisionDual = 2,
};

struct Problem {
    int n = 0;  // primal block size
    int m = 0;  // value count of the permutation / injection
    std::vector<Domain> primal;
    std::vector<Domain> dual;
    std::vector<Constraint> constraints;
    std::vector<VarRole> primal_role;  // parallel to primal
    std::vector<VarRole> dual_role;    // parallel to dual

    ModelSpec model;

    // Scope of the permutation / injection inside the primal block (0-based
    // ids), and the value associated with each dual variable.  For simple
    // models dual j holds value j+1; multi-permutation problems may have
    // several dual sub-blocks.
    std::vector<int> perm_scope;
    std::vector<int> dual_value;  // dual index -> channelled value

    int var_count() const { return static_cast<int>(primal.size() + dual.size()); }
    int primal_count() const { return static_cast<int>(primal.size()); }
    int dual_count() const { return static_cast<int>(dual.size()); }

    // Flat 0-based id for the propagation engine: primal first, then dual.
    int flat(const VarRef& v) const {
        if (v.block == Block::Primal) return v.index - 1;
        return primal_count() + v.index - 1;
    }
    VarRef unflat(int id) const {
        if (id < primal_count()) return {Block::Primal, id + 1};
        return {Block::Dual, id - primal_count() + 1};
    }
    const Domain& domain(const VarRef& v) const {
        return v.block == Block::Primal ? primal[static_cast<std::size_t>(v.index - 1)]
                                        : dual[static_cast<std::size_t>(v.index - 1)];
    }
    std::vector<Domain> all_domains() const {
        std::vector<Domain> out = primal;
        out.insert(out.end(), dual.begin(), dual.end());
        return out;
    }
    VarRole role(int flat_id) const {
        return flat_id < primal_count()
                   ? primal_role[static_cast<std::size_t>(flat_id)]
                   : dual_role[static_cast<std::size_t>(flat_id - primal_count())];
    }
};

// --- builders ---------------------------------------------------------------

// Permutation model over values 1..n.  Throws std::invalid_argument on
// injection tags or n < 1.
Problem build_permutation_model(int n, ModelSpec spec);

// Injection model: n primal variables over values 1..m, m >= n.  Throws on
// permutation tags or m < n.
Problem build_injection_model(int n, int m, ModelSpec spec);

// Equivalent dual domains of a permutation block: dom(d_j) = {i : j in dom(x_i)}.
// `values` lists the value universe in ascending order; entry k of the result
// is the domain of the dual variable for values[k].
std::vector<Domain> dual_equivalent_domains(const std::vector<Domain>& primal_domains,
                                            const std::vector<int>& values);

// Convenience for the 1..n permutation case.
std::vector<Domain> dual_equivalent_domains(const std::vector<Domain>& primal_domains);

// --- serialization ----------------------------------------------------------

// Line-oriented text format: `vars n m`, one `dom` line per variable, one
// `ctr` line per constraint.  Round trips bit-exactly.
std::string serialize_problem(const Problem& p);
Problem parse_problem(const std::string& text);

}  // namespace permuta

#endif
