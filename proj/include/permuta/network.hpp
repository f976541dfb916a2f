#ifndef PERMUTA_NETWORK_HPP
#define PERMUTA_NETWORK_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permuta/core.hpp"

namespace permuta {

// Extensional binary-relation view of a problem, used by the consistency
// laboratory.  A missing relation means the universal one.  Non-binary
// all-different scopes are kept aside for GAC/BC checks.
class BinaryNetwork {
public:
    // sup[a] = allowed partners of value a on the lower-id side.
    struct Rel {
        std::vector<Domain> sup;

        Domain supports_of(int a) const {
            if (a < 0 || a >= static_cast<int>(sup.size())) return Domain();
            return sup[static_cast<std::size_t>(a)];
        }
    };

    int var_count() const { return static_cast<int>(dom.size()); }

    // Intersects the (x, y) relation with `allowed`; creates it if absent.
    void constrain(int x, int y, const std::function<bool(int, int)>& allowed);

    bool has_rel(int x, int y) const { return rel_index(x, y) >= 0; }
    int rel_index(int x, int y) const {
        if (rel_of_.empty()) return -1;
        return rel_of_[static_cast<std::size_t>(x) * dom.size() + static_cast<std::size_t>(y)];
    }
    const Rel& rel_at(int idx) const { return rel_store_[static_cast<std::size_t>(idx)]; }
    Rel& rel_at(int idx) { return rel_store_[static_cast<std::size_t>(idx)]; }

    // Allowed-pair test, universal when unconstrained.
    bool allowed(int x, int a, int y, int b) const {
        int ri = rel_index(x, y);
        if (ri < 0) return true;
        const Rel& r = rel_store_[static_cast<std::size_t>(ri)];
        return x < y ? r.supports_of(a).contains(b) : r.supports_of(b).contains(a);
    }

    // Supports of (x=a) within dy, typically y's current domain.
    Domain supports_in(int x, int a, int y, const Domain& dy) const {
        int ri = rel_index(x, y);
        Domain out = dy;
        if (ri < 0) return out;
        const Rel& r = rel_store_[static_cast<std::size_t>(ri)];
        if (x < y) {
            out.intersect(r.supports_of(a));
            return out;
        }
        Domain keep;
        for (int b : out.values())
            if (r.supports_of(b).contains(a)) keep.insert(b);
        return keep;
    }
    Domain supports(int x, int a, int y) const {
        return supports_in(x, a, y, dom[static_cast<std::size_t>(y)]);
    }

    // Pairs of variables carrying an explicit relation.
    std::vector<std::pair<int, int>> constrained_pairs() const;

    std::vector<Domain> dom;
    std::vector<std::vector<int>> alldiff_scopes;
    std::vector<std::string> names;  // optional, for reports
    int max_value = Domain::kMaxValue;  // value universe bound for relation sizing

private:
    std::vector<int> rel_of_;  // var_count^2 entries, -1 = universal
    std::vector<Rel> rel_store_;
};

enum class Level { BC, AC, RPC, PIC, SAC, PC, ACPC, GAC };

std::string to_string(Level);
std::optional<Level> parse_level(const std::string&);

// Definitional check, no enforcement.  A network with any empty domain fails
// every level.
bool check_level(const BinaryNetwork& net, Level level);

// Strong path-consistency enforcement: removes value pairs lacking a
// consistent extension to each third variable, interleaved with AC, to a
// joint fixpoint.  Relations and domains only shrink; relations end up
// restricted to the surviving domains.  Returns false if a domain or
// relation empties.
bool enforce_pc(BinaryNetwork& net);

// Keeps value v for scope[k] iff some full assignment of the scope with
// scope[k]=v satisfies `allowed`.  Independent oracle; refuses enumerations
// beyond `guard` candidates.
std::vector<Domain> brute_force_gac(const std::vector<Domain>& scope_domains,
                                    const std::function<bool(const std::vector<int>&)>& allowed,
                                    long guard = 10000000L);

// --- network builders --------------------------------------------------------

struct SideRelation {
    int x, y;  // primal indices, 0-based
    std::function<bool(int, int)> allowed;
};

// Single permutation over an explicit ascending value list (|values| ==
// |primal|).  Dual domains are the equivalent domains of the primal block.
// `family` must be a permutation tag.
BinaryNetwork make_permutation_network(const std::vector<Domain>& primal,
                                       const std::vector<int>& values, ModelFamily family,
                                       const std::vector<SideRelation>& side = {});

// Injection network from explicitly given primal and dual domains.
BinaryNetwork make_injection_network(const std::vector<Domain>& primal,
                                     const std::vector<Domain>& duals, ModelFamily family,
                                     int n, int m);

// Multiple permutation network: overlapping all-different scopes.  The
// not-equals form posts edges inside each scope; the all-diff form keeps
// the scopes aside.
BinaryNetwork make_multi_perm_network(const std::vector<Domain>& primal,
                                      const std::vector<std::vector<int>>& scopes,
                                      bool as_alldiff);

}  // namespace permuta

#endif
