#ifndef PERMUTA_SAT_HPP
#define PERMUTA_SAT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permuta/core.hpp"

namespace permuta {

// Atom X_{ij}: primal variable i takes value j; the same atom reads as dual
// variable j taking value i.  Atom ids are (i-1)*n + j, literals +/-id.
struct ClauseSet {
    int n = 0;      // variables == values
    int atoms = 0;  // n * n
    std::vector<std::vector<int>> clauses;

    int atom(int i, int j) const { return (i - 1) * n + j; }
    std::pair<int, int> atom_ij(int id) const { return {(id - 1) / n + 1, (id - 1) % n + 1}; }

    std::string to_dimacs() const;
};

enum class SatVariant { PrimalSAT, ChannellingSAT };

// Direct encoding of an n-permutation: at-least-one per variable, pairwise
// at-most-one per variable, pairwise at-most-one per value; the channelling
// variant adds one at-least-one clause per dual variable.  Side constraints
// arrive as extra clauses.
ClauseSet encode_direct(int n, SatVariant variant,
                        const std::vector<std::vector<int>>& side = {});

// Clauses of a permutation problem's non-permutation constraints under the
// direct encoding (forbidden pairs become negative binary clauses, unary
// forbids become unit clauses).  The problem must have as many values as
// primal scope variables.
std::vector<std::vector<int>> encode_side_constraints(const Problem& p);

// Full clause set for a permutation problem under the chosen variant.
ClauseSet encode_problem(const Problem& p, SatVariant variant);

enum class UnitStatus { Ok, Conflict };

// Closes `assignment` (0 unknown, +1 true, -1 false; index 0 unused) under
// unit propagation.  Conflict when an empty clause is derived.
UnitStatus unit_propagate(const ClauseSet& cs, std::vector<int>& assignment);

struct DpResult {
    bool sat = false;
    long branches = 0;   // counted splitting decisions
    long models = 0;     // enumerate mode only
    std::vector<int> assignment;  // a model when sat
};

// Davis-Putnam search: unit propagation plus splitting.  The branch order
// callback picks the next atom to set true (or 0 when none is wanted);
// branches count each split whose view had a real choice.
using BranchOrder = std::function<int(const ClauseSet&, const std::vector<int>&)>;

DpResult dp_solve(const ClauseSet& cs, const BranchOrder& order = nullptr,
                  bool enumerate = false);

// --- lockstep comparison ------------------------------------------------------

struct LockstepReport {
    long fc_branches = 0;
    long dp_branches = 0;
    bool fc_sat = false;
    bool dp_sat = false;
    bool equal = false;
    std::string divergence;  // empty when equal

    std::string to_csv() const;
};

// Runs forward checking (fail-first singletons on) and DP with mirrored
// variable/value orders and compares branch counts.  The problem must be a
// permutation problem whose model matches the SAT variant (not-equals for
// the primal encoding, channelling for the combined one).
LockstepReport lockstep_compare(const Problem& p, SatVariant variant);

// Seeded random n-variable permutation CSP with `extra` binary table
// constraints, as used by the lockstep sweeps.
Problem random_binary_permutation(int n, int extra, unsigned long seed, ModelFamily family);

}  // namespace permuta

#endif
