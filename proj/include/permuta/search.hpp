#ifndef PERMUTA_SEARCH_HPP
#define PERMUTA_SEARCH_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permuta/propagate.hpp"

namespace permuta {

enum class Algo { FC, MAC, MGAC };
enum class Heur { Lex, SDp, SDd, SDpd, SD2p, SD2d, SD2pd };
enum class Goal { FirstSolution, AllSolutions };

std::string to_string(Algo);
std::string to_string(Heur);
std::string to_string(Goal);
std::optional<Algo> parse_algo(const std::string&);
std::optional<Heur> parse_heur(const std::string&);
std::optional<Goal> parse_goal(const std::string&);

struct SearchConfig {
    Algo algo = Algo::MAC;
    Heur heur = Heur::Lex;
    Goal goal = Goal::FirstSolution;
    // Instantiate variables whose domain became a singleton before any other
    // choice; forced moves are not counted as branch decisions.
    bool fail_first_singletons = true;
    long node_limit = -1;       // < 0: unlimited
    double time_limit_s = -1;   // < 0: unlimited
};

struct SearchStats {
    long fails = 0;      // branching decisions whose propagation wiped out
    long nodes = 0;      // assignment attempts, forced moves included
    long solutions = 0;
    double time_ms = 0;
    bool aborted = false;  // node or time limit hit; stats are partial
};

struct Solution {
    std::vector<int> primal;  // value per primal-block variable
};

// Observes the solver for lockstep comparisons: `counted` marks genuine
// branch decisions (more than one value was available).
struct SearchObserver {
    virtual ~SearchObserver() = default;
    virtual void on_decision(int flat_var, int value, int depth, bool counted) = 0;
};

std::pair<std::vector<Solution>, SearchStats> solve(const Problem& p, const SearchConfig& cfg,
                                                    SearchObserver* observer = nullptr);

// Heuristic primitives, exposed for tests.  `bound` flags solver-assigned
// variables; candidates are unbound variables with the config's block
// preference.  Returns a flat id, or -1 when everything is bound.
int select_variable(const Problem& p, const DomainStore& store, const std::vector<char>& bound,
                    const SearchConfig& cfg);

// Value ordering for `var` under the config; ascending for lex/SD, dual (or
// primal) domain size for the double smallest-domain family.
std::vector<int> select_value_order(const Problem& p, const DomainStore& store, int var,
                                    const SearchConfig& cfg);

// Semantic check of a full assignment over all variables (flat order).
bool satisfies_all(const Problem& p, const std::vector<int>& assignment);

// One CSV row per run: instance, model, heuristic, algorithm, goal, fails,
// nodes, solutions, time_ms.
std::string stats_csv_row(const std::string& instance, const std::string& model,
                          const SearchConfig& cfg, const SearchStats& stats);

}  // namespace permuta

#endif
