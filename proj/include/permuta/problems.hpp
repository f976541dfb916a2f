#ifndef PERMUTA_PROBLEMS_HPP
#define PERMUTA_PROBLEMS_HPP

#include <optional>
#include <string>

#include "permuta/core.hpp"

namespace permuta {

struct BuildOptions {
    bool symmetry_breaking = true;  // Langford reversal break
};

// Langford sequence problem L(n, m): n occurrences of each digit 1..m over
// positions 1..n*m.  Variable (k-1)*m + d holds the position of the k-th
// occurrence of digit d.  Supported n: 2 and 3.
Problem langford(int occurrences, int digits, ModelSpec model, const BuildOptions& = {});

// Golomb ruler with `marks` ticks and length `length`: mark variables are
// auxiliary, the pairwise distances (plus padding variables for permutation
// tags) carry the permutation or injection model over values 1..length.
Problem golomb(int marks, int length, ModelSpec model, const BuildOptions& = {});

// Idempotent quasigroup existence; identity 3 is (a*b)*(b*a) = a, identity 4
// is (b*a)*(a*b) = a.  Rows and columns form a multiple permutation.
Problem quasigroup(int identity, int order, ModelSpec model, const BuildOptions& = {});

// Round-robin sport schedule: one variable per (week, period) slot taking a
// game id; games form a permutation of the slots.  Odd team counts take the
// injection tags.
Problem sport(int teams, ModelSpec model, const BuildOptions& = {});

// Order-n magic square over values 1..n^2 with row/column/diagonal sums.
Problem magic(int order, ModelSpec model, const BuildOptions& = {});

// Instance strings: langford:3,9  qg3:8  qg4:8  golomb:10,55  sport:8  magic:5
struct InstanceSpec {
    std::string kind;  // langford | qg3 | qg4 | golomb | sport | magic
    int a = 0, b = 0;  // parameters (b unused for single-parameter kinds)

    std::string to_string() const;
};
std::optional<InstanceSpec> parse_instance(const std::string& s);
Problem build_instance(const InstanceSpec& inst, ModelSpec model, const BuildOptions& = {});

// Langford helpers shared with tests: the variable index of occurrence k of
// digit d (1-based), and the digit/occurrence of a variable index.
int langford_var(int digits, int digit, int occurrence);
std::pair<int, int> langford_digit_occ(int digits, int var_index);

}  // namespace permuta

#endif
