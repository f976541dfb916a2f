#ifndef PERMUTA_LATTICE_HPP
#define PERMUTA_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permuta/network.hpp"

namespace permuta {

// One point of the strength lattice: a consistency level applied to a model.
struct LatticePoint {
    Level level;
    ModelFamily model;

    std::string name() const { return to_string(level) + ":" + ModelSpec{model}.name(); }
};

enum class ArrowKind {
    Implies,       // strong holds => weak holds, on every configuration
    Equivalent,    // both directions
    Incomparable,  // witnessed in both directions by stored instances
    // Printed in the source lattice but refuted by counterexample under the
    // definitional semantics; validated through stored witnesses instead of
    // the sweep.  See the documenting fixtures.
    DocumentedDeviation,
};

struct LatticeArrow {
    LatticePoint strong, weak;
    ArrowKind kind;
};

// The single-permutation strength lattice over
// {BC, AC, RPC, PIC, SAC, ACPC, GAC} x {all-diff, neq-c-neq, neq-c, c, neq}.
const std::vector<LatticeArrow>& lattice_arrows();

struct LatticeViolation {
    long config_id;
    std::string arrow;                 // "SAC:c->SAC:neq"
    std::vector<std::uint64_t> masks;  // witness primal domain bitmasks
};

struct LatticeReport {
    int n = 0;
    long configs = 0;
    std::vector<LatticeViolation> violations;  // unexpected: must be empty
    std::vector<LatticeViolation> documented;  // deviations observed, expected
    std::vector<std::string> incomparable_failures;  // stored witnesses that broke

    bool ok() const { return violations.empty() && incomparable_failures.empty(); }
    std::string to_csv() const;
};

enum class SweepMode { Exhaustive, Sample };

struct LatticeOptions {
    SweepMode mode = SweepMode::Exhaustive;
    long samples = 0;            // Sample mode
    unsigned long seed = 1;      // Sample mode
    int threads = 0;             // 0: hardware concurrency
    std::vector<Level> levels;   // empty: all
    std::vector<ModelFamily> models;  // empty: all
};

// Sweeps every non-empty-domain configuration of an n-variable permutation
// (or `samples` random ones) and checks each lattice arrow; also replays the
// stored incomparability witnesses.  Exhaustive mode requires n <= 4.
LatticeReport verify_lattice(int n, const LatticeOptions& opts = {});

// --- stored proof instances ---------------------------------------------------

struct FixtureExpect {
    Level level;
    ModelFamily model;
    bool expected;
    // True when the stored expectation deliberately differs from the quoted
    // source label; `note` on the fixture explains why.
    bool reclassified = false;
};

struct Fixture {
    enum class Kind { Permutation, Injection, MultiPerm };

    std::string name;
    Kind kind = Kind::Permutation;
    std::vector<Domain> primal;
    std::vector<Domain> duals;   // Injection only
    std::vector<int> values;     // Permutation value universe
    int n = 0, m = 0;            // Injection sizes
    std::vector<std::vector<int>> scopes;  // MultiPerm
    bool parity_side = false;    // even(x1 + x3) side constraint
    std::vector<FixtureExpect> expects;
    std::string note;
};

const std::vector<Fixture>& proof_fixtures();

BinaryNetwork fixture_network(const Fixture& f, ModelFamily model);

struct FixtureResult {
    std::string fixture;
    Level level;
    ModelFamily model;
    bool expected = false;
    bool actual = false;
    bool reclassified = false;

    bool ok() const { return expected == actual; }
};

std::vector<FixtureResult> replay_fixtures();

// Canonical text form of the fixture set (one instance per block with the
// expected per-(level, model) booleans) and its parser.
std::string fixtures_to_text(const std::vector<Fixture>& fs);
std::vector<Fixture> parse_fixtures(const std::string& text);

}  // namespace permuta

#endif
