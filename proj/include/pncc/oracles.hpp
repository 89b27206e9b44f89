#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pncc/codes.hpp"
#include "pncc/formulas.hpp"
#include "pncc/sets.hpp"

// Brute-force counterparts of the closed-form parameter formulas:
// exhaustive minimum-weight search over the row space, rank-based
// dimensions, a recursion identity check, and the harness that compares
// predicted minimum distances against measured ones degree by degree.

namespace pncc::oracles {

using gf::Elem;

struct SearchBudget {
    long long max_codewords = 10'000'000;  // enumeration cap
    double max_seconds = 60.0;             // wall-clock cap
};

struct SearchResult {
    // True when every nonzero codeword was inspected. False with
    // enumerated == 0 means the space exceeded max_codewords and the search
    // was not started; false with enumerated > 0 means the time budget ran
    // out and min_weight is only an upper bound.
    bool completed = false;
    formulas::Int total = 0;   // q^rank - 1 nonzero codewords
    long long enumerated = 0;  // codewords actually inspected
    long long min_weight = 0;  // exact minimum iff completed
    // Lexicographically first coefficient vector (over the echelon basis)
    // attaining min_weight, and its codeword. Empty when enumerated == 0.
    std::vector<Elem> message;
    codes::Codeword codeword;
};

// Enumerates all q^rank - 1 nonzero coefficient vectors over the basis in
// odometer order (first coefficient most significant). The result is
// independent of the worker count: ties in weight resolve to the smallest
// enumeration index.
SearchResult search_min_weight(const codes::EchelonBasis& basis, const gf::Field& field,
                               const SearchBudget& budget = {}, int workers = 1);

// search_min_weight over the degree-d code of a normalized valid spec.
SearchResult exhaustive_min_distance(const sets::CartesianSpec& spec, long long d,
                                     const SearchBudget& budget = {}, int workers = 1);

// q^dim - 1 when that fits max_codewords, std::nullopt otherwise; lets
// callers skip building a generator matrix for spaces that will be gated
// anyway.
std::optional<long long> space_size_within(long long q, const formulas::Int& dim,
                                           long long max_codewords);

// rank(generator_matrix(spec, d)): the oracle for dimension_formula.
long long hilbert_by_rank(const sets::CartesianSpec& spec, long long d);

// Checks rank_d(full) = rank_d(tail projective part) + rank_{d-1}(affine
// product A_1 x ... x A_n), all three by elimination. Needs n >= 1, d >= 1.
bool recursion_check(const sets::CartesianSpec& spec, long long d);

enum class EntryStatus { Verified, Refuted, ExactTheorem, SkippedBudget };

std::string to_string(EntryStatus s);

struct ConjectureEntry {
    long long degree = 0;
    formulas::Int conjectured = 0;          // predicted minimum distance
    EntryStatus status = EntryStatus::SkippedBudget;
    std::optional<long long> measured;      // exact minimum, or witness weight on refutation
    std::string witness;                    // refuting polynomial, text form
};

struct ConjectureReport {
    int p = 0;
    int m_ext = 0;
    std::vector<int> modulus;               // field modulus, constant term first
    std::vector<std::vector<Elem>> sets;
    formulas::Int length = 0;
    std::vector<ConjectureEntry> entries;
};

// For each degree d >= 1: the explicit upper-bound polynomial is evaluated
// first (its codeword weight must equal the predicted value exactly; a
// mismatch is an internal error). Product-of-fields specs and degrees past
// the saturation cap get exact-theorem status, with the search run only
// when the space fits the codeword budget (a disagreement there is an
// internal error). Otherwise the search runs under the budget: a full
// enumeration matching the prediction gives verified; any codeword below
// the prediction gives refuted with the reconstructed polynomial; an
// inconclusive partial search gives skipped-budget.
ConjectureReport check_conjecture(const sets::CartesianSpec& spec,
                                  const std::vector<long long>& degrees,
                                  const SearchBudget& budget = {}, int workers = 1);

// One header line identifying the spec, then one line per entry:
// degree=, conjectured=, measured= (when present), status=, witness= (when
// present). Byte-deterministic.
std::string serialize_report(const ConjectureReport& report);

}  // namespace pncc::oracles
