#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pncc/formulas.hpp"
#include "pncc/gf.hpp"

// Projective nested cartesian sets [A_0 x ... x A_n] in P^n: the coordinate
// sets, their validation against the nestedness conditions, canonical point
// enumeration, and the plain-text config format that describes a spec.

namespace pncc::sets {

using gf::Elem;

struct CartesianSpec {
    gf::Field field;
    // A_0,...,A_n; each sorted ascending by encoding and duplicate-free.
    std::vector<std::vector<Elem>> sets;

    std::size_t n() const { return sets.size() - 1; }
    formulas::Sizes sizes() const;       // (|A_0|,...,|A_n|)
    formulas::Sizes tail_sizes() const;  // (|A_1|,...,|A_n|)
};

// Sorts and deduplicates the sets; rejects empty sets and encodings outside
// the field.
CartesianSpec make_spec(gf::Field field, std::vector<std::vector<Elem>> raw_sets);

enum class ViolationKind {
    ZeroMembership,  // 0 not in A_i
    SizeOrder,       // sizes not nondecreasing >= 2 after dropping leading {0}
    Closure,         // some a*b with a in A_j, b in A_h (h < j) escapes A_j
};

struct Violation {
    ViolationKind kind;
    std::vector<int> indices;        // the sets involved
    std::vector<long long> witness;  // closure: {a, b, a*b}; size-order: sizes
    std::string message() const;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;  // all violated conditions, not just the first
};

// Checks 0-membership for every set, the multiplicative closure
// A_j * A_h <= A_j for all h < j (exhaustive over nonzero b in A_h; b = 0
// is covered by 0-membership), and size monotonicity 2 <= d_i <= d_{i+1}
// evaluated after ignoring leading {0} singletons.
ValidationReport validate(const CartesianSpec& spec);

// Drops every leading singleton {0} (the code is unchanged). Throws
// std::invalid_argument when all sets are singletons (the projective set is
// empty) or a singleton remains after a non-singleton.
CartesianSpec normalize(const CartesianSpec& spec);

// B_j = a_j^{-1} A_j for nonzero scalars a_j in A_j; the resulting spec
// defines the same code and contains 1 in every set.
CartesianSpec scale_spec(const CartesianSpec& spec, const std::vector<Elem>& scalars);

struct ProjectivePoint {
    int pivot = 0;             // index of the leading 1
    std::vector<Elem> coords;  // all n+1 coordinates, canonical form
};

// Canonical representatives (zeros to the left, first nonzero coordinate 1)
// ordered by pivot ascending, then the tail lexicographically by encoding
// with the leftmost coordinate most significant. The pivot-i block is
// {0}^i x {1} x A_{i+1} x ... x A_n, so the count is 1 + sum d_i...d_n and
// A_0 never appears.
std::vector<ProjectivePoint> enumerate_projective_points(const CartesianSpec& spec);

// Full cartesian product A_1 x ... x A_n in lexicographic encoding order,
// leftmost coordinate most significant.
std::vector<std::vector<Elem>> enumerate_affine_points(
    const std::vector<std::vector<Elem>>& sets);

struct Classification {
    bool product_of_fields = false;
    // r_0,...,r_n with d_{i+1} = d_i^{r_i} and q = d_n^{r_n}; empty unless
    // product_of_fields.
    std::vector<long long> exponents;
};

// product_of_fields iff every A_i is exactly the subfield of its order and
// the orders form a tower d_0 | d_1 | ... | q of prime powers.
Classification classify(const CartesianSpec& spec);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config format (line-oriented; '#' starts a comment):
//   field p=<prime> m=<degree> [modulus=<c0,c1,...,cm>]
//   set <elements | subfield:<order> | subgroup:<g>[,withzero]>
// One `set` line per A_i in order A_0,...,A_n. Explicit elements are
// decimal encodings; subfield:d expands to the order-d subfield;
// subgroup:g expands to the cyclic group generated by g, plus 0 when
// ",withzero" is appended.
CartesianSpec parse_spec_string(const std::string& text);
CartesianSpec parse_spec_file(const std::string& path);

}  // namespace pncc::sets
