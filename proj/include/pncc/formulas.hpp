#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

// Closed-form parameter formulas for projective nested cartesian codes and
// for the affine cartesian codes they decompose into. Everything here is
// exact integer arithmetic on set sizes; nothing touches field elements.
//
// A nested cartesian set [A_0 x ... x A_n] in P^n has sizes d_i = |A_i|,
// nondecreasing with every d_i >= 2 once leading singletons are dropped.
// The projective functions take the full size vector (d_0,...,d_n) and use
// only the tail d_1,...,d_n, which is all that ever enters length,
// dimension and distance. The affine functions take bare affine sizes
// (d_1,...,d_n), possibly empty for a zero-dimensional product.

namespace pncc::formulas {

using Int = boost::multiprecision::cpp_int;
using Sizes = std::vector<long long>;

// C(a, b), zero whenever b < 0 or b > a. Negative a with b >= 0 falls under
// b > a, so truncated binomials in the inclusion-exclusion sums vanish;
// C(-1, 0) = 0 is required for the footprint count at small degrees.
Int binomial(long long a, long long b);

// sum (d_i - 1): the largest s the decomposition below accepts, and the
// degree at which minimum distances reach 1.
long long size_cap(const Sizes& sizes);

struct KL {
    std::size_t k = 0;  // number of fully consumed sizes
    long long ell = 0;  // remainder, 0 <= ell < sizes[k] - 1
};

// Unique k, ell with s = sum_{i<k} (sizes[i] - 1) + ell and
// 0 <= ell < sizes[k] - 1. Requires 0 <= s < size_cap(sizes).
KL decompose(long long s, const Sizes& sizes);

// Projective form: decomposes d - 1 over the tail of the full size vector
// (so k counts tail entries). Requires 1 <= d <= size_cap(tail).
KL kl_decompose(long long d, const Sizes& full_sizes);

// min { prod (d_i - a_i) : 0 <= a_i < d_i, sum a_i <= s } for
// 0 <= s <= size_cap(sizes); equals (d_{k+1} - ell) * d_{k+2} ... d_n.
Int min_product(const Sizes& sizes, long long s);

// Projective code over [A_0 x ... x A_n]; full_sizes = (d_0,...,d_n).
Int length_formula(const Sizes& full_sizes);
Int dimension_formula(const Sizes& full_sizes, long long d);

// Number of degree-d monomials outside the leading-term ideal of the
// generators X_i * prod_{a in A_j} (X_j - a X_i), i < j, under graded lex
// with X_0 < ... < X_n. Equals dimension_formula for every d; kept as an
// independently computed expression so the two can be cross-checked.
Int footprint_count_formula(const Sizes& full_sizes, long long d);

enum class DistanceStatus {
    ExactTheorem,  // proven: nested product of fields, or degree 0
    Conjectured,   // conjectured exact; always a proven upper bound
    UpperBound,    // reported when only the bound is claimed
    TrivialOne,    // past the cap the distance is 1 for every nested set
};

struct Distance {
    Int value;
    DistanceStatus status = DistanceStatus::Conjectured;
};

// (d_{k+1} - ell) * d_{k+2} ... d_n for 1 <= d <= size_cap(tail) via
// kl_decompose, 1 above the cap, full length at d = 0.
Distance projective_min_distance(const Sizes& full_sizes, long long d,
                                 bool product_of_fields);

// Affine cartesian code over A_1 x ... x A_n, degree-<= d evaluation.
Int affine_length(const Sizes& sizes);
Int affine_dimension(const Sizes& sizes, long long d);
Int affine_min_distance(const Sizes& sizes, long long d);

struct PrmParams {
    Int length;
    Int dimension;
    Int distance;
};

// Projective Reed-Muller PC_d(n, q): the special case A_i = F_q for all i.
// Dimension uses the binomial-coefficient form specific to equal sizes,
// distance the (q - ell) q^(n-k-1) parametrization of d = 1 + k(q-1) + ell;
// both must agree with the general formulas at sizes (q,...,q). Exact for
// every d >= 1 (fields are a nested product of fields).
PrmParams prm_parameters(int n, long long q, long long d);

}  // namespace pncc::formulas
