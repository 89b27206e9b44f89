#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pncc/sets.hpp"

// Monomials, sparse polynomials, graded-lex ordering, evaluation, the
// explicit generators of the vanishing ideal, the low-weight witness
// polynomial behind the distance upper bound, and direct footprint
// enumeration.

namespace pncc::poly {

using gf::Elem;

struct Monomial {
    std::vector<int> exponents;  // alpha_0,...,alpha_n

    int degree() const;
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
};

// Graded lexicographic order with X_0 < X_1 < ... < X_n: compare total
// degree first, then exponent tuples read from alpha_n down to alpha_0.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// Sparse polynomial over one field; no zero coefficients stored. The term
// map is keyed in descending grlex order, so begin() is the leading term.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool homogeneous() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Elem, GrlexGreater>& terms() const { return terms_; }
    const Monomial& leading_monomial() const;  // throws on zero polynomial

    void add_term(const gf::Field& field, const Monomial& mono, Elem coef);

    static Polynomial monomial(std::size_t nvars, const Monomial& mono, Elem coef);
    // c1 * X_a + c0 * X_b as a degree-1 form.
    static Polynomial binomial_form(std::size_t nvars, std::size_t a, Elem c1,
                                    std::size_t b, Elem c0);

    Polynomial multiply(const gf::Field& field, const Polynomial& other) const;

    Elem evaluate(const gf::Field& field, const std::vector<Elem>& coords) const;

    // coef*X0^a0*...*Xn^an terms joined by '+', descending grlex.
    std::string to_string() const;

private:
    std::size_t nvars_;
    std::map<Monomial, Elem, GrlexGreater> terms_;
};

// All degree-d monomials in X_0,...,X_n, descending grlex (leading first);
// count C(n+d, n).
std::vector<Monomial> monomial_basis(int n, long long d);

Elem evaluate_monomial(const gf::Field& field, const Monomial& mono,
                       const std::vector<Elem>& coords);

// The C(n+1, 2) generators X_i * prod_{a in A_j} (X_j - a X_i) for
// 0 <= i < j <= n, listed by (i, j) lexicographically; generator (i, j) is
// homogeneous of degree d_j + 1 with leading monomial X_i X_j^{d_j}.
std::vector<Polynomial> ideal_generators(const sets::CartesianSpec& spec);

struct WitnessChoices {
    // a[i-1] is the element of A_i singled out as the surviving coordinate;
    // only entries 1..k (top degree: 1..n) are used.
    std::vector<Elem> a;
    // Subset of A_{k+1} of size ell; ignored at the top degree.
    std::vector<Elem> B;
};

// X_0 * (prod_{i<=k} prod_{a in A_i, a != a_i} (X_i - a X_0))
//     * (prod_{a in B} (X_{k+1} - a X_0))
// for 1 <= d <= sum(d_i - 1) via (k, ell) = kl_decompose(d); at
// d = sum(d_i - 1) + 1 the full product over all i, whose codeword has
// weight exactly 1. Defaults: a_i = 0 and B = the first ell nonzero
// elements of A_{k+1} by encoding. The codeword weight is exactly
// (d_{k+1} - ell) * d_{k+2} ... d_n, the distance upper bound.
Polynomial witness_polynomial(const sets::CartesianSpec& spec, long long d,
                              const std::optional<WitnessChoices>& choices = std::nullopt);

// Counts degree-d monomials M with the property that whenever
// alpha_j >= d_j for some j >= 1, all earlier exponents vanish: exactly the
// monomials outside the leading-term ideal of the generators. Plain
// enumeration over all C(n+d, n) candidates, kept independent of the
// closed-form count so the two can be cross-checked.
long long footprint_count_direct(const sets::CartesianSpec& spec, long long d);

}  // namespace pncc::poly
