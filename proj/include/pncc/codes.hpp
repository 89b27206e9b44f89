#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pncc/poly.hpp"
#include "pncc/sets.hpp"

// Materialized evaluation codes: generator matrices in the monomial basis,
// Gaussian elimination over GF(q), encoding over an echelon basis, and
// row-space equality.

namespace pncc::codes {

using gf::Elem;
using Codeword = std::vector<Elem>;

std::size_t weight(const Codeword& w);

struct GeneratorMatrix {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    std::vector<Elem> data;  // row-major
    // Row r is the evaluation of row_monomials[r] at every point, in point
    // order; empty for matrices read back from files.
    std::vector<poly::Monomial> row_monomials;
    int p = 0;      // field characteristic
    int m_ext = 0;  // extension degree
    int n = 0;      // variables - 1
    long long d = 0;

    Elem at(std::size_t r, std::size_t c) const { return data[r * ncols + c]; }
    Elem* row(std::size_t r) { return data.data() + r * ncols; }
    const Elem* row(std::size_t r) const { return data.data() + r * ncols; }
};

// Degree-d homogeneous monomials (descending grlex) evaluated at the
// canonical points of the spec; C(n+d, n) rows, length(spec) columns.
GeneratorMatrix generator_matrix(const sets::CartesianSpec& spec, long long d);

// Monomials of degree <= d in n variables (degree descending, then
// descending grlex) evaluated at the full product A_1 x ... x A_n.
GeneratorMatrix affine_generator_matrix(const gf::Field& field,
                                        const std::vector<std::vector<Elem>>& sets,
                                        long long d);

// Row echelon rank; deterministic pivoting (first nonzero row per column,
// columns left to right), early exit at full column rank.
std::size_t gf_rank(const GeneratorMatrix& mat, const gf::Field& field);

// Reduced row echelon form of the row space: pivot columns strictly
// increasing, pivots 1, pivot columns cleared elsewhere. Identical row
// spaces yield identical RREFs. When track_transform is set, transform
// holds rank x nrows coefficients expressing each basis row as a
// combination of the original rows.
struct EchelonBasis {
    std::size_t rank = 0;
    std::size_t ncols = 0;
    std::vector<Elem> rows;             // rank x ncols
    std::vector<std::size_t> pivots;    // pivot column of each row
    std::vector<Elem> transform;        // rank x original nrows, optional
    std::size_t original_nrows = 0;

    const Elem* row(std::size_t r) const { return rows.data() + r * ncols; }
};

EchelonBasis rref(const GeneratorMatrix& mat, const gf::Field& field,
                  bool track_transform = false);

// Linear combination of the echelon basis rows; message length must equal
// the rank.
Codeword encode(const EchelonBasis& basis, const gf::Field& field,
                const std::vector<Elem>& message);

// True iff the degree-d codes of the two specs coincide as row spaces.
// Requires the same field and the same length.
bool code_equal(const sets::CartesianSpec& a, const sets::CartesianSpec& b, long long d);

// Text format: header "p m_ext n d nrows ncols", then one row per line of
// space-separated decimal encodings.
void write_matrix(std::ostream& out, const GeneratorMatrix& mat);
GeneratorMatrix read_matrix(std::istream& in);

}  // namespace pncc::codes
