#include "pncc/codes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pncc::codes {

std::size_t weight(const Codeword& w) {
    return static_cast<std::size_t>(std::count_if(
        w.begin(), w.end(), [](Elem e) { return e != 0; }));
}

GeneratorMatrix generator_matrix(const sets::CartesianSpec& spec, long long d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    const int n = spec.n();
    const auto monos = poly::monomial_basis(n, d);
    const auto points = sets::enumerate_projective_points(spec);

    GeneratorMatrix mat;
    mat.nrows = monos.size();
    mat.ncols = points.size();
    mat.row_monomials = monos;
    mat.p = spec.field.characteristic();
    mat.m_ext = spec.field.degree();
    mat.n = n;
    mat.d = d;
    mat.data.resize(mat.nrows * mat.ncols);
    for (std::size_t r = 0; r < mat.nrows; ++r) {
        Elem* row = mat.row(r);
        for (std::size_t c = 0; c < mat.ncols; ++c)
            row[c] = poly::evaluate_monomial(spec.field, monos[r], points[c].coords);
    }
    return mat;
}

GeneratorMatrix affine_generator_matrix(const gf::Field& field,
                                        const std::vector<std::vector<Elem>>& sets,
                                        long long d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    const int nvars = static_cast<int>(sets.size());
    std::vector<poly::Monomial> monos;
    if (nvars == 0) {
        monos.push_back(poly::Monomial{{}});
    } else {
        // monomial_basis(k, e) spans X_0..X_k, so nvars variables need k =
        // nvars - 1; degree descending, descending grlex inside each degree.
        for (long long e = d; e >= 0; --e) {
            auto layer = poly::monomial_basis(nvars - 1, e);
            monos.insert(monos.end(), layer.begin(), layer.end());
        }
    }
    const auto points = sets::enumerate_affine_points(sets);

    GeneratorMatrix mat;
    mat.nrows = monos.size();
    mat.ncols = points.size();
    mat.row_monomials = monos;
    mat.p = field.characteristic();
    mat.m_ext = field.degree();
    mat.n = nvars;  // variable count, no homogenizing coordinate
    mat.d = d;
    mat.data.resize(mat.nrows * mat.ncols);
    for (std::size_t r = 0; r < mat.nrows; ++r) {
        Elem* row = mat.row(r);
        for (std::size_t c = 0; c < mat.ncols; ++c)
            row[c] = poly::evaluate_monomial(field, monos[r], points[c]);
    }
    return mat;
}

namespace {

// v -= c * b, elementwise over n entries. Dense-table fast path when the
// field provides one.
void row_submul(const gf::Field& K, Elem c, const Elem* b, Elem* v, std::size_t n) {
    const Elem nc = K.neg(c);
    const Elem* mr = K.mul_row(nc);
    const Elem* at = K.add_table();
    if (mr && at) {
        const std::size_t q = K.order();
        for (std::size_t j = 0; j < n; ++j)
            v[j] = at[std::size_t(v[j]) * q + mr[b[j]]];
    } else {
        for (std::size_t j = 0; j < n; ++j) v[j] = K.add(v[j], K.mul(nc, b[j]));
    }
}

void row_scale(const gf::Field& K, Elem s, Elem* v, std::size_t n) {
    if (const Elem* mr = K.mul_row(s)) {
        for (std::size_t j = 0; j < n; ++j) v[j] = mr[v[j]];
    } else {
        for (std::size_t j = 0; j < n; ++j) v[j] = K.mul(s, v[j]);
    }
}

// Incremental elimination. Every inserted row is reduced against the
// existing basis and normalized to pivot 1; a later-inserted row is
// therefore zero at all earlier pivot columns, which keeps forward
// reduction correct without back-substitution. reduce_back additionally
// clears each new pivot column in the earlier rows (full RREF).
struct Eliminator {
    const gf::Field& K;
    std::size_t ncols;
    bool reduce_back;
    bool track;
    std::size_t original_nrows;
    std::vector<std::vector<Elem>> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<Elem>> combos;  // row expressed over original rows

    Eliminator(const gf::Field& field, std::size_t cols, bool back,
               bool track_transform, std::size_t orig_rows)
        : K(field), ncols(cols), reduce_back(back), track(track_transform),
          original_nrows(orig_rows) {}

    // v is consumed. combo is the expression of v over the original rows.
    void add(std::vector<Elem> v, std::vector<Elem> combo) {
        for (std::size_t b = 0; b < rows.size(); ++b) {
            const Elem c = v[pivots[b]];
            if (c == 0) continue;
            row_submul(K, c, rows[b].data(), v.data(), ncols);
            if (track) row_submul(K, c, combos[b].data(), combo.data(), original_nrows);
        }
        std::size_t piv = 0;
        while (piv < ncols && v[piv] == 0) ++piv;
        if (piv == ncols) return;
        const Elem inv = K.inv(v[piv]);
        if (inv != 1) {
            row_scale(K, inv, v.data(), ncols);
            if (track) row_scale(K, inv, combo.data(), original_nrows);
        }
        if (reduce_back) {
            for (std::size_t b = 0; b < rows.size(); ++b) {
                const Elem c = rows[b][piv];
                if (c == 0) continue;
                row_submul(K, c, v.data(), rows[b].data(), ncols);
                if (track) row_submul(K, c, combo.data(), combos[b].data(), original_nrows);
            }
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        if (track) combos.push_back(std::move(combo));
    }
};

}  // namespace

std::size_t gf_rank(const GeneratorMatrix& mat, const gf::Field& field) {
    Eliminator e(field, mat.ncols, false, false, mat.nrows);
    for (std::size_t r = 0; r < mat.nrows; ++r) {
        std::vector<Elem> v(mat.row(r), mat.row(r) + mat.ncols);
        e.add(std::move(v), {});
        if (e.rows.size() == mat.ncols) break;
    }
    return e.rows.size();
}

EchelonBasis rref(const GeneratorMatrix& mat, const gf::Field& field,
                  bool track_transform) {
    Eliminator e(field, mat.ncols, true, track_transform, mat.nrows);
    for (std::size_t r = 0; r < mat.nrows; ++r) {
        std::vector<Elem> v(mat.row(r), mat.row(r) + mat.ncols);
        std::vector<Elem> combo;
        if (track_transform) {
            combo.assign(mat.nrows, 0);
            combo[r] = 1;
        }
        e.add(std::move(v), std::move(combo));
    }
    // Sort rows by pivot column so equal row spaces produce equal bases.
    std::vector<std::size_t> order(e.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return e.pivots[a] < e.pivots[b]; });

    EchelonBasis basis;
    basis.rank = e.rows.size();
    basis.ncols = mat.ncols;
    basis.original_nrows = mat.nrows;
    basis.rows.reserve(basis.rank * basis.ncols);
    basis.pivots.reserve(basis.rank);
    if (track_transform) basis.transform.reserve(basis.rank * mat.nrows);
    for (std::size_t i : order) {
        basis.rows.insert(basis.rows.end(), e.rows[i].begin(), e.rows[i].end());
        basis.pivots.push_back(e.pivots[i]);
        if (track_transform)
            basis.transform.insert(basis.transform.end(), e.combos[i].begin(),
                                   e.combos[i].end());
    }
    return basis;
}

Codeword encode(const EchelonBasis& basis, const gf::Field& field,
                const std::vector<Elem>& message) {
    if (message.size() != basis.rank)
        throw std::invalid_argument("message length must equal the code dimension");
    Codeword w(basis.ncols, 0);
    for (std::size_t r = 0; r < basis.rank; ++r) {
        const Elem c = message[r];
        if (c == 0) continue;
        const Elem* row = basis.row(r);
        for (std::size_t j = 0; j < basis.ncols; ++j)
            w[j] = field.add(w[j], field.mul(c, row[j]));
    }
    return w;
}

bool code_equal(const sets::CartesianSpec& a, const sets::CartesianSpec& b, long long d) {
    if (!(a.field == b.field))
        throw std::invalid_argument("code_equal requires a common field");
    const auto ma = generator_matrix(a, d);
    const auto mb = generator_matrix(b, d);
    if (ma.ncols != mb.ncols) return false;
    const auto ra = rref(ma, a.field);
    const auto rb = rref(mb, b.field);
    return ra.rank == rb.rank && ra.pivots == rb.pivots && ra.rows == rb.rows;
}

void write_matrix(std::ostream& out, const GeneratorMatrix& mat) {
    out << mat.p << ' ' << mat.m_ext << ' ' << mat.n << ' ' << mat.d << ' '
        << mat.nrows << ' ' << mat.ncols << '\n';
    for (std::size_t r = 0; r < mat.nrows; ++r) {
        const Elem* row = mat.row(r);
        for (std::size_t c = 0; c < mat.ncols; ++c) {
            if (c) out << ' ';
            out << static_cast<int>(row[c]);
        }
        out << '\n';
    }
}

GeneratorMatrix read_matrix(std::istream& in) {
    GeneratorMatrix mat;
    if (!(in >> mat.p >> mat.m_ext >> mat.n >> mat.d >> mat.nrows >> mat.ncols))
        throw std::runtime_error("malformed matrix header");
    mat.data.resize(mat.nrows * mat.ncols);
    for (std::size_t i = 0; i < mat.data.size(); ++i) {
        long long v = 0;
        if (!(in >> v)) throw std::runtime_error("truncated matrix body");
        if (v < 0 || v >= (1LL << 16)) throw std::runtime_error("entry out of range");
        mat.data[i] = static_cast<Elem>(v);
    }
    return mat;
}

}  // namespace pncc::codes
