#include "pncc/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pncc/poly.hpp"

namespace pncc::oracles {

namespace {

using Clock = std::chrono::steady_clock;

// dst += c * row over n entries; dense-table fast path when available.
void add_scaled(const gf::Field& K, Elem c, const Elem* row, Elem* dst, std::size_t n) {
    const Elem* mr = K.mul_row(c);
    const Elem* at = K.add_table();
    if (mr && at) {
        const std::size_t q = K.order();
        for (std::size_t j = 0; j < n; ++j)
            dst[j] = at[std::size_t(dst[j]) * q + mr[row[j]]];
    } else {
        for (std::size_t j = 0; j < n; ++j) dst[j] = K.add(dst[j], K.mul(c, row[j]));
    }
}

struct RangeBest {
    bool completed = true;   // local minimum is exact for this range
    long long enumerated = 0;
    long long min_weight = -1;  // -1 until a word is seen
    long long best_index = 0;   // first enumeration index attaining min_weight
};

// Scan enumeration indices [lo, hi). The q-ary digits of an index, most
// significant digit first, are the coefficients over the basis rows; index
// 0 is the zero word and never falls in a range. Keeps prefix partial sums
// so a step costs one row update per changed digit.
RangeBest scan_range(const codes::EchelonBasis& basis, const gf::Field& K,
                     long long lo, long long hi, Clock::time_point deadline) {
    const std::size_t rank = basis.rank;
    const std::size_t m = basis.ncols;
    const long long q = K.order();

    std::vector<Elem> digits(rank, 0);
    std::vector<Elem> partial((rank + 1) * m, 0);
    auto level = [&](std::size_t k) { return partial.data() + k * m; };
    auto rebuild_from = [&](std::size_t t) {
        for (std::size_t k = t; k < rank; ++k) {
            std::copy_n(level(k), m, level(k + 1));
            if (digits[k]) add_scaled(K, digits[k], basis.row(k), level(k + 1), m);
        }
    };

    long long v = lo;
    for (std::size_t r = rank; r-- > 0;) {
        digits[r] = static_cast<Elem>(v % q);
        v /= q;
    }
    rebuild_from(0);

    RangeBest best;
    long long until_clock = 1 << 16;
    for (long long idx = lo; idx < hi;) {
        const Elem* w = level(rank);
        long long wt = 0;
        for (std::size_t j = 0; j < m; ++j) wt += (w[j] != 0);
        ++best.enumerated;
        if (best.min_weight < 0 || wt < best.min_weight) {
            best.min_weight = wt;
            best.best_index = idx;
            // Weight 1 cannot be improved, and everything before idx was
            // already scanned, so the local answer is exact.
            if (wt <= 1) break;
        }
        if (++idx >= hi) break;
        std::size_t t = rank;
        while (t-- > 0) {
            if (++digits[t] < q) break;
            digits[t] = 0;
        }
        rebuild_from(t);
        if (--until_clock == 0) {
            until_clock = 1 << 16;
            if (Clock::now() > deadline) {
                best.completed = false;
                break;
            }
        }
    }
    return best;
}

std::vector<Elem> digits_of(long long index, long long q, std::size_t rank) {
    std::vector<Elem> digits(rank, 0);
    for (std::size_t r = rank; r-- > 0;) {
        digits[r] = static_cast<Elem>(index % q);
        index /= q;
    }
    return digits;
}

}  // namespace

SearchResult search_min_weight(const codes::EchelonBasis& basis, const gf::Field& field,
                               const SearchBudget& budget, int workers) {
    if (budget.max_codewords <= 0 || budget.max_seconds <= 0)
        throw std::invalid_argument("search budget must be positive");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    SearchResult res;
    const long long q = field.order();
    res.total = formulas::Int(1);
    for (std::size_t r = 0; r < basis.rank; ++r) res.total *= q;
    res.total -= 1;
    if (basis.rank == 0) {
        res.completed = true;
        return res;
    }
    if (res.total > budget.max_codewords) return res;  // not started

    const long long total = static_cast<long long>(res.total);
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget.max_seconds));

    const int nworkers = static_cast<int>(
        std::min<long long>(workers, total));
    std::vector<RangeBest> bests(static_cast<std::size_t>(nworkers));
    auto range_lo = [&](int w) {
        return 1 + static_cast<long long>(static_cast<__int128>(total) * w / nworkers);
    };
    if (nworkers == 1) {
        bests[0] = scan_range(basis, field, 1, total + 1, deadline);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w)
            threads.emplace_back([&, w] {
                bests[static_cast<std::size_t>(w)] =
                    scan_range(basis, field, range_lo(w), range_lo(w + 1), deadline);
            });
        for (auto& t : threads) t.join();
    }

    // Associative merge: smaller weight wins, ties go to the smaller
    // enumeration index, which is the lexicographically earlier message.
    res.completed = true;
    long long best_index = -1;
    for (const auto& b : bests) {
        res.enumerated += b.enumerated;
        res.completed = res.completed && b.completed;
        if (b.min_weight < 0) continue;
        if (best_index < 0 || b.min_weight < res.min_weight ||
            (b.min_weight == res.min_weight && b.best_index < best_index)) {
            res.min_weight = b.min_weight;
            best_index = b.best_index;
        }
    }
    if (best_index >= 0) {
        res.message = digits_of(best_index, q, basis.rank);
        res.codeword = codes::encode(basis, field, res.message);
    }
    return res;
}

SearchResult exhaustive_min_distance(const sets::CartesianSpec& spec, long long d,
                                     const SearchBudget& budget, int workers) {
    if (d < 1) throw std::invalid_argument("exhaustive search needs degree >= 1");
    const auto mat = codes::generator_matrix(spec, d);
    const auto basis = codes::rref(mat, spec.field);
    return search_min_weight(basis, spec.field, budget, workers);
}

std::optional<long long> space_size_within(long long q, const formulas::Int& dim,
                                           long long max_codewords) {
    formulas::Int total = 1;
    for (formulas::Int i = 0; i < dim; ++i) {
        total *= q;
        if (total > formulas::Int(max_codewords) + 1) return std::nullopt;
    }
    total -= 1;
    return static_cast<long long>(total);
}

long long hilbert_by_rank(const sets::CartesianSpec& spec, long long d) {
    const auto mat = codes::generator_matrix(spec, d);
    return static_cast<long long>(codes::gf_rank(mat, spec.field));
}

bool recursion_check(const sets::CartesianSpec& spec, long long d) {
    if (spec.n() < 1 || d < 1)
        throw std::invalid_argument("recursion check needs n >= 1 and d >= 1");
    const long long full = hilbert_by_rank(spec, d);

    std::vector<std::vector<Elem>> tail(spec.sets.begin() + 1, spec.sets.end());
    const auto tail_spec = sets::make_spec(spec.field, tail);
    const long long tail_rank = hilbert_by_rank(tail_spec, d);

    const auto aff = codes::affine_generator_matrix(spec.field, tail, d - 1);
    const long long aff_rank = static_cast<long long>(codes::gf_rank(aff, spec.field));

    return full == tail_rank + aff_rank;
}

std::string to_string(EntryStatus s) {
    switch (s) {
        case EntryStatus::Verified: return "verified";
        case EntryStatus::Refuted: return "refuted";
        case EntryStatus::ExactTheorem: return "exact-theorem";
        case EntryStatus::SkippedBudget: return "skipped-budget";
    }
    return "unknown";
}

namespace {

// Coefficient vector over the basis -> polynomial over the original
// monomial rows, via the tracked transform.
std::string witness_text(const codes::GeneratorMatrix& mat,
                         const codes::EchelonBasis& basis, const gf::Field& K,
                         const std::vector<Elem>& message) {
    poly::Polynomial f(static_cast<std::size_t>(mat.n) + 1);
    for (std::size_t b = 0; b < basis.rank; ++b) {
        if (message[b] == 0) continue;
        const Elem* combo = basis.transform.data() + b * basis.original_nrows;
        for (std::size_t r = 0; r < basis.original_nrows; ++r)
            if (combo[r] != 0)
                f.add_term(K, mat.row_monomials[r], K.mul(message[b], combo[r]));
    }
    return f.to_string();
}

long long polynomial_weight(const sets::CartesianSpec& spec, const poly::Polynomial& f,
                            const std::vector<sets::ProjectivePoint>& points) {
    long long wt = 0;
    for (const auto& pt : points) wt += (f.evaluate(spec.field, pt.coords) != 0);
    return wt;
}

}  // namespace

ConjectureReport check_conjecture(const sets::CartesianSpec& spec,
                                  const std::vector<long long>& degrees,
                                  const SearchBudget& budget, int workers) {
    ConjectureReport report;
    report.p = spec.field.characteristic();
    report.m_ext = spec.field.degree();
    report.modulus = spec.field.modulus();
    report.sets = spec.sets;
    report.length = formulas::length_formula(spec.sizes());

    const bool pof = sets::classify(spec).product_of_fields;
    const long long cap = formulas::size_cap(spec.tail_sizes());
    const auto points = sets::enumerate_projective_points(spec);

    for (long long d : degrees) {
        if (d < 1) throw std::invalid_argument("conjecture degrees must be >= 1");
        const auto dist = formulas::projective_min_distance(spec.sizes(), d, pof);

        ConjectureEntry entry;
        entry.degree = d;
        entry.conjectured = dist.value;

        // The explicit low-weight polynomial certifies the predicted value
        // as an upper bound; its weight must match the formula exactly.
        if (d <= cap + 1) {
            const auto f = poly::witness_polynomial(spec, d);
            if (formulas::Int(polynomial_weight(spec, f, points)) != dist.value)
                throw std::logic_error("upper-bound polynomial weight mismatch");
        }

        const bool exact =
            pof || dist.status == formulas::DistanceStatus::TrivialOne;
        const auto fits = space_size_within(spec.field.order(),
                                            formulas::dimension_formula(spec.sizes(), d),
                                            budget.max_codewords);
        if (!fits) {
            // Too many codewords to even start; the generator matrix is not
            // built. Exact statuses stand on the theorem alone.
            entry.status = exact ? EntryStatus::ExactTheorem : EntryStatus::SkippedBudget;
            report.entries.push_back(std::move(entry));
            continue;
        }

        const auto mat = codes::generator_matrix(spec, d);
        const auto basis = codes::rref(mat, spec.field, true);
        const auto sr = search_min_weight(basis, spec.field, budget, workers);

        if (exact) {
            entry.status = EntryStatus::ExactTheorem;
            if (sr.completed && sr.enumerated > 0) {
                if (formulas::Int(sr.min_weight) != dist.value)
                    throw std::logic_error("exhaustive search disagrees with exact formula");
                entry.measured = sr.min_weight;
            }
        } else if (sr.enumerated > 0 && formulas::Int(sr.min_weight) < dist.value) {
            // Any codeword below the prediction disproves it, complete or not.
            entry.status = EntryStatus::Refuted;
            entry.measured = sr.min_weight;
            entry.witness = witness_text(mat, basis, spec.field, sr.message);
        } else if (sr.completed) {
            if (formulas::Int(sr.min_weight) > dist.value)
                throw std::logic_error("measured distance exceeds the proven upper bound");
            entry.status = EntryStatus::Verified;
            entry.measured = sr.min_weight;
        } else {
            entry.status = EntryStatus::SkippedBudget;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string serialize_report(const ConjectureReport& report) {
    std::ostringstream os;
    os << "spec p=" << report.p << " m=" << report.m_ext;
    if (report.m_ext > 1) {
        os << " modulus=";
        for (std::size_t i = 0; i < report.modulus.size(); ++i) {
            if (i) os << ',';
            os << report.modulus[i];
        }
    }
    os << " sets=";
    for (std::size_t s = 0; s < report.sets.size(); ++s) {
        if (s) os << ';';
        for (std::size_t i = 0; i < report.sets[s].size(); ++i) {
            if (i) os << ',';
            os << static_cast<long long>(report.sets[s][i]);
        }
    }
    os << " length=" << report.length << '\n';
    for (const auto& e : report.entries) {
        os << "degree=" << e.degree << " conjectured=" << e.conjectured;
        if (e.measured) os << " measured=" << *e.measured;
        os << " status=" << to_string(e.status);
        if (!e.witness.empty()) os << " witness=" << e.witness;
        os << '\n';
    }
    return os.str();
}

}  // namespace pncc::oracles
